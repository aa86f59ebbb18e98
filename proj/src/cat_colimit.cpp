#include "cat_colimit.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>

#include "enrichcat/ordcat.hpp"
#include "uf.hpp"

namespace enrichcat::detail {
namespace {

int block_of(const std::vector<int>& offsets, int u) {
  int j = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), u) -
                           offsets.begin()) - 1;
  return j;
}

struct Glue {
  std::vector<int> oobj{0}, oarr{0};
  MinUF ou{0}, au{0};
  std::vector<int> ocls;     // global object -> apex object
  std::vector<int> orep;     // apex object -> global object
};

Glue glue_objects_and_arrows(const std::vector<FinCategory>& blocks, const FinCategory& shape,
                             const std::vector<FunctorData>& maps) {
  Glue g;
  for (const auto& c : blocks) {
    g.oobj.push_back(g.oobj.back() + c.n_obj);
    g.oarr.push_back(g.oarr.back() + c.n_arr());
  }
  g.ou = MinUF(g.oobj.back());
  g.au = MinUF(g.oarr.back());
  for (int f = 0; f < shape.n_arr(); ++f) {
    if (shape.is_id(f)) continue;
    int sj = shape.src(f), tj = shape.tgt(f);
    for (int x = 0; x < blocks[sj].n_obj; ++x)
      g.ou.unite(g.oobj[sj] + x, g.oobj[tj] + maps[f].obj_map[x]);
    for (int a = 0; a < blocks[sj].n_arr(); ++a)
      g.au.unite(g.oarr[sj] + a, g.oarr[tj] + maps[f].arr_map[a]);
  }
  g.ocls.assign(g.oobj.back(), -1);
  for (int u = 0; u < g.oobj.back(); ++u)
    if (g.ou.find(u) == u) {
      g.ocls[u] = static_cast<int>(g.orep.size());
      g.orep.push_back(u);
    }
  for (int u = 0; u < g.oobj.back(); ++u) g.ocls[u] = g.ocls[g.ou.find(u)];
  return g;
}

// Endpoint object classes of a global arrow.
std::pair<int, int> ends(const Glue& g, const std::vector<FinCategory>& blocks, int u) {
  int j = block_of(g.oarr, u);
  int a = u - g.oarr[j];
  return {g.ocls[g.oobj[j] + blocks[j].src(a)], g.ocls[g.oobj[j] + blocks[j].tgt(a)]};
}

void check_cocone(const CatColim& r, const std::vector<FinCategory>& blocks,
                  const FinCategory& shape, const std::vector<FunctorData>& maps) {
  if (auto e = validate_fincategory(r.apex); !e.empty())
    throw ceiling_error("category colimit left an inconsistent composition table: " + e);
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    const FinCategory& c = blocks[j];
    const FunctorData& f = r.inj[j];
    for (int a = 0; a < c.n_arr(); ++a) {
      if (r.apex.src(f.arr_map[a]) != f.obj_map[c.src(a)] ||
          r.apex.tgt(f.arr_map[a]) != f.obj_map[c.tgt(a)])
        throw ceiling_error("category colimit injection breaks endpoints");
    }
    for (int o = 0; o < c.n_obj; ++o)
      if (f.arr_map[c.id_arrow[o]] != r.apex.id_arrow[f.obj_map[o]])
        throw ceiling_error("category colimit injection breaks identities");
    for (int b2 = 0; b2 < c.n_arr(); ++b2)
      for (int a2 = 0; a2 < c.n_arr(); ++a2) {
        if (!c.composable(b2, a2)) continue;
        if (r.apex.comp[f.arr_map[b2]][f.arr_map[a2]] != f.arr_map[c.comp[b2][a2]])
          throw ceiling_error("category colimit injection breaks composition");
      }
  }
  for (int s = 0; s < shape.n_arr(); ++s) {
    if (shape.is_id(s)) continue;
    const FunctorData& m = maps[s];
    const FunctorData& fs = r.inj[shape.src(s)];
    const FunctorData& ft = r.inj[shape.tgt(s)];
    for (size_t x = 0; x < m.obj_map.size(); ++x)
      if (fs.obj_map[x] != ft.obj_map[m.obj_map[x]])
        throw ceiling_error("category colimit cocone fails on objects");
    for (size_t a = 0; a < m.arr_map.size(); ++a)
      if (fs.arr_map[a] != ft.arr_map[m.arr_map[a]])
        throw ceiling_error("category colimit cocone fails on arrows");
  }
}

std::optional<CatColim> setwise_colimit(const std::vector<FinCategory>& blocks,
                                        const FinCategory& shape,
                                        const std::vector<FunctorData>& maps) {
  Glue g = glue_objects_and_arrows(blocks, shape, maps);
  int tot_arr = g.oarr.back();
  std::vector<int> acls(tot_arr, -1), arep;
  for (int u = 0; u < tot_arr; ++u)
    if (g.au.find(u) == u) {
      acls[u] = static_cast<int>(arep.size());
      arep.push_back(u);
    }
  for (int u = 0; u < tot_arr; ++u) acls[u] = acls[g.au.find(u)];
  std::vector<std::vector<int>> members(arep.size());
  for (int u = 0; u < tot_arr; ++u) members[acls[u]].push_back(u);

  CatColim r;
  r.apex.n_obj = static_cast<int>(g.orep.size());
  r.apex.id_arrow.assign(r.apex.n_obj, -1);
  for (size_t c = 0; c < arep.size(); ++c) {
    auto [s, t] = ends(g, blocks, arep[c]);
    r.apex.arrows.push_back({s, t});
  }
  for (int o = 0; o < r.apex.n_obj; ++o) {
    int u = g.orep[o];
    int j = block_of(g.oobj, u);
    r.apex.id_arrow[o] = acls[g.oarr[j] + blocks[j].id_arrow[u - g.oobj[j]]];
  }
  int n = static_cast<int>(arep.size());
  r.apex.comp.assign(n, std::vector<int>(n, -1));
  for (int c2 = 0; c2 < n; ++c2)
    for (int c1 = 0; c1 < n; ++c1) {
      if (r.apex.tgt(c1) != r.apex.src(c2)) continue;
      int found = -1;
      for (int u1 : members[c1]) {
        int j = block_of(g.oarr, u1);
        int a1 = u1 - g.oarr[j];
        for (int u2 : members[c2]) {
          if (block_of(g.oarr, u2) != j) continue;
          int a2 = u2 - g.oarr[j];
          if (blocks[j].composable(a2, a1)) {
            found = acls[g.oarr[j] + blocks[j].comp[a2][a1]];
            break;
          }
        }
        if (found >= 0) break;
      }
      if (found < 0) return std::nullopt;  // no common-block representatives
      r.apex.comp[c2][c1] = found;
    }
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    FunctorData f;
    for (int x = 0; x < blocks[j].n_obj; ++x) f.obj_map.push_back(g.ocls[g.oobj[j] + x]);
    for (int a = 0; a < blocks[j].n_arr(); ++a) f.arr_map.push_back(acls[g.oarr[j] + a]);
    r.inj.push_back(std::move(f));
  }
  for (int o = 0; o < r.apex.n_obj; ++o) {
    int u = g.orep[o];
    r.pres.obj_rep.push_back({block_of(g.oobj, u), u - g.oobj[block_of(g.oobj, u)]});
  }
  for (int c = 0; c < n; ++c) {
    int u = arep[c];
    int j = block_of(g.oarr, u);
    r.pres.arr_word.push_back({{j, u - g.oarr[j]}});
    r.pres.word_src.push_back(r.apex.src(c));
  }
  return r;
}

CatColim word_colimit(const std::vector<FinCategory>& blocks, const FinCategory& shape,
                      const std::vector<FunctorData>& maps, const Bounds& b) {
  Glue g = glue_objects_and_arrows(blocks, shape, maps);
  int tot_arr = g.oarr.back();
  int n_aobj = static_cast<int>(g.orep.size());

  // A congruence class that contains an identity acts as an identity; the
  // flag and the class structure refine each other to a fixpoint.
  std::vector<char> idlike(tot_arr, 0);
  for (size_t j = 0; j < blocks.size(); ++j)
    for (int o = 0; o < blocks[j].n_obj; ++o)
      idlike[g.au.find(g.oarr[j] + blocks[j].id_arrow[o])] = 1;
  struct Trip {
    int f, g2, h;
  };
  std::vector<Trip> trips;
  for (size_t j = 0; j < blocks.size(); ++j)
    for (int v = 0; v < blocks[j].n_arr(); ++v)
      for (int u = 0; u < blocks[j].n_arr(); ++u)
        if (blocks[j].composable(v, u))
          trips.push_back({static_cast<int>(g.oarr[j]) + u, static_cast<int>(g.oarr[j]) + v,
                           static_cast<int>(g.oarr[j]) + blocks[j].comp[v][u]});
  bool changed = true;
  auto idl = [&](int u) { return idlike[g.au.find(u)] != 0; };
  while (changed) {
    changed = false;
    for (const auto& t : trips) {
      bool fi = idl(t.f), gi = idl(t.g2);
      if (fi && gi) {
        int r = g.au.find(t.h);
        if (!idlike[r]) {
          idlike[r] = 1;
          changed = true;
        }
      } else if (fi || gi) {
        int other = fi ? t.g2 : t.f;
        int ra = g.au.find(other), rb = g.au.find(t.h);
        if (ra != rb) {
          char fl = static_cast<char>(idlike[ra] | idlike[rb]);
          g.au.unite(ra, rb);
          int r = g.au.find(ra);
          idlike[r] = static_cast<char>(idlike[r] | fl);
          changed = true;
        }
      }
    }
  }

  std::vector<int> gidx(tot_arr, -1), grep;
  for (int u = 0; u < tot_arr; ++u) {
    int r = g.au.find(u);
    if (r == u && !idlike[r]) {
      gidx[r] = static_cast<int>(grep.size());
      grep.push_back(u);
    }
  }
  auto gen_of = [&](int u) { return gidx[g.au.find(u)]; };
  int ngen = static_cast<int>(grep.size());
  std::vector<int> gsrc(ngen), gtgt(ngen);
  for (int i = 0; i < ngen; ++i) {
    auto [s, t] = ends(g, blocks, grep[i]);
    gsrc[i] = s;
    gtgt[i] = t;
  }

  // Composable generator words, in (length, lexicographic) order.
  const int maxlen = b.word_length;
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> word_id;
  size_t prev_begin = 0;
  for (int i = 0; i < ngen; ++i) {
    word_id[{i}] = static_cast<int>(words.size());
    words.push_back({i});
  }
  for (int len = 2; len <= maxlen; ++len) {
    size_t prev_end = words.size();
    for (size_t w = prev_begin; w < prev_end; ++w)
      for (int i = 0; i < ngen; ++i) {
        if (gtgt[words[w].back()] != gsrc[i]) continue;
        std::vector<int> nw = words[w];
        nw.push_back(i);
        word_id[nw] = static_cast<int>(words.size());
        words.push_back(std::move(nw));
        if (static_cast<int>(words.size()) > b.max_words)
          throw ceiling_error("category colimit word count exceeded the bound");
      }
    prev_begin = prev_end;
  }

  // Nodes: one per apex object (the empty word there), then the words.
  int n_nodes = n_aobj + static_cast<int>(words.size());
  MinUF wu(n_nodes);
  struct Rel {
    int a, b;
    std::vector<int> repl;
  };
  std::vector<Rel> rels;
  for (const auto& t : trips) {
    if (idl(t.f) || idl(t.g2)) continue;
    Rel r{gen_of(t.f), gen_of(t.g2), {}};
    if (!idl(t.h)) r.repl = {gen_of(t.h)};
    rels.push_back(r);
  }
  std::sort(rels.begin(), rels.end(), [](const Rel& x, const Rel& y) {
    return std::tie(x.a, x.b, x.repl) < std::tie(y.a, y.b, y.repl);
  });
  rels.erase(std::unique(rels.begin(), rels.end(),
                         [](const Rel& x, const Rel& y) {
                           return x.a == y.a && x.b == y.b && x.repl == y.repl;
                         }),
             rels.end());
  for (size_t wi = 0; wi < words.size(); ++wi) {
    const auto& w = words[wi];
    for (size_t i = 0; i + 1 < w.size(); ++i)
      for (const auto& r : rels) {
        if (w[i] != r.a || w[i + 1] != r.b) continue;
        std::vector<int> w2(w.begin(), w.begin() + i);
        w2.insert(w2.end(), r.repl.begin(), r.repl.end());
        w2.insert(w2.end(), w.begin() + i + 2, w.end());
        int node2;
        if (w2.empty()) {
          node2 = gsrc[w[0]];
        } else {
          auto it = word_id.find(w2);
          if (it == word_id.end()) throw std::logic_error("rewrite left the word table");
          node2 = n_aobj + it->second;
        }
        wu.unite(n_aobj + static_cast<int>(wi), node2);
      }
  }

  std::vector<int> minlen(n_nodes, INT_MAX);
  for (int o = 0; o < n_aobj; ++o) minlen[wu.find(o)] = 0;
  for (size_t wi = 0; wi < words.size(); ++wi) {
    int r = wu.find(n_aobj + static_cast<int>(wi));
    minlen[r] = std::min(minlen[r], static_cast<int>(words[wi].size()));
  }
  int kstab = -1;
  for (int k = 1; 2 * (k - 1) <= maxlen; ++k) {
    bool ok = true;
    for (size_t wi = 0; wi < words.size() && ok; ++wi)
      if (static_cast<int>(words[wi].size()) >= k &&
          minlen[wu.find(n_aobj + static_cast<int>(wi))] >= k)
        ok = false;
    if (ok) {
      kstab = k;
      break;
    }
  }
  if (kstab < 0)
    throw ceiling_error("category colimit did not stabilize within the word bound");

  // Apex arrows: one per class, canonical representative = first node in
  // (objects, then word) order, which is minimal by construction.
  std::vector<int> arr_of_root(n_nodes, -1), arr_rep;
  for (int node = 0; node < n_nodes; ++node) {
    int r = wu.find(node);
    if (arr_of_root[r] < 0) {
      arr_of_root[r] = static_cast<int>(arr_rep.size());
      arr_rep.push_back(node);
    }
  }
  auto arr_of_node = [&](int node) { return arr_of_root[wu.find(node)]; };
  int n_aarr = static_cast<int>(arr_rep.size());

  CatColim r;
  r.apex.n_obj = n_aobj;
  for (int c = 0; c < n_aarr; ++c) {
    int node = arr_rep[c];
    if (node < n_aobj) r.apex.arrows.push_back({node, node});
    else {
      const auto& w = words[node - n_aobj];
      r.apex.arrows.push_back({gsrc[w.front()], gtgt[w.back()]});
    }
  }
  r.apex.id_arrow.resize(n_aobj);
  for (int o = 0; o < n_aobj; ++o) r.apex.id_arrow[o] = arr_of_node(o);
  r.apex.comp.assign(n_aarr, std::vector<int>(n_aarr, -1));
  auto rep_word = [&](int c) {
    int node = arr_rep[c];
    return node < n_aobj ? std::vector<int>{} : words[node - n_aobj];
  };
  for (int c2 = 0; c2 < n_aarr; ++c2)
    for (int c1 = 0; c1 < n_aarr; ++c1) {
      if (r.apex.tgt(c1) != r.apex.src(c2)) continue;
      std::vector<int> w = rep_word(c1);
      const auto w2 = rep_word(c2);
      w.insert(w.end(), w2.begin(), w2.end());
      if (w.empty()) r.apex.comp[c2][c1] = arr_of_node(r.apex.src(c1));
      else {
        auto it = word_id.find(w);
        if (it == word_id.end())
          throw ceiling_error("category colimit composite escaped the word bound");
        r.apex.comp[c2][c1] = arr_of_node(n_aobj + it->second);
      }
    }

  for (size_t j = 0; j < blocks.size(); ++j) {
    FunctorData f;
    for (int x = 0; x < blocks[j].n_obj; ++x) f.obj_map.push_back(g.ocls[g.oobj[j] + x]);
    for (int a = 0; a < blocks[j].n_arr(); ++a) {
      int u = g.oarr[j] + a;
      if (idl(u)) {
        auto [s, t] = ends(g, blocks, u);
        (void)t;
        f.arr_map.push_back(r.apex.id_arrow[s]);
      } else {
        int w1 = word_id.at({gen_of(u)});
        f.arr_map.push_back(arr_of_node(n_aobj + w1));
      }
    }
    r.inj.push_back(std::move(f));
  }

  for (int o = 0; o < n_aobj; ++o) {
    int u = g.orep[o];
    int j = block_of(g.oobj, u);
    r.pres.obj_rep.push_back({j, u - g.oobj[j]});
  }
  for (int c = 0; c < n_aarr; ++c) {
    std::vector<std::pair<int, int>> wrd;
    for (int gen : rep_word(c)) {
      int u = grep[gen];
      int j = block_of(g.oarr, u);
      wrd.push_back({j, u - g.oarr[j]});
    }
    r.pres.arr_word.push_back(std::move(wrd));
    int node = arr_rep[c];
    r.pres.word_src.push_back(node < n_aobj ? node : r.apex.src(c));
  }
  return r;
}

}  // namespace

CatColim cat_colimit(const std::vector<FinCategory>& blocks, const FinCategory& shape,
                     const std::vector<FunctorData>& maps, const Bounds& b) {
  if (is_filtered(shape).is_yes()) {
    if (auto fast = setwise_colimit(blocks, shape, maps)) {
      try {
        check_cocone(*fast, blocks, shape, maps);
        return *fast;
      } catch (const ceiling_error&) {
        // fall through to the word construction
      }
    }
  }
  CatColim r = word_colimit(blocks, shape, maps, b);
  check_cocone(r, blocks, shape, maps);
  return r;
}

}  // namespace enrichcat::detail
