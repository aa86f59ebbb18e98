#include "enrichcat/ordcat.hpp"

#include <numeric>

namespace enrichcat {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    default: return "unknown";
  }
}

Json Verdict::to_json() const {
  Json j{{"outcome", to_string(outcome)}, {"certificate", certificate}};
  if (bound) j["bound"] = *bound;
  return j;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a; // keep the least element as representative
    return true;
  }
};

}  // namespace

std::vector<int> connected_components(const FinCategory& c, int* count) {
  UnionFind uf(c.n_obj);
  for (int f = 0; f < c.n_arr(); ++f) uf.unite(c.src(f), c.tgt(f));
  std::vector<int> comp(c.n_obj);
  std::vector<int> index(c.n_obj, -1);
  int k = 0;
  for (int a = 0; a < c.n_obj; ++a) {
    int r = uf.find(a);
    if (index[r] < 0) index[r] = k++;
    comp[a] = index[r];
  }
  if (count) *count = k;
  return comp;
}

Verdict is_filtered(const FinCategory& c) {
  if (c.n_obj == 0)
    return Verdict::no({{"clause", "nonempty"}, {"detail", "category has no objects"}});
  // Cospans.
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = a; b < c.n_obj; ++b) {
      bool found = false;
      for (int z = 0; z < c.n_obj && !found; ++z) {
        bool fa = false, fb = false;
        for (int f = 0; f < c.n_arr(); ++f) {
          if (c.tgt(f) != z) continue;
          if (c.src(f) == a) fa = true;
          if (c.src(f) == b) fb = true;
        }
        found = fa && fb;
      }
      if (!found)
        return Verdict::no({{"clause", "cospan"}, {"objects", {a, b}}});
    }
  // Parallel pairs.
  for (int f = 0; f < c.n_arr(); ++f)
    for (int g = f + 1; g < c.n_arr(); ++g) {
      if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g)) continue;
      bool found = false;
      for (int h = 0; h < c.n_arr() && !found; ++h) {
        if (!c.composable(h, f)) continue;
        if (c.comp[h][f] == c.comp[h][g]) found = true;
      }
      if (!found)
        return Verdict::no({{"clause", "parallel-pair"}, {"arrows", {f, g}},
                            {"src", c.src(f)}, {"tgt", c.tgt(f)}});
    }
  return Verdict::yes({{"objects", c.n_obj}, {"arrows", c.n_arr()}});
}

CommaCategory comma(int b, const OrdFunctor& j) {
  const FinCategory& a = j.src;
  const FinCategory& d = j.dst;
  CommaCategory out;
  for (int x = 0; x < a.n_obj; ++x)
    for (int phi = 0; phi < d.n_arr(); ++phi) {
      if (d.src(phi) != b || d.tgt(phi) != j.obj_map[x]) continue;
      out.obj_label.push_back({x, phi});
    }
  const int n = static_cast<int>(out.obj_label.size());
  out.carrier.n_obj = n;
  out.carrier.id_arrow.assign(n, -1);
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2) {
      auto [x1, phi1] = out.obj_label[o1];
      auto [x2, phi2] = out.obj_label[o2];
      for (int u = 0; u < a.n_arr(); ++u) {
        if (a.src(u) != x1 || a.tgt(u) != x2) continue;
        if (d.comp[j.arr_map[u]][phi1] != phi2) continue;
        out.carrier.arrows.push_back({o1, o2});
        out.arr_label.push_back(u);
        if (o1 == o2 && u == a.id_arrow[x1])
          out.carrier.id_arrow[o1] = out.carrier.n_arr() - 1;
      }
    }
  const int m = out.carrier.n_arr();
  out.carrier.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (!out.carrier.composable(g, f)) continue;
      int u = a.comp[out.arr_label[g]][out.arr_label[f]];
      // Locate the arrow with the same endpoints and label.
      for (int h = 0; h < m; ++h)
        if (out.carrier.src(h) == out.carrier.src(f) && out.carrier.tgt(h) == out.carrier.tgt(g) &&
            out.arr_label[h] == u) {
          out.carrier.comp[g][f] = h;
          break;
        }
    }
  return out;
}

Verdict is_final(const OrdFunctor& j) {
  for (int b = 0; b < j.dst.n_obj; ++b) {
    CommaCategory cb = comma(b, j);
    if (cb.carrier.n_obj == 0)
      return Verdict::no({{"object", b}, {"reason", "empty-comma"}});
    int k = 0;
    auto comps = connected_components(cb.carrier, &k);
    if (k > 1) {
      Json split = Json::array();
      for (int o = 0; o < cb.carrier.n_obj; ++o)
        split.push_back({{"domain_object", cb.obj_label[o].first},
                         {"arrow", cb.obj_label[o].second},
                         {"component", comps[o]}});
      return Verdict::no(
          {{"object", b}, {"reason", "disconnected-comma"}, {"components", k}, {"split", split}});
    }
  }
  return Verdict::yes({{"codomain_objects", j.dst.n_obj}});
}

Verdict is_fully_faithful(const OrdFunctor& j) {
  for (int a = 0; a < j.src.n_obj; ++a)
    for (int b = 0; b < j.src.n_obj; ++b) {
      auto dom = j.src.hom(a, b);
      auto cod = j.dst.hom(j.obj_map[a], j.obj_map[b]);
      for (size_t i = 0; i < dom.size(); ++i)
        for (size_t k = i + 1; k < dom.size(); ++k)
          if (j.arr_map[dom[i]] == j.arr_map[dom[k]])
            return Verdict::no({{"reason", "not-faithful"},
                                {"objects", {a, b}},
                                {"arrows", {dom[i], dom[k]}}});
      for (int g : cod) {
        bool hit = false;
        for (int f : dom)
          if (j.arr_map[f] == g) hit = true;
        if (!hit)
          return Verdict::no({{"reason", "not-full"}, {"objects", {a, b}}, {"missing", g}});
      }
    }
  return Verdict::yes();
}

Verdict is_protofiltered_index(const OrdFunctor& s) {
  Verdict filt = is_filtered(s.dst);
  if (!filt.is_yes())
    return {filt.outcome, Json{{"stage", "codomain-filtered"}, {"inner", filt.to_json()}}, filt.bound};
  Verdict fin = is_final(s);
  if (!fin.is_yes())
    return {fin.outcome, Json{{"stage", "finality"}, {"inner", fin.to_json()}}, fin.bound};
  return Verdict::yes({{"codomain_filtered", filt.to_json()}, {"final", fin.to_json()}});
}

}  // namespace enrichcat
