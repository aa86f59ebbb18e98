#include "enrichcat/fincat.hpp"

#include "enrichcat/verdict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace enrichcat {

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < n_arr(); ++f)
    if (arrows[f].src == a && arrows[f].tgt == b) out.push_back(f);
  return out;
}

nlohmann::json FinCategory::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : arrows) arr.push_back({{"src", a.src}, {"tgt", a.tgt}});
  return {{"objects", n_obj}, {"arrows", arr}, {"ids", id_arrow}, {"comp", comp}};
}

FinCategory FinCategory::from_json(const nlohmann::json& j) {
  FinCategory c;
  c.n_obj = j.at("objects").get<int>();
  for (const auto& a : j.at("arrows"))
    c.arrows.push_back({a.at("src").get<int>(), a.at("tgt").get<int>()});
  c.id_arrow = j.at("ids").get<std::vector<int>>();
  c.comp = j.at("comp").get<std::vector<std::vector<int>>>();
  return c;
}

std::string validate_fincategory(const FinCategory& c) {
  const int m = c.n_arr();
  if (c.n_obj < 0) return "negative object count";
  for (int f = 0; f < m; ++f) {
    if (c.src(f) < 0 || c.src(f) >= c.n_obj || c.tgt(f) < 0 || c.tgt(f) >= c.n_obj)
      return "arrow " + std::to_string(f) + " has endpoint out of range";
  }
  if (static_cast<int>(c.id_arrow.size()) != c.n_obj) return "id table size mismatch";
  for (int a = 0; a < c.n_obj; ++a) {
    int i = c.id_arrow[a];
    if (i < 0 || i >= m) return "id of object " + std::to_string(a) + " out of range";
    if (c.src(i) != a || c.tgt(i) != a)
      return "id of object " + std::to_string(a) + " is not an endomorphism";
  }
  if (static_cast<int>(c.comp.size()) != m) return "composition table size mismatch";
  for (int g = 0; g < m; ++g)
    if (static_cast<int>(c.comp[g].size()) != m)
      return "composition table row " + std::to_string(g) + " size mismatch";
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      int h = c.comp[g][f];
      if (!c.composable(g, f)) {
        if (h != -1)
          return "composite defined for non-composable pair (" + std::to_string(g) + "," +
                 std::to_string(f) + ")";
        continue;
      }
      if (h < 0 || h >= m)
        return "composite missing for composable pair (" + std::to_string(g) + "," +
               std::to_string(f) + ")";
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))
        return "composite of (" + std::to_string(g) + "," + std::to_string(f) +
               ") has wrong endpoints";
    }
  }
  for (int f = 0; f < m; ++f) {
    if (c.comp[f][c.id_arrow[c.src(f)]] != f)
      return "right unit law fails at arrow " + std::to_string(f);
    if (c.comp[c.id_arrow[c.tgt(f)]][f] != f)
      return "left unit law fails at arrow " + std::to_string(f);
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.comp[c.comp[h][g]][f] != c.comp[h][c.comp[g][f]])
          return "associativity fails at (" + std::to_string(h) + "," + std::to_string(g) + "," +
                 std::to_string(f) + ")";
      }
    }
  return {};
}

FinCategory discrete_category(int n) {
  FinCategory c;
  c.n_obj = n;
  for (int a = 0; a < n; ++a) {
    c.arrows.push_back({a, a});
    c.id_arrow.push_back(a);
  }
  c.comp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) c.comp[a][a] = a;
  return c;
}

FinCategory terminal_category() { return discrete_category(1); }

FinCategory walking_arrow() {
  return free_category(2, {{0, 1}});
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  FinCategory c;
  c.n_obj = a.n_obj * b.n_obj;
  const int mb = b.n_arr();
  for (int f = 0; f < a.n_arr(); ++f)
    for (int g = 0; g < mb; ++g)
      c.arrows.push_back({a.src(f) * b.n_obj + b.src(g), a.tgt(f) * b.n_obj + b.tgt(g)});
  c.id_arrow.resize(c.n_obj);
  for (int x = 0; x < a.n_obj; ++x)
    for (int y = 0; y < b.n_obj; ++y)
      c.id_arrow[x * b.n_obj + y] = a.id_arrow[x] * mb + b.id_arrow[y];
  const int m = c.n_arr();
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int f2 = 0; f2 < a.n_arr(); ++f2)
    for (int g2 = 0; g2 < mb; ++g2)
      for (int f1 = 0; f1 < a.n_arr(); ++f1)
        for (int g1 = 0; g1 < mb; ++g1) {
          if (!a.composable(f2, f1) || !b.composable(g2, g1)) continue;
          c.comp[f2 * mb + g2][f1 * mb + g1] = a.comp[f2][f1] * mb + b.comp[g2][g1];
        }
  return c;
}

FinCategory opposite_category(const FinCategory& c) {
  FinCategory o = c;
  for (auto& a : o.arrows) std::swap(a.src, a.tgt);
  const int m = c.n_arr();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) o.comp[g][f] = c.comp[f][g];
  return o;
}

FinCategory free_category(int n_obj, const std::vector<std::pair<int, int>>& edges,
                          int max_paths) {
  // Paths are grown by length; a cycle makes the count pass max_paths.
  struct Path {
    int src, tgt;
    std::vector<int> edges; // edge indices, first applied first
  };
  std::vector<Path> paths;
  for (int a = 0; a < n_obj; ++a) paths.push_back({a, a, {}});
  std::vector<Path> frontier = paths;
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].first != p.tgt) continue;
        Path q = p;
        q.tgt = edges[e].second;
        q.edges.push_back(e);
        next.push_back(q);
      }
    for (auto& q : next) paths.push_back(q);
    if (static_cast<int>(paths.size()) > max_paths)
      throw ceiling_error("free_category: path count exceeds ceiling (cyclic graph?)");
    frontier = std::move(next);
  }
  std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) {
    if (x.edges.size() != y.edges.size()) return x.edges.size() < y.edges.size();
    if (x.src != y.src) return x.src < y.src;
    if (x.tgt != y.tgt) return x.tgt < y.tgt;
    return x.edges < y.edges;
  });
  std::map<std::vector<int>, int> index_of;
  FinCategory c;
  c.n_obj = n_obj;
  c.id_arrow.assign(n_obj, -1);
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    c.arrows.push_back({paths[i].src, paths[i].tgt});
    if (paths[i].edges.empty()) c.id_arrow[paths[i].src] = i;
    index_of[paths[i].edges] = i; // identity paths collide per object; resolved below
  }
  const int m = c.n_arr();
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      std::vector<int> w = paths[f].edges;
      w.insert(w.end(), paths[g].edges.begin(), paths[g].edges.end());
      if (w.empty()) {
        c.comp[g][f] = c.id_arrow[c.src(f)];
      } else {
        c.comp[g][f] = index_of.at(w);
      }
    }
  return c;
}

nlohmann::json OrdFunctor::to_json() const {
  return {{"src", src.to_json()}, {"dst", dst.to_json()}, {"obj", obj_map}, {"arr", arr_map}};
}

OrdFunctor OrdFunctor::from_json(const nlohmann::json& j) {
  OrdFunctor f;
  f.src = FinCategory::from_json(j.at("src"));
  f.dst = FinCategory::from_json(j.at("dst"));
  f.obj_map = j.at("obj").get<std::vector<int>>();
  f.arr_map = j.at("arr").get<std::vector<int>>();
  return f;
}

std::string validate_ordfunctor(const OrdFunctor& j) {
  if (auto e = validate_fincategory(j.src); !e.empty()) return "domain: " + e;
  if (auto e = validate_fincategory(j.dst); !e.empty()) return "codomain: " + e;
  if (static_cast<int>(j.obj_map.size()) != j.src.n_obj) return "object map size mismatch";
  if (static_cast<int>(j.arr_map.size()) != j.src.n_arr()) return "arrow map size mismatch";
  for (int a = 0; a < j.src.n_obj; ++a)
    if (j.obj_map[a] < 0 || j.obj_map[a] >= j.dst.n_obj)
      return "object map out of range at " + std::to_string(a);
  for (int f = 0; f < j.src.n_arr(); ++f) {
    int ff = j.arr_map[f];
    if (ff < 0 || ff >= j.dst.n_arr()) return "arrow map out of range at " + std::to_string(f);
    if (j.dst.src(ff) != j.obj_map[j.src.src(f)] || j.dst.tgt(ff) != j.obj_map[j.src.tgt(f)])
      return "arrow map breaks endpoints at " + std::to_string(f);
  }
  for (int a = 0; a < j.src.n_obj; ++a)
    if (j.arr_map[j.src.id_arrow[a]] != j.dst.id_arrow[j.obj_map[a]])
      return "identity not preserved at object " + std::to_string(a);
  for (int g = 0; g < j.src.n_arr(); ++g)
    for (int f = 0; f < j.src.n_arr(); ++f) {
      if (!j.src.composable(g, f)) continue;
      if (j.arr_map[j.src.comp[g][f]] != j.dst.comp[j.arr_map[g]][j.arr_map[f]])
        return "composition not preserved at (" + std::to_string(g) + "," + std::to_string(f) + ")";
    }
  return {};
}

OrdFunctor identity_functor(const FinCategory& c) {
  OrdFunctor f;
  f.src = c;
  f.dst = c;
  f.obj_map.resize(c.n_obj);
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  f.arr_map.resize(c.n_arr());
  std::iota(f.arr_map.begin(), f.arr_map.end(), 0);
  return f;
}

OrdFunctor compose_functors(const OrdFunctor& g, const OrdFunctor& f) {
  if (!(f.dst == g.src)) throw std::invalid_argument("compose_functors: middle categories differ");
  OrdFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  for (int a : f.obj_map) h.obj_map.push_back(g.obj_map[a]);
  for (int x : f.arr_map) h.arr_map.push_back(g.arr_map[x]);
  return h;
}

namespace {

bool extend_iso(const FinCategory& a, const FinCategory& b, std::vector<int>& obj_map) {
  // obj_map fixed; search a compatible arrow bijection hom by hom.
  const int m = a.n_arr();
  std::vector<int> arr_map(m, -1);
  std::vector<bool> used(b.n_arr(), false);
  // Pre-match by endpoint counts.
  for (int x = 0; x < a.n_obj; ++x)
    for (int y = 0; y < a.n_obj; ++y)
      if (a.hom(x, y).size() != b.hom(obj_map[x], obj_map[y]).size()) return false;

  std::function<bool(int)> go = [&](int f) -> bool {
    if (f == m) {
      for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) {
          if (!a.composable(g, h)) continue;
          if (b.comp[arr_map[g]][arr_map[h]] != arr_map[a.comp[g][h]]) return false;
        }
      return true;
    }
    for (int fb = 0; fb < b.n_arr(); ++fb) {
      if (used[fb]) continue;
      if (b.src(fb) != obj_map[a.src(f)] || b.tgt(fb) != obj_map[a.tgt(f)]) continue;
      if (a.is_id(f) != b.is_id(fb)) continue;
      arr_map[f] = fb;
      used[fb] = true;
      if (go(f + 1)) return true;
      used[fb] = false;
      arr_map[f] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace

bool is_isomorphic(const FinCategory& a, const FinCategory& b) {
  if (a.n_obj != b.n_obj || a.n_arr() != b.n_arr()) return false;
  std::vector<int> obj_map(a.n_obj, -1);
  std::vector<bool> used(b.n_obj, false);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == a.n_obj) return extend_iso(a, b, obj_map);
    for (int y = 0; y < b.n_obj; ++y) {
      if (used[y]) continue;
      obj_map[x] = y;
      used[y] = true;
      if (go(x + 1)) return true;
      used[y] = false;
      obj_map[x] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace enrichcat
