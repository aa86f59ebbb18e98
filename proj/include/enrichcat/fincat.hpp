#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace enrichcat {

// Finite category presented by explicit arrow and composition tables.
// Arrows are indexed 0..arrow_count-1; comp(g, f) is "g after f" and is
// defined exactly when tgt(f) == src(g).
struct FinCategory {
  struct Arrow {
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
  };

  int n_obj = 0;
  std::vector<Arrow> arrows;
  std::vector<int> id_arrow;          // per object
  std::vector<std::vector<int>> comp; // comp[g][f], -1 when not composable

  int n_arr() const { return static_cast<int>(arrows.size()); }
  int src(int f) const { return arrows[f].src; }
  int tgt(int f) const { return arrows[f].tgt; }
  bool composable(int g, int f) const { return arrows[f].tgt == arrows[g].src; }
  int compose(int g, int f) const { return comp[g][f]; }
  bool is_id(int f) const { return id_arrow[arrows[f].src] == f && arrows[f].src == arrows[f].tgt; }

  std::vector<int> hom(int a, int b) const;

  bool operator==(const FinCategory&) const = default;

  nlohmann::json to_json() const;
  static FinCategory from_json(const nlohmann::json& j);
};

// Empty string when valid, otherwise a description of the first failure.
std::string validate_fincategory(const FinCategory& c);

FinCategory discrete_category(int n);
FinCategory terminal_category();
// Free category on the arrow 0 -> 1 (the walking arrow).
FinCategory walking_arrow();
FinCategory product_category(const FinCategory& a, const FinCategory& b);
FinCategory opposite_category(const FinCategory& c);

// Free category on a finite graph; throws if some hom collects more than
// `max_paths` paths (cyclic graphs are rejected that way, not specially).
FinCategory free_category(int n_obj, const std::vector<std::pair<int, int>>& edges,
                          int max_paths = 10000);

struct OrdFunctor {
  FinCategory src;
  FinCategory dst;
  std::vector<int> obj_map;
  std::vector<int> arr_map;

  int on_obj(int a) const { return obj_map[a]; }
  int on_arr(int f) const { return arr_map[f]; }

  bool operator==(const OrdFunctor&) const = default;

  nlohmann::json to_json() const;
  static OrdFunctor from_json(const nlohmann::json& j);
};

std::string validate_ordfunctor(const OrdFunctor& f);

OrdFunctor identity_functor(const FinCategory& c);
OrdFunctor compose_functors(const OrdFunctor& g, const OrdFunctor& f);

bool is_isomorphic(const FinCategory& a, const FinCategory& b);

}  // namespace enrichcat
