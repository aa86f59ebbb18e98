#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enrichcat/enriched.hpp"
#include "enrichcat/ordcat.hpp"

namespace enrichcat {

// Category of generalized elements of a weight: objects are pairs
// (c, x: X -> M(c)), arrows are maps f: X -> C(c,d) whose evaluation
// triangle against the target label recovers the source label.
//
// Objects are grouped by c ascending, labels in hom_set order; arrows are
// grouped by (source element, target element), labels in hom_set order.
struct ElementsCategory {
  FinCategory carrier;
  std::vector<std::pair<int, BaseMorphism>> obj_label; // (c, x)
  std::vector<BaseMorphism> arr_label;                 // f: X -> C(c,d)
  // Defined when arrow labels are unit points: X = I, or the regular-orbit
  // case where labels project to points of the forgotten homs.
  std::optional<OrdFunctor> projection;

  int find_object(int c, const BaseMorphism& x) const; // -1 when absent
  int find_arrow(int src_el, int dst_el, const BaseMorphism& f) const;

  Json to_json() const;
};

// Requires a cartesian base, except that X = I is allowed everywhere.
ElementsCategory elements_of(const Weight& m, const BaseObject& x, const Bounds& b = {});

// Precomposition with X -> 1, from unit elements to X-elements.
OrdFunctor j_functor(const Weight& m, const BaseObject& x, const Bounds& b = {});
OrdFunctor j_functor_between(const Weight& m, const ElementsCategory& el_unit,
                             const ElementsCategory& el_x, const BaseObject& x);

// Elements at the regular orbit of a group-action weight; the projection
// lands in the underlying category of the action-forgotten enrichment.
ElementsCategory gset_elements(const Weight& m, const Bounds& b = {});

// Double category of elements of a weight valued in finite categories over a
// category enriched in them. Horizontal arrows are compatible 1-cells,
// vertical arrows are value-category arrows over a fixed object, cells are
// 2-cells whose action matches the vertical edges.
struct DoubleCategory {
  struct HArrow {
    int src = 0, tgt = 0; // object indices
    int one_cell = 0;     // object of the hom category
  };
  struct VArrow {
    int src = 0, tgt = 0; // object indices, over the same base object
    int arr = 0;          // arrow of the value category
  };
  struct Cell {
    int top = 0, bottom = 0; // horizontal indices
    int left = 0, right = 0; // vertical indices
    int two_cell = 0;        // arrow of the hom category
  };

  std::vector<std::pair<int, int>> objects; // (c, object of M(c))
  std::vector<HArrow> horiz;
  std::vector<int> h_id;                 // per object
  std::vector<std::vector<int>> h_comp;  // [later][earlier], -1 off domain
  std::vector<VArrow> vert;
  std::vector<int> v_id;                 // per object
  std::vector<std::vector<int>> v_comp;  // [lower][upper], -1 off domain
  std::vector<Cell> cells;
  std::vector<int> cell_h_id;                // per vertical, horizontal unit
  std::vector<int> cell_v_id;                // per horizontal, vertical unit
  std::vector<std::vector<int>> cell_h_comp; // [later][earlier], -1 off domain
  std::vector<std::vector<int>> cell_v_comp; // [lower][upper], -1 off domain

  Json to_json() const;
};

DoubleCategory double_elements(const Weight& m, const Bounds& b = {});

// Objects with the horizontal arrows.
FinCategory h_category(const DoubleCategory& d);
// Vertical arrows with the cells under horizontal composition.
FinCategory h1_category(const DoubleCategory& d);
// Identity verticals and identity cells, from the first to the second.
OrdFunctor one_h_functor(const DoubleCategory& d);

// Category axioms for both extracted categories, unit and associativity for
// both cell compositions, boundary compatibility, and interchange.
std::string validate_double(const DoubleCategory& d);

// Clause 1: the horizontal category is filtered. Clause 2: every vertical
// fits in a cell whose right edge is an identity vertical. Clause 3: two
// such cells on the same boundary are equalized by whiskering with some
// outgoing horizontal arrow.
Verdict is_filtered_double(const DoubleCategory& d);

}  // namespace enrichcat
