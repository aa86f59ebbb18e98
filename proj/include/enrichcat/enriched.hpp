#pragma once

#include <memory>
#include <string>
#include <vector>

#include "enrichcat/base.hpp"
#include "enrichcat/fincat.hpp"
#include "enrichcat/verdict.hpp"

namespace enrichcat {

// Category enriched in one of the bases. Hom data is stored as explicit
// carriers and structure morphisms; the monoidal structure is strict, so
// every law below is a literal equality of morphisms.
//
// comp(a, b, c) : hom(b,c) (x) hom(a,b) -> hom(a,c), the later arrow on the
// left tensor factor.
struct VCategory {
  BasePtr base;
  int n_obj = 0;
  std::vector<std::vector<BaseObject>> homs;                 // [a][b]
  std::vector<BaseMorphism> idents;                          // I -> hom(a,a)
  std::vector<std::vector<std::vector<BaseMorphism>>> comps; // [a][b][c]

  const BaseObject& hom(int a, int b) const { return homs[a][b]; }
  const BaseMorphism& ident(int a) const { return idents[a]; }
  const BaseMorphism& comp(int a, int b, int c) const { return comps[a][b][c]; }

  Json to_json() const;
  static VCategory from_json(const BasePtr& b, const Json& j);
};

using VCategoryPtr = std::shared_ptr<const VCategory>;

// Empty string when the unit and associativity laws hold on the nose,
// otherwise a description of the first failure.
std::string validate_vcategory(const VCategory& c);

struct VFunctor {
  VCategoryPtr src;
  VCategoryPtr dst;
  std::vector<int> obj_map;
  std::vector<std::vector<BaseMorphism>> hom_map; // [a][b]: C(a,b) -> D(Fa,Fb)
};

std::string validate_vfunctor(const VFunctor& f);
VFunctor identity_vfunctor(const VCategoryPtr& c);
VFunctor compose_vfunctors(const VFunctor& g, const VFunctor& f);

// Contravariant weight in evaluation form:
//   act(a, b) : C(a,b) (x) M(b) -> M(a).
struct Weight {
  VCategoryPtr cat;
  std::vector<BaseObject> value;
  std::vector<std::vector<BaseMorphism>> act; // [a][b]

  Json to_json() const;
  static Weight from_json(const VCategoryPtr& c, const Json& j);
};

std::string validate_weight(const Weight& m);

// Covariant diagram in evaluation form:
//   act(a, b) : C(a,b) (x) H(a) -> H(b).
struct CoWeight {
  VCategoryPtr cat;
  std::vector<BaseObject> value;
  std::vector<std::vector<BaseMorphism>> act; // [a][b]

  Json to_json() const;
  static CoWeight from_json(const VCategoryPtr& c, const Json& j);
};

std::string validate_coweight(const CoWeight& h);

// Morphism of weights over a fixed category: components t[c] : M(c) -> N(c)
// commuting with both actions.
struct WeightMap {
  std::vector<BaseMorphism> component;
};

std::string validate_weight_map(const Weight& m, const Weight& n, const WeightMap& t);

Weight yoneda_weight(const VCategoryPtr& c, int obj);
CoWeight coyoneda_coweight(const VCategoryPtr& c, int obj);

// Ordinary category of unit points of the homs. Arrows are grouped by
// (source, target) in the base's hom_set order; composition and identities
// are looked up through the enriched structure.
struct UnderlyingCat {
  FinCategory cat;
  std::vector<BaseMorphism> arr_point;     // per arrow, a point I -> hom(a,b)
  std::vector<std::vector<int>> hom_start; // [a][b] first arrow index
  std::vector<std::vector<int>> hom_count; // [a][b]

  int find_arrow(int a, int b, const BaseMorphism& p) const; // -1 when absent
};

UnderlyingCat underlying_category(const VCategory& c, const Bounds& b = {});

OrdFunctor underlying_functor(const VFunctor& f, const UnderlyingCat& src_u,
                              const UnderlyingCat& dst_u);

// Set-valued presheaf on an ordinary category: element counts per object and
// one contravariant transition table per arrow.
struct OrdPresheaf {
  FinCategory cat;
  std::vector<int> size;
  std::vector<std::vector<BaseMorphism>> pt; // [c][i]: points I -> M(c)
  std::vector<std::vector<int>> action;      // [arrow f: a->b]: P(b) -> P(a)
};

OrdPresheaf underlying_presheaf(const Weight& m, const UnderlyingCat& u,
                                const Bounds& b = {});

// Change of base along the action-forgetting functor; only defined when the
// input lives over a group-action base.
VCategoryPtr forget_to_sets(const VCategory& c);
Weight forget_to_sets(const Weight& m, const VCategoryPtr& forgotten);

// Ordinary category regarded as enriched in finite sets: hom carriers are the
// hom lists in arrow-index order.
VCategory set_vcategory(const FinCategory& c);

}  // namespace enrichcat
