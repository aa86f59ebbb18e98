#pragma once

#include <string>
#include <vector>

#include "enrichcat/enriched.hpp"

namespace enrichcat {

// M (*) H as the coequalizer of the two relation maps out of the pair-indexed
// sum of C(a,b) (x) M(b) (x) H(a) into the object-indexed sum of
// M(c) (x) H(c). One relation acts on the weight, the other braids past the
// weight value and acts on the diagram.
struct WeightedColimit {
  BaseObject value;
  std::vector<BaseMorphism> cocone; // per object c: M(c) (x) H(c) -> value
  ColimResult sum;                  // object-indexed coproduct
  ColimResult coeq;                 // apex = value
  BaseMorphism rel_left;            // pair sum -> object sum
  BaseMorphism rel_right;
};

WeightedColimit weighted_colimit(const Weight& m, const CoWeight& h, const Bounds& b = {});

// Empty when the legs are a cocone under the coend relations.
std::string check_cocone(const Weight& m, const CoWeight& h,
                         const std::vector<BaseMorphism>& legs);

// Mediator out of the colimit; throws std::invalid_argument on a non-cocone.
BaseMorphism induce_weighted(const WeightedColimit& w, const std::vector<BaseMorphism>& legs);

// Exhaustively verifies that every cocone into each target factors uniquely
// through the computed value.
Verdict colimit_universal(const Weight& m, const CoWeight& h, const WeightedColimit& w,
                          const std::vector<BaseObject>& targets, const Bounds& b = {});

// {N, K} as the equalizer of the two relation maps from the object-indexed
// product of internal homs [N(c), K(c)] into the pair-indexed product of
// [C(a,b) (x) N(a), K(b)].
struct WeightedLimit {
  BaseObject value;
  std::vector<BaseMorphism> cone; // per object c: value -> [N(c), K(c)]
  LimitResult prod;
  LimitResult eq;        // apex = value
  BaseMorphism rel_left; // object product -> pair product
  BaseMorphism rel_right;
};

WeightedLimit weighted_limit(const CoWeight& n, const CoWeight& k, const Bounds& b = {});

// Mediator into the limit; throws std::invalid_argument on a non-cone.
BaseMorphism induce_weighted_limit(const WeightedLimit& w, const std::vector<BaseMorphism>& legs);

// Limit weighted by the generalized-equalizer weight of a parallel pair
// g1, g2 : X -> C(d1, d2), presented directly as the equalizer of the two
// transposed action maps K(d1) -> [X, K(d2)]. The single cone leg is the
// equalizer inclusion into K(d1).
WeightedLimit nx_weighted_limit(const BaseObject& x, int d1, int d2, const BaseMorphism& g1,
                                const BaseMorphism& g2, const CoWeight& k);

// Natural map yoneda(z) -> p determined by a point eta : I -> p(z).
WeightMap yoneda_map(const Weight& p, int z, const BaseMorphism& eta);

// X (.) C(-, a) as a presheaf weight, plus an exhaustive search for an object
// representing it inside the category.
struct CopowerResult {
  Weight presheaf;
  Verdict in_category; // Yes carries the representing object and its unit
};

CopowerResult copower(const BaseObject& x, int a, const VCategoryPtr& c, const Bounds& b = {});

struct CompletionResult {
  VCategoryPtr completed;
  VFunctor embedding;
  Json provenance;
};

// Splits every idempotent unit point of the endo homs; the new homs are the
// base splittings of the two-sided composition idempotents.
CompletionResult karoubi(const VCategoryPtr& c, const Bounds& b = {});

// Closure under tuples of objects with block-matrix homs, up to length k.
CompletionResult matrix_completion(const VCategoryPtr& c, int k, const Bounds& b = {});

// Cartesian bases: idempotent splitting. Linear base: matrix completion at
// the search bound, then idempotent splitting.
CompletionResult cauchy_completion(const VCategoryPtr& c, const Bounds& b = {});

// Fully faithful plus essentially surjective, by exhaustive point search.
Verdict is_equivalence(const VFunctor& f, const Bounds& b = {});

// Conical colimit of representables over the category of elements of an
// ordinary presheaf on the underlying category.
Weight realize_presheaf(const VCategoryPtr& c, const UnderlyingCat& u, const OrdPresheaf& n,
                        const Bounds& b = {});

// Invertibility of the canonical comparison from the realization of the
// underlying presheaf back to the weight, checked objectwise.
Verdict counit_iso_check(const Weight& m, const Bounds& b = {});

}  // namespace enrichcat
