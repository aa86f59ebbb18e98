#pragma once

#include <vector>

#include "enrichcat/base.hpp"

namespace enrichcat::detail {

struct CatColim {
  FinCategory apex;
  std::vector<FunctorData> inj;  // one per shape object
  CatColimPres pres;
};

// Colimit of a finite diagram of finite categories. Filtered shapes go
// through a setwise construction; otherwise arrows are built as words of
// generators under bounded congruence closure, and a diagram whose colimit
// does not visibly stabilize inside the word bounds raises ceiling_error
// (this includes genuinely infinite colimits).
CatColim cat_colimit(const std::vector<FinCategory>& blocks, const FinCategory& shape,
                     const std::vector<FunctorData>& maps, const Bounds& b);

}  // namespace enrichcat::detail
