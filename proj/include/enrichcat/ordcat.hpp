#pragma once

#include "enrichcat/fincat.hpp"
#include "enrichcat/verdict.hpp"

namespace enrichcat {

// Filteredness of a finite category at countable arity: nonempty, every pair
// of objects admits a cospan, every parallel pair of arrows admits an arrow
// equalising it on the left. A No certificate names the violated clause and
// the offending objects or arrows.
Verdict is_filtered(const FinCategory& c);

// Comma category b/J: objects are arrows b -> J(a), morphisms are arrows of
// J's domain making the triangle commute. Labels are exposed so callers can
// report witnesses.
struct CommaCategory {
  FinCategory carrier;
  std::vector<std::pair<int, int>> obj_label; // (object a of dom J, arrow b -> J(a))
  std::vector<int> arr_label;                 // arrow of dom J
};

CommaCategory comma(int b, const OrdFunctor& j);

// Finality: every comma category b/J is nonempty and connected. The No
// certificate names b and splits the comma objects into components.
Verdict is_final(const OrdFunctor& j);

Verdict is_fully_faithful(const OrdFunctor& j);

// An index S : E -> F presents a protofiltered shape when F is filtered and
// S is final.
Verdict is_protofiltered_index(const OrdFunctor& s);

// Connected components of a finite category's underlying graph.
std::vector<int> connected_components(const FinCategory& c, int* count = nullptr);

}  // namespace enrichcat
