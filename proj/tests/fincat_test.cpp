#include "doctest.h"
#include "enrichcat/fincat.hpp"
#include "enrichcat/verdict.hpp"

using namespace enrichcat;

TEST_CASE("walking arrow shape") {
  FinCategory c = walking_arrow();
  CHECK(validate_fincategory(c).empty());
  CHECK(c.n_obj == 2);
  CHECK(c.n_arr() == 3);
  CHECK(c.hom(0, 1).size() == 1);
  CHECK(c.hom(1, 0).empty());
  int a = c.hom(0, 1)[0];
  CHECK(c.compose(c.id_arrow[1], a) == a);
  CHECK(c.compose(a, c.id_arrow[0]) == a);
}

TEST_CASE("free category on a chain quiver") {
  FinCategory c = free_category(3, {{0, 1}, {1, 2}});
  CHECK(validate_fincategory(c).empty());
  CHECK(c.n_obj == 3);
  // Three identities, two edges, one length-two path.
  CHECK(c.n_arr() == 6);
  CHECK(c.hom(0, 2).size() == 1);
  int e01 = c.hom(0, 1)[0], e12 = c.hom(1, 2)[0];
  CHECK(c.compose(e12, e01) == c.hom(0, 2)[0]);
}

TEST_CASE("free category rejects cyclic quivers") {
  CHECK_THROWS_AS(free_category(2, {{0, 1}, {1, 0}}, 50), ceiling_error);
}

TEST_CASE("product category counts") {
  FinCategory p = product_category(walking_arrow(), walking_arrow());
  CHECK(validate_fincategory(p).empty());
  CHECK(p.n_obj == 4);
  CHECK(p.n_arr() == 9);
  // The diagonal composite agrees with composing either way around the square.
  int a = walking_arrow().hom(0, 1)[0];
  int m = walking_arrow().n_arr();
  int id0 = walking_arrow().id_arrow[0], id1 = walking_arrow().id_arrow[1];
  int right_then_up = p.compose(a * m + id1, id0 * m + a);
  int up_then_right = p.compose(id1 * m + a, a * m + id0);
  CHECK(right_then_up == up_then_right);
  CHECK(right_then_up == a * m + a);
}

TEST_CASE("opposite is an involution") {
  FinCategory c = free_category(3, {{0, 1}, {1, 2}});
  CHECK(opposite_category(opposite_category(c)) == c);
  FinCategory o = opposite_category(c);
  CHECK(validate_fincategory(o).empty());
  CHECK(o.hom(2, 0).size() == 1);
  CHECK(o.hom(0, 2).empty());
}

TEST_CASE("validator pinpoints a broken composition table") {
  FinCategory c = walking_arrow();
  int a = c.hom(0, 1)[0];
  c.comp[c.id_arrow[1]][a] = c.id_arrow[1];  // wrong endpoints for the product
  CHECK(!validate_fincategory(c).empty());
}

TEST_CASE("functor validation and composition") {
  FinCategory two = walking_arrow(), one = terminal_category();
  OrdFunctor collapse{two, one, {0, 0}, {0, 0, 0}};
  CHECK(validate_ordfunctor(collapse).empty());
  OrdFunctor pick1{one, two, {1}, {two.id_arrow[1]}};
  CHECK(validate_ordfunctor(pick1).empty());
  OrdFunctor round = compose_functors(pick1, collapse);
  CHECK(validate_ordfunctor(round).empty());
  CHECK(round.on_obj(0) == 1);
  CHECK(round.on_obj(1) == 1);

  OrdFunctor bad{two, two, {0, 1}, {two.id_arrow[0], two.id_arrow[1], two.id_arrow[0]}};
  CHECK(!validate_ordfunctor(bad).empty());
}

TEST_CASE("isomorphism detection is structural, not literal") {
  FinCategory chain = free_category(3, {{0, 1}, {1, 2}});
  FinCategory chain_renamed = free_category(3, {{2, 1}, {1, 0}});
  CHECK(is_isomorphic(chain, chain_renamed));
  CHECK(!is_isomorphic(chain, discrete_category(3)));
  CHECK(is_isomorphic(terminal_category(), discrete_category(1)));
  CHECK(!is_isomorphic(walking_arrow(), discrete_category(2)));
}

TEST_CASE("category json round trip") {
  FinCategory c = product_category(walking_arrow(), discrete_category(2));
  CHECK(FinCategory::from_json(c.to_json()) == c);
  OrdFunctor f = identity_functor(c);
  OrdFunctor g = OrdFunctor::from_json(f.to_json());
  CHECK(g == f);
}
