#include <algorithm>

#include "doctest.h"
#include "enrichcat/base.hpp"

using namespace enrichcat;

namespace {

BaseObject set_of(const BasePtr& b, int n) { return {b, SetCarrier{n}}; }
BaseObject vec_of(const BasePtr& b, int n) { return {b, VecCarrier{n}}; }

BaseMorphism table(const BasePtr& b, BaseObject src, BaseObject dst, std::vector<int> m) {
  return {b, std::move(src), std::move(dst), FuncData{std::move(m)}};
}

}  // namespace

TEST_CASE("FinSet internal hom matches the hom set") {
  auto B = finset_base();
  BaseObject two = set_of(B, 2), three = set_of(B, 3);
  CHECK(carrier_size(B->hom(two, three)) == 9);
  auto maps = B->hom_set(two, three);
  CHECK(maps.size() == 9);
  for (auto& f : maps) B->validate_morphism(f);
  // hom-set enumeration order agrees with the internal-hom element coding.
  CHECK(apply_func(maps[5], 0) == 2);  // 5 = 2 + 1*3
  CHECK(apply_func(maps[5], 1) == 1);
}

TEST_CASE("FinSet currying is a bijection") {
  auto B = finset_base();
  BaseObject x = set_of(B, 2), y = set_of(B, 2), z = set_of(B, 3);
  auto fs = B->hom_set(B->tensor(x, y), z);
  std::vector<BaseMorphism> curried;
  for (auto& f : fs) {
    BaseMorphism g = B->transpose(f, x, y);
    B->validate_morphism(g);
    CHECK(g.dst == B->hom(y, z));
    CHECK(B->untranspose(g, y, z) == f);
    curried.push_back(g);
  }
  for (size_t i = 0; i < curried.size(); ++i)
    for (size_t j = i + 1; j < curried.size(); ++j) CHECK(!(curried[i] == curried[j]));
}

TEST_CASE("FinSet limits and colimits satisfy their universal properties") {
  auto B = finset_base();
  BaseObject two = set_of(B, 2), three = set_of(B, 3);
  BaseMorphism f = table(B, two, three, {0, 1});
  BaseMorphism g = table(B, two, three, {0, 2});

  auto eq = B->equalizer(f, g);
  CHECK(carrier_size(eq.apex) == 1);  // only 0 agrees
  auto coeq = B->coequalizer(f, g);
  CHECK(carrier_size(coeq.apex) == 2);  // 1 ~ 2 collapse

  // Mediating maps exist for compatible (co)cones and are checked.
  BaseObject one = set_of(B, 1);
  BaseMorphism cone_leg = table(B, one, two, {0});
  BaseMorphism med = induce_limit(eq, {cone_leg, B->compose(f, cone_leg)});
  CHECK(carrier_size(med.src) == 1);
  BaseMorphism bad_leg = table(B, one, two, {1});
  CHECK_THROWS_AS(induce_limit(eq, {bad_leg, B->compose(f, bad_leg)}), std::invalid_argument);

  BaseMorphism collapse = table(B, three, one, {0, 0, 0});
  BaseMorphism out = induce_colimit(coeq, {B->compose(collapse, f), collapse});
  CHECK(carrier_size(out.dst) == 1);

  auto prod = B->product({two, three});
  CHECK(carrier_size(prod.apex) == 6);
  auto copr = B->coproduct({two, three});
  CHECK(carrier_size(copr.apex) == 5);
  CHECK(carrier_size(B->terminal()) == 1);
  CHECK(carrier_size(B->product({}).apex) == 1);
  CHECK(carrier_size(B->coproduct({}).apex) == 0);
}

TEST_CASE("FinSet split idempotent is a retract") {
  auto B = finset_base();
  BaseObject four = set_of(B, 4);
  BaseMorphism e = table(B, four, four, {0, 0, 2, 2});
  auto s = B->split_idempotent(e);
  CHECK(carrier_size(s.object) == 2);
  CHECK(B->compose(s.proj, s.incl) == B->identity(s.object));
  CHECK(B->compose(s.incl, s.proj) == e);
}

TEST_CASE("FinSet braiding is a self-inverse symmetry") {
  auto B = finset_base();
  BaseObject x = set_of(B, 2), y = set_of(B, 3);
  BaseMorphism b1 = B->braiding(x, y), b2 = B->braiding(y, x);
  CHECK(B->compose(b2, b1) == B->identity(B->tensor(x, y)));
}

TEST_CASE("FinSet dualizability is the unit test") {
  auto B = finset_base();
  CHECK(B->is_dualizable(set_of(B, 1)).is_yes());
  CHECK(B->is_dualizable(set_of(B, 2)).is_no());
}

TEST_CASE("group tables") {
  CHECK(validate_group(cyclic_group(1)).empty());
  CHECK(validate_group(cyclic_group(4)).empty());
  Group s3 = symmetric_group_3();
  CHECK(validate_group(s3).empty());
  CHECK(s3.size() == 6);
  for (int g = 0; g < 6; ++g) CHECK(s3.mult[g][s3.inverse(g)] == 0);
  Group broken = cyclic_group(3);
  broken.mult[1][1] = 1;
  CHECK(!validate_group(broken).empty());
}

TEST_CASE("FinGSet regular action basics") {
  auto B = fingset_base(cyclic_group(2));
  BaseObject reg = B->generator()[0];
  B->validate_object(reg);
  CHECK(carrier_size(reg) == 2);

  // No fixed points in the regular action of a nontrivial group.
  CHECK(B->points(reg).empty());
  // Equivariant self-maps of the regular action: right translations.
  CHECK(B->hom_set(reg, reg).size() == 2);

  BaseObject sq = B->tensor(reg, reg);
  B->validate_object(sq);
  CHECK(carrier_size(sq) == 4);
  // Internal hom carries the conjugation action; its fixed points are the
  // equivariant maps.
  BaseObject h = B->hom(reg, reg);
  CHECK(carrier_size(h) == 4);
  CHECK(B->points(h).size() == B->hom_set(reg, reg).size());
}

TEST_CASE("FinGSet currying stays equivariant") {
  auto B = fingset_base(cyclic_group(2));
  BaseObject reg = B->generator()[0];
  BaseObject sq = B->tensor(reg, reg);
  for (auto& f : B->hom_set(sq, reg)) {
    BaseMorphism g = B->transpose(f, reg, reg);
    B->validate_morphism(g);
    CHECK(B->untranspose(g, reg, reg) == f);
  }
}

TEST_CASE("FinGSet colimits respect the action") {
  auto B = fingset_base(cyclic_group(2));
  BaseObject reg = B->generator()[0];
  // Coequalize the identity against the swap: one orbit collapses to a point.
  BaseMorphism swap = table(B, reg, reg, {1, 0});
  B->validate_morphism(swap);
  auto q = B->coequalizer(B->identity(reg), swap);
  CHECK(carrier_size(q.apex) == 1);
  B->validate_object(q.apex);
  B->validate_morphism(q.injections[1]);

  auto prod = B->product({reg, reg});
  CHECK(carrier_size(prod.apex) == 4);
  B->validate_object(prod.apex);
  for (auto& p : prod.projections) B->validate_morphism(p);
}

TEST_CASE("FinGSet split idempotent keeps the induced action") {
  auto B = fingset_base(cyclic_group(2));
  BaseObject reg = B->generator()[0];
  BaseObject sq = B->tensor(reg, reg);
  // (x, y) -> (x, x) is equivariant and idempotent; fixed part is a copy of
  // the regular action (the diagonal).
  BaseMorphism e = table(B, sq, sq, {0, 0, 3, 3});
  B->validate_morphism(e);
  CHECK(B->compose(e, e) == e);
  auto s = B->split_idempotent(e);
  B->validate_object(s.object);
  B->validate_morphism(s.incl);
  B->validate_morphism(s.proj);
  CHECK(carrier_size(s.object) == 2);
  CHECK(B->compose(s.proj, s.incl) == B->identity(s.object));
  CHECK(B->compose(s.incl, s.proj) == e);
}

TEST_CASE("FinVec hom sets and isomorphisms over F2") {
  auto B = finvec_base(2);
  BaseObject one = vec_of(B, 1), two = vec_of(B, 2);
  CHECK(B->hom_set(one, two).size() == 4);
  auto endos = B->hom_set(two, two);
  CHECK(endos.size() == 16);
  int invertible = 0;
  for (auto& f : endos) {
    B->validate_morphism(f);
    if (B->is_iso(f)) {
      ++invertible;
      CHECK(B->compose(B->invert(f), f) == B->identity(two));
    }
  }
  CHECK(invertible == 6);  // |GL_2(F_2)|
}

TEST_CASE("FinVec equalizers and coequalizers are kernels and cokernels") {
  auto B = finvec_base(2);
  BaseObject two = vec_of(B, 2);
  FpMat fm(2, 2, 2);
  fm.at(0, 0) = 1;  // projection onto the first coordinate
  BaseMorphism f{B, two, two, fm};
  BaseMorphism z{B, two, two, FpMat(2, 2, 2)};
  auto eq = B->equalizer(f, z);
  CHECK(carrier_size(eq.apex) == 1);
  auto coeq = B->coequalizer(f, z);
  CHECK(carrier_size(coeq.apex) == 1);

  // Universal property through the presentation.
  BaseMorphism med = induce_colimit(coeq, {B->compose(coeq.injections[1], f), coeq.injections[1]});
  CHECK(med.src == coeq.apex);

  auto prod = B->product({two, vec_of(B, 3)});
  CHECK(carrier_size(prod.apex) == 5);  // biproduct
  auto copr = B->coproduct({two, vec_of(B, 3)});
  CHECK(carrier_size(copr.apex) == 5);
}

TEST_CASE("FinVec currying and braiding") {
  auto B = finvec_base(3);
  BaseObject x = vec_of(B, 1), y = vec_of(B, 2), z = vec_of(B, 2);
  for (auto& f : B->hom_set(B->tensor(x, y), z)) {
    BaseMorphism g = B->transpose(f, x, y);
    B->validate_morphism(g);
    CHECK(g.dst == B->hom(y, z));
    CHECK(B->untranspose(g, y, z) == f);
  }
  BaseObject w = vec_of(B, 3);
  CHECK(B->compose(B->braiding(w, y), B->braiding(y, w)) == B->identity(B->tensor(y, w)));
}

TEST_CASE("FinVec split idempotent is an image factorization") {
  auto B = finvec_base(2);
  BaseObject two = vec_of(B, 2);
  FpMat em(2, 2, 2);
  em.at(0, 0) = 1;
  em.at(0, 1) = 1;  // e(x, y) = (x + y, 0), idempotent over F2
  BaseMorphism e{B, two, two, em};
  CHECK(B->compose(e, e) == e);
  auto s = B->split_idempotent(e);
  CHECK(carrier_size(s.object) == 1);
  CHECK(B->compose(s.proj, s.incl) == B->identity(s.object));
  CHECK(B->compose(s.incl, s.proj) == e);
}

TEST_CASE("FinVec objects are dualizable with checked witnesses") {
  auto B = finvec_base(5);
  CHECK(B->is_dualizable(vec_of(B, 3)).is_yes());
  CHECK(B->is_dualizable(vec_of(B, 0)).is_yes());
}

TEST_CASE("FinCat functor category of the walking arrow") {
  auto B = fincat_base();
  BaseObject two{B, walking_arrow()};
  auto fs = B->hom_set(two, two);
  CHECK(fs.size() == 3);  // two constants and the identity
  for (auto& f : fs) B->validate_morphism(f);

  BaseObject h = B->hom(two, two);
  const FinCategory& hc = std::get<FinCategory>(h.data);
  CHECK(hc.n_obj == 3);
  CHECK(hc.n_arr() == 6);
  B->validate_object(h);

  CHECK(B->points(two).size() == 2);
}

TEST_CASE("FinCat currying round trip") {
  auto B = fincat_base();
  BaseObject two{B, walking_arrow()};
  BaseObject sq = B->tensor(two, two);
  CHECK(std::get<FinCategory>(sq.data).n_obj == 4);
  for (auto& f : B->hom_set(sq, two)) {
    BaseMorphism g = B->transpose(f, two, two);
    B->validate_morphism(g);
    CHECK(B->untranspose(g, two, two) == f);
  }
}

TEST_CASE("FinCat braiding and pairing") {
  auto B = fincat_base();
  BaseObject two{B, walking_arrow()};
  BaseObject three{B, discrete_category(3)};
  CHECK(B->compose(B->braiding(three, two), B->braiding(two, three)) ==
        B->identity(B->tensor(two, three)));
  BaseMorphism d = B->pair(B->identity(two), B->identity(two));
  B->validate_morphism(d);
  CHECK(d.dst == B->tensor(two, two));
}

TEST_CASE("FinCat limits are computed componentwise") {
  auto B = fincat_base();
  BaseObject two{B, walking_arrow()};
  auto prod = B->product({two, two});
  CHECK(std::get<FinCategory>(prod.apex.data).n_obj == 4);
  CHECK(std::get<FinCategory>(prod.apex.data).n_arr() == 9);
  for (auto& p : prod.projections) B->validate_morphism(p);

  // Equalizer of the two constant endofunctors of the walking arrow is the
  // full subcategory where they agree: empty here.
  auto fs = B->hom_set(two, two);
  auto by_objs = [&](std::vector<int> want) {
    for (auto& f : fs)
      if (std::get<FunctorData>(f.data).obj_map == want) return f;
    throw std::logic_error("functor not found");
  };
  auto eq = B->equalizer(by_objs({0, 0}), by_objs({1, 1}));
  CHECK(std::get<FinCategory>(eq.apex.data).n_obj == 0);
  auto eq2 = B->equalizer(by_objs({0, 0}), by_objs({0, 1}));
  CHECK(std::get<FinCategory>(eq2.apex.data).n_obj == 1);
}

TEST_CASE("FinCat colimits: gluing two arrows end to end") {
  auto B = fincat_base();
  BaseObject pt{B, terminal_category()};
  BaseObject two{B, walking_arrow()};
  FinCategory span;  // 1 <- 0 -> 2 indexing the pushout
  span.n_obj = 3;
  span.arrows = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}};
  span.id_arrow = {0, 1, 2};
  span.comp.assign(5, std::vector<int>(5, -1));
  for (int i = 0; i < 3; ++i) span.comp[i][i] = i;
  span.comp[1][3] = 3;
  span.comp[3][0] = 3;
  span.comp[2][4] = 4;
  span.comp[4][0] = 4;
  REQUIRE(validate_fincategory(span).empty());

  BaseDiagram d;
  d.shape = span;
  d.ob = {pt, two, two};
  FinCategory twoc = walking_arrow();
  d.ar = {B->identity(pt), B->identity(two), B->identity(two),
          BaseMorphism{B, pt, two, FunctorData{{1}, {twoc.id_arrow[1]}}},
          BaseMorphism{B, pt, two, FunctorData{{0}, {twoc.id_arrow[0]}}}};
  REQUIRE(validate_diagram(d).empty());

  auto res = B->finite_colimit(d);
  const FinCategory& apex = std::get<FinCategory>(res.apex.data);
  CHECK(apex.n_obj == 3);
  CHECK(apex.n_arr() == 6);  // chain of length two
  for (auto& inj : res.injections) B->validate_morphism(inj);

  // The mediating functor to the walking arrow collapsing the second copy.
  FinCategory tc = walking_arrow();
  BaseMorphism to_two = induce_colimit(
      res, {BaseMorphism{B, pt, two, FunctorData{{1}, {tc.id_arrow[1]}}}, B->identity(two),
            BaseMorphism{B, two, two, FunctorData{{1, 1}, {tc.id_arrow[1], tc.id_arrow[1], tc.id_arrow[1]}}}});
  B->validate_morphism(to_two);
}

TEST_CASE("FinCat colimits fall back to Unknown when words never settle") {
  auto B = fincat_base();
  BaseObject pt{B, terminal_category()};
  BaseObject two{B, walking_arrow()};
  FinCategory tc = walking_arrow();
  // Identify both endpoints of the arrow: the result is a free monoid, which
  // is not finite, and the bounded closure reports a ceiling.
  BaseMorphism pick0{B, pt, two, FunctorData{{0}, {tc.id_arrow[0]}}};
  BaseMorphism pick1{B, pt, two, FunctorData{{1}, {tc.id_arrow[1]}}};
  CHECK_THROWS_AS(B->coequalizer(pick0, pick1), ceiling_error);
}

TEST_CASE("FinCat filtered colimit goes setwise") {
  auto B = fincat_base();
  BaseObject pt{B, terminal_category()};
  BaseObject two{B, walking_arrow()};
  FinCategory tc = walking_arrow();
  BaseDiagram d;
  d.shape = walking_arrow();  // filtered shape with a terminal object
  d.ob = {pt, two};
  d.ar = {B->identity(pt), B->identity(two), BaseMorphism{B, pt, two, FunctorData{{0}, {tc.id_arrow[0]}}}};
  REQUIRE(validate_diagram(d).empty());
  auto res = B->finite_colimit(d);
  CHECK(is_isomorphic(std::get<FinCategory>(res.apex.data), walking_arrow()));
}

TEST_CASE("FinCat split idempotent carves out the fixed subcategory") {
  auto B = fincat_base();
  BaseObject two{B, walking_arrow()};
  FinCategory tc = walking_arrow();
  // Collapse everything onto the target endpoint.
  BaseMorphism e{B, two, two,
                 FunctorData{{1, 1}, {tc.id_arrow[1], tc.id_arrow[1], tc.id_arrow[1]}}};
  B->validate_morphism(e);
  CHECK(B->compose(e, e) == e);
  auto s = B->split_idempotent(e);
  CHECK(std::get<FinCategory>(s.object.data).n_obj == 1);
  CHECK(B->compose(s.proj, s.incl) == B->identity(s.object));
  CHECK(B->compose(s.incl, s.proj) == e);
}

TEST_CASE("diagram validation rejects non-functorial data") {
  auto B = finset_base();
  BaseObject two = set_of(B, 2);
  BaseDiagram d;
  d.shape = walking_arrow();
  d.ob = {two, two};
  d.ar = {B->identity(two), B->identity(two), table(B, two, two, {1, 0})};
  CHECK(validate_diagram(d).empty());
  d.ar[0] = table(B, two, two, {1, 0});  // identity slot not an identity
  CHECK(!validate_diagram(d).empty());
}

TEST_CASE("base serialization round trip") {
  auto B = fingset_base(symmetric_group_3());
  auto B2 = base_from_json(B->descriptor());
  CHECK(same_base(*B, *B2));
  CHECK(same_base(*finset_base(), *base_from_json(finset_base()->descriptor())));
  CHECK(same_base(*finvec_base(7), *base_from_json(finvec_base(7)->descriptor())));
  CHECK(!same_base(*finvec_base(7), *finvec_base(5)));
}
