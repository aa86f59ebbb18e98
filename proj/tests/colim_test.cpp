#include <algorithm>

#include "doctest.h"
#include "enrichcat/colim.hpp"

using namespace enrichcat;

namespace {

VCategoryPtr unit_vcat(const BasePtr& b) {
  auto c = std::make_shared<VCategory>();
  c->base = b;
  c->n_obj = 1;
  c->homs = {{b->unit()}};
  c->idents = {b->identity(b->unit())};
  c->comps = {{{b->identity(b->unit())}}};
  return c;
}

VCategoryPtr sigma_vcat(const BasePtr& b, const FinCategory& k, int unit_obj,
                        FunctorData comp_fd) {
  auto c = std::make_shared<VCategory>();
  c->base = b;
  c->n_obj = 1;
  BaseObject hom{b, k};
  c->homs = {{hom}};
  c->idents = {{b, b->unit(), hom, FunctorData{{unit_obj}, {k.id_arrow[unit_obj]}}}};
  c->comps = {{{{b, b->tensor(hom, hom), hom, std::move(comp_fd)}}}};
  return c;
}

FunctorData meet_comp(const FinCategory& w) {
  FinCategory p = product_category(w, w);
  FunctorData fd;
  for (int i = 0; i < w.n_obj; ++i)
    for (int j = 0; j < w.n_obj; ++j) fd.obj_map.push_back(std::min(i, j));
  for (int a = 0; a < p.n_arr(); ++a)
    fd.arr_map.push_back(w.hom(fd.obj_map[p.src(a)], fd.obj_map[p.tgt(a)]).at(0));
  return fd;
}

Weight const_terminal_weight(const VCategoryPtr& c) {
  const Base& b = *c->base;
  Weight m;
  m.cat = c;
  m.value.assign(c->n_obj, b.unit());
  m.act.assign(c->n_obj, std::vector<BaseMorphism>(c->n_obj, b.identity(b.unit())));
  for (int a = 0; a < c->n_obj; ++a)
    for (int z = 0; z < c->n_obj; ++z)
      m.act[a][z] = b.to_terminal(b.tensor(c->homs[a][z], b.unit()));
  return m;
}

FinCategory one_object_group_cat(const Group& g) {
  FinCategory c;
  c.n_obj = 1;
  c.arrows.assign(size_t(g.size()), {0, 0});
  c.id_arrow = {0};
  c.comp.assign(g.size(), std::vector<int>(g.size()));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) c.comp[a][b] = g.mult[a][b];
  return c;
}

VCategoryPtr conj_vcat(const BasePtr& b) {
  const Group& g = group_of(*b);
  int n = g.size();
  GSetCarrier conj;
  conj.size = n;
  conj.act.assign(n, std::vector<int>(n));
  for (int h = 0; h < n; ++h)
    for (int a = 0; a < n; ++a) conj.act[h][a] = g.mult[g.mult[h][a]][g.inverse(h)];
  auto c = std::make_shared<VCategory>();
  c->base = b;
  c->n_obj = 1;
  BaseObject hom{b, conj};
  c->homs = {{hom}};
  c->idents = {{b, b->unit(), hom, FuncData{{0}}}};
  std::vector<int> mul(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) mul[size_t(a) * n + bb] = g.mult[a][bb];
  c->comps = {{{{b, b->tensor(hom, hom), hom, FuncData{std::move(mul)}}}}};
  return c;
}

// The free idempotent on one object.
FinCategory idem_monoid_cat() {
  FinCategory c;
  c.n_obj = 1;
  c.arrows = {{0, 0}, {0, 0}};
  c.id_arrow = {0};
  c.comp = {{0, 1}, {1, 1}};
  return c;
}

// Two objects, one arrow between them, enriched in vector spaces.
VCategoryPtr lin_arrow_vcat(const BasePtr& b) {
  auto c = std::make_shared<VCategory>();
  c->base = b;
  c->n_obj = 2;
  const int p = std::get<FpMat>(b->identity(b->unit()).data).p;
  auto vec = [&](int d) { return BaseObject{b, VecCarrier{d}}; };
  c->homs = {{vec(1), vec(1)}, {vec(0), vec(1)}};
  auto pt = [&](const BaseObject& dst) {
    FpMat m(std::get<VecCarrier>(dst.data).dim, 1, p);
    if (m.rows > 0) m.at(0, 0) = 1;
    return BaseMorphism{b, b->unit(), dst, m};
  };
  c->idents = {pt(c->homs[0][0]), pt(c->homs[1][1])};
  c->comps.assign(2, std::vector<std::vector<BaseMorphism>>(2));
  for (int a = 0; a < 2; ++a)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const int dg = std::get<VecCarrier>(c->homs[y][z].data).dim;
        const int df = std::get<VecCarrier>(c->homs[a][y].data).dim;
        const int dt = std::get<VecCarrier>(c->homs[a][z].data).dim;
        FpMat m(dt, dg * df, p);
        if (dt == 1 && dg == 1 && df == 1) m.at(0, 0) = 1;
        c->comps[a][y].push_back(
            BaseMorphism{b, b->tensor(c->homs[y][z], c->homs[a][y]), c->homs[a][z], m});
      }
  return c;
}

// Diagram supported on a discrete indexing category, one finite set per
// object.
CoWeight discrete_coweight(const VCategoryPtr& c, const std::vector<int>& sizes) {
  const Base& b = *c->base;
  CoWeight h;
  h.cat = c;
  for (int s : sizes) h.value.push_back(BaseObject{c->base, SetCarrier{s}});
  h.act.assign(c->n_obj, {});
  for (int a = 0; a < c->n_obj; ++a)
    for (int z = 0; z < c->n_obj; ++z) {
      if (a == z) {
        FuncData f;
        for (int i = 0; i < sizes[a]; ++i) f.map.push_back(i);
        h.act[a].push_back(
            BaseMorphism{c->base, b.tensor(c->homs[a][a], h.value[a]), h.value[a], f});
      } else {
        h.act[a].push_back(b.from_initial(h.value[z]));
      }
    }
  return h;
}

// Functor out of the walking arrow sending the generating arrow to edge_img.
FunctorData edge_functor(const FinCategory& x, const FinCategory& k, int obj, int edge_img) {
  FunctorData fd;
  fd.obj_map.assign(x.n_obj, obj);
  for (int a = 0; a < x.n_arr(); ++a)
    fd.arr_map.push_back(x.is_id(a) ? k.id_arrow[obj] : edge_img);
  return fd;
}

std::vector<BaseMorphism> coyoneda_legs(const VCategoryPtr& c, int c0, int d) {
  std::vector<BaseMorphism> legs;
  for (int a = 0; a < c->n_obj; ++a) legs.push_back(c->comp(d, a, c0));
  return legs;
}

void check_coyoneda_collapse(const VCategoryPtr& c, int c0, int d) {
  Weight m = yoneda_weight(c, c0);
  CoWeight h = coyoneda_coweight(c, d);
  REQUIRE(validate_weight(m) == "");
  REQUIRE(validate_coweight(h) == "");
  WeightedColimit w = weighted_colimit(m, h);
  auto legs = coyoneda_legs(c, c0, d);
  REQUIRE(check_cocone(m, h, legs) == "");
  BaseMorphism phi = induce_weighted(w, legs);
  CHECK(c->base->is_iso(phi));
}

}  // namespace

TEST_CASE("colimit weighted by a representable collapses onto the represented value") {
  check_coyoneda_collapse(
      std::make_shared<VCategory>(set_vcategory(one_object_group_cat(symmetric_group_3()))), 0, 0);
  check_coyoneda_collapse(conj_vcat(fingset_base(cyclic_group(2))), 0, 0);
  check_coyoneda_collapse(
      sigma_vcat(fincat_base(), walking_arrow(), 1, meet_comp(walking_arrow())), 0, 0);
  check_coyoneda_collapse(lin_arrow_vcat(finvec_base(2)), 1, 0);
  check_coyoneda_collapse(
      std::make_shared<VCategory>(set_vcategory(walking_arrow())), 1, 0);
}

TEST_CASE("colimit over a discrete indexing category is the disjoint union") {
  auto c = std::make_shared<VCategory>(set_vcategory(discrete_category(2)));
  Weight m = const_terminal_weight(c);
  CoWeight h = discrete_coweight(c, {2, 1});
  REQUIRE(validate_weight(m) == "");
  REQUIRE(validate_coweight(h) == "");
  WeightedColimit w = weighted_colimit(m, h);
  CHECK(carrier_size(w.value) == 3);
  CHECK(check_cocone(m, h, w.cocone) == "");
  Verdict u = colimit_universal(m, h, w, {w.value, BaseObject{c->base, SetCarrier{2}}});
  CHECK(u.is_yes());
}

TEST_CASE("the relation check rejects legs that are not a cocone") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  Weight m = const_terminal_weight(c);
  CoWeight h = coyoneda_coweight(c, 0);
  WeightedColimit w = weighted_colimit(m, h);
  CHECK(carrier_size(w.value) == 1);
  const Base& b = *c->base;
  BaseObject two{c->base, SetCarrier{2}};
  std::vector<BaseMorphism> bad = {
      BaseMorphism{c->base, b.tensor(m.value[0], h.value[0]), two, FuncData{{0}}},
      BaseMorphism{c->base, b.tensor(m.value[1], h.value[1]), two, FuncData{{1}}}};
  CHECK(check_cocone(m, h, bad) != "");
  CHECK_THROWS_AS(induce_weighted(w, bad), const std::invalid_argument&);
}

TEST_CASE("limit weighted by a representable evaluates the diagram there") {
  auto run = [](const VCategoryPtr& c, int c0) {
    CoWeight n = coyoneda_coweight(c, c0);
    CoWeight k = coyoneda_coweight(c, c0);
    WeightedLimit w = weighted_limit(n, k);
    const Base& b = *c->base;
    std::vector<BaseMorphism> legs;
    for (int x = 0; x < c->n_obj; ++x) {
      BaseMorphism body = b.compose(
          k.act[c0][x], b.braiding(k.value[c0], c->homs[c0][x]));
      legs.push_back(b.transpose(body, k.value[c0], n.value[x]));
    }
    BaseMorphism mu = induce_weighted_limit(w, legs);
    CHECK(b.is_iso(mu));
    return w;
  };
  WeightedLimit ws =
      run(std::make_shared<VCategory>(set_vcategory(one_object_group_cat(cyclic_group(2)))), 0);
  CHECK(carrier_size(ws.value) == 2);
  run(unit_vcat(finvec_base(2)), 0);
  run(std::make_shared<VCategory>(set_vcategory(walking_arrow())), 1);
}

TEST_CASE("generalized equalizer of an equal pair keeps the whole value") {
  auto c = std::make_shared<VCategory>(set_vcategory(one_object_group_cat(cyclic_group(2))));
  CoWeight k = coyoneda_coweight(c, 0);
  const Base& b = *c->base;
  BaseMorphism gid{c->base, b.unit(), c->homs[0][0], FuncData{{0}}};
  BaseMorphism gsh{c->base, b.unit(), c->homs[0][0], FuncData{{1}}};
  WeightedLimit same = nx_weighted_limit(b.unit(), 0, 0, gid, gid, k);
  CHECK(b.is_iso(same.cone[0]));
  WeightedLimit diff = nx_weighted_limit(b.unit(), 0, 0, gid, gsh, k);
  CHECK(carrier_size(diff.value) == 0);
}

TEST_CASE("equifier of a two-cell against the identity inside a strict one-object setting") {
  FinCategory k2 = idem_monoid_cat();
  auto c = sigma_vcat(fincat_base(), k2, 0, FunctorData{{0}, {0, 1, 1, 1}});
  REQUIRE(validate_vcategory(*c) == "");
  CoWeight k = coyoneda_coweight(c, 0);
  const Base& b = *c->base;
  FinCategory x2 = walking_arrow();
  BaseObject x{c->base, x2};
  BaseMorphism gtheta{c->base, x, c->homs[0][0], edge_functor(x2, k2, 0, 1)};
  BaseMorphism gident{c->base, x, c->homs[0][0], edge_functor(x2, k2, 0, 0)};
  WeightedLimit same = nx_weighted_limit(x, 0, 0, gtheta, gtheta, k);
  CHECK(b.is_iso(same.cone[0]));
  WeightedLimit diff = nx_weighted_limit(x, 0, 0, gtheta, gident, k);
  CHECK(std::get<FinCategory>(diff.value.data).n_obj == 0);
}

TEST_CASE("copowers by the unit are representable on the nose") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  CopowerResult r = copower(c->base->unit(), 1, c);
  REQUIRE(validate_weight(r.presheaf) == "");
  REQUIRE(r.in_category.is_yes());
  CHECK(r.in_category.certificate["object"] == 1);
}

TEST_CASE("a two element copower over the point has no representing object") {
  auto c = unit_vcat(finset_base());
  CopowerResult r = copower(BaseObject{c->base, SetCarrier{2}}, 0, c);
  REQUIRE(validate_weight(r.presheaf) == "");
  CHECK(r.in_category.is_no());
  CHECK(r.in_category.certificate["candidates"] == 2);
}

TEST_CASE("a linear copower becomes representable after matrix completion") {
  auto c = unit_vcat(finvec_base(2));
  CopowerResult before = copower(BaseObject{c->base, VecCarrier{2}}, 0, c);
  REQUIRE(validate_weight(before.presheaf) == "");
  CHECK(before.in_category.is_no());
  CompletionResult mc = matrix_completion(c, 2);
  CopowerResult after = copower(BaseObject{c->base, VecCarrier{2}}, 0, mc.completed);
  REQUIRE(validate_weight(after.presheaf) == "");
  REQUIRE(after.in_category.is_yes());
  CHECK(after.in_category.certificate["object"] == 1);
}

TEST_CASE("splitting the free idempotent adds exactly one retract") {
  auto c = std::make_shared<VCategory>(set_vcategory(idem_monoid_cat()));
  CompletionResult kr = karoubi(c);
  REQUIRE(validate_vcategory(*kr.completed) == "");
  REQUIRE(kr.completed->n_obj == 2);
  CHECK(validate_vfunctor(kr.embedding) == "");
  const int i = kr.embedding.obj_map[0];
  const int e = 1 - i;
  CHECK(carrier_size(kr.completed->homs[i][i]) == 2);
  CHECK(carrier_size(kr.completed->homs[e][e]) == 1);
  CHECK(carrier_size(kr.completed->homs[i][e]) == 1);
  CHECK(carrier_size(kr.completed->homs[e][i]) == 1);
  CHECK(is_equivalence(kr.embedding).is_no());
  CompletionResult again = karoubi(kr.completed);
  CHECK(is_equivalence(again.embedding).is_yes());
}

TEST_CASE("a category without nonidentity idempotents is its own splitting completion") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  CompletionResult kr = karoubi(c);
  REQUIRE(validate_vcategory(*kr.completed) == "");
  CHECK(kr.completed->n_obj == 2);
  CHECK(is_equivalence(kr.embedding).is_yes());
}

TEST_CASE("splitting the zero scalar produces a zero object") {
  auto c = unit_vcat(finvec_base(2));
  CompletionResult kr = karoubi(c);
  REQUIRE(validate_vcategory(*kr.completed) == "");
  REQUIRE(kr.completed->n_obj == 2);
  const int i = kr.embedding.obj_map[0];
  const int z = 1 - i;
  CHECK(carrier_size(kr.completed->homs[i][i]) == 1);
  CHECK(carrier_size(kr.completed->homs[z][z]) == 0);
  CHECK(carrier_size(kr.completed->homs[i][z]) == 0);
  CHECK(is_equivalence(kr.embedding).is_no());
  CompletionResult again = karoubi(kr.completed);
  CHECK(again.completed->n_obj == 3);
  CHECK(is_equivalence(again.embedding).is_yes());
}

TEST_CASE("an idempotent one-cell that never splits keeps the completion strictly larger") {
  FinCategory d2 = discrete_category(2);
  auto c = sigma_vcat(fincat_base(), d2, 1, meet_comp(d2));
  REQUIRE(validate_vcategory(*c) == "");
  CompletionResult kr = karoubi(c);
  REQUIRE(validate_vcategory(*kr.completed) == "");
  CHECK(kr.completed->n_obj == 2);
  CHECK(is_equivalence(kr.embedding).is_no());
  CompletionResult again = karoubi(kr.completed);
  CHECK(is_equivalence(again.embedding).is_yes());
}

TEST_CASE("matrix completion at width one returns the category unchanged") {
  auto c = lin_arrow_vcat(finvec_base(3));
  CompletionResult mc = matrix_completion(c, 1);
  CHECK(mc.completed->n_obj == c->n_obj);
  CHECK(mc.completed->homs == c->homs);
  CHECK(mc.completed->idents == c->idents);
  CHECK(mc.completed->comps == c->comps);
  CHECK(validate_vfunctor(mc.embedding) == "");
}

TEST_CASE("matrix completion assembles block homs and compositions") {
  auto c = lin_arrow_vcat(finvec_base(2));
  CompletionResult mc = matrix_completion(c, 2);
  REQUIRE(mc.completed->n_obj == 6);
  REQUIRE(validate_vcategory(*mc.completed) == "");
  CHECK(validate_vfunctor(mc.embedding) == "");
  // tuple order: (0), (1), (0,0), (0,1), (1,0), (1,1)
  CHECK(carrier_size(mc.completed->homs[0][3]) == 2);
  CHECK(carrier_size(mc.completed->homs[3][1]) == 2);
  CHECK(carrier_size(mc.completed->homs[3][3]) == 3);
  CHECK(carrier_size(mc.completed->homs[2][2]) == 4);
  CHECK(mc.provenance["tuples"].size() == 6);
}

TEST_CASE("cauchy completion of a point splits scalars and sums") {
  auto c = unit_vcat(finvec_base(2));
  Bounds bd;
  bd.search = 2;
  CompletionResult cc = cauchy_completion(c, bd);
  REQUIRE(validate_vcategory(*cc.completed) == "");
  CHECK(cc.completed->n_obj == 10);
  CHECK(validate_vfunctor(cc.embedding) == "");
  CHECK(cc.provenance["kind"] == "cauchy");
  CHECK(cc.provenance["stages"].size() == 2);
}

TEST_CASE("cauchy completion over a cartesian base is idempotent splitting") {
  auto c = std::make_shared<VCategory>(set_vcategory(idem_monoid_cat()));
  CompletionResult cc = cauchy_completion(c);
  CHECK(cc.completed->n_obj == 2);
  CHECK(cc.provenance["stages"].size() == 1);
}

TEST_CASE("realizing the terminal presheaf over the walking arrow gives the top representable") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  UnderlyingCat u = underlying_category(*c);
  OrdPresheaf n;
  n.cat = u.cat;
  n.size.assign(2, 1);
  n.action.assign(u.cat.n_arr(), {0});
  Weight w = realize_presheaf(c, u, n);
  REQUIRE(validate_weight(w) == "");
  Weight y = yoneda_weight(c, 1);
  for (int x = 0; x < 2; ++x) CHECK(carrier_size(w.value[x]) == carrier_size(y.value[x]));
}

TEST_CASE("the comparison out of the realization is invertible for representables") {
  auto cs = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  CHECK(counit_iso_check(yoneda_weight(cs, 1)).is_yes());
  auto cg = conj_vcat(fingset_base(cyclic_group(2)));
  CHECK(counit_iso_check(yoneda_weight(cg, 0)).is_yes());
  auto cv = unit_vcat(finvec_base(2));
  CHECK(counit_iso_check(yoneda_weight(cv, 0)).is_yes());
  auto cc = sigma_vcat(fincat_base(), walking_arrow(), 1, meet_comp(walking_arrow()));
  CHECK(counit_iso_check(yoneda_weight(cc, 0)).is_yes());
}

TEST_CASE("a weight outside the image of realization fails the comparison") {
  auto b = fingset_base(cyclic_group(2));
  auto c = conj_vcat(b);
  const Group& g = group_of(*b);
  GSetCarrier reg;
  reg.size = 2;
  reg.act = g.mult;
  Weight m;
  m.cat = c;
  m.value = {BaseObject{b, reg}};
  std::vector<int> tr(4);
  for (int h = 0; h < 2; ++h)
    for (int x = 0; x < 2; ++x) tr[size_t(h) * 2 + x] = g.mult[x][h];
  m.act = {{BaseMorphism{b, b->tensor(c->homs[0][0], m.value[0]), m.value[0],
                         FuncData{std::move(tr)}}}};
  REQUIRE(validate_weight(m) == "");
  Verdict v = counit_iso_check(m);
  REQUIRE(v.is_no());
  CHECK(v.certificate["object"] == 0);
}
