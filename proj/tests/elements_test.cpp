#include <algorithm>

#include "doctest.h"
#include "enrichcat/elements.hpp"

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

// One object with hom category k; the unit 1-cell and the composition functor
// are supplied by the caller.
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

// Meet composition on a thin chain; arrow images are forced.
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

}  // namespace

TEST_CASE("elements of a representable form the slice") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  Weight m = yoneda_weight(c, 1);
  REQUIRE(validate_weight(m) == "");
  ElementsCategory el = elements_of(m, c->base->unit());
  CHECK(validate_fincategory(el.carrier) == "");
  CHECK(el.carrier.n_obj == 2);
  CHECK(is_isomorphic(el.carrier, walking_arrow()));
  CHECK(is_filtered(el.carrier).is_yes());
  REQUIRE(el.projection.has_value());
  CHECK(validate_ordfunctor(*el.projection) == "");
}

TEST_CASE("elements of the constant terminal weight recover the underlying category") {
  FinCategory chain = free_category(3, {{0, 1}, {1, 2}});
  auto c = std::make_shared<VCategory>(set_vcategory(chain));
  Weight m = const_terminal_weight(c);
  REQUIRE(validate_weight(m) == "");
  ElementsCategory el = elements_of(m, c->base->unit());
  UnderlyingCat u = underlying_category(*c);
  CHECK(el.carrier == u.cat);
  REQUIRE(el.projection.has_value());
  CHECK(*el.projection == identity_functor(u.cat));
}

TEST_CASE("a coproduct of representables in separate components is not filtered") {
  auto c = std::make_shared<VCategory>(set_vcategory(discrete_category(2)));
  Weight m = const_terminal_weight(c);
  REQUIRE(validate_weight(m) == "");
  ElementsCategory el = elements_of(m, c->base->unit());
  CHECK(el.carrier.n_obj == 2);
  CHECK(el.carrier.n_arr() == 2);
  Verdict v = is_filtered(el.carrier);
  CHECK(v.outcome == Outcome::No);
}

TEST_CASE("the unit stage of the comparison functor is the identity") {
  auto c = std::make_shared<VCategory>(set_vcategory(walking_arrow()));
  Weight m = yoneda_weight(c, 1);
  ElementsCategory el = elements_of(m, c->base->unit());
  OrdFunctor j = j_functor(m, c->base->unit());
  CHECK(j == identity_functor(el.carrier));
}

TEST_CASE("the comparison functor into two-point elements is final for a representable") {
  auto b = finset_base();
  auto c = std::make_shared<VCategory>(set_vcategory(one_object_group_cat(symmetric_group_3())));
  Weight m = yoneda_weight(c, 0);
  REQUIRE(validate_weight(m) == "");
  ElementsCategory el1 = elements_of(m, b->unit());
  CHECK(el1.carrier.n_obj == 6);
  CHECK(el1.carrier.n_arr() == 36);
  CHECK(is_filtered(el1.carrier).is_yes());
  BaseObject two{b, SetCarrier{2}};
  ElementsCategory el2 = elements_of(m, two);
  CHECK(el2.carrier.n_obj == 36);
  CHECK(validate_fincategory(el2.carrier) == "");
  OrdFunctor j = j_functor_between(m, el1, el2, two);
  CHECK(validate_ordfunctor(j) == "");
  CHECK(is_final(j).is_yes());
}

TEST_CASE("orbit elements are filtered where fixed-point elements are empty") {
  auto b = fingset_base(cyclic_group(2));
  auto c = conj_vcat(b);
  BaseObject reg = b->generator()[0];
  Weight m;
  m.cat = c;
  m.value = {reg};
  std::vector<int> tr(4);
  for (int h = 0; h < 2; ++h)
    for (int x = 0; x < 2; ++x) tr[size_t(h) * 2 + x] = group_of(*b).mult[x][h];
  m.act = {{{b, b->tensor(c->homs[0][0], reg), reg, FuncData{std::move(tr)}}}};
  REQUIRE(validate_weight(m) == "");

  ElementsCategory fixed = elements_of(m, b->unit());
  CHECK(fixed.carrier.n_obj == 0);
  CHECK(is_filtered(fixed.carrier).outcome == Outcome::No);

  ElementsCategory orbit = gset_elements(m);
  CHECK(orbit.carrier.n_obj == 2);
  CHECK(orbit.carrier.n_arr() == 4);
  CHECK(validate_fincategory(orbit.carrier) == "");
  CHECK(is_filtered(orbit.carrier).is_yes());
  REQUIRE(orbit.projection.has_value());
  CHECK(validate_ordfunctor(*orbit.projection) == "");
}

TEST_CASE("unit elements work over the linear base but generalized stages are refused") {
  auto b = finvec_base(3);
  auto c = unit_vcat(b);
  Weight m = yoneda_weight(c, 0);
  REQUIRE(validate_weight(m) == "");
  ElementsCategory el = elements_of(m, b->unit());
  CHECK(el.carrier.n_obj == 3);
  CHECK(el.carrier.n_arr() == 9);
  CHECK(validate_fincategory(el.carrier) == "");
  CHECK(is_filtered(el.carrier).is_yes());
  REQUIRE(el.projection.has_value());
  CHECK(validate_ordfunctor(*el.projection) == "");
  CHECK_THROWS_AS(elements_of(m, BaseObject{b, VecCarrier{2}}), std::invalid_argument);
  CHECK_THROWS_AS(j_functor(m, b->unit()), std::invalid_argument);
}

TEST_CASE("double elements of a 2-representable match both element stages") {
  auto b = fincat_base();
  FinCategory w = walking_arrow();
  auto c = sigma_vcat(b, w, 1, meet_comp(w));
  REQUIRE(validate_vcategory(*c) == "");
  Weight m = yoneda_weight(c, 0);
  REQUIRE(validate_weight(m) == "");

  DoubleCategory d = double_elements(m);
  CHECK(d.objects.size() == 2);
  CHECK(d.horiz.size() == 4);
  CHECK(d.vert.size() == 3);
  CHECK(d.cells.size() == 9);
  CHECK(validate_double(d) == "");

  ElementsCategory el1 = elements_of(m, b->unit());
  CHECK(h_category(d) == el1.carrier);
  BaseObject wobj{b, w};
  ElementsCategory elw = elements_of(m, wobj);
  CHECK(h1_category(d) == elw.carrier);
  CHECK(one_h_functor(d) == j_functor(m, wobj));

  CHECK(is_filtered_double(d).is_yes());
}

TEST_CASE("double elements of the constant terminal weight recover the 2-cells") {
  auto b = fincat_base();
  FinCategory w = walking_arrow();
  auto c = sigma_vcat(b, w, 1, meet_comp(w));
  Weight m = const_terminal_weight(c);
  REQUIRE(validate_weight(m) == "");
  DoubleCategory d = double_elements(m);
  CHECK(d.objects.size() == 1);
  CHECK(d.horiz.size() == 2);
  CHECK(d.vert.size() == 1);
  CHECK(d.cells.size() == 3);
  CHECK(validate_double(d) == "");
  CHECK(is_filtered_double(d).is_yes());
}

TEST_CASE("an idempotent 2-cell blocks the cell coequalizer clause") {
  auto b = fincat_base();
  FinCategory k;
  k.n_obj = 1;
  k.arrows = {{0, 0}, {0, 0}};
  k.id_arrow = {0};
  k.comp = {{0, 1}, {1, 1}};
  REQUIRE(validate_fincategory(k) == "");
  FunctorData comp_fd;
  comp_fd.obj_map = {0};
  comp_fd.arr_map = {0, 1, 1, 1};
  auto c = sigma_vcat(b, k, 0, comp_fd);
  REQUIRE(validate_vcategory(*c) == "");
  Weight m = const_terminal_weight(c);
  REQUIRE(validate_weight(m) == "");

  DoubleCategory d = double_elements(m);
  CHECK(d.cells.size() == 2);
  CHECK(validate_double(d) == "");
  CHECK(is_filtered(h_category(d)).is_yes());
  Verdict v = is_filtered_double(d);
  REQUIRE(v.outcome == Outcome::No);
  CHECK(v.certificate.at("clause") == "cell-coequalizer");
}

TEST_CASE("a vertical with no filling square blocks filteredness") {
  auto b = fincat_base();
  FinCategory idem;
  idem.n_obj = 1;
  idem.arrows = {{0, 0}, {0, 0}};
  idem.id_arrow = {0};
  idem.comp = {{0, 1}, {1, 1}};
  auto c = sigma_vcat(b, terminal_category(), 0, FunctorData{{0}, {0}});
  REQUIRE(validate_vcategory(*c) == "");
  Weight m;
  m.cat = c;
  m.value = {BaseObject{b, idem}};
  m.act = {{{b, b->tensor(c->homs[0][0], m.value[0]), m.value[0], FunctorData{{0}, {0, 1}}}}};
  REQUIRE(validate_weight(m) == "");

  DoubleCategory d = double_elements(m);
  CHECK(d.objects.size() == 1);
  CHECK(d.horiz.size() == 1);
  CHECK(d.vert.size() == 2);
  CHECK(d.cells.size() == 2);
  CHECK(validate_double(d) == "");
  CHECK(is_filtered(h_category(d)).is_yes());
  Verdict v = is_filtered_double(d);
  REQUIRE(v.outcome == Outcome::No);
  CHECK(v.certificate.at("clause") == "vertical-fill");
  CHECK(v.certificate.at("vertical") == 1);
}

TEST_CASE("a corrupted unit cell is rejected") {
  auto b = fincat_base();
  FinCategory w = walking_arrow();
  auto c = sigma_vcat(b, w, 1, meet_comp(w));
  Weight m = yoneda_weight(c, 0);
  DoubleCategory d = double_elements(m);
  REQUIRE(d.cells.size() > 1);
  d.cell_h_id[0] = (d.cell_h_id[0] + 1) % int(d.cells.size());
  CHECK(validate_double(d) != "");
}
