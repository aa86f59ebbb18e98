#include "enrichcat/elements.hpp"

#include <algorithm>
#include <stdexcept>

namespace enrichcat {

namespace {

// Pairing <f,g> out of X; when X is the unit the tensor of points works on
// every base and agrees with the cartesian pairing.
BaseMorphism combine(const Base& b, bool unit_mode, const BaseMorphism& f,
                     const BaseMorphism& g) {
  return unit_mode ? b.tensor_mor(f, g) : b.pair(f, g);
}

}  // namespace

int ElementsCategory::find_object(int c, const BaseMorphism& x) const {
  for (size_t i = 0; i < obj_label.size(); ++i)
    if (obj_label[i].first == c && obj_label[i].second == x) return static_cast<int>(i);
  return -1;
}

int ElementsCategory::find_arrow(int src_el, int dst_el, const BaseMorphism& f) const {
  for (int u = 0; u < carrier.n_arr(); ++u)
    if (carrier.src(u) == src_el && carrier.tgt(u) == dst_el && arr_label[u] == f) return u;
  return -1;
}

Json ElementsCategory::to_json() const {
  Json j;
  j["carrier"] = carrier.to_json();
  Json objs = Json::array();
  for (const auto& [c, x] : obj_label)
    objs.push_back(Json{{"object", c}, {"label", mor_to_json(x)}});
  j["objects"] = std::move(objs);
  Json arrs = Json::array();
  for (const auto& f : arr_label) arrs.push_back(mor_to_json(f));
  j["arrows"] = std::move(arrs);
  j["projection"] = projection ? projection->to_json() : Json();
  return j;
}

ElementsCategory elements_of(const Weight& m, const BaseObject& x, const Bounds& b) {
  const VCategory& C = *m.cat;
  const Base& B = *C.base;
  bool unit_mode = x == B.unit();
  if (!unit_mode && !B.cartesian())
    throw std::invalid_argument("elements_of: generalized elements need a cartesian base");

  ElementsCategory el;
  for (int c = 0; c < C.n_obj; ++c)
    for (auto& lab : B.hom_set(x, m.value[c], b)) el.obj_label.emplace_back(c, std::move(lab));
  int n = static_cast<int>(el.obj_label.size());
  if (n > b.max_object) throw ceiling_error("elements_of: too many element objects");
  el.carrier.n_obj = n;

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int ci = el.obj_label[i].first, ck = el.obj_label[k].first;
      for (auto& f : B.hom_set(x, C.homs[ci][ck], b)) {
        BaseMorphism back =
            B.compose(m.act[ci][ck], combine(B, unit_mode, f, el.obj_label[k].second));
        if (back == el.obj_label[i].second) {
          el.carrier.arrows.push_back({i, k});
          el.arr_label.push_back(std::move(f));
        }
      }
      if (el.carrier.n_arr() > b.max_object)
        throw ceiling_error("elements_of: too many element arrows");
    }

  el.carrier.id_arrow.resize(n);
  for (int i = 0; i < n; ++i) {
    int c = el.obj_label[i].first;
    BaseMorphism lab = unit_mode ? C.ident(c) : B.compose(C.ident(c), B.to_terminal(x));
    int idx = el.find_arrow(i, i, lab);
    if (idx < 0) throw std::logic_error("elements_of: identity label not enumerated");
    el.carrier.id_arrow[i] = idx;
  }

  int na = el.carrier.n_arr();
  el.carrier.comp.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      if (!el.carrier.composable(g, f)) continue;
      int i = el.carrier.src(f), k = el.carrier.tgt(f), l = el.carrier.tgt(g);
      BaseMorphism lab =
          B.compose(C.comp(el.obj_label[i].first, el.obj_label[k].first, el.obj_label[l].first),
                    combine(B, unit_mode, el.arr_label[g], el.arr_label[f]));
      int idx = el.find_arrow(i, l, lab);
      if (idx < 0) throw std::logic_error("elements_of: composite label not enumerated");
      el.carrier.comp[g][f] = idx;
    }

  if (unit_mode) {
    UnderlyingCat u = underlying_category(C, b);
    OrdFunctor pr;
    pr.src = el.carrier;
    pr.dst = u.cat;
    for (int i = 0; i < n; ++i) pr.obj_map.push_back(el.obj_label[i].first);
    for (int a = 0; a < na; ++a) {
      int cs = el.obj_label[el.carrier.src(a)].first;
      int ct = el.obj_label[el.carrier.tgt(a)].first;
      int idx = u.find_arrow(cs, ct, el.arr_label[a]);
      if (idx < 0) throw std::logic_error("elements_of: projected point not enumerated");
      pr.arr_map.push_back(idx);
    }
    el.projection = std::move(pr);
  }
  return el;
}

OrdFunctor j_functor_between(const Weight& m, const ElementsCategory& el_unit,
                             const ElementsCategory& el_x, const BaseObject& x) {
  const Base& B = *m.cat->base;
  if (!B.cartesian()) throw std::invalid_argument("j_functor: requires a cartesian base");
  BaseMorphism bang = B.to_terminal(x);
  OrdFunctor j;
  j.src = el_unit.carrier;
  j.dst = el_x.carrier;
  for (const auto& [c, p] : el_unit.obj_label) {
    int idx = el_x.find_object(c, B.compose(p, bang));
    if (idx < 0) throw std::logic_error("j_functor: image object not enumerated");
    j.obj_map.push_back(idx);
  }
  for (int a = 0; a < el_unit.carrier.n_arr(); ++a) {
    int s = j.obj_map[el_unit.carrier.src(a)];
    int t = j.obj_map[el_unit.carrier.tgt(a)];
    int idx = el_x.find_arrow(s, t, B.compose(el_unit.arr_label[a], bang));
    if (idx < 0) throw std::logic_error("j_functor: image arrow not enumerated");
    j.arr_map.push_back(idx);
  }
  return j;
}

OrdFunctor j_functor(const Weight& m, const BaseObject& x, const Bounds& b) {
  const Base& B = *m.cat->base;
  if (!B.cartesian()) throw std::invalid_argument("j_functor: requires a cartesian base");
  ElementsCategory el_unit = elements_of(m, B.unit(), b);
  ElementsCategory el_x = elements_of(m, x, b);
  return j_functor_between(m, el_unit, el_x, x);
}

ElementsCategory gset_elements(const Weight& m, const Bounds& b) {
  const VCategory& C = *m.cat;
  const Base& B = *C.base;
  if (B.tag() != Base::Tag::FinGSet)
    throw std::invalid_argument("gset_elements: requires a group-action base");
  ElementsCategory el = elements_of(m, B.generator()[0], b);

  // Labels are orbit maps; evaluating at the group unit reads them as points
  // of the forgotten homs.
  auto fc = forget_to_sets(C);
  UnderlyingCat u = underlying_category(*fc, b);
  OrdFunctor pr;
  pr.src = el.carrier;
  pr.dst = u.cat;
  for (const auto& [c, x] : el.obj_label) pr.obj_map.push_back(c);
  for (int a = 0; a < el.carrier.n_arr(); ++a) {
    int cs = el.obj_label[el.carrier.src(a)].first;
    int ct = el.obj_label[el.carrier.tgt(a)].first;
    const auto& tab = std::get<FuncData>(el.arr_label[a].data);
    BaseMorphism pt{fc->base, fc->base->unit(), fc->homs[cs][ct], FuncData{{tab.map[0]}}};
    int idx = u.find_arrow(cs, ct, pt);
    if (idx < 0) throw std::logic_error("gset_elements: projected point not enumerated");
    pr.arr_map.push_back(idx);
  }
  el.projection = std::move(pr);
  return el;
}

namespace {

struct DoubleBuild {
  const VCategory& C;
  const Weight& m;

  const FinCategory& value(int c) const { return std::get<FinCategory>(m.value[c].data); }
  const FinCategory& homcat(int a, int b) const {
    return std::get<FinCategory>(C.homs[a][b].data);
  }
  const FunctorData& act(int a, int b) const {
    return std::get<FunctorData>(m.act[a][b].data);
  }
  const FunctorData& cmp(int a, int b, int c) const {
    return std::get<FunctorData>(C.comps[a][b][c].data);
  }

  // act(a,b) evaluated on the product object (f, y) and arrow (alpha, mu)
  int act_obj(int a, int b, int f, int y) const {
    return act(a, b).obj_map[size_t(f) * value(b).n_obj + y];
  }
  int act_arr(int a, int b, int alpha, int mu) const {
    return act(a, b).arr_map[size_t(alpha) * value(b).n_arr() + mu];
  }
  int comp_obj(int a, int b, int c, int g, int f) const {
    return cmp(a, b, c).obj_map[size_t(g) * homcat(a, b).n_obj + f];
  }
  int comp_arr(int a, int b, int c, int beta, int alpha) const {
    return cmp(a, b, c).arr_map[size_t(beta) * homcat(a, b).n_arr() + alpha];
  }

  int ident_cell(int a) const { return std::get<FunctorData>(C.idents[a].data).obj_map[0]; }
};

int find_h(const DoubleCategory& d, int s, int t, int one_cell) {
  for (size_t i = 0; i < d.horiz.size(); ++i)
    if (d.horiz[i].src == s && d.horiz[i].tgt == t && d.horiz[i].one_cell == one_cell)
      return static_cast<int>(i);
  return -1;
}

int find_v(const DoubleCategory& d, int s, int t, int arr) {
  for (size_t i = 0; i < d.vert.size(); ++i)
    if (d.vert[i].src == s && d.vert[i].tgt == t && d.vert[i].arr == arr)
      return static_cast<int>(i);
  return -1;
}

int find_cell(const DoubleCategory& d, int left, int right, int two_cell) {
  for (size_t i = 0; i < d.cells.size(); ++i)
    if (d.cells[i].left == left && d.cells[i].right == right && d.cells[i].two_cell == two_cell)
      return static_cast<int>(i);
  return -1;
}

}  // namespace

DoubleCategory double_elements(const Weight& m, const Bounds& b) {
  const VCategory& C = *m.cat;
  if (C.base->tag() != Base::Tag::FinCat)
    throw std::invalid_argument("double_elements: requires the category-valued base");
  DoubleBuild bb{C, m};
  DoubleCategory d;

  std::vector<int> offset(C.n_obj + 1, 0);
  for (int c = 0; c < C.n_obj; ++c) {
    offset[c + 1] = offset[c] + bb.value(c).n_obj;
    for (int x = 0; x < bb.value(c).n_obj; ++x) d.objects.emplace_back(c, x);
  }
  int n = static_cast<int>(d.objects.size());
  if (n > b.max_object) throw ceiling_error("double_elements: too many objects");

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      auto [ci, xi] = d.objects[i];
      auto [ck, xk] = d.objects[k];
      for (int f = 0; f < bb.homcat(ci, ck).n_obj; ++f)
        if (bb.act_obj(ci, ck, f, xk) == xi) d.horiz.push_back({i, k, f});
      if (static_cast<int>(d.horiz.size()) > b.max_object)
        throw ceiling_error("double_elements: too many horizontal arrows");
    }

  d.h_id.resize(n);
  for (int i = 0; i < n; ++i) {
    int idx = find_h(d, i, i, bb.ident_cell(d.objects[i].first));
    if (idx < 0) throw std::logic_error("double_elements: identity 1-cell not enumerated");
    d.h_id[i] = idx;
  }
  int nh = static_cast<int>(d.horiz.size());
  d.h_comp.assign(nh, std::vector<int>(nh, -1));
  for (int g = 0; g < nh; ++g)
    for (int f = 0; f < nh; ++f) {
      if (d.horiz[f].tgt != d.horiz[g].src) continue;
      int ci = d.objects[d.horiz[f].src].first;
      int ck = d.objects[d.horiz[f].tgt].first;
      int cl = d.objects[d.horiz[g].tgt].first;
      int one = bb.comp_obj(ci, ck, cl, d.horiz[g].one_cell, d.horiz[f].one_cell);
      int idx = find_h(d, d.horiz[f].src, d.horiz[g].tgt, one);
      if (idx < 0) throw std::logic_error("double_elements: composite 1-cell not enumerated");
      d.h_comp[g][f] = idx;
    }

  for (int c = 0; c < C.n_obj; ++c) {
    const FinCategory& mc = bb.value(c);
    for (int x = 0; x < mc.n_obj; ++x)
      for (int y = 0; y < mc.n_obj; ++y)
        for (int xi : mc.hom(x, y)) d.vert.push_back({offset[c] + x, offset[c] + y, xi});
    if (static_cast<int>(d.vert.size()) > b.max_object)
      throw ceiling_error("double_elements: too many vertical arrows");
  }
  d.v_id.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [c, x] = d.objects[i];
    int idx = find_v(d, i, i, bb.value(c).id_arrow[x]);
    if (idx < 0) throw std::logic_error("double_elements: identity vertical not enumerated");
    d.v_id[i] = idx;
  }
  int nv = static_cast<int>(d.vert.size());
  d.v_comp.assign(nv, std::vector<int>(nv, -1));
  for (int z = 0; z < nv; ++z)
    for (int x = 0; x < nv; ++x) {
      if (d.vert[x].tgt != d.vert[z].src) continue;
      int c = d.objects[d.vert[x].src].first;
      int idx = find_v(d, d.vert[x].src, d.vert[z].tgt, bb.value(c).compose(d.vert[z].arr, d.vert[x].arr));
      if (idx < 0) throw std::logic_error("double_elements: composite vertical not enumerated");
      d.v_comp[z][x] = idx;
    }

  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      auto [cv, xv] = d.objects[d.vert[v].src];
      int xv2 = d.objects[d.vert[v].tgt].second;
      auto [cw, yw] = d.objects[d.vert[w].src];
      int yw2 = d.objects[d.vert[w].tgt].second;
      const FinCategory& hc = bb.homcat(cv, cw);
      for (int f = 0; f < hc.n_obj; ++f) {
        if (bb.act_obj(cv, cw, f, yw) != xv) continue;
        int top = find_h(d, d.vert[v].src, d.vert[w].src, f);
        for (int g = 0; g < hc.n_obj; ++g) {
          if (bb.act_obj(cv, cw, g, yw2) != xv2) continue;
          int bottom = find_h(d, d.vert[v].tgt, d.vert[w].tgt, g);
          for (int alpha : hc.hom(f, g))
            if (bb.act_arr(cv, cw, alpha, d.vert[w].arr) == d.vert[v].arr)
              d.cells.push_back({top, bottom, v, w, alpha});
        }
      }
      if (static_cast<int>(d.cells.size()) > b.max_object)
        throw ceiling_error("double_elements: too many cells");
    }

  d.cell_h_id.resize(nv);
  for (int v = 0; v < nv; ++v) {
    int c = d.objects[d.vert[v].src].first;
    const FinCategory& hc = bb.homcat(c, c);
    int idx = find_cell(d, v, v, hc.id_arrow[bb.ident_cell(c)]);
    if (idx < 0) throw std::logic_error("double_elements: identity cell not enumerated");
    d.cell_h_id[v] = idx;
  }
  d.cell_v_id.resize(nh);
  for (int h = 0; h < nh; ++h) {
    int ci = d.objects[d.horiz[h].src].first;
    int ck = d.objects[d.horiz[h].tgt].first;
    const FinCategory& hc = bb.homcat(ci, ck);
    int left = d.v_id[d.horiz[h].src];
    int right = d.v_id[d.horiz[h].tgt];
    int idx = find_cell(d, left, right, hc.id_arrow[d.horiz[h].one_cell]);
    if (idx < 0) throw std::logic_error("double_elements: unit cell not enumerated");
    d.cell_v_id[h] = idx;
  }

  int nc = static_cast<int>(d.cells.size());
  d.cell_h_comp.assign(nc, std::vector<int>(nc, -1));
  for (int l = 0; l < nc; ++l)
    for (int e = 0; e < nc; ++e) {
      if (d.cells[e].right != d.cells[l].left) continue;
      int ci = d.objects[d.vert[d.cells[e].left].src].first;
      int ck = d.objects[d.vert[d.cells[e].right].src].first;
      int cl = d.objects[d.vert[d.cells[l].right].src].first;
      int two = bb.comp_arr(ci, ck, cl, d.cells[l].two_cell, d.cells[e].two_cell);
      int idx = find_cell(d, d.cells[e].left, d.cells[l].right, two);
      if (idx < 0) throw std::logic_error("double_elements: composite cell not enumerated");
      d.cell_h_comp[l][e] = idx;
    }
  d.cell_v_comp.assign(nc, std::vector<int>(nc, -1));
  for (int l = 0; l < nc; ++l)
    for (int e = 0; e < nc; ++e) {
      if (d.cells[e].bottom != d.cells[l].top) continue;
      int ci = d.objects[d.vert[d.cells[e].left].src].first;
      int ck = d.objects[d.vert[d.cells[e].right].src].first;
      const FinCategory& hc = bb.homcat(ci, ck);
      int left = d.v_comp[d.cells[l].left][d.cells[e].left];
      int right = d.v_comp[d.cells[l].right][d.cells[e].right];
      int two = hc.compose(d.cells[l].two_cell, d.cells[e].two_cell);
      int idx = find_cell(d, left, right, two);
      if (idx < 0) throw std::logic_error("double_elements: pasted cell not enumerated");
      d.cell_v_comp[l][e] = idx;
    }
  return d;
}

FinCategory h_category(const DoubleCategory& d) {
  FinCategory c;
  c.n_obj = static_cast<int>(d.objects.size());
  for (const auto& h : d.horiz) c.arrows.push_back({h.src, h.tgt});
  c.id_arrow = d.h_id;
  c.comp = d.h_comp;
  return c;
}

FinCategory h1_category(const DoubleCategory& d) {
  FinCategory c;
  c.n_obj = static_cast<int>(d.vert.size());
  for (const auto& cl : d.cells) c.arrows.push_back({cl.left, cl.right});
  c.id_arrow = d.cell_h_id;
  c.comp = d.cell_h_comp;
  return c;
}

OrdFunctor one_h_functor(const DoubleCategory& d) {
  OrdFunctor f;
  f.src = h_category(d);
  f.dst = h1_category(d);
  f.obj_map = d.v_id;
  f.arr_map = d.cell_v_id;
  return f;
}

std::string validate_double(const DoubleCategory& d) {
  if (auto e = validate_fincategory(h_category(d)); !e.empty()) return "horizontal: " + e;
  {
    FinCategory vc;
    vc.n_obj = static_cast<int>(d.objects.size());
    for (const auto& v : d.vert) vc.arrows.push_back({v.src, v.tgt});
    vc.id_arrow = d.v_id;
    vc.comp = d.v_comp;
    if (auto e = validate_fincategory(vc); !e.empty()) return "vertical: " + e;
    for (const auto& v : d.vert)
      if (d.objects[v.src].first != d.objects[v.tgt].first)
        return "vertical: endpoints over different base objects";
  }
  if (auto e = validate_fincategory(h1_category(d)); !e.empty())
    return "cells under horizontal composition: " + e;
  {
    FinCategory cv;
    cv.n_obj = static_cast<int>(d.horiz.size());
    for (const auto& c : d.cells) cv.arrows.push_back({c.top, c.bottom});
    cv.id_arrow = d.cell_v_id;
    cv.comp = d.cell_v_comp;
    if (auto e = validate_fincategory(cv); !e.empty())
      return "cells under vertical composition: " + e;
  }
  for (size_t i = 0; i < d.cells.size(); ++i) {
    const auto& c = d.cells[i];
    bool ok = d.vert[c.left].src == d.horiz[c.top].src &&
              d.vert[c.right].src == d.horiz[c.top].tgt &&
              d.vert[c.left].tgt == d.horiz[c.bottom].src &&
              d.vert[c.right].tgt == d.horiz[c.bottom].tgt;
    if (!ok) return "cell " + std::to_string(i) + ": boundary mismatch";
  }
  int nc = static_cast<int>(d.cells.size());
  for (int a = 0; a < nc; ++a)
    for (int bq = 0; bq < nc; ++bq) {
      if (d.cell_h_comp[bq][a] < 0) continue;
      for (int g = 0; g < nc; ++g) {
        if (d.cell_v_comp[g][a] < 0) continue;
        for (int dd = 0; dd < nc; ++dd) {
          if (d.cell_v_comp[dd][bq] < 0 || d.cell_h_comp[dd][g] < 0) continue;
          int rows_first = d.cell_v_comp[d.cell_h_comp[dd][g]][d.cell_h_comp[bq][a]];
          int cols_first = d.cell_h_comp[d.cell_v_comp[dd][bq]][d.cell_v_comp[g][a]];
          if (rows_first != cols_first)
            return "interchange fails on cells " + std::to_string(a) + "," + std::to_string(bq) +
                   "," + std::to_string(g) + "," + std::to_string(dd);
        }
      }
    }
  return {};
}

Verdict is_filtered_double(const DoubleCategory& d) {
  Verdict h = is_filtered(h_category(d));
  if (!h.is_yes())
    return Verdict::no(Json{{"clause", "horizontal"}, {"inner", h.to_json()}});

  auto is_identity_vertical = [&](int w) { return d.v_id[d.vert[w].src] == w; };

  for (int v = 0; v < static_cast<int>(d.vert.size()); ++v) {
    bool found = false;
    for (const auto& c : d.cells)
      if (c.left == v && is_identity_vertical(c.right)) {
        found = true;
        break;
      }
    if (!found)
      return Verdict::no(Json{{"clause", "vertical-fill"},
                              {"vertical", v},
                              {"object", d.objects[d.vert[v].src].first},
                              {"from", d.objects[d.vert[v].src].second},
                              {"to", d.objects[d.vert[v].tgt].second}});
  }

  int nc = static_cast<int>(d.cells.size());
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const auto& a = d.cells[i];
      const auto& bq = d.cells[j];
      if (a.left != bq.left || a.top != bq.top || a.bottom != bq.bottom || a.right != bq.right)
        continue;
      if (!is_identity_vertical(a.right)) continue;
      int at = d.horiz[a.top].tgt;
      bool equalized = false;
      for (int hh = 0; hh < static_cast<int>(d.horiz.size()) && !equalized; ++hh) {
        if (d.horiz[hh].src != at) continue;
        int unit = d.cell_v_id[hh];
        equalized = d.cell_h_comp[unit][i] == d.cell_h_comp[unit][j];
      }
      if (!equalized)
        return Verdict::no(Json{{"clause", "cell-coequalizer"},
                                {"cells", Json::array({i, j})},
                                {"left_vertical", a.left}});
    }

  return Verdict::yes(Json{{"objects", d.objects.size()},
                           {"verticals", d.vert.size()},
                           {"cells", d.cells.size()},
                           {"horizontal", h.certificate}});
}

Json DoubleCategory::to_json() const {
  Json j;
  Json objs = Json::array();
  for (auto& [c, x] : objects) objs.push_back(Json::array({c, x}));
  j["objects"] = std::move(objs);
  Json hs = Json::array();
  for (auto& h : horiz)
    hs.push_back(Json{{"src", h.src}, {"tgt", h.tgt}, {"one_cell", h.one_cell}});
  j["horizontal"] = std::move(hs);
  j["h_id"] = h_id;
  j["h_comp"] = h_comp;
  Json vs = Json::array();
  for (auto& v : vert) vs.push_back(Json{{"src", v.src}, {"tgt", v.tgt}, {"arr", v.arr}});
  j["vertical"] = std::move(vs);
  j["v_id"] = v_id;
  j["v_comp"] = v_comp;
  Json cs = Json::array();
  for (auto& c : cells)
    cs.push_back(Json{{"top", c.top},
                      {"bottom", c.bottom},
                      {"left", c.left},
                      {"right", c.right},
                      {"two_cell", c.two_cell}});
  j["cells"] = std::move(cs);
  j["cell_h_id"] = cell_h_id;
  j["cell_v_id"] = cell_v_id;
  j["cell_h_comp"] = cell_h_comp;
  j["cell_v_comp"] = cell_v_comp;
  return j;
}

}  // namespace enrichcat
