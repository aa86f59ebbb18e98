#include "enrichcat/enriched.hpp"

#include <algorithm>
#include <stdexcept>

namespace enrichcat {

namespace {

std::string ix(const char* what, int a, int b) {
  return std::string(what) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string ix3(const char* what, int a, int b, int c) {
  return std::string(what) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

bool same_vcategory(const VCategory& c, const VCategory& d) {
  if (&c == &d) return true;
  return same_base(*c.base, *d.base) && c.n_obj == d.n_obj && c.homs == d.homs &&
         c.idents == d.idents && c.comps == d.comps;
}

}  // namespace

std::string validate_vcategory(const VCategory& c) {
  if (!c.base) return "missing base";
  const Base& B = *c.base;
  if (c.n_obj < 0) return "negative object count";
  size_t n = size_t(c.n_obj);
  if (c.homs.size() != n) return "hom table has wrong outer size";
  for (size_t a = 0; a < n; ++a) {
    if (c.homs[a].size() != n) return "hom table row " + std::to_string(a) + " has wrong size";
    for (size_t b = 0; b < n; ++b) {
      try {
        B.validate_object(c.homs[a][b]);
      } catch (const std::exception& e) {
        return ix("hom", int(a), int(b)) + ": " + e.what();
      }
    }
  }
  if (c.idents.size() != n) return "identity table has wrong size";
  BaseObject unit = B.unit();
  for (size_t a = 0; a < n; ++a) {
    const BaseMorphism& e = c.idents[a];
    try {
      B.validate_morphism(e);
    } catch (const std::exception& ex) {
      return "ident(" + std::to_string(a) + "): " + ex.what();
    }
    if (!(e.src == unit)) return "ident(" + std::to_string(a) + "): source is not the unit";
    if (!(e.dst == c.homs[a][a]))
      return "ident(" + std::to_string(a) + "): target is not hom(a,a)";
  }
  if (c.comps.size() != n) return "composition table has wrong outer size";
  for (size_t a = 0; a < n; ++a) {
    if (c.comps[a].size() != n) return "composition table has a wrong middle size";
    for (size_t b = 0; b < n; ++b) {
      if (c.comps[a][b].size() != n) return "composition table has a wrong inner size";
      for (size_t cc = 0; cc < n; ++cc) {
        const BaseMorphism& m = c.comps[a][b][cc];
        std::string here = ix3("comp", int(a), int(b), int(cc));
        try {
          B.validate_morphism(m);
        } catch (const std::exception& ex) {
          return here + ": " + ex.what();
        }
        if (!(m.src == B.tensor(c.homs[b][cc], c.homs[a][b])))
          return here + ": source is not hom(b,c) (x) hom(a,b)";
        if (!(m.dst == c.homs[a][cc])) return here + ": target is not hom(a,c)";
      }
    }
  }
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b) {
      BaseMorphism idh = B.identity(c.homs[a][b]);
      if (!(B.compose(c.comp(a, a, b), B.tensor_mor(idh, c.ident(a))) == idh))
        return ix("hom", a, b) + ": right unit law fails";
      if (!(B.compose(c.comp(a, b, b), B.tensor_mor(c.ident(b), idh)) == idh))
        return ix("hom", a, b) + ": left unit law fails";
    }
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b)
      for (int cc = 0; cc < c.n_obj; ++cc)
        for (int d = 0; d < c.n_obj; ++d) {
          BaseMorphism lhs = B.compose(
              c.comp(a, b, d), B.tensor_mor(c.comp(b, cc, d), B.identity(c.homs[a][b])));
          BaseMorphism rhs = B.compose(
              c.comp(a, cc, d), B.tensor_mor(B.identity(c.homs[cc][d]), c.comp(a, b, cc)));
          if (!(lhs == rhs))
            return "associativity fails on " + ix3("comp", a, b, cc) + " against object " +
                   std::to_string(d);
        }
  return {};
}

std::string validate_vfunctor(const VFunctor& f) {
  if (!f.src || !f.dst) return "missing category";
  if (!same_base(*f.src->base, *f.dst->base)) return "categories live over different bases";
  const Base& B = *f.src->base;
  const VCategory& C = *f.src;
  const VCategory& D = *f.dst;
  size_t n = size_t(C.n_obj);
  if (f.obj_map.size() != n) return "object map has wrong size";
  for (int v : f.obj_map)
    if (v < 0 || v >= D.n_obj) return "object map value out of range";
  if (f.hom_map.size() != n) return "hom map has wrong outer size";
  for (size_t a = 0; a < n; ++a) {
    if (f.hom_map[a].size() != n) return "hom map row " + std::to_string(a) + " has wrong size";
    for (size_t b = 0; b < n; ++b) {
      const BaseMorphism& m = f.hom_map[a][b];
      std::string here = ix("hom_map", int(a), int(b));
      try {
        B.validate_morphism(m);
      } catch (const std::exception& ex) {
        return here + ": " + ex.what();
      }
      if (!(m.src == C.homs[a][b])) return here + ": wrong source";
      if (!(m.dst == D.homs[f.obj_map[a]][f.obj_map[b]])) return here + ": wrong target";
    }
  }
  for (int a = 0; a < C.n_obj; ++a)
    if (!(B.compose(f.hom_map[a][a], C.ident(a)) == D.ident(f.obj_map[a])))
      return "identity at object " + std::to_string(a) + " is not preserved";
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      for (int cc = 0; cc < C.n_obj; ++cc) {
        BaseMorphism lhs = B.compose(f.hom_map[a][cc], C.comp(a, b, cc));
        BaseMorphism rhs =
            B.compose(D.comp(f.obj_map[a], f.obj_map[b], f.obj_map[cc]),
                      B.tensor_mor(f.hom_map[b][cc], f.hom_map[a][b]));
        if (!(lhs == rhs)) return "composition is not preserved at " + ix3("", a, b, cc);
      }
  return {};
}

VFunctor identity_vfunctor(const VCategoryPtr& c) {
  VFunctor f;
  f.src = c;
  f.dst = c;
  f.obj_map.resize(c->n_obj);
  f.hom_map.assign(c->n_obj, std::vector<BaseMorphism>(c->n_obj));
  for (int a = 0; a < c->n_obj; ++a) {
    f.obj_map[a] = a;
    for (int b = 0; b < c->n_obj; ++b) f.hom_map[a][b] = c->base->identity(c->homs[a][b]);
  }
  return f;
}

VFunctor compose_vfunctors(const VFunctor& g, const VFunctor& f) {
  VFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  h.obj_map.resize(f.src->n_obj);
  h.hom_map.assign(f.src->n_obj, std::vector<BaseMorphism>(f.src->n_obj));
  for (int a = 0; a < f.src->n_obj; ++a) {
    h.obj_map[a] = g.obj_map[f.obj_map[a]];
    for (int b = 0; b < f.src->n_obj; ++b)
      h.hom_map[a][b] =
          f.src->base->compose(g.hom_map[f.obj_map[a]][f.obj_map[b]], f.hom_map[a][b]);
  }
  return h;
}

std::string validate_weight(const Weight& m) {
  if (!m.cat) return "missing category";
  const VCategory& C = *m.cat;
  const Base& B = *C.base;
  size_t n = size_t(C.n_obj);
  if (m.value.size() != n) return "value table has wrong size";
  for (size_t c = 0; c < n; ++c) {
    try {
      B.validate_object(m.value[c]);
    } catch (const std::exception& e) {
      return "value(" + std::to_string(c) + "): " + e.what();
    }
  }
  if (m.act.size() != n) return "action table has wrong outer size";
  for (size_t a = 0; a < n; ++a) {
    if (m.act[a].size() != n) return "action table row " + std::to_string(a) + " has wrong size";
    for (size_t b = 0; b < n; ++b) {
      const BaseMorphism& f = m.act[a][b];
      std::string here = ix("act", int(a), int(b));
      try {
        B.validate_morphism(f);
      } catch (const std::exception& e) {
        return here + ": " + e.what();
      }
      if (!(f.src == B.tensor(C.homs[a][b], m.value[b])))
        return here + ": source is not hom(a,b) (x) value(b)";
      if (!(f.dst == m.value[a])) return here + ": target is not value(a)";
    }
  }
  for (int a = 0; a < C.n_obj; ++a) {
    BaseMorphism idv = B.identity(m.value[a]);
    if (!(B.compose(m.act[a][a], B.tensor_mor(C.ident(a), idv)) == idv))
      return "unit law fails at object " + std::to_string(a);
  }
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      for (int cc = 0; cc < C.n_obj; ++cc) {
        BaseMorphism lhs =
            B.compose(m.act[a][b], B.tensor_mor(B.identity(C.homs[a][b]), m.act[b][cc]));
        BaseMorphism rhs = B.compose(
            m.act[a][cc],
            B.compose(B.tensor_mor(C.comp(a, b, cc), B.identity(m.value[cc])),
                      B.tensor_mor(B.braiding(C.homs[a][b], C.homs[b][cc]),
                                   B.identity(m.value[cc]))));
        if (!(lhs == rhs)) return "action law fails at " + ix3("", a, b, cc);
      }
  return {};
}

std::string validate_coweight(const CoWeight& h) {
  if (!h.cat) return "missing category";
  const VCategory& C = *h.cat;
  const Base& B = *C.base;
  size_t n = size_t(C.n_obj);
  if (h.value.size() != n) return "value table has wrong size";
  for (size_t c = 0; c < n; ++c) {
    try {
      B.validate_object(h.value[c]);
    } catch (const std::exception& e) {
      return "value(" + std::to_string(c) + "): " + e.what();
    }
  }
  if (h.act.size() != n) return "action table has wrong outer size";
  for (size_t a = 0; a < n; ++a) {
    if (h.act[a].size() != n) return "action table row " + std::to_string(a) + " has wrong size";
    for (size_t b = 0; b < n; ++b) {
      const BaseMorphism& f = h.act[a][b];
      std::string here = ix("act", int(a), int(b));
      try {
        B.validate_morphism(f);
      } catch (const std::exception& e) {
        return here + ": " + e.what();
      }
      if (!(f.src == B.tensor(C.homs[a][b], h.value[a])))
        return here + ": source is not hom(a,b) (x) value(a)";
      if (!(f.dst == h.value[b])) return here + ": target is not value(b)";
    }
  }
  for (int a = 0; a < C.n_obj; ++a) {
    BaseMorphism idv = B.identity(h.value[a]);
    if (!(B.compose(h.act[a][a], B.tensor_mor(C.ident(a), idv)) == idv))
      return "unit law fails at object " + std::to_string(a);
  }
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      for (int cc = 0; cc < C.n_obj; ++cc) {
        BaseMorphism lhs =
            B.compose(h.act[a][cc], B.tensor_mor(C.comp(a, b, cc), B.identity(h.value[a])));
        BaseMorphism rhs =
            B.compose(h.act[b][cc], B.tensor_mor(B.identity(C.homs[b][cc]), h.act[a][b]));
        if (!(lhs == rhs)) return "action law fails at " + ix3("", a, b, cc);
      }
  return {};
}

std::string validate_weight_map(const Weight& m, const Weight& n, const WeightMap& t) {
  if (!m.cat || !n.cat) return "missing category";
  if (!same_vcategory(*m.cat, *n.cat)) return "weights live over different categories";
  const VCategory& C = *m.cat;
  const Base& B = *C.base;
  if (t.component.size() != size_t(C.n_obj)) return "component table has wrong size";
  for (int c = 0; c < C.n_obj; ++c) {
    const BaseMorphism& f = t.component[c];
    std::string here = "component(" + std::to_string(c) + ")";
    try {
      B.validate_morphism(f);
    } catch (const std::exception& e) {
      return here + ": " + e.what();
    }
    if (!(f.src == m.value[c])) return here + ": wrong source";
    if (!(f.dst == n.value[c])) return here + ": wrong target";
  }
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b) {
      BaseMorphism lhs = B.compose(t.component[a], m.act[a][b]);
      BaseMorphism rhs = B.compose(
          n.act[a][b], B.tensor_mor(B.identity(C.homs[a][b]), t.component[b]));
      if (!(lhs == rhs)) return "naturality fails at " + ix("", a, b);
    }
  return {};
}

Weight yoneda_weight(const VCategoryPtr& c, int obj) {
  if (obj < 0 || obj >= c->n_obj) throw std::invalid_argument("yoneda_weight: object out of range");
  const Base& B = *c->base;
  Weight m;
  m.cat = c;
  m.value.reserve(c->n_obj);
  for (int a = 0; a < c->n_obj; ++a) m.value.push_back(c->homs[a][obj]);
  m.act.assign(c->n_obj, std::vector<BaseMorphism>(c->n_obj));
  for (int a = 0; a < c->n_obj; ++a)
    for (int b = 0; b < c->n_obj; ++b)
      m.act[a][b] = B.compose(c->comp(a, b, obj), B.braiding(c->homs[a][b], c->homs[b][obj]));
  return m;
}

CoWeight coyoneda_coweight(const VCategoryPtr& c, int obj) {
  if (obj < 0 || obj >= c->n_obj)
    throw std::invalid_argument("coyoneda_coweight: object out of range");
  CoWeight h;
  h.cat = c;
  h.value.reserve(c->n_obj);
  for (int a = 0; a < c->n_obj; ++a) h.value.push_back(c->homs[obj][a]);
  h.act.assign(c->n_obj, std::vector<BaseMorphism>(c->n_obj));
  for (int a = 0; a < c->n_obj; ++a)
    for (int b = 0; b < c->n_obj; ++b) h.act[a][b] = c->comp(obj, a, b);
  return h;
}

int UnderlyingCat::find_arrow(int a, int b, const BaseMorphism& p) const {
  int start = hom_start[a][b];
  for (int i = 0; i < hom_count[a][b]; ++i)
    if (arr_point[start + i] == p) return start + i;
  return -1;
}

UnderlyingCat underlying_category(const VCategory& c, const Bounds& b) {
  const Base& B = *c.base;
  BaseObject unit = B.unit();
  UnderlyingCat u;
  u.cat.n_obj = c.n_obj;
  u.hom_start.assign(c.n_obj, std::vector<int>(c.n_obj, 0));
  u.hom_count.assign(c.n_obj, std::vector<int>(c.n_obj, 0));
  for (int a = 0; a < c.n_obj; ++a)
    for (int bb = 0; bb < c.n_obj; ++bb) {
      auto pts = B.hom_set(unit, c.homs[a][bb], b);
      u.hom_start[a][bb] = u.cat.n_arr();
      u.hom_count[a][bb] = static_cast<int>(pts.size());
      for (auto& p : pts) {
        u.cat.arrows.push_back({a, bb});
        u.arr_point.push_back(std::move(p));
      }
    }
  u.cat.id_arrow.resize(c.n_obj);
  for (int a = 0; a < c.n_obj; ++a) {
    int i = u.find_arrow(a, a, c.ident(a));
    if (i < 0) throw std::logic_error("underlying_category: identity point not enumerated");
    u.cat.id_arrow[a] = i;
  }
  int m = u.cat.n_arr();
  u.cat.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (!u.cat.composable(g, f)) continue;
      int a = u.cat.src(f), mid = u.cat.tgt(f), cc = u.cat.tgt(g);
      BaseMorphism comp =
          B.compose(c.comp(a, mid, cc), B.tensor_mor(u.arr_point[g], u.arr_point[f]));
      int i = u.find_arrow(a, cc, comp);
      if (i < 0) throw std::logic_error("underlying_category: composite point not enumerated");
      u.cat.comp[g][f] = i;
    }
  return u;
}

OrdFunctor underlying_functor(const VFunctor& f, const UnderlyingCat& src_u,
                              const UnderlyingCat& dst_u) {
  const Base& B = *f.src->base;
  OrdFunctor g;
  g.src = src_u.cat;
  g.dst = dst_u.cat;
  g.obj_map = f.obj_map;
  g.arr_map.resize(src_u.cat.n_arr());
  for (int i = 0; i < src_u.cat.n_arr(); ++i) {
    int a = src_u.cat.src(i), bb = src_u.cat.tgt(i);
    BaseMorphism q = B.compose(f.hom_map[a][bb], src_u.arr_point[i]);
    int j = dst_u.find_arrow(f.obj_map[a], f.obj_map[bb], q);
    if (j < 0) throw std::logic_error("underlying_functor: image point not enumerated");
    g.arr_map[i] = j;
  }
  return g;
}

OrdPresheaf underlying_presheaf(const Weight& m, const UnderlyingCat& u, const Bounds& b) {
  const VCategory& C = *m.cat;
  const Base& B = *C.base;
  OrdPresheaf p;
  p.cat = u.cat;
  p.size.resize(C.n_obj);
  p.pt.resize(C.n_obj);
  for (int c = 0; c < C.n_obj; ++c) {
    p.pt[c] = B.points(m.value[c], b);
    p.size[c] = static_cast<int>(p.pt[c].size());
  }
  p.action.resize(u.cat.n_arr());
  for (int f = 0; f < u.cat.n_arr(); ++f) {
    int a = u.cat.src(f), bb = u.cat.tgt(f);
    p.action[f].resize(p.size[bb]);
    for (int x = 0; x < p.size[bb]; ++x) {
      BaseMorphism q = B.compose(m.act[a][bb], B.tensor_mor(u.arr_point[f], p.pt[bb][x]));
      auto it = std::find(p.pt[a].begin(), p.pt[a].end(), q);
      if (it == p.pt[a].end())
        throw std::logic_error("underlying_presheaf: transported point not enumerated");
      p.action[f][x] = static_cast<int>(it - p.pt[a].begin());
    }
  }
  return p;
}

namespace {

BaseObject forget_obj(const BasePtr& sets, const BaseObject& x) {
  BaseObject y;
  y.base = sets;
  y.data = SetCarrier{std::get<GSetCarrier>(x.data).size};
  return y;
}

BaseMorphism forget_mor(const BasePtr& sets, const BaseMorphism& f) {
  BaseMorphism g;
  g.base = sets;
  g.src = forget_obj(sets, f.src);
  g.dst = forget_obj(sets, f.dst);
  g.data = std::get<FuncData>(f.data);
  return g;
}

}  // namespace

VCategoryPtr forget_to_sets(const VCategory& c) {
  if (c.base->tag() != Base::Tag::FinGSet)
    throw std::invalid_argument("forget_to_sets: not a group-action base");
  BasePtr sets = finset_base();
  auto out = std::make_shared<VCategory>();
  out->base = sets;
  out->n_obj = c.n_obj;
  out->homs.assign(c.n_obj, std::vector<BaseObject>(c.n_obj));
  out->idents.resize(c.n_obj);
  out->comps.assign(c.n_obj,
                    std::vector<std::vector<BaseMorphism>>(c.n_obj,
                                                           std::vector<BaseMorphism>(c.n_obj)));
  for (int a = 0; a < c.n_obj; ++a) {
    out->idents[a] = forget_mor(sets, c.idents[a]);
    for (int b = 0; b < c.n_obj; ++b) {
      out->homs[a][b] = forget_obj(sets, c.homs[a][b]);
      for (int cc = 0; cc < c.n_obj; ++cc)
        out->comps[a][b][cc] = forget_mor(sets, c.comps[a][b][cc]);
    }
  }
  return out;
}

Weight forget_to_sets(const Weight& m, const VCategoryPtr& forgotten) {
  if (m.cat->base->tag() != Base::Tag::FinGSet)
    throw std::invalid_argument("forget_to_sets: not a group-action base");
  BasePtr sets = forgotten->base;
  Weight out;
  out.cat = forgotten;
  out.value.reserve(m.value.size());
  for (const auto& v : m.value) out.value.push_back(forget_obj(sets, v));
  out.act.assign(m.act.size(), {});
  for (size_t a = 0; a < m.act.size(); ++a) {
    out.act[a].reserve(m.act[a].size());
    for (const auto& f : m.act[a]) out.act[a].push_back(forget_mor(sets, f));
  }
  return out;
}

VCategory set_vcategory(const FinCategory& c) {
  BasePtr sets = finset_base();
  VCategory out;
  out.base = sets;
  out.n_obj = c.n_obj;
  out.homs.assign(c.n_obj, std::vector<BaseObject>(c.n_obj));
  out.idents.resize(c.n_obj);
  out.comps.assign(c.n_obj,
                   std::vector<std::vector<BaseMorphism>>(c.n_obj,
                                                          std::vector<BaseMorphism>(c.n_obj)));
  std::vector<std::vector<std::vector<int>>> lists(c.n_obj,
                                                   std::vector<std::vector<int>>(c.n_obj));
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b) {
      lists[a][b] = c.hom(a, b);
      BaseObject x;
      x.base = sets;
      x.data = SetCarrier{static_cast<int>(lists[a][b].size())};
      out.homs[a][b] = x;
    }
  auto pos_in = [](const std::vector<int>& list, int arrow) {
    auto it = std::lower_bound(list.begin(), list.end(), arrow);
    if (it == list.end() || *it != arrow)
      throw std::logic_error("set_vcategory: arrow missing from its hom list");
    return static_cast<int>(it - list.begin());
  };
  for (int a = 0; a < c.n_obj; ++a) {
    BaseMorphism e;
    e.base = sets;
    e.src = sets->unit();
    e.dst = out.homs[a][a];
    e.data = FuncData{{pos_in(lists[a][a], c.id_arrow[a])}};
    out.idents[a] = e;
  }
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b)
      for (int cc = 0; cc < c.n_obj; ++cc) {
        const auto& gl = lists[b][cc];
        const auto& fl = lists[a][b];
        BaseMorphism m;
        m.base = sets;
        m.src = sets->tensor(out.homs[b][cc], out.homs[a][b]);
        m.dst = out.homs[a][cc];
        FuncData d;
        d.map.resize(gl.size() * fl.size());
        for (size_t gi = 0; gi < gl.size(); ++gi)
          for (size_t fi = 0; fi < fl.size(); ++fi)
            d.map[gi * fl.size() + fi] = pos_in(lists[a][cc], c.compose(gl[gi], fl[fi]));
        m.data = std::move(d);
        out.comps[a][b][cc] = m;
      }
  return out;
}

Json VCategory::to_json() const {
  Json j;
  j["objects"] = n_obj;
  Json hom = Json::array();
  for (const auto& row : homs) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(obj_to_json(x));
    hom.push_back(std::move(r));
  }
  j["hom"] = std::move(hom);
  Json id = Json::array();
  for (const auto& e : idents) id.push_back(mor_to_json(e));
  j["ident"] = std::move(id);
  Json cm = Json::array();
  for (const auto& plane : comps) {
    Json pl = Json::array();
    for (const auto& row : plane) {
      Json r = Json::array();
      for (const auto& m : row) r.push_back(mor_to_json(m));
      pl.push_back(std::move(r));
    }
    cm.push_back(std::move(pl));
  }
  j["comp"] = std::move(cm);
  return j;
}

VCategory VCategory::from_json(const BasePtr& b, const Json& j) {
  VCategory c;
  c.base = b;
  c.n_obj = j.at("objects").get<int>();
  if (c.n_obj < 0) throw std::invalid_argument("category.objects: negative");
  const Json& hom = j.at("hom");
  const Json& id = j.at("ident");
  const Json& cm = j.at("comp");
  size_t n = size_t(c.n_obj);
  if (hom.size() != n || id.size() != n || cm.size() != n)
    throw std::invalid_argument("category: table sizes do not match object count");
  c.homs.assign(n, {});
  for (size_t a = 0; a < n; ++a) {
    if (hom[a].size() != n)
      throw std::invalid_argument("category.hom: row size does not match object count");
    for (size_t bb = 0; bb < n; ++bb) c.homs[a].push_back(obj_from_json(b, hom[a][bb]));
  }
  for (size_t a = 0; a < n; ++a) c.idents.push_back(mor_from_json(b, id[a]));
  c.comps.assign(n, std::vector<std::vector<BaseMorphism>>(n));
  for (size_t a = 0; a < n; ++a) {
    if (cm[a].size() != n)
      throw std::invalid_argument("category.comp: plane size does not match object count");
    for (size_t bb = 0; bb < n; ++bb) {
      if (cm[a][bb].size() != n)
        throw std::invalid_argument("category.comp: row size does not match object count");
      for (size_t cc = 0; cc < n; ++cc)
        c.comps[a][bb].push_back(mor_from_json(b, cm[a][bb][cc]));
    }
  }
  return c;
}

Json Weight::to_json() const {
  Json j;
  Json v = Json::array();
  for (const auto& x : value) v.push_back(obj_to_json(x));
  j["value"] = std::move(v);
  Json a = Json::array();
  for (const auto& row : act) {
    Json r = Json::array();
    for (const auto& f : row) r.push_back(mor_to_json(f));
    a.push_back(std::move(r));
  }
  j["act"] = std::move(a);
  return j;
}

Weight Weight::from_json(const VCategoryPtr& c, const Json& j) {
  Weight m;
  m.cat = c;
  const BasePtr& b = c->base;
  const Json& v = j.at("value");
  const Json& a = j.at("act");
  size_t n = size_t(c->n_obj);
  if (v.size() != n || a.size() != n)
    throw std::invalid_argument("weight: table sizes do not match object count");
  for (size_t i = 0; i < n; ++i) m.value.push_back(obj_from_json(b, v[i]));
  m.act.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n)
      throw std::invalid_argument("weight.act: row size does not match object count");
    for (size_t k = 0; k < n; ++k) m.act[i].push_back(mor_from_json(b, a[i][k]));
  }
  return m;
}

Json CoWeight::to_json() const {
  Json j;
  Json v = Json::array();
  for (const auto& x : value) v.push_back(obj_to_json(x));
  j["value"] = std::move(v);
  Json a = Json::array();
  for (const auto& row : act) {
    Json r = Json::array();
    for (const auto& f : row) r.push_back(mor_to_json(f));
    a.push_back(std::move(r));
  }
  j["act"] = std::move(a);
  return j;
}

CoWeight CoWeight::from_json(const VCategoryPtr& c, const Json& j) {
  CoWeight h;
  h.cat = c;
  const BasePtr& b = c->base;
  const Json& v = j.at("value");
  const Json& a = j.at("act");
  size_t n = size_t(c->n_obj);
  if (v.size() != n || a.size() != n)
    throw std::invalid_argument("diagram: table sizes do not match object count");
  for (size_t i = 0; i < n; ++i) h.value.push_back(obj_from_json(b, v[i]));
  h.act.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n)
      throw std::invalid_argument("diagram.act: row size does not match object count");
    for (size_t k = 0; k < n; ++k) h.act[i].push_back(mor_from_json(b, a[i][k]));
  }
  return h;
}

}  // namespace enrichcat
