#include "enrichcat/colim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <variant>

#include "enrichcat/fpmat.hpp"

namespace enrichcat {

namespace {

// Composite point (later . earlier) : I -> hom(a,c) through the enriched
// composition.
BaseMorphism pcomp(const VCategory& v, int a, int b, int c, const BaseMorphism& later,
                   const BaseMorphism& earlier) {
  return v.base->compose(v.comp(a, b, c), v.base->tensor_mor(later, earlier));
}

void require_same_cat(const VCategoryPtr& a, const VCategoryPtr& b, const char* who) {
  if (a == b) return;
  if (!a || !b || a->n_obj != b->n_obj || a->base->tag() != b->base->tag())
    throw std::invalid_argument(std::string(who) + ": weight and diagram are indexed differently");
}

// Relation legs of the coend presentation, before the sum injections. Pair
// (a,z) has carrier C(a,z) (x) M(z) (x) H(a); lam lands in summand a, rho in
// summand z.
struct Coend {
  std::vector<BaseObject> ys;
  std::vector<BaseObject> ps;
  std::vector<BaseMorphism> lam;
  std::vector<BaseMorphism> rho;
};

Coend coend_data(const Weight& m, const CoWeight& h) {
  const VCategory& c = *m.cat;
  const Base& b = *c.base;
  const int n = c.n_obj;
  Coend d;
  d.ys.reserve(n);
  for (int x = 0; x < n; ++x) d.ys.push_back(b.tensor(m.value[x], h.value[x]));
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      d.ps.push_back(b.tensor(c.hom(a, z), b.tensor(m.value[z], h.value[a])));
      d.lam.push_back(b.tensor_mor(m.act[a][z], b.identity(h.value[a])));
      d.rho.push_back(b.compose(
          b.tensor_mor(b.identity(m.value[z]), h.act[a][z]),
          b.tensor_mor(b.braiding(c.hom(a, z), m.value[z]), b.identity(h.value[a]))));
    }
  return d;
}

std::string cocone_failure(const Base& b, const Coend& d, int n,
                           const std::vector<BaseMorphism>& legs) {
  if (static_cast<int>(legs.size()) != n) return "leg count mismatch";
  for (int x = 0; x < n; ++x) {
    if (!(legs[x].src == d.ys[x])) return "leg " + std::to_string(x) + " has the wrong source";
    if (x > 0 && !(legs[x].dst == legs[0].dst))
      return "leg " + std::to_string(x) + " has a different target";
  }
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      const int pi = a * n + z;
      if (!(b.compose(legs[a], d.lam[pi]) == b.compose(legs[z], d.rho[pi])))
        return "relation fails at pair (" + std::to_string(a) + ", " + std::to_string(z) + ")";
    }
  return "";
}

}  // namespace

WeightedColimit weighted_colimit(const Weight& m, const CoWeight& h, const Bounds& bd) {
  require_same_cat(m.cat, h.cat, "weighted_colimit");
  const VCategory& c = *m.cat;
  const Base& b = *c.base;
  const int n = c.n_obj;
  Coend d = coend_data(m, h);
  WeightedColimit w;
  w.sum = b.coproduct(d.ys);
  ColimResult psum = b.coproduct(d.ps);
  std::vector<BaseMorphism> lleg, rleg;
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      const int pi = a * n + z;
      lleg.push_back(b.compose(w.sum.injections[a], d.lam[pi]));
      rleg.push_back(b.compose(w.sum.injections[z], d.rho[pi]));
    }
  w.rel_left = induce_colimit(psum, lleg);
  w.rel_right = induce_colimit(psum, rleg);
  w.coeq = b.coequalizer(w.rel_left, w.rel_right, bd);
  w.value = w.coeq.apex;
  w.cocone.reserve(n);
  for (int x = 0; x < n; ++x)
    w.cocone.push_back(b.compose(w.coeq.injections[1], w.sum.injections[x]));
  return w;
}

std::string check_cocone(const Weight& m, const CoWeight& h,
                         const std::vector<BaseMorphism>& legs) {
  require_same_cat(m.cat, h.cat, "check_cocone");
  Coend d = coend_data(m, h);
  return cocone_failure(*m.cat->base, d, m.cat->n_obj, legs);
}

BaseMorphism induce_weighted(const WeightedColimit& w, const std::vector<BaseMorphism>& legs) {
  BaseMorphism s = induce_colimit(w.sum, legs);
  const Base& b = *s.base;
  return induce_colimit(w.coeq, {b.compose(s, w.rel_left), s});
}

Verdict colimit_universal(const Weight& m, const CoWeight& h, const WeightedColimit& w,
                          const std::vector<BaseObject>& targets, const Bounds& bd) {
  const VCategory& c = *m.cat;
  const Base& b = *c.base;
  const int n = c.n_obj;
  Coend d = coend_data(m, h);
  long long cocones = 0;
  for (size_t ti = 0; ti < targets.size(); ++ti) {
    const BaseObject& t = targets[ti];
    std::vector<std::vector<BaseMorphism>> cand(n);
    long long total = 1;
    for (int x = 0; x < n; ++x) {
      cand[x] = b.hom_set(d.ys[x], t, bd);
      total *= static_cast<long long>(cand[x].size());
      if (total > bd.max_hom_set)
        return Verdict::unknown(bd.max_hom_set, {{"target", ti}, {"reason", "cocone space"}});
    }
    const std::vector<BaseMorphism> med = b.hom_set(w.value, t, bd);
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<BaseMorphism> legs;
      legs.reserve(n);
      for (int x = 0; x < n; ++x) legs.push_back(cand[x][idx[x]]);
      if (cocone_failure(b, d, n, legs).empty()) {
        ++cocones;
        int hits = 0;
        for (const BaseMorphism& f : med) {
          bool ok = true;
          for (int x = 0; x < n && ok; ++x) ok = b.compose(f, w.cocone[x]) == legs[x];
          if (ok) ++hits;
        }
        if (hits != 1)
          return Verdict::no({{"target", ti}, {"mediators", hits}, {"cocone", cocones - 1}});
      }
      int p = 0;
      while (p < n && ++idx[p] == static_cast<int>(cand[p].size())) {
        idx[p] = 0;
        ++p;
      }
      if (p == n) break;
    }
  }
  return Verdict::yes({{"targets", targets.size()}, {"cocones", cocones}});
}

namespace {

// Evaluation [X,Z] (x) X -> Z.
BaseMorphism ev_mor(const Base& b, const BaseObject& x, const BaseObject& z) {
  return b.untranspose(b.identity(b.hom(x, z)), x, z);
}

// Precomposition [X,Z] -> [X',Z] by f : X' -> X.
BaseMorphism hom_pre(const Base& b, const BaseMorphism& f, const BaseObject& z) {
  BaseMorphism ev = ev_mor(b, f.dst, z);
  return b.transpose(b.compose(ev, b.tensor_mor(b.identity(b.hom(f.dst, z)), f)),
                     b.hom(f.dst, z), f.src);
}

}  // namespace

WeightedLimit weighted_limit(const CoWeight& n_, const CoWeight& k, const Bounds&) {
  require_same_cat(n_.cat, k.cat, "weighted_limit");
  const VCategory& c = *n_.cat;
  const Base& b = *c.base;
  const int n = c.n_obj;
  WeightedLimit w;
  std::vector<BaseObject> es;
  es.reserve(n);
  for (int x = 0; x < n; ++x) es.push_back(b.hom(n_.value[x], k.value[x]));
  w.prod = b.product(es);
  std::vector<BaseObject> fs;
  std::vector<BaseMorphism> uleg, vleg;
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      const BaseObject& cab = c.hom(a, z);
      const BaseObject fsrc = b.tensor(cab, n_.value[a]);
      fs.push_back(b.hom(fsrc, k.value[z]));
      uleg.push_back(b.compose(hom_pre(b, n_.act[a][z], k.value[z]), w.prod.projections[z]));
      BaseMorphism ev = ev_mor(b, n_.value[a], k.value[a]);
      BaseMorphism body = b.compose(
          k.act[a][z], b.compose(b.tensor_mor(b.identity(cab), ev),
                                 b.tensor_mor(b.braiding(es[a], cab), b.identity(n_.value[a]))));
      vleg.push_back(b.compose(b.transpose(body, es[a], fsrc), w.prod.projections[a]));
    }
  LimitResult pairprod = b.product(fs);
  w.rel_left = induce_limit(pairprod, uleg);
  w.rel_right = induce_limit(pairprod, vleg);
  w.eq = b.equalizer(w.rel_left, w.rel_right);
  w.value = w.eq.apex;
  w.cone.reserve(n);
  for (int x = 0; x < n; ++x)
    w.cone.push_back(b.compose(w.prod.projections[x], w.eq.projections[0]));
  return w;
}

BaseMorphism induce_weighted_limit(const WeightedLimit& w, const std::vector<BaseMorphism>& legs) {
  BaseMorphism s = induce_limit(w.prod, legs);
  const Base& b = *s.base;
  return induce_limit(w.eq, {s, b.compose(w.rel_left, s)});
}

WeightedLimit nx_weighted_limit(const BaseObject& x, int d1, int d2, const BaseMorphism& g1,
                                const BaseMorphism& g2, const CoWeight& k) {
  const VCategory& c = *k.cat;
  const Base& b = *c.base;
  if (!(g1.src == x) || !(g2.src == x))
    throw std::invalid_argument("nx_weighted_limit: stage maps must start at the stage object");
  if (!(g1.dst == c.hom(d1, d2)) || !(g2.dst == c.hom(d1, d2)))
    throw std::invalid_argument("nx_weighted_limit: stage maps must land in the hom of the pair");
  const BaseObject& a = k.value[d1];
  auto tr = [&](const BaseMorphism& g) {
    BaseMorphism body =
        b.compose(k.act[d1][d2], b.compose(b.tensor_mor(g, b.identity(a)), b.braiding(a, x)));
    return b.transpose(body, a, x);
  };
  WeightedLimit w;
  w.rel_left = tr(g1);
  w.rel_right = tr(g2);
  w.eq = b.equalizer(w.rel_left, w.rel_right);
  w.value = w.eq.apex;
  w.cone = {w.eq.projections[0]};
  w.prod = b.product({a});
  return w;
}

WeightMap yoneda_map(const Weight& p, int z, const BaseMorphism& eta) {
  const VCategory& c = *p.cat;
  const Base& b = *c.base;
  WeightMap t;
  t.component.reserve(c.n_obj);
  for (int x = 0; x < c.n_obj; ++x)
    t.component.push_back(b.compose(p.act[x][z], b.tensor_mor(b.identity(c.hom(x, z)), eta)));
  return t;
}

CopowerResult copower(const BaseObject& x, int a, const VCategoryPtr& cp, const Bounds& bd) {
  const VCategory& c = *cp;
  const Base& b = *c.base;
  const int n = c.n_obj;
  Weight y = yoneda_weight(cp, a);
  CopowerResult r;
  r.presheaf.cat = cp;
  for (int z = 0; z < n; ++z) r.presheaf.value.push_back(b.tensor(x, y.value[z]));
  r.presheaf.act.assign(n, {});
  for (int u = 0; u < n; ++u)
    for (int z = 0; z < n; ++z)
      r.presheaf.act[u].push_back(
          b.compose(b.tensor_mor(b.identity(x), y.act[u][z]),
                    b.tensor_mor(b.braiding(c.hom(u, z), x), b.identity(c.hom(z, a)))));
  long long tried = 0;
  try {
    for (int z = 0; z < n; ++z) {
      for (const BaseMorphism& eta : b.points(r.presheaf.value[z], bd)) {
        WeightMap t = yoneda_map(r.presheaf, z, eta);
        bool all = true;
        for (int u = 0; u < n && all; ++u) all = b.is_iso(t.component[u]);
        if (all) {
          r.in_category = Verdict::yes({{"object", z}, {"unit", mor_to_json(eta)}});
          return r;
        }
        ++tried;
      }
    }
  } catch (const ceiling_error&) {
    r.in_category = Verdict::unknown(bd.max_hom_set, {{"tried", tried}});
    return r;
  }
  r.in_category = Verdict::no({{"candidates", tried}});
  return r;
}

CompletionResult karoubi(const VCategoryPtr& cp, const Bounds& bd) {
  const VCategory& c = *cp;
  const Base& b = *c.base;
  const int n = c.n_obj;
  std::vector<std::pair<int, BaseMorphism>> objs;
  for (int x = 0; x < n; ++x)
    for (const BaseMorphism& e : b.points(c.hom(x, x), bd))
      if (pcomp(c, x, x, x, e, e) == e) objs.emplace_back(x, e);
  const int m = static_cast<int>(objs.size());
  auto sandwich = [&](int i, int j) {
    const int x = objs[i].first, y = objs[j].first;
    BaseMorphism pre =
        b.compose(c.comp(x, x, y), b.tensor_mor(b.identity(c.hom(x, y)), objs[i].second));
    BaseMorphism post =
        b.compose(c.comp(x, y, y), b.tensor_mor(objs[j].second, b.identity(c.hom(x, y))));
    return b.compose(post, pre);
  };
  std::vector<std::vector<Splitting>> sp(m);
  auto k = std::make_shared<VCategory>();
  k->base = c.base;
  k->n_obj = m;
  k->homs.assign(m, {});
  for (int i = 0; i < m; ++i) {
    sp[i].reserve(m);
    for (int j = 0; j < m; ++j) {
      sp[i].push_back(b.split_idempotent(sandwich(i, j)));
      k->homs[i].push_back(sp[i][j].object);
    }
  }
  k->idents.reserve(m);
  for (int i = 0; i < m; ++i) k->idents.push_back(b.compose(sp[i][i].proj, objs[i].second));
  k->comps.assign(m, std::vector<std::vector<BaseMorphism>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      k->comps[i][j].reserve(m);
      for (int l = 0; l < m; ++l)
        k->comps[i][j].push_back(b.compose(
            sp[i][l].proj, b.compose(c.comp(objs[i].first, objs[j].first, objs[l].first),
                                     b.tensor_mor(sp[j][l].incl, sp[i][j].incl))));
    }
  CompletionResult r;
  r.completed = k;
  r.embedding.src = cp;
  r.embedding.dst = k;
  std::vector<int> idx(n, -1);
  for (int i = 0; i < m; ++i)
    if (objs[i].second == c.ident(objs[i].first)) idx[objs[i].first] = i;
  for (int x = 0; x < n; ++x)
    if (idx[x] < 0) throw std::logic_error("karoubi: identity point missing from the hom points");
  r.embedding.obj_map = idx;
  r.embedding.hom_map.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      r.embedding.hom_map[a].push_back(sp[idx[a]][idx[z]].proj);
      if (!b.is_iso(r.embedding.hom_map[a][z]))
        throw std::logic_error("karoubi: embedding is not fully faithful");
    }
  Json ob = Json::array();
  for (const auto& [x, e] : objs) ob.push_back({{"object", x}, {"idempotent", mor_to_json(e)}});
  r.provenance = Json{{"kind", "karoubi"}, {"objects", ob}};
  return r;
}

CompletionResult matrix_completion(const VCategoryPtr& cp, int kk, const Bounds& bd) {
  const VCategory& c = *cp;
  const Base& b = *c.base;
  if (b.tag() != Base::Tag::FinVec)
    throw std::invalid_argument("matrix_completion: the base must have finite direct sums");
  if (kk < 1) throw std::invalid_argument("matrix_completion: the width must be positive");
  const int n = c.n_obj;
  CompletionResult r;
  if (n == 0) {
    r.completed = std::make_shared<VCategory>(VCategory{c.base, 0, {}, {}, {}});
    r.embedding = identity_vfunctor(r.completed);
    r.embedding.src = cp;
    r.provenance = Json{{"kind", "matrix"}, {"tuples", Json::array()}};
    return r;
  }
  const int prime = std::get<FpMat>(c.idents[0].data).p;
  std::vector<std::vector<int>> tup;
  for (int x = 0; x < n; ++x) tup.push_back({x});
  for (int len = 2; len <= kk; ++len) {
    std::vector<int> t(len, 0);
    while (true) {
      tup.push_back(t);
      if (static_cast<int>(tup.size()) > bd.max_object)
        throw ceiling_error("matrix_completion: tuple ceiling");
      int p = len - 1;
      while (p >= 0 && ++t[p] == n) {
        t[p] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
  const int m = static_cast<int>(tup.size());
  auto dim_of = [&](int a, int z) { return std::get<VecCarrier>(c.homs[a][z].data).dim; };
  // Block layout of hom(cbar, dbar): outer index i over dbar, inner j over
  // cbar, block (i,j) of dimension dim C(cbar[j], dbar[i]).
  auto block_offsets = [&](const std::vector<int>& cbar, const std::vector<int>& dbar) {
    std::vector<std::vector<int>> off(dbar.size(), std::vector<int>(cbar.size(), 0));
    int acc = 0;
    for (size_t i = 0; i < dbar.size(); ++i)
      for (size_t j = 0; j < cbar.size(); ++j) {
        off[i][j] = acc;
        acc += dim_of(cbar[j], dbar[i]);
      }
    off.push_back({acc});
    return off;
  };
  auto hom_dim = [&](const std::vector<int>& cbar, const std::vector<int>& dbar) {
    int acc = 0;
    for (int d : dbar)
      for (int s : cbar) acc += dim_of(s, d);
    return acc;
  };
  auto vc = std::make_shared<VCategory>();
  vc->base = c.base;
  vc->n_obj = m;
  vc->homs.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int dm = hom_dim(tup[i], tup[j]);
      if (dm > bd.max_object) throw ceiling_error("matrix_completion: hom ceiling");
      vc->homs[i].push_back(BaseObject{c.base, VecCarrier{dm}});
    }
  vc->idents.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto& cbar = tup[i];
    auto off = block_offsets(cbar, cbar);
    FpMat id(off.back()[0], 1, prime);
    for (size_t q = 0; q < cbar.size(); ++q) {
      const FpMat& base_id = std::get<FpMat>(c.idents[cbar[q]].data);
      for (int w = 0; w < base_id.rows; ++w)
        id.at(off[q][q] + w, 0) = base_id.at(w, 0);
    }
    vc->idents.push_back(BaseMorphism{c.base, b.unit(), vc->homs[i][i], id});
  }
  vc->comps.assign(m, std::vector<std::vector<BaseMorphism>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& cbar = tup[i];
      const auto& dbar = tup[j];
      auto foff = block_offsets(cbar, dbar);
      const int fdim = foff.back()[0];
      for (int l = 0; l < m; ++l) {
        const auto& ebar = tup[l];
        auto goff = block_offsets(dbar, ebar);
        auto ooff = block_offsets(cbar, ebar);
        FpMat cm(ooff.back()[0], goff.back()[0] * fdim, prime);
        for (size_t oi = 0; oi < ebar.size(); ++oi)
          for (size_t oj = 0; oj < cbar.size(); ++oj)
            for (size_t q = 0; q < dbar.size(); ++q) {
              const FpMat& base_cm =
                  std::get<FpMat>(c.comp(cbar[oj], dbar[q], ebar[oi]).data);
              const int dg = dim_of(dbar[q], ebar[oi]);
              const int ds = dim_of(cbar[oj], dbar[q]);
              for (int w = 0; w < base_cm.rows; ++w)
                for (int t = 0; t < dg; ++t)
                  for (int s = 0; s < ds; ++s) {
                    const int col = (goff[oi][q] + t) * fdim + (foff[q][oj] + s);
                    auto& cell = cm.at(ooff[oi][oj] + w, col);
                    cell = static_cast<uint8_t>((cell + base_cm.at(w, t * ds + s)) % prime);
                  }
            }
        vc->comps[i][j].push_back(
            BaseMorphism{c.base, b.tensor(vc->homs[j][l], vc->homs[i][j]), vc->homs[i][l], cm});
      }
    }
  r.completed = vc;
  r.embedding.src = cp;
  r.embedding.dst = vc;
  for (int x = 0; x < n; ++x) r.embedding.obj_map.push_back(x);
  r.embedding.hom_map.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) r.embedding.hom_map[a].push_back(b.identity(c.homs[a][z]));
  Json jt = Json::array();
  for (const auto& t : tup) jt.push_back(t);
  r.provenance = Json{{"kind", "matrix"}, {"tuples", jt}};
  return r;
}

CompletionResult cauchy_completion(const VCategoryPtr& cp, const Bounds& bd) {
  if (cp->base->cartesian()) {
    CompletionResult r = karoubi(cp, bd);
    r.provenance = Json{{"kind", "cauchy"}, {"stages", Json::array({r.provenance})}};
    return r;
  }
  CompletionResult mx = matrix_completion(cp, bd.search, bd);
  CompletionResult kr = karoubi(mx.completed, bd);
  CompletionResult r;
  r.completed = kr.completed;
  r.embedding = compose_vfunctors(kr.embedding, mx.embedding);
  r.provenance =
      Json{{"kind", "cauchy"}, {"stages", Json::array({mx.provenance, kr.provenance})}};
  return r;
}

Verdict is_equivalence(const VFunctor& f, const Bounds& bd) {
  const VCategory& s = *f.src;
  const VCategory& d = *f.dst;
  const Base& b = *d.base;
  for (int a = 0; a < s.n_obj; ++a)
    for (int z = 0; z < s.n_obj; ++z)
      if (!b.is_iso(f.hom_map[a][z]))
        return Verdict::no({{"reason", "hom map not invertible"}, {"pair", {a, z}}});
  try {
    for (int y = 0; y < d.n_obj; ++y) {
      bool found = false;
      for (int x = 0; x < s.n_obj && !found; ++x) {
        const int fx = f.obj_map[x];
        if (fx == y) {
          found = true;
          break;
        }
        for (const BaseMorphism& fwd : b.points(d.hom(fx, y), bd)) {
          for (const BaseMorphism& bwd : b.points(d.hom(y, fx), bd))
            if (pcomp(d, y, fx, y, fwd, bwd) == d.ident(y) &&
                pcomp(d, fx, y, fx, bwd, fwd) == d.ident(fx)) {
              found = true;
              break;
            }
          if (found) break;
        }
      }
      if (!found) return Verdict::no({{"reason", "object outside essential image"}, {"object", y}});
    }
  } catch (const ceiling_error&) {
    return Verdict::unknown(bd.max_hom_set);
  }
  return Verdict::yes({{"objects", d.n_obj}});
}

namespace {

struct ElShape {
  FinCategory shape;
  std::vector<std::pair<int, int>> els; // shape object -> (category object, element)
  std::vector<int> fun;                 // shape arrow -> indexing-category arrow
};

ElShape presheaf_elements(const FinCategory& cat, const OrdPresheaf& n) {
  ElShape s;
  for (int c = 0; c < cat.n_obj; ++c)
    for (int i = 0; i < n.size[c]; ++i) s.els.emplace_back(c, i);
  const int ne = static_cast<int>(s.els.size());
  s.shape.n_obj = ne;
  std::map<std::tuple<int, int, int>, int> lookup;
  for (int e = 0; e < ne; ++e)
    for (int e2 = 0; e2 < ne; ++e2) {
      const auto [c, i] = s.els[e];
      const auto [c2, i2] = s.els[e2];
      for (int g : cat.hom(c, c2))
        if (n.action[g][i2] == i) {
          lookup[{e, e2, g}] = s.shape.n_arr();
          s.shape.arrows.push_back({e, e2});
          s.fun.push_back(g);
        }
    }
  s.shape.id_arrow.assign(ne, -1);
  for (int e = 0; e < ne; ++e) {
    auto it = lookup.find({e, e, cat.id_arrow[s.els[e].first]});
    if (it == lookup.end())
      throw std::invalid_argument("presheaf_elements: identity action is not the identity");
    s.shape.id_arrow[e] = it->second;
  }
  const int na = s.shape.n_arr();
  s.shape.comp.assign(na, std::vector<int>(na, -1));
  for (int g2 = 0; g2 < na; ++g2)
    for (int g1 = 0; g1 < na; ++g1) {
      if (!s.shape.composable(g2, g1)) continue;
      const int cf = cat.compose(s.fun[g2], s.fun[g1]);
      auto it = lookup.find({s.shape.src(g1), s.shape.tgt(g2), cf});
      if (it == lookup.end())
        throw std::invalid_argument("presheaf_elements: element arrows are not closed");
      s.shape.comp[g2][g1] = it->second;
    }
  return s;
}

struct RealizeData {
  Weight w;
  ElShape s;
  std::vector<ColimResult> colims;
};

int block_of(const std::vector<int>& offset, int idx) {
  return static_cast<int>(std::upper_bound(offset.begin(), offset.end(), idx) - offset.begin()) - 1;
}

BaseMorphism realize_act_setlike(const VCategory& c, const ElShape& s,
                                 const std::vector<ColimResult>& colims, int x, int y) {
  const Base& b = *c.base;
  const SetColimPres& px = std::get<SetColimPres>(*colims[x].pres);
  const SetColimPres& py = std::get<SetColimPres>(*colims[y].pres);
  const int dxy = carrier_size(c.hom(x, y));
  const int ny = carrier_size(colims[y].apex);
  FuncData out;
  out.map.assign(static_cast<size_t>(dxy) * ny, 0);
  for (int g = 0; g < dxy; ++g)
    for (int z = 0; z < ny; ++z) {
      const int dz = py.rep[z];
      const int e = block_of(py.offset, dz);
      const int wloc = dz - py.offset[e];
      const int ce = s.els[e].first;
      const FuncData& cm = std::get<FuncData>(c.comp(x, y, ce).data);
      const int v = cm.map[wloc * dxy + g];
      out.map[static_cast<size_t>(g) * ny + z] = px.class_of[px.offset[e] + v];
    }
  return BaseMorphism{c.base, b.tensor(c.hom(x, y), colims[y].apex), colims[x].apex, out};
}

BaseMorphism realize_act_vec(const VCategory& c, const ElShape& s,
                             const std::vector<ColimResult>& colims, int x, int y) {
  const Base& b = *c.base;
  const VecColimPres& px = std::get<VecColimPres>(*colims[x].pres);
  const VecColimPres& py = std::get<VecColimPres>(*colims[y].pres);
  const int prime = px.q.p;
  const int dxy = carrier_size(c.hom(x, y));
  const int ne = static_cast<int>(s.els.size());
  std::vector<int> ydim(ne), xdim(ne), yoff(ne + 1, 0), xoff(ne + 1, 0), poff(ne + 1, 0);
  for (int e = 0; e < ne; ++e) {
    ydim[e] = carrier_size(c.hom(y, s.els[e].first));
    xdim[e] = carrier_size(c.hom(x, s.els[e].first));
    yoff[e + 1] = yoff[e] + ydim[e];
    xoff[e + 1] = xoff[e] + xdim[e];
    poff[e + 1] = poff[e] + dxy * ydim[e];
  }
  FpMat k1 = FpMat::kronecker(FpMat::ident(dxy, prime), py.s);
  FpMat perm(poff[ne], dxy * yoff[ne], prime);
  for (int e = 0; e < ne; ++e)
    for (int g = 0; g < dxy; ++g)
      for (int w = 0; w < ydim[e]; ++w)
        perm.at(poff[e] + g * ydim[e] + w, g * yoff[ne] + yoff[e] + w) = 1;
  FpMat blocks(xoff[ne], poff[ne], prime);
  for (int e = 0; e < ne; ++e) {
    const int ce = s.els[e].first;
    const FpMat& cm = std::get<FpMat>(c.comp(x, y, ce).data);
    const FpMat& br = std::get<FpMat>(b.braiding(c.hom(x, y), c.hom(y, ce)).data);
    FpMat phi = FpMat::mul(cm, br);
    for (int r = 0; r < phi.rows; ++r)
      for (int cc = 0; cc < phi.cols; ++cc)
        blocks.at(xoff[e] + r, poff[e] + cc) = phi.at(r, cc);
  }
  FpMat act = FpMat::mul(px.q, FpMat::mul(blocks, FpMat::mul(perm, k1)));
  return BaseMorphism{c.base, b.tensor(c.hom(x, y), colims[y].apex), colims[x].apex, act};
}

BaseMorphism realize_act_cat(const VCategory& c, const ElShape& s,
                             const std::vector<ColimResult>& colims, int x, int y) {
  const Base& b = *c.base;
  const FinCategory& cxy = std::get<FinCategory>(c.hom(x, y).data);
  const FinCategory& fx = std::get<FinCategory>(colims[x].apex.data);
  const FinCategory& fy = std::get<FinCategory>(colims[y].apex.data);
  const CatColimPres& py = std::get<CatColimPres>(*colims[y].pres);
  const int ne = static_cast<int>(s.els.size());
  std::vector<const FunctorData*> injx(ne);
  std::vector<const FunctorData*> cm(ne);
  std::vector<const FinCategory*> hy(ne);
  for (int e = 0; e < ne; ++e) {
    injx[e] = &std::get<FunctorData>(colims[x].injections[e].data);
    cm[e] = &std::get<FunctorData>(c.comp(x, y, s.els[e].first).data);
    hy[e] = &std::get<FinCategory>(c.hom(y, s.els[e].first).data);
  }
  const int cno = cxy.n_obj;
  const int cna = cxy.n_arr();
  auto img_obj = [&](int g, int z) {
    const auto [e, w] = py.obj_rep[z];
    return injx[e]->obj_map[cm[e]->obj_map[w * cno + g]];
  };
  auto img_arr = [&](int g, int zeta) {
    int acc = fx.id_arrow[img_obj(g, fy.src(zeta))];
    for (const auto& [e, aa] : py.arr_word[zeta]) {
      const int ta = cm[e]->arr_map[aa * cna + cxy.id_arrow[g]];
      acc = fx.compose(injx[e]->arr_map[ta], acc);
      if (acc < 0) throw std::logic_error("realize: action word does not compose");
    }
    return acc;
  };
  auto whisker = [&](int ga, int z) {
    const auto [e, w] = py.obj_rep[z];
    return injx[e]->arr_map[cm[e]->arr_map[hy[e]->id_arrow[w] * cna + ga]];
  };
  FunctorData fd;
  fd.obj_map.assign(static_cast<size_t>(cno) * fy.n_obj, 0);
  for (int g = 0; g < cno; ++g)
    for (int z = 0; z < fy.n_obj; ++z)
      fd.obj_map[static_cast<size_t>(g) * fy.n_obj + z] = img_obj(g, z);
  fd.arr_map.assign(static_cast<size_t>(cna) * fy.n_arr(), 0);
  for (int ga = 0; ga < cna; ++ga)
    for (int za = 0; za < fy.n_arr(); ++za) {
      const int u1 = img_arr(cxy.src(ga), za);
      const int u2 = whisker(ga, fy.tgt(za));
      const int r = fx.compose(u2, u1);
      if (r < 0) throw std::logic_error("realize: action square does not compose");
      fd.arr_map[static_cast<size_t>(ga) * fy.n_arr() + za] = r;
    }
  return BaseMorphism{c.base, b.tensor(c.hom(x, y), colims[y].apex), colims[x].apex, fd};
}

RealizeData realize_impl(const VCategoryPtr& cp, const UnderlyingCat& u, const OrdPresheaf& n,
                         const Bounds& bd) {
  const VCategory& c = *cp;
  const Base& b = *c.base;
  if (!(n.cat == u.cat))
    throw std::invalid_argument("realize_presheaf: presheaf is indexed by a different category");
  if (u.cat.n_obj != c.n_obj)
    throw std::invalid_argument("realize_presheaf: underlying data size mismatch");
  RealizeData rd;
  rd.s = presheaf_elements(u.cat, n);
  rd.w.cat = cp;
  for (int x = 0; x < c.n_obj; ++x) {
    BaseDiagram d;
    d.shape = rd.s.shape;
    for (const auto& el : rd.s.els) d.ob.push_back(c.hom(x, el.first));
    for (int a = 0; a < rd.s.shape.n_arr(); ++a) {
      const int ce = rd.s.els[rd.s.shape.src(a)].first;
      const int ce2 = rd.s.els[rd.s.shape.tgt(a)].first;
      d.ar.push_back(b.compose(c.comp(x, ce, ce2),
                               b.tensor_mor(u.arr_point[rd.s.fun[a]], b.identity(c.hom(x, ce)))));
    }
    rd.colims.push_back(b.finite_colimit(d, bd));
    rd.w.value.push_back(rd.colims.back().apex);
  }
  rd.w.act.assign(c.n_obj, {});
  for (int x = 0; x < c.n_obj; ++x)
    for (int y = 0; y < c.n_obj; ++y) {
      switch (b.tag()) {
        case Base::Tag::FinSet:
        case Base::Tag::FinGSet:
          rd.w.act[x].push_back(realize_act_setlike(c, rd.s, rd.colims, x, y));
          break;
        case Base::Tag::FinVec:
          rd.w.act[x].push_back(realize_act_vec(c, rd.s, rd.colims, x, y));
          break;
        case Base::Tag::FinCat:
          rd.w.act[x].push_back(realize_act_cat(c, rd.s, rd.colims, x, y));
          break;
      }
    }
  return rd;
}

}  // namespace

Weight realize_presheaf(const VCategoryPtr& c, const UnderlyingCat& u, const OrdPresheaf& n,
                        const Bounds& b) {
  return realize_impl(c, u, n, b).w;
}

Verdict counit_iso_check(const Weight& m, const Bounds& bd) {
  const VCategory& c = *m.cat;
  const Base& b = *c.base;
  try {
    UnderlyingCat u = underlying_category(c, bd);
    OrdPresheaf n = underlying_presheaf(m, u, bd);
    RealizeData rd = realize_impl(m.cat, u, n, bd);
    for (int x = 0; x < c.n_obj; ++x) {
      std::vector<BaseMorphism> legs;
      legs.reserve(rd.s.els.size());
      for (const auto& [dd, i] : rd.s.els)
        legs.push_back(
            b.compose(m.act[x][dd], b.tensor_mor(b.identity(c.hom(x, dd)), n.pt[dd][i])));
      BaseMorphism eps =
          legs.empty() ? b.from_initial(m.value[x]) : induce_colimit(rd.colims[x], legs);
      if (!b.is_iso(eps)) return Verdict::no({{"object", x}});
    }
    return Verdict::yes({{"elements", rd.s.els.size()}});
  } catch (const ceiling_error&) {
    return Verdict::unknown(bd.max_hom_set);
  }
}

}  // namespace enrichcat
