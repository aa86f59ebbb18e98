#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "cat_colimit.hpp"
#include "enrichcat/base.hpp"

namespace enrichcat {
namespace {

std::vector<FunctorData> enumerate_functors(const FinCategory& c, const FinCategory& d,
                                            long long cap) {
  std::vector<FunctorData> out;
  std::vector<int> obj(c.n_obj, -1), arr(c.n_arr(), -1);

  std::function<void(int)> pick_arr = [&](int a) {
    if (a == c.n_arr()) {
      out.push_back({obj, arr});
      if (static_cast<long long>(out.size()) > cap)
        throw ceiling_error("functor enumeration exceeded the bound");
      return;
    }
    if (c.is_id(a)) {
      // Identities are forced; locate the object this identity belongs to.
      int o = static_cast<int>(std::find(c.id_arrow.begin(), c.id_arrow.end(), a) -
                               c.id_arrow.begin());
      arr[a] = d.id_arrow[obj[o]];
      for (int b = 0; b < a; ++b) {
        if (c.composable(a, b) && arr[c.comp[a][b]] >= 0 &&
            d.comp[arr[a]][arr[b]] != arr[c.comp[a][b]])
          return void(arr[a] = -1);
        if (c.composable(b, a) && arr[c.comp[b][a]] >= 0 &&
            d.comp[arr[b]][arr[a]] != arr[c.comp[b][a]])
          return void(arr[a] = -1);
      }
      pick_arr(a + 1);
      arr[a] = -1;
      return;
    }
    for (int im = 0; im < d.n_arr(); ++im) {
      if (d.src(im) != obj[c.src(a)] || d.tgt(im) != obj[c.tgt(a)]) continue;
      arr[a] = im;
      bool ok = true;
      for (int b = 0; b <= a && ok; ++b) {
        if (arr[b] < 0) continue;
        if (c.composable(a, b)) {
          int h = c.comp[a][b];
          if (arr[h] >= 0 && d.comp[arr[a]][arr[b]] != arr[h]) ok = false;
        }
        if (ok && c.composable(b, a)) {
          int h = c.comp[b][a];
          if (arr[h] >= 0 && d.comp[arr[b]][arr[a]] != arr[h]) ok = false;
        }
      }
      if (ok) pick_arr(a + 1);
      arr[a] = -1;
    }
  };

  std::function<void(int)> pick_obj = [&](int o) {
    if (o == c.n_obj) {
      if (c.n_obj > 0 && d.n_obj == 0) return;
      pick_arr(0);
      return;
    }
    for (int im = 0; im < d.n_obj; ++im) {
      obj[o] = im;
      pick_obj(o + 1);
    }
    obj[o] = -1;
  };
  pick_obj(0);
  return out;
}

std::vector<std::vector<int>> enumerate_nats(const FinCategory& c, const FinCategory& d,
                                             const FunctorData& f, const FunctorData& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> comp(c.n_obj, -1);
  std::function<void(int)> pick = [&](int o) {
    if (o == c.n_obj) {
      out.push_back(comp);
      return;
    }
    for (int m = 0; m < d.n_arr(); ++m) {
      if (d.src(m) != f.obj_map[o] || d.tgt(m) != g.obj_map[o]) continue;
      comp[o] = m;
      bool ok = true;
      for (int a = 0; a < c.n_arr() && ok; ++a) {
        int x = c.src(a), y = c.tgt(a);
        if (comp[x] < 0 || comp[y] < 0) continue;
        if (d.comp[comp[y]][f.arr_map[a]] != d.comp[g.arr_map[a]][comp[x]]) ok = false;
      }
      if (ok) pick(o + 1);
      comp[o] = -1;
    }
  };
  pick(0);
  return out;
}

struct HomCat {
  FinCategory cat;
  std::vector<FunctorData> functors;
  struct Nat {
    int src_f, dst_f;
    std::vector<int> comp;
  };
  std::vector<Nat> nats;
  std::map<std::tuple<int, int, std::vector<int>>, int> nat_index;

  int functor_index(const FunctorData& f) const {
    auto it = std::find(functors.begin(), functors.end(), f);
    if (it == functors.end()) throw std::logic_error("functor not in enumeration");
    return static_cast<int>(it - functors.begin());
  }
};

HomCat build_hom_cat(const FinCategory& y, const FinCategory& z, long long cap) {
  HomCat h;
  h.functors = enumerate_functors(y, z, cap);
  int n = static_cast<int>(h.functors.size());
  for (int fi = 0; fi < n; ++fi)
    for (int gi = 0; gi < n; ++gi)
      for (auto& comp : enumerate_nats(y, z, h.functors[fi], h.functors[gi])) {
        h.nat_index[{fi, gi, comp}] = static_cast<int>(h.nats.size());
        h.nats.push_back({fi, gi, std::move(comp)});
        if (static_cast<long long>(h.nats.size()) > cap)
          throw ceiling_error("transformation enumeration exceeded the bound");
      }
  h.cat.n_obj = n;
  for (auto& nt : h.nats) h.cat.arrows.push_back({nt.src_f, nt.dst_f});
  h.cat.id_arrow.resize(n);
  for (int fi = 0; fi < n; ++fi) {
    std::vector<int> idc(y.n_obj);
    for (int o = 0; o < y.n_obj; ++o) idc[o] = z.id_arrow[h.functors[fi].obj_map[o]];
    h.cat.id_arrow[fi] = h.nat_index.at({fi, fi, idc});
  }
  int m = h.cat.n_arr();
  h.cat.comp.assign(m, std::vector<int>(m, -1));
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      if (h.nats[a].dst_f != h.nats[b].src_f) continue;
      std::vector<int> cc(y.n_obj);
      for (int o = 0; o < y.n_obj; ++o) cc[o] = z.comp[h.nats[b].comp[o]][h.nats[a].comp[o]];
      h.cat.comp[b][a] = h.nat_index.at({h.nats[a].src_f, h.nats[b].dst_f, cc});
    }
  return h;
}

class FinCatBase final : public Base {
 public:
  FinCatBase() : Base(Tag::FinCat) {}

  std::string name() const override { return "FinCat"; }
  Json descriptor() const override { return {{"tag", "fincat"}}; }

  BaseObject unit() const override { return {shared_from_this(), terminal_category()}; }
  std::vector<BaseObject> generator() const override {
    return {{shared_from_this(), walking_arrow()}};
  }

  void validate_object(const BaseObject& x) const override {
    auto* c = std::get_if<FinCategory>(&x.data);
    if (!c) throw std::invalid_argument("FinCat object must carry a category");
    if (auto e = validate_fincategory(*c); !e.empty()) throw std::invalid_argument(e);
  }

  void validate_morphism(const BaseMorphism& f) const override {
    validate_object(f.src);
    validate_object(f.dst);
    auto* d = std::get_if<FunctorData>(&f.data);
    if (!d) throw std::invalid_argument("FinCat morphism must carry a functor");
    OrdFunctor t{cat(f.src), cat(f.dst), d->obj_map, d->arr_map};
    if (auto e = validate_ordfunctor(t); !e.empty()) throw std::invalid_argument(e);
  }

  BaseObject tensor(const BaseObject& x, const BaseObject& y) const override {
    return {shared_from_this(), product_category(cat(x), cat(y))};
  }

  BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const override {
    const FinCategory& bd = cat(g.dst);
    const auto& fd = std::get<FunctorData>(f.data);
    const auto& gd = std::get<FunctorData>(g.data);
    const FinCategory& bs = cat(g.src);
    FunctorData h;
    for (size_t x = 0; x < fd.obj_map.size(); ++x)
      for (int y = 0; y < bs.n_obj; ++y)
        h.obj_map.push_back(fd.obj_map[x] * bd.n_obj + gd.obj_map[y]);
    for (size_t u = 0; u < fd.arr_map.size(); ++u)
      for (int v = 0; v < bs.n_arr(); ++v)
        h.arr_map.push_back(fd.arr_map[u] * bd.n_arr() + gd.arr_map[v]);
    return {shared_from_this(), tensor(f.src, g.src), tensor(f.dst, g.dst), std::move(h)};
  }

  BaseObject hom(const BaseObject& x, const BaseObject& y) const override {
    return {shared_from_this(), build_hom_cat(cat(x), cat(y), Bounds{}.max_object).cat};
  }

  std::vector<BaseMorphism> hom_set(const BaseObject& x, const BaseObject& y,
                                    const Bounds& b) const override {
    std::vector<BaseMorphism> out;
    for (auto& f : enumerate_functors(cat(x), cat(y), b.max_hom_set))
      out.push_back({shared_from_this(), x, y, std::move(f)});
    return out;
  }

  BaseMorphism identity(const BaseObject& x) const override {
    const FinCategory& c = cat(x);
    FunctorData f;
    f.obj_map.resize(c.n_obj);
    f.arr_map.resize(c.n_arr());
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.arr_map.begin(), f.arr_map.end(), 0);
    return {shared_from_this(), x, x, std::move(f)};
  }

  BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const override {
    if (!(f.dst == g.src)) throw std::invalid_argument("compose: endpoints do not match");
    const auto& fd = std::get<FunctorData>(f.data);
    const auto& gd = std::get<FunctorData>(g.data);
    FunctorData h;
    for (int x : fd.obj_map) h.obj_map.push_back(gd.obj_map[x]);
    for (int a : fd.arr_map) h.arr_map.push_back(gd.arr_map[a]);
    return {shared_from_this(), f.src, g.dst, std::move(h)};
  }

  BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const override {
    const FinCategory& cx = cat(x);
    const FinCategory& cy = cat(y);
    FunctorData h;
    h.obj_map.resize(size_t(cx.n_obj) * cy.n_obj);
    h.arr_map.resize(size_t(cx.n_arr()) * cy.n_arr());
    for (int i = 0; i < cx.n_obj; ++i)
      for (int j = 0; j < cy.n_obj; ++j) h.obj_map[i * cy.n_obj + j] = j * cx.n_obj + i;
    for (int a = 0; a < cx.n_arr(); ++a)
      for (int c = 0; c < cy.n_arr(); ++c) h.arr_map[a * cy.n_arr() + c] = c * cx.n_arr() + a;
    return {shared_from_this(), tensor(x, y), tensor(y, x), std::move(h)};
  }

  BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x,
                         const BaseObject& y) const override {
    const FinCategory& cx = cat(x);
    const FinCategory& cy = cat(y);
    const FinCategory& cz = cat(f.dst);
    const auto& fd = std::get<FunctorData>(f.data);
    HomCat h = build_hom_cat(cy, cz, Bounds{}.max_object);
    FunctorData g;
    for (int i = 0; i < cx.n_obj; ++i) {
      FunctorData slice;
      for (int yo = 0; yo < cy.n_obj; ++yo) slice.obj_map.push_back(fd.obj_map[i * cy.n_obj + yo]);
      for (int a = 0; a < cy.n_arr(); ++a)
        slice.arr_map.push_back(fd.arr_map[cx.id_arrow[i] * cy.n_arr() + a]);
      g.obj_map.push_back(h.functor_index(slice));
    }
    for (int u = 0; u < cx.n_arr(); ++u) {
      std::vector<int> comp;
      for (int yo = 0; yo < cy.n_obj; ++yo)
        comp.push_back(fd.arr_map[u * cy.n_arr() + cy.id_arrow[yo]]);
      g.arr_map.push_back(h.nat_index.at({g.obj_map[cx.src(u)], g.obj_map[cx.tgt(u)], comp}));
    }
    BaseObject homxy{shared_from_this(), h.cat};
    return {shared_from_this(), x, std::move(homxy), std::move(g)};
  }

  BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y,
                           const BaseObject& z) const override {
    const FinCategory& cx = cat(g.src);
    const FinCategory& cy = cat(y);
    const FinCategory& cz = cat(z);
    const auto& gd = std::get<FunctorData>(g.data);
    HomCat h = build_hom_cat(cy, cz, Bounds{}.max_object);
    FunctorData f;
    f.obj_map.resize(size_t(cx.n_obj) * cy.n_obj);
    f.arr_map.resize(size_t(cx.n_arr()) * cy.n_arr());
    for (int i = 0; i < cx.n_obj; ++i)
      for (int yo = 0; yo < cy.n_obj; ++yo)
        f.obj_map[i * cy.n_obj + yo] = h.functors[gd.obj_map[i]].obj_map[yo];
    for (int u = 0; u < cx.n_arr(); ++u)
      for (int a = 0; a < cy.n_arr(); ++a) {
        const auto& nt = h.nats[gd.arr_map[u]];
        const auto& g2 = h.functors[h.nats[gd.arr_map[u]].dst_f];
        f.arr_map[u * cy.n_arr() + a] = cz.comp[g2.arr_map[a]][nt.comp[cy.src(a)]];
      }
    return {shared_from_this(), tensor(g.src, y), z, std::move(f)};
  }

  LimitResult finite_limit(const BaseDiagram& d) const override {
    int k = d.shape.n_obj;
    std::vector<const FinCategory*> cs;
    for (auto& o : d.ob) cs.push_back(&cat(o));
    auto tuples = [&](bool objects) {
      std::vector<std::vector<int>> out;
      std::vector<int> sizes(k);
      long long total = 1;
      for (int a = 0; a < k; ++a) {
        sizes[a] = objects ? cs[a]->n_obj : cs[a]->n_arr();
        total *= std::max(sizes[a], 1);
        if (sizes[a] == 0) total = 0;
        if (total > Bounds{}.max_object) throw ceiling_error("limit search space too large");
      }
      std::vector<int> tup(k, 0);
      for (long long it = 0; it < total; ++it) {
        bool ok = true;
        for (int f = 0; f < d.shape.n_arr() && ok; ++f) {
          if (d.shape.is_id(f)) continue;
          const auto& fm = std::get<FunctorData>(d.ar[f].data);
          const auto& m = objects ? fm.obj_map : fm.arr_map;
          if (m[tup[d.shape.src(f)]] != tup[d.shape.tgt(f)]) ok = false;
        }
        if (ok) out.push_back(tup);
        for (int a = k - 1; a >= 0; --a) {
          if (++tup[a] < sizes[a]) break;
          tup[a] = 0;
        }
      }
      return out;
    };
    auto obj_tuples = tuples(true);
    auto arr_tuples = tuples(false);
    auto obj_at = [&](const std::vector<int>& t) {
      auto it = std::find(obj_tuples.begin(), obj_tuples.end(), t);
      if (it == obj_tuples.end()) throw std::logic_error("limit tuple endpoint escaped");
      return static_cast<int>(it - obj_tuples.begin());
    };
    FinCategory apex;
    apex.n_obj = static_cast<int>(obj_tuples.size());
    for (auto& t : arr_tuples) {
      std::vector<int> s(k), t2(k);
      for (int a = 0; a < k; ++a) {
        s[a] = cs[a]->src(t[a]);
        t2[a] = cs[a]->tgt(t[a]);
      }
      apex.arrows.push_back({obj_at(s), obj_at(t2)});
    }
    apex.id_arrow.resize(apex.n_obj);
    auto arr_at = [&](const std::vector<int>& t) {
      auto it = std::find(arr_tuples.begin(), arr_tuples.end(), t);
      if (it == arr_tuples.end()) throw std::logic_error("limit tuple arrow escaped");
      return static_cast<int>(it - arr_tuples.begin());
    };
    for (int o = 0; o < apex.n_obj; ++o) {
      std::vector<int> idt(k);
      for (int a = 0; a < k; ++a) idt[a] = cs[a]->id_arrow[obj_tuples[o][a]];
      apex.id_arrow[o] = arr_at(idt);
    }
    int m = apex.n_arr();
    apex.comp.assign(m, std::vector<int>(m, -1));
    for (int b2 = 0; b2 < m; ++b2)
      for (int a2 = 0; a2 < m; ++a2) {
        if (apex.tgt(a2) != apex.src(b2)) continue;
        std::vector<int> ct(k);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
          int c = cs[a]->comp[arr_tuples[b2][a]][arr_tuples[a2][a]];
          if (c < 0) ok = false;
          else ct[a] = c;
        }
        if (ok) apex.comp[b2][a2] = arr_at(ct);
      }
    LimitResult r;
    r.apex = {shared_from_this(), apex};
    for (int a = 0; a < k; ++a) {
      FunctorData pr;
      for (auto& t : obj_tuples) pr.obj_map.push_back(t[a]);
      for (auto& t : arr_tuples) pr.arr_map.push_back(t[a]);
      r.projections.push_back({shared_from_this(), r.apex, d.ob[a], std::move(pr)});
    }
    r.pres = std::make_shared<const LimPres>(CatLimPres{std::move(obj_tuples), std::move(arr_tuples)});
    return r;
  }

  ColimResult finite_colimit(const BaseDiagram& d, const Bounds& b) const override {
    std::vector<FinCategory> blocks;
    std::vector<FunctorData> maps;
    for (auto& o : d.ob) blocks.push_back(cat(o));
    for (auto& a : d.ar) maps.push_back(std::get<FunctorData>(a.data));
    auto res = detail::cat_colimit(blocks, d.shape, maps, b);
    ColimResult r;
    r.apex = {shared_from_this(), res.apex};
    for (int j = 0; j < d.shape.n_obj; ++j)
      r.injections.push_back({shared_from_this(), d.ob[j], r.apex, std::move(res.inj[j])});
    r.pres = std::make_shared<const ColimPres>(std::move(res.pres));
    return r;
  }

  Splitting split_idempotent(const BaseMorphism& e) const override {
    const FinCategory& c = cat(e.src);
    const auto& ed = std::get<FunctorData>(e.data);
    std::vector<int> fob, far, bob(c.n_obj, -1), bar(c.n_arr(), -1);
    for (int o = 0; o < c.n_obj; ++o)
      if (ed.obj_map[o] == o) {
        bob[o] = static_cast<int>(fob.size());
        fob.push_back(o);
      }
    for (int a = 0; a < c.n_arr(); ++a)
      if (ed.arr_map[a] == a) {
        bar[a] = static_cast<int>(far.size());
        far.push_back(a);
      }
    FinCategory sc;
    sc.n_obj = static_cast<int>(fob.size());
    for (int a : far) sc.arrows.push_back({bob[c.src(a)], bob[c.tgt(a)]});
    sc.id_arrow.resize(sc.n_obj);
    for (int i = 0; i < sc.n_obj; ++i) sc.id_arrow[i] = bar[c.id_arrow[fob[i]]];
    sc.comp.assign(far.size(), std::vector<int>(far.size(), -1));
    for (size_t b2 = 0; b2 < far.size(); ++b2)
      for (size_t a2 = 0; a2 < far.size(); ++a2) {
        int cc = c.composable(far[b2], far[a2]) ? c.comp[far[b2]][far[a2]] : -1;
        if (cc >= 0) sc.comp[b2][a2] = bar[cc];
      }
    Splitting s;
    s.object = {shared_from_this(), sc};
    FunctorData incl{fob, far}, proj;
    for (int o = 0; o < c.n_obj; ++o) proj.obj_map.push_back(bob[ed.obj_map[o]]);
    for (int a = 0; a < c.n_arr(); ++a) proj.arr_map.push_back(bar[ed.arr_map[a]]);
    s.incl = {shared_from_this(), s.object, e.src, std::move(incl)};
    s.proj = {shared_from_this(), e.src, s.object, std::move(proj)};
    return s;
  }

  bool is_iso(const BaseMorphism& f) const override {
    const auto& fd = std::get<FunctorData>(f.data);
    auto bij = [](const std::vector<int>& m, int n) {
      if (static_cast<int>(m.size()) != n) return false;
      std::vector<char> hit(n, 0);
      for (int v : m) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
      }
      return true;
    };
    return bij(fd.obj_map, cat(f.dst).n_obj) && bij(fd.arr_map, cat(f.dst).n_arr());
  }

  BaseMorphism invert(const BaseMorphism& f) const override {
    if (!is_iso(f)) throw std::invalid_argument("invert: not an isomorphism");
    const auto& fd = std::get<FunctorData>(f.data);
    FunctorData h;
    h.obj_map.resize(fd.obj_map.size());
    h.arr_map.resize(fd.arr_map.size());
    for (size_t x = 0; x < fd.obj_map.size(); ++x) h.obj_map[fd.obj_map[x]] = static_cast<int>(x);
    for (size_t a = 0; a < fd.arr_map.size(); ++a) h.arr_map[fd.arr_map[a]] = static_cast<int>(a);
    return {shared_from_this(), f.dst, f.src, std::move(h)};
  }

 private:
  static const FinCategory& cat(const BaseObject& x) { return std::get<FinCategory>(x.data); }
};

}  // namespace

BasePtr fincat_base() {
  static BasePtr b = std::make_shared<FinCatBase>();
  return b;
}

}  // namespace enrichcat
