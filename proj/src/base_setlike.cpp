#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "enrichcat/base.hpp"
#include "uf.hpp"

namespace enrichcat {
namespace {

using detail::MinUF;

long long pow_checked(int base, int exp, long long ceiling) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > ceiling) throw ceiling_error("function space of size > " + std::to_string(ceiling));
  }
  return r;
}

// Functions X -> Y are coded little-endian: code = sum f(i) * |Y|^i.
std::vector<int> decode_func(long long code, int nx, int ny) {
  std::vector<int> f(nx);
  for (int i = 0; i < nx; ++i) {
    f[i] = static_cast<int>(code % ny);
    code /= ny;
  }
  return f;
}

long long encode_func(const std::vector<int>& f, int ny) {
  long long code = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) code = code * ny + f[i];
  return code;
}

int carrier_of(const BaseObject& x) {
  if (auto* s = std::get_if<SetCarrier>(&x.data)) return s->size;
  return std::get<GSetCarrier>(x.data).size;
}

// Pieces shared verbatim between the two cartesian table bases; `self` only
// supplies object construction.
struct TableOps {
  const Base& self;

  BaseMorphism mk(BaseObject src, BaseObject dst, std::vector<int> map) const {
    return {self.shared_from_this(), std::move(src), std::move(dst), FuncData{std::move(map)}};
  }

  BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const {
    int ny = carrier_of(g.src), nyd = carrier_of(g.dst);
    const auto& fm = std::get<FuncData>(f.data).map;
    const auto& gm = std::get<FuncData>(g.data).map;
    std::vector<int> h(fm.size() * gm.size());
    for (size_t i = 0; i < fm.size(); ++i)
      for (int j = 0; j < ny; ++j) h[i * ny + j] = fm[i] * nyd + gm[j];
    return mk(self.tensor(f.src, g.src), self.tensor(f.dst, g.dst), std::move(h));
  }

  BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const {
    if (!(f.dst == g.src)) throw std::invalid_argument("compose: endpoints do not match");
    const auto& fm = std::get<FuncData>(f.data).map;
    const auto& gm = std::get<FuncData>(g.data).map;
    std::vector<int> h(fm.size());
    for (size_t i = 0; i < fm.size(); ++i) h[i] = gm[fm[i]];
    return mk(f.src, g.dst, std::move(h));
  }

  BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const {
    int nx = carrier_of(x), ny = carrier_of(y);
    std::vector<int> h(size_t(nx) * ny);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) h[i * ny + j] = j * nx + i;
    return mk(self.tensor(x, y), self.tensor(y, x), std::move(h));
  }

  BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x, const BaseObject& y) const {
    int nx = carrier_of(x), ny = carrier_of(y), nz = carrier_of(f.dst);
    const auto& fm = std::get<FuncData>(f.data).map;
    if (static_cast<int>(fm.size()) != nx * ny)
      throw std::invalid_argument("transpose: domain is not the stated product");
    std::vector<int> h(nx);
    for (int i = 0; i < nx; ++i) {
      std::vector<int> slice(ny);
      for (int j = 0; j < ny; ++j) slice[j] = fm[i * ny + j];
      h[i] = static_cast<int>(encode_func(slice, nz));
    }
    return mk(x, self.hom(y, f.dst), std::move(h));
  }

  BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y, const BaseObject& z) const {
    int nx = carrier_of(g.src), ny = carrier_of(y), nz = carrier_of(z);
    const auto& gm = std::get<FuncData>(g.data).map;
    std::vector<int> h(size_t(nx) * ny);
    for (int i = 0; i < nx; ++i) {
      auto slice = decode_func(gm[i], ny, nz);
      for (int j = 0; j < ny; ++j) h[i * ny + j] = slice[j];
    }
    return mk(self.tensor(g.src, y), z, std::move(h));
  }

  bool is_iso(const BaseMorphism& f) const {
    if (carrier_of(f.src) != carrier_of(f.dst)) return false;
    const auto& fm = std::get<FuncData>(f.data).map;
    std::vector<char> hit(fm.size(), 0);
    for (int v : fm) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }

  BaseMorphism invert(const BaseMorphism& f) const {
    if (!is_iso(f)) throw std::invalid_argument("invert: not an isomorphism");
    const auto& fm = std::get<FuncData>(f.data).map;
    std::vector<int> h(fm.size());
    for (size_t i = 0; i < fm.size(); ++i) h[fm[i]] = static_cast<int>(i);
    return mk(f.dst, f.src, std::move(h));
  }

  // Limit tuples over all shape objects, coordinate 0 most significant.
  std::vector<std::vector<int>> limit_tuples(const BaseDiagram& d) const {
    int k = d.shape.n_obj;
    std::vector<int> sizes(k);
    long long total = 1;
    for (int a = 0; a < k; ++a) {
      sizes[a] = carrier_of(d.ob[a]);
      total *= std::max(sizes[a], 1);
      if (total > Bounds{}.max_object) throw ceiling_error("limit search space too large");
      if (sizes[a] == 0) total = 0;
    }
    std::vector<std::vector<int>> tuples;
    std::vector<int> tup(k, 0);
    for (long long it = 0; it < total; ++it) {
      bool ok = true;
      for (int f = 0; f < d.shape.n_arr() && ok; ++f) {
        if (d.shape.is_id(f)) continue;
        const auto& fm = std::get<FuncData>(d.ar[f].data).map;
        if (fm[tup[d.shape.src(f)]] != tup[d.shape.tgt(f)]) ok = false;
      }
      if (ok) tuples.push_back(tup);
      for (int a = k - 1; a >= 0; --a) {
        if (++tup[a] < sizes[a]) break;
        tup[a] = 0;
      }
    }
    return tuples;
  }

  struct Glued {
    std::vector<int> offset;
    std::vector<int> class_of;
    std::vector<int> rep;
  };

  Glued glue(const BaseDiagram& d) const {
    Glued g;
    g.offset.resize(d.shape.n_obj + 1, 0);
    for (int a = 0; a < d.shape.n_obj; ++a) g.offset[a + 1] = g.offset[a] + carrier_of(d.ob[a]);
    int total = g.offset.back();
    MinUF uf(total);
    for (int f = 0; f < d.shape.n_arr(); ++f) {
      if (d.shape.is_id(f)) continue;
      const auto& fm = std::get<FuncData>(d.ar[f].data).map;
      int so = g.offset[d.shape.src(f)], to = g.offset[d.shape.tgt(f)];
      for (size_t x = 0; x < fm.size(); ++x) uf.unite(so + static_cast<int>(x), to + fm[x]);
    }
    g.class_of.resize(total);
    for (int u = 0; u < total; ++u) {
      int r = uf.find(u);
      if (r == u) {
        g.rep.push_back(u);
        g.class_of[u] = static_cast<int>(g.rep.size()) - 1;
      }
    }
    for (int u = 0; u < total; ++u) g.class_of[u] = g.class_of[uf.find(u)];
    return g;
  }
};

class FinSetBase final : public Base {
 public:
  FinSetBase() : Base(Tag::FinSet) {}

  std::string name() const override { return "FinSet"; }
  Json descriptor() const override { return {{"tag", "finset"}}; }

  BaseObject unit() const override { return {shared_from_this(), SetCarrier{1}}; }
  std::vector<BaseObject> generator() const override { return {unit()}; }

  void validate_object(const BaseObject& x) const override {
    auto* s = std::get_if<SetCarrier>(&x.data);
    if (!s) throw std::invalid_argument("FinSet object must carry a set");
    if (s->size < 0) throw std::invalid_argument("negative carrier size");
  }

  void validate_morphism(const BaseMorphism& f) const override {
    validate_object(f.src);
    validate_object(f.dst);
    auto* d = std::get_if<FuncData>(&f.data);
    if (!d) throw std::invalid_argument("FinSet morphism must carry a function table");
    if (static_cast<int>(d->map.size()) != carrier_of(f.src))
      throw std::invalid_argument("function table size differs from domain");
    for (int v : d->map)
      if (v < 0 || v >= carrier_of(f.dst))
        throw std::invalid_argument("function value outside codomain");
  }

  BaseObject tensor(const BaseObject& x, const BaseObject& y) const override {
    return {shared_from_this(), SetCarrier{carrier_of(x) * carrier_of(y)}};
  }

  BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const override {
    return ops().tensor_mor(f, g);
  }

  BaseObject hom(const BaseObject& x, const BaseObject& y) const override {
    long long n = pow_checked(carrier_of(y), carrier_of(x), Bounds{}.max_object);
    return {shared_from_this(), SetCarrier{static_cast<int>(n)}};
  }

  std::vector<BaseMorphism> hom_set(const BaseObject& x, const BaseObject& y,
                                    const Bounds& b) const override {
    int nx = carrier_of(x), ny = carrier_of(y);
    long long total = pow_checked(ny, nx, b.max_hom_set);
    std::vector<BaseMorphism> out;
    out.reserve(static_cast<size_t>(total));
    for (long long code = 0; code < total; ++code)
      out.push_back(ops().mk(x, y, decode_func(code, nx, ny)));
    return out;
  }

  BaseMorphism identity(const BaseObject& x) const override {
    std::vector<int> m(carrier_of(x));
    std::iota(m.begin(), m.end(), 0);
    return ops().mk(x, x, std::move(m));
  }

  BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const override {
    return ops().compose(g, f);
  }

  BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const override {
    return ops().braiding(x, y);
  }

  BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x,
                         const BaseObject& y) const override {
    return ops().transpose(f, x, y);
  }

  BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y,
                           const BaseObject& z) const override {
    return ops().untranspose(g, y, z);
  }

  LimitResult finite_limit(const BaseDiagram& d) const override {
    auto tuples = ops().limit_tuples(d);
    LimitResult r;
    r.apex = {shared_from_this(), SetCarrier{static_cast<int>(tuples.size())}};
    for (int a = 0; a < d.shape.n_obj; ++a) {
      std::vector<int> m(tuples.size());
      for (size_t t = 0; t < tuples.size(); ++t) m[t] = tuples[t][a];
      r.projections.push_back(ops().mk(r.apex, d.ob[a], std::move(m)));
    }
    r.pres = std::make_shared<const LimPres>(SetLimPres{std::move(tuples)});
    return r;
  }

  ColimResult finite_colimit(const BaseDiagram& d, const Bounds&) const override {
    auto g = ops().glue(d);
    ColimResult r;
    r.apex = {shared_from_this(), SetCarrier{static_cast<int>(g.rep.size())}};
    for (int a = 0; a < d.shape.n_obj; ++a) {
      std::vector<int> m(carrier_of(d.ob[a]));
      for (size_t x = 0; x < m.size(); ++x) m[x] = g.class_of[g.offset[a] + x];
      r.injections.push_back(ops().mk(d.ob[a], r.apex, std::move(m)));
    }
    r.pres = std::make_shared<const ColimPres>(
        SetColimPres{std::move(g.offset), std::move(g.class_of), std::move(g.rep)});
    return r;
  }

  Splitting split_idempotent(const BaseMorphism& e) const override {
    const auto& em = std::get<FuncData>(e.data).map;
    std::vector<int> fixed, back(em.size(), -1);
    for (size_t x = 0; x < em.size(); ++x)
      if (em[x] == static_cast<int>(x)) {
        back[x] = static_cast<int>(fixed.size());
        fixed.push_back(static_cast<int>(x));
      }
    Splitting s;
    s.object = {shared_from_this(), SetCarrier{static_cast<int>(fixed.size())}};
    std::vector<int> proj(em.size());
    for (size_t x = 0; x < em.size(); ++x) proj[x] = back[em[x]];
    s.incl = ops().mk(s.object, e.src, fixed);
    s.proj = ops().mk(e.src, s.object, std::move(proj));
    return s;
  }

  bool is_iso(const BaseMorphism& f) const override { return ops().is_iso(f); }
  BaseMorphism invert(const BaseMorphism& f) const override { return ops().invert(f); }

 private:
  TableOps ops() const { return TableOps{*this}; }
};

class GSetBase final : public Base {
 public:
  explicit GSetBase(Group g) : Base(Tag::FinGSet), g_(std::move(g)) {
    if (auto e = validate_group(g_); !e.empty())
      throw std::invalid_argument("bad group: " + e);
  }

  std::string name() const override { return "FinGSet"; }
  Json descriptor() const override { return {{"tag", "fingset"}, {"group", g_.mult}}; }
  const Group& group() const { return g_; }

  BaseObject unit() const override {
    GSetCarrier c;
    c.size = 1;
    c.act.assign(g_.size(), {0});
    return {shared_from_this(), c};
  }

  std::vector<BaseObject> generator() const override {
    // The regular action by left translation.
    GSetCarrier c;
    c.size = g_.size();
    c.act = g_.mult;
    return {{shared_from_this(), c}};
  }

  void validate_object(const BaseObject& x) const override {
    auto* c = std::get_if<GSetCarrier>(&x.data);
    if (!c) throw std::invalid_argument("FinGSet object must carry an action");
    if (c->size < 0) throw std::invalid_argument("negative carrier size");
    if (static_cast<int>(c->act.size()) != g_.size())
      throw std::invalid_argument("action table has wrong group size");
    for (const auto& row : c->act) {
      if (static_cast<int>(row.size()) != c->size)
        throw std::invalid_argument("action row has wrong carrier size");
      std::vector<char> hit(c->size, 0);
      for (int v : row) {
        if (v < 0 || v >= c->size || hit[v])
          throw std::invalid_argument("action row is not a permutation");
        hit[v] = 1;
      }
    }
    for (int x0 = 0; x0 < c->size; ++x0)
      if (c->act[0][x0] != x0) throw std::invalid_argument("identity does not act trivially");
    for (int a = 0; a < g_.size(); ++a)
      for (int b = 0; b < g_.size(); ++b)
        for (int x0 = 0; x0 < c->size; ++x0)
          if (c->act[g_.mult[a][b]][x0] != c->act[a][c->act[b][x0]])
            throw std::invalid_argument("action is not multiplicative");
  }

  void validate_morphism(const BaseMorphism& f) const override {
    validate_object(f.src);
    validate_object(f.dst);
    auto* d = std::get_if<FuncData>(&f.data);
    if (!d) throw std::invalid_argument("FinGSet morphism must carry a function table");
    const auto& sx = std::get<GSetCarrier>(f.src.data);
    const auto& sy = std::get<GSetCarrier>(f.dst.data);
    if (static_cast<int>(d->map.size()) != sx.size)
      throw std::invalid_argument("function table size differs from domain");
    for (int v : d->map)
      if (v < 0 || v >= sy.size) throw std::invalid_argument("function value outside codomain");
    for (int g = 0; g < g_.size(); ++g)
      for (int x = 0; x < sx.size; ++x)
        if (d->map[sx.act[g][x]] != sy.act[g][d->map[x]])
          throw std::invalid_argument("map is not equivariant");
  }

  BaseObject tensor(const BaseObject& x, const BaseObject& y) const override {
    const auto& cx = std::get<GSetCarrier>(x.data);
    const auto& cy = std::get<GSetCarrier>(y.data);
    GSetCarrier c;
    c.size = cx.size * cy.size;
    c.act.assign(g_.size(), std::vector<int>(c.size));
    for (int g = 0; g < g_.size(); ++g)
      for (int i = 0; i < cx.size; ++i)
        for (int j = 0; j < cy.size; ++j)
          c.act[g][i * cy.size + j] = cx.act[g][i] * cy.size + cy.act[g][j];
    return {shared_from_this(), c};
  }

  BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const override {
    return ops().tensor_mor(f, g);
  }

  BaseObject hom(const BaseObject& x, const BaseObject& y) const override {
    const auto& cx = std::get<GSetCarrier>(x.data);
    const auto& cy = std::get<GSetCarrier>(y.data);
    long long n = pow_checked(cy.size, cx.size, Bounds{}.max_object);
    GSetCarrier c;
    c.size = static_cast<int>(n);
    c.act.assign(g_.size(), std::vector<int>(c.size));
    for (int g = 0; g < g_.size(); ++g) {
      int gi = g_.inverse(g);
      for (long long code = 0; code < n; ++code) {
        auto f = decode_func(code, cx.size, cy.size);
        std::vector<int> h(cx.size);
        for (int x0 = 0; x0 < cx.size; ++x0) h[x0] = cy.act[g][f[cx.act[gi][x0]]];
        c.act[g][code] = static_cast<int>(encode_func(h, cy.size));
      }
    }
    return {shared_from_this(), c};
  }

  std::vector<BaseMorphism> hom_set(const BaseObject& x, const BaseObject& y,
                                    const Bounds& b) const override {
    const auto& cx = std::get<GSetCarrier>(x.data);
    const auto& cy = std::get<GSetCarrier>(y.data);
    // Orbit representatives of the domain, smallest element first.
    std::vector<int> orbit_of(cx.size, -1), reps, transporter(cx.size, -1);
    for (int x0 = 0; x0 < cx.size; ++x0) {
      if (orbit_of[x0] >= 0) continue;
      int r = static_cast<int>(reps.size());
      reps.push_back(x0);
      for (int g = 0; g < g_.size(); ++g) {
        int y0 = cx.act[g][x0];
        if (orbit_of[y0] < 0) {
          orbit_of[y0] = r;
          transporter[y0] = g;
        }
      }
    }
    // Valid images per representative: points whose stabilizer contains the
    // representative's stabilizer.
    std::vector<std::vector<int>> choices(reps.size());
    long long total = 1;
    for (size_t r = 0; r < reps.size(); ++r) {
      for (int y0 = 0; y0 < cy.size; ++y0) {
        bool ok = true;
        for (int g = 0; g < g_.size() && ok; ++g)
          if (cx.act[g][reps[r]] == reps[r] && cy.act[g][y0] != y0) ok = false;
        if (ok) choices[r].push_back(y0);
      }
      total *= std::max<size_t>(choices[r].size(), 1);
      if (choices[r].empty()) total = 0;
      if (total > b.max_hom_set) throw ceiling_error("equivariant map search too large");
    }
    std::vector<std::vector<int>> tables;
    std::vector<size_t> pick(reps.size(), 0);
    for (long long it = 0; it < total; ++it) {
      std::vector<int> f(cx.size);
      for (int x0 = 0; x0 < cx.size; ++x0)
        f[x0] = cy.act[transporter[x0] < 0 ? 0 : transporter[x0]]
                      [choices[orbit_of[x0]][pick[orbit_of[x0]]]];
      tables.push_back(std::move(f));
      for (int r = static_cast<int>(reps.size()) - 1; r >= 0; --r) {
        if (++pick[r] < choices[r].size()) break;
        pick[r] = 0;
      }
    }
    std::sort(tables.begin(), tables.end());
    std::vector<BaseMorphism> out;
    out.reserve(tables.size());
    for (auto& t : tables) out.push_back(ops().mk(x, y, std::move(t)));
    return out;
  }

  BaseMorphism identity(const BaseObject& x) const override {
    std::vector<int> m(carrier_of(x));
    std::iota(m.begin(), m.end(), 0);
    return ops().mk(x, x, std::move(m));
  }

  BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const override {
    return ops().compose(g, f);
  }

  BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const override {
    return ops().braiding(x, y);
  }

  BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x,
                         const BaseObject& y) const override {
    return ops().transpose(f, x, y);
  }

  BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y,
                           const BaseObject& z) const override {
    return ops().untranspose(g, y, z);
  }

  LimitResult finite_limit(const BaseDiagram& d) const override {
    auto tuples = ops().limit_tuples(d);
    GSetCarrier c;
    c.size = static_cast<int>(tuples.size());
    c.act.assign(g_.size(), std::vector<int>(c.size));
    for (int g = 0; g < g_.size(); ++g)
      for (size_t t = 0; t < tuples.size(); ++t) {
        std::vector<int> img(tuples[t].size());
        for (size_t a = 0; a < img.size(); ++a)
          img[a] = std::get<GSetCarrier>(d.ob[a].data).act[g][tuples[t][a]];
        auto it = std::find(tuples.begin(), tuples.end(), img);
        if (it == tuples.end()) throw std::logic_error("limit tuples not closed under action");
        c.act[g][t] = static_cast<int>(it - tuples.begin());
      }
    LimitResult r;
    r.apex = {shared_from_this(), c};
    for (int a = 0; a < d.shape.n_obj; ++a) {
      std::vector<int> m(tuples.size());
      for (size_t t = 0; t < tuples.size(); ++t) m[t] = tuples[t][a];
      r.projections.push_back(ops().mk(r.apex, d.ob[a], std::move(m)));
    }
    r.pres = std::make_shared<const LimPres>(SetLimPres{std::move(tuples)});
    return r;
  }

  ColimResult finite_colimit(const BaseDiagram& d, const Bounds&) const override {
    auto gl = ops().glue(d);
    GSetCarrier c;
    c.size = static_cast<int>(gl.rep.size());
    c.act.assign(g_.size(), std::vector<int>(c.size));
    for (int g = 0; g < g_.size(); ++g)
      for (int cls = 0; cls < c.size; ++cls) {
        int u = gl.rep[cls];
        int blk = 0;
        while (u >= gl.offset[blk + 1]) ++blk;
        int moved = std::get<GSetCarrier>(d.ob[blk].data).act[g][u - gl.offset[blk]];
        c.act[g][cls] = gl.class_of[gl.offset[blk] + moved];
      }
    ColimResult r;
    r.apex = {shared_from_this(), c};
    for (int a = 0; a < d.shape.n_obj; ++a) {
      std::vector<int> m(carrier_of(d.ob[a]));
      for (size_t x = 0; x < m.size(); ++x) m[x] = gl.class_of[gl.offset[a] + x];
      r.injections.push_back(ops().mk(d.ob[a], r.apex, std::move(m)));
    }
    r.pres = std::make_shared<const ColimPres>(
        SetColimPres{std::move(gl.offset), std::move(gl.class_of), std::move(gl.rep)});
    return r;
  }

  Splitting split_idempotent(const BaseMorphism& e) const override {
    const auto& em = std::get<FuncData>(e.data).map;
    const auto& amb = std::get<GSetCarrier>(e.src.data);
    std::vector<int> fixed, back(em.size(), -1);
    for (size_t x = 0; x < em.size(); ++x)
      if (em[x] == static_cast<int>(x)) {
        back[x] = static_cast<int>(fixed.size());
        fixed.push_back(static_cast<int>(x));
      }
    GSetCarrier c;
    c.size = static_cast<int>(fixed.size());
    c.act.assign(g_.size(), std::vector<int>(c.size));
    for (int g = 0; g < g_.size(); ++g)
      for (int i = 0; i < c.size; ++i) c.act[g][i] = back[amb.act[g][fixed[i]]];
    Splitting s;
    s.object = {shared_from_this(), c};
    std::vector<int> proj(em.size());
    for (size_t x = 0; x < em.size(); ++x) proj[x] = back[em[x]];
    s.incl = ops().mk(s.object, e.src, fixed);
    s.proj = ops().mk(e.src, s.object, std::move(proj));
    return s;
  }

  bool is_iso(const BaseMorphism& f) const override { return ops().is_iso(f); }
  BaseMorphism invert(const BaseMorphism& f) const override { return ops().invert(f); }

 private:
  TableOps ops() const { return TableOps{*this}; }
  Group g_;
};

}  // namespace

BasePtr finset_base() {
  static BasePtr b = std::make_shared<FinSetBase>();
  return b;
}

BasePtr fingset_base(Group g) { return std::make_shared<GSetBase>(std::move(g)); }

const Group& group_of(const Base& b) {
  auto* g = dynamic_cast<const GSetBase*>(&b);
  if (!g) throw std::invalid_argument("group_of: not a FinGSet base");
  return g->group();
}

}  // namespace enrichcat
