#include <stdexcept>

#include "enrichcat/base.hpp"

namespace enrichcat {
namespace {

// Prime fields only; keeps inverses table-free and rref exact.
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class FinVecBase final : public Base {
 public:
  explicit FinVecBase(int p) : Base(Tag::FinVec), p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("FinVec modulus must be prime");
  }

  std::string name() const override { return "FinVec"; }
  Json descriptor() const override { return {{"tag", "finvec"}, {"p", p_}}; }
  int prime() const { return p_; }

  BaseObject unit() const override { return {shared_from_this(), VecCarrier{1}}; }
  std::vector<BaseObject> generator() const override { return {unit()}; }

  void validate_object(const BaseObject& x) const override {
    auto* v = std::get_if<VecCarrier>(&x.data);
    if (!v) throw std::invalid_argument("FinVec object must carry a dimension");
    if (v->dim < 0) throw std::invalid_argument("negative dimension");
  }

  void validate_morphism(const BaseMorphism& f) const override {
    validate_object(f.src);
    validate_object(f.dst);
    auto* m = std::get_if<FpMat>(&f.data);
    if (!m) throw std::invalid_argument("FinVec morphism must carry a matrix");
    if (m->p != p_) throw std::invalid_argument("matrix modulus mismatch");
    if (m->rows != dim(f.dst) || m->cols != dim(f.src))
      throw std::invalid_argument("matrix shape does not match endpoints");
    for (uint8_t v : m->a)
      if (v >= p_) throw std::invalid_argument("matrix entry not reduced mod p");
  }

  BaseObject tensor(const BaseObject& x, const BaseObject& y) const override {
    return {shared_from_this(), VecCarrier{dim(x) * dim(y)}};
  }

  BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const override {
    return mk(tensor(f.src, g.src), tensor(f.dst, g.dst),
              FpMat::kronecker(std::get<FpMat>(f.data), std::get<FpMat>(g.data)));
  }

  // [Y,Z] has basis indexed (k over Z major, j over Y minor).
  BaseObject hom(const BaseObject& y, const BaseObject& z) const override {
    return {shared_from_this(), VecCarrier{dim(z) * dim(y)}};
  }

  std::vector<BaseMorphism> hom_set(const BaseObject& x, const BaseObject& y,
                                    const Bounds& b) const override {
    int rows = dim(y), cols = dim(x);
    long long total = 1;
    for (int i = 0; i < rows * cols; ++i) {
      total *= p_;
      if (total > b.max_hom_set) throw ceiling_error("matrix space too large to enumerate");
    }
    std::vector<BaseMorphism> out;
    out.reserve(static_cast<size_t>(total));
    for (long long code = 0; code < total; ++code) {
      FpMat m(rows, cols, p_);
      long long c = code;
      for (size_t i = 0; i < m.a.size(); ++i) {
        m.a[i] = static_cast<uint8_t>(c % p_);
        c /= p_;
      }
      out.push_back(mk(x, y, std::move(m)));
    }
    return out;
  }

  BaseMorphism identity(const BaseObject& x) const override {
    return mk(x, x, FpMat::ident(dim(x), p_));
  }

  BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const override {
    if (!(f.dst == g.src)) throw std::invalid_argument("compose: endpoints do not match");
    return mk(f.src, g.dst, FpMat::mul(std::get<FpMat>(g.data), std::get<FpMat>(f.data)));
  }

  BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const override {
    int nx = dim(x), ny = dim(y);
    FpMat m(nx * ny, nx * ny, p_);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) m.at(j * nx + i, i * ny + j) = 1;
    return mk(tensor(x, y), tensor(y, x), std::move(m));
  }

  BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x,
                         const BaseObject& y) const override {
    const FpMat& fm = std::get<FpMat>(f.data);
    int nx = dim(x), ny = dim(y), nz = fm.rows;
    if (fm.cols != nx * ny)
      throw std::invalid_argument("transpose: domain is not the stated product");
    FpMat g(nz * ny, nx, p_);
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) g.at(k * ny + j, i) = fm.at(k, i * ny + j);
    return mk(x, hom(y, f.dst), std::move(g));
  }

  BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y,
                           const BaseObject& z) const override {
    const FpMat& gm = std::get<FpMat>(g.data);
    int nx = gm.cols, ny = dim(y), nz = dim(z);
    FpMat f(nz, nx * ny, p_);
    for (int k = 0; k < nz; ++k)
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) f.at(k, i * ny + j) = gm.at(k * ny + j, i);
    return mk(tensor(g.src, y), z, std::move(f));
  }

  LimitResult finite_limit(const BaseDiagram& d) const override {
    std::vector<int> offset{0};
    for (const auto& o : d.ob) offset.push_back(offset.back() + dim(o));
    int total = offset.back();
    int n_constraints = 0;
    for (int f = 0; f < d.shape.n_arr(); ++f)
      if (!d.shape.is_id(f)) n_constraints += dim(d.ar[f].dst);
    FpMat k(n_constraints, total, p_);
    int row = 0;
    for (int f = 0; f < d.shape.n_arr(); ++f) {
      if (d.shape.is_id(f)) continue;
      const FpMat& fm = std::get<FpMat>(d.ar[f].data);
      int so = offset[d.shape.src(f)], to = offset[d.shape.tgt(f)];
      for (int i = 0; i < fm.rows; ++i) {
        for (int j = 0; j < fm.cols; ++j)
          k.at(row + i, so + j) = static_cast<uint8_t>((k.at(row + i, so + j) + fm.at(i, j)) % p_);
        k.at(row + i, to + i) = static_cast<uint8_t>((k.at(row + i, to + i) + p_ - 1) % p_);
      }
      row += fm.rows;
    }
    FpMat incl = k.kernel_basis();
    LimitResult r;
    r.apex = {shared_from_this(), VecCarrier{incl.cols}};
    for (size_t a = 0; a < d.ob.size(); ++a) {
      FpMat pr(dim(d.ob[a]), incl.cols, p_);
      for (int i = 0; i < pr.rows; ++i)
        for (int j = 0; j < pr.cols; ++j) pr.at(i, j) = incl.at(offset[a] + i, j);
      r.projections.push_back(mk(r.apex, d.ob[a], std::move(pr)));
    }
    r.pres = std::make_shared<const LimPres>(VecLimPres{std::move(incl)});
    return r;
  }

  ColimResult finite_colimit(const BaseDiagram& d, const Bounds&) const override {
    std::vector<int> offset{0};
    for (const auto& o : d.ob) offset.push_back(offset.back() + dim(o));
    int total = offset.back();
    std::vector<std::vector<uint8_t>> rel_cols;
    for (int f = 0; f < d.shape.n_arr(); ++f) {
      if (d.shape.is_id(f)) continue;
      const FpMat& fm = std::get<FpMat>(d.ar[f].data);
      int so = offset[d.shape.src(f)], to = offset[d.shape.tgt(f)];
      for (int i = 0; i < fm.cols; ++i) {
        std::vector<uint8_t> col(total, 0);
        for (int r2 = 0; r2 < fm.rows; ++r2) col[to + r2] = fm.at(r2, i);
        col[so + i] = static_cast<uint8_t>((col[so + i] + p_ - 1) % p_);
        rel_cols.push_back(std::move(col));
      }
    }
    FpMat rel(total, static_cast<int>(rel_cols.size()), p_);
    for (int c = 0; c < rel.cols; ++c)
      for (int r2 = 0; r2 < total; ++r2) rel.at(r2, c) = rel_cols[c][r2];
    // Quotient by the column space: unit vectors at non-pivot coordinates
    // descend to a basis.
    FpMat relt(rel.cols, rel.rows, p_);
    for (int i = 0; i < rel.rows; ++i)
      for (int j = 0; j < rel.cols; ++j) relt.at(j, i) = rel.at(i, j);
    auto pivots = relt.rref();
    std::vector<char> is_piv(total, 0);
    for (int pc : pivots) is_piv[pc] = 1;
    std::vector<int> nonpiv;
    for (int j = 0; j < total; ++j)
      if (!is_piv[j]) nonpiv.push_back(j);
    int kdim = static_cast<int>(nonpiv.size());
    FpMat q(kdim, total, p_), s(total, kdim, p_);
    for (int j = 0; j < kdim; ++j) {
      q.at(j, nonpiv[j]) = 1;
      s.at(nonpiv[j], j) = 1;
    }
    for (size_t i = 0; i < pivots.size(); ++i)
      for (int j = 0; j < kdim; ++j)
        q.at(j, pivots[i]) = static_cast<uint8_t>((p_ - relt.at(static_cast<int>(i), nonpiv[j])) % p_);
    ColimResult r;
    r.apex = {shared_from_this(), VecCarrier{kdim}};
    for (size_t a = 0; a < d.ob.size(); ++a) {
      FpMat inj(kdim, dim(d.ob[a]), p_);
      for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < inj.cols; ++j) inj.at(i, j) = q.at(i, offset[a] + j);
      r.injections.push_back(mk(d.ob[a], r.apex, std::move(inj)));
    }
    r.pres = std::make_shared<const ColimPres>(VecColimPres{std::move(q), std::move(s)});
    return r;
  }

  Splitting split_idempotent(const BaseMorphism& e) const override {
    const FpMat& em = std::get<FpMat>(e.data);
    FpMat b = em.image_basis();
    auto proj = FpMat::solve(b, em);
    if (!proj) throw std::logic_error("idempotent image does not factor");
    Splitting s;
    s.object = {shared_from_this(), VecCarrier{b.cols}};
    s.incl = mk(s.object, e.src, std::move(b));
    s.proj = mk(e.src, s.object, std::move(*proj));
    return s;
  }

  bool is_iso(const BaseMorphism& f) const override {
    const FpMat& m = std::get<FpMat>(f.data);
    return m.rows == m.cols && m.rank() == m.rows;
  }

  BaseMorphism invert(const BaseMorphism& f) const override {
    auto inv = std::get<FpMat>(f.data).inverse();
    if (!inv) throw std::invalid_argument("invert: not an isomorphism");
    return mk(f.dst, f.src, std::move(*inv));
  }

 private:
  int dim(const BaseObject& x) const { return std::get<VecCarrier>(x.data).dim; }

  BaseMorphism mk(BaseObject src, BaseObject dst, FpMat m) const {
    return {shared_from_this(), std::move(src), std::move(dst), std::move(m)};
  }

  int p_;
};

}  // namespace

BasePtr finvec_base(int p) { return std::make_shared<FinVecBase>(p); }

int prime_of(const Base& b) {
  auto* v = dynamic_cast<const FinVecBase*>(&b);
  if (!v) throw std::invalid_argument("prime_of: not a FinVec base");
  return v->prime();
}

}  // namespace enrichcat
