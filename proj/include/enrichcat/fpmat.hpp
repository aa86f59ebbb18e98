#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace enrichcat {

// Dense matrix over the prime field F_p. Entries are stored row-major and
// kept reduced mod p.
struct FpMat {
  int rows = 0;
  int cols = 0;
  int p = 2;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(int r, int c, int prime) : rows(r), cols(c), p(prime), a(size_t(r) * c, 0) {}

  uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

  bool operator==(const FpMat&) const = default;

  static FpMat ident(int n, int p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static FpMat mul(const FpMat& x, const FpMat& y) {
    if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("FpMat::mul shape mismatch");
    FpMat z(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (!x.at(i, k)) continue;
        for (int j = 0; j < y.cols; ++j)
          z.at(i, j) = uint8_t((z.at(i, j) + x.at(i, k) * y.at(k, j)) % x.p);
      }
    return z;
  }

  static FpMat add(const FpMat& x, const FpMat& y) {
    FpMat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = uint8_t((z.a[i] + y.a[i]) % z.p);
    return z;
  }

  static FpMat sub(const FpMat& x, const FpMat& y) {
    FpMat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = uint8_t((z.a[i] + (z.p - y.a[i])) % z.p);
    return z;
  }

  static FpMat kronecker(const FpMat& x, const FpMat& y) {
    FpMat z(x.rows * y.rows, x.cols * y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j)
        for (int k = 0; k < y.rows; ++k)
          for (int l = 0; l < y.cols; ++l)
            z.at(i * y.rows + k, j * y.cols + l) = uint8_t(x.at(i, j) * y.at(k, l) % x.p);
    return z;
  }

  bool is_zero() const {
    for (auto v : a)
      if (v) return false;
    return true;
  }

  // Reduced row echelon form in place; returns pivot column per rank row.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    auto inv = [this](int v) {
      for (int u = 1; u < p; ++u)
        if (u * v % p == 1) return u;
      throw std::logic_error("FpMat: not invertible mod p");
    };
    for (int c = 0; c < cols && r < rows; ++c) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (at(i, c)) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
      int iv = inv(at(r, c));
      for (int j = 0; j < cols; ++j) at(r, j) = uint8_t(at(r, j) * iv % p);
      for (int i = 0; i < rows; ++i) {
        if (i == r || !at(i, c)) continue;
        int f = at(i, c);
        for (int j = 0; j < cols; ++j) at(i, j) = uint8_t((at(i, j) + (p - f) * at(r, j)) % p);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    FpMat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the null space, one column per basis vector.
  FpMat kernel_basis() const {
    FpMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    FpMat k(cols, static_cast<int>(free_cols.size()), p);
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
      int fc = free_cols[j];
      k.at(fc, j) = 1;
      for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        k.at(pivots[i], j) = uint8_t((p - m.at(i, fc)) % p);
    }
    return k;
  }

  // Basis of the column space: the original columns at pivot positions.
  FpMat image_basis() const {
    FpMat m = *this;
    auto pivots = m.rref();
    FpMat b(rows, static_cast<int>(pivots.size()), p);
    for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
      for (int i = 0; i < rows; ++i) b.at(i, j) = at(i, pivots[j]);
    return b;
  }

  // Solve A X = B columnwise; nullopt when inconsistent.
  static std::optional<FpMat> solve(const FpMat& A, const FpMat& B) {
    if (A.rows != B.rows || A.p != B.p) throw std::invalid_argument("FpMat::solve shape mismatch");
    FpMat aug(A.rows, A.cols + B.cols, A.p);
    for (int i = 0; i < A.rows; ++i) {
      for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
      for (int j = 0; j < B.cols; ++j) aug.at(i, A.cols + j) = B.at(i, j);
    }
    auto pivots = aug.rref();
    FpMat x(A.cols, B.cols, A.p);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
      if (pivots[i] >= A.cols) return std::nullopt; // pivot in the B side: inconsistent
      for (int j = 0; j < B.cols; ++j) x.at(pivots[i], j) = aug.at(i, A.cols + j);
    }
    return x;
  }

  std::optional<FpMat> inverse() const {
    if (rows != cols) return std::nullopt;
    auto x = solve(*this, ident(rows, p));
    if (!x) return std::nullopt;
    if (!(mul(*this, *x) == ident(rows, p))) return std::nullopt;
    return x;
  }
};

}  // namespace enrichcat
