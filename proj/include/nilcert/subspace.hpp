#pragma once

// Gauss–Jordan elimination and canonical subspaces of ℚⁿ.
//
// A Subspace stores the reduced row-echelon form of any spanning set, with
// zero rows dropped. Two Subspace values describe the same set exactly when
// their stored data are identical, so equality is plain data equality.

#include <cstddef>
#include <utility>
#include <vector>

#include "nilcert/error.hpp"
#include "nilcert/matrix.hpp"

namespace nilcert {

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RrefResult out;
  std::size_t lead = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    support.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (m(lead, k) != 0) {
        m(lead, k) *= inv;
        support.push_back(k);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k : support) m(r, k) -= factor * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Inverse of a square matrix; throws DomainError when singular.
inline Matrix inverse(const Matrix& m) {
  m.require_square("inverse");
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw DomainError("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }

  static Subspace full(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

  /// Row space of `rows` (any matrix whose rows span the subspace).
  static Subspace row_space(const Matrix& rows) {
    RrefResult r = rref(rows);
    Matrix basis(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t c = 0; c < rows.cols(); ++c) basis(i, c) = r.matrix(i, c);
    return Subspace(rows.cols(), std::move(basis));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    return row_space(Matrix::from_rows(ambient, vectors));
  }

  /// Column space of a matrix.
  static Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t c = 0;
      while (basis_(i, c) == 0) ++c;
      out.push_back(c);
    }
    return out;
  }

  /// Coordinates not used as pivots; their unit vectors span a complement.
  std::vector<std::size_t> free_coordinates() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots()) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_pivot[c]) out.push_back(c);
    return out;
  }

  /// Coefficients of `v` in the stored basis, or throws if v is not a member.
  Vector coordinates(const Vector& v) const {
    require_ambient(v.size());
    const auto piv = pivots();
    Vector coeffs(dim());
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      coeffs[i] = v[piv[i]];
      if (coeffs[i] == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c) rest[c] -= coeffs[i] * basis_(i, c);
    }
    if (!nilcert::is_zero(rest)) throw DomainError("coordinates: vector is not in the subspace");
    return coeffs;
  }

  bool contains(const Vector& v) const {
    require_ambient(v.size());
    const auto piv = pivots();
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rational coeff = rest[piv[i]];
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c) rest[c] -= coeff * basis_(i, c);
    }
    return nilcert::is_zero(rest);
  }

  bool contains(const Subspace& other) const {
    require_ambient(other.ambient_);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void require_ambient(std::size_t n) const {
    if (n != ambient_) throw DimensionError("ambient dimension mismatch");
  }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// {x : m·x = 0}.
inline Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(n);
    x[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.matrix(i, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  a.require_ambient(b.ambient_dim());
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

/// Intersection via the kernel of [Aᵀ | −Bᵀ]: each kernel vector (α, β)
/// gives the common element Σ αᵢ aᵢ.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  a.require_ambient(b.ambient_dim());
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  const Matrix stacked = hstack(a.basis().transpose(), Rational(-1) * b.basis().transpose());
  const Subspace k = kernel_basis(stacked);
  std::vector<Vector> common;
  for (const Vector& coeffs : k.basis_vectors()) {
    Vector v = zero_vector(a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (coeffs[i] != 0) v = v + coeffs[i] * a.basis().row(i);
    common.push_back(std::move(v));
  }
  return Subspace::span(a.ambient_dim(), common);
}

inline bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

/// True when a ∩ b = 0 and a + b = `whole`.
inline bool is_direct_sum(const Subspace& a, const Subspace& b, const Subspace& whole) {
  return subspace_intersect(a, b).is_zero() && subspace_sum(a, b) == whole;
}

/// Vectors y with y·s = 0 for every s in the subspace, returned as a subspace.
inline Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel_basis(s.basis());
}

/// Image of a subspace under a linear map.
inline Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("image: shape mismatch");
  std::vector<Vector> out;
  for (const Vector& v : s.basis_vectors()) out.push_back(m * v);
  return Subspace::span(m.rows(), out);
}

}  // namespace nilcert
