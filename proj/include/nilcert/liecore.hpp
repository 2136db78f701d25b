#pragma once

// Finite-dimensional Lie algebras over ℚ given by structure constants.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/qlinalg.hpp"

namespace nilcert {

class LieAlgebra {
 public:
  /// One prescribed bracket [b_i, b_j] = value; [b_j, b_i] is completed.
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
  };

  LieAlgebra() = default;

  /// Pairs not listed bracket to zero. Throws on out-of-range indices, a
  /// nonzero [b_i, b_i], or two listings of a pair that disagree.
  LieAlgebra(std::size_t dim, std::vector<std::string> labels, const std::vector<Bracket>& brackets)
      : dim_(dim), labels_(std::move(labels)), sc_(dim * dim, zero_vector(dim)) {
    if (labels_.empty()) {
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i + 1));
    }
    if (labels_.size() != dim) throw DimensionError("label count differs from dimension");
    std::vector<bool> seen(dim * dim, false);
    for (const auto& b : brackets) {
      if (b.i >= dim || b.j >= dim) throw DimensionError("bracket index out of range");
      if (b.value.size() != dim) throw DimensionError("bracket value has wrong length");
      if (b.i == b.j) {
        if (!nilcert::is_zero(b.value)) throw DomainError("[x, x] must be zero for " + labels_[b.i]);
        continue;
      }
      const Vector neg = -b.value;
      for (auto [idx, val] : {std::pair{b.i * dim + b.j, &b.value}, std::pair{b.j * dim + b.i, &neg}}) {
        if (seen[idx] && sc_[idx] != *val) {
          throw DomainError("inconsistent brackets given for (" + labels_[b.i] + ", " + labels_[b.j] + ")");
        }
        sc_[idx] = *val;
        seen[idx] = true;
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Coordinates of [b_i, b_j].
  const Vector& structure(std::size_t i, std::size_t j) const { return sc_.at(i * dim_ + j); }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: element has wrong length");
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Vector& s = sc_[i * dim_ + j];
        const Rational c = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (s[k] != 0) out[k] += c * s[k];
      }
    }
    return out;
  }

  /// Every nonzero [b_i, b_j] with i < j.
  std::vector<Bracket> nonzero_brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!nilcert::is_zero(structure(i, j))) out.push_back({i, j, structure(i, j)});
    return out;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.sc_ == b.sc_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> sc_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector value;  // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
};

/// All basis triples i < j < k on which the Jacobi identity fails.
inline std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L) {
  std::vector<JacobiViolation> out;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector bi = L.basis_vector(i), bj = L.basis_vector(j), bk = L.basis_vector(k);
        Vector s = L.bracket(bi, L.structure(j, k)) + L.bracket(bj, L.structure(k, i)) +
                   L.bracket(bk, L.structure(i, j));
        if (!is_zero(s)) out.push_back({i, j, k, std::move(s)});
      }
    }
  }
  return out;
}

/// Throws DomainError naming the first violating triple.
inline void require_jacobi(const LieAlgebra& L) {
  const auto bad = check_jacobi(L);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw DomainError("Jacobi identity fails on (" + L.label(v.i) + ", " + L.label(v.j) + ", " +
                      L.label(v.k) + ") and " + std::to_string(bad.size() - 1) + " other triple(s)");
  }
}

inline Subspace bracket_subspace(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  a.require_ambient(L.dim());
  b.require_ambient(L.dim());
  std::vector<Vector> out;
  for (const Vector& x : a.basis_vectors())
    for (const Vector& y : b.basis_vectors()) out.push_back(L.bracket(x, y));
  return Subspace::span(L.dim(), out);
}

inline Subspace derived_algebra(const LieAlgebra& L) {
  const Subspace all = Subspace::full(L.dim());
  return bracket_subspace(L, all, all);
}

/// 𝒢₀ = L, 𝒢ᵢ₊₁ = [L, 𝒢ᵢ], ending at the first zero term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace all = Subspace::full(L.dim());
  std::vector<Subspace> series{all};
  for (std::size_t step = 0; step <= L.dim() && !series.back().is_zero(); ++step) {
    Subspace next = bracket_subspace(L, all, series.back());
    if (next == series.back()) {
      throw DomainError("lower central series stabilises at dimension " + std::to_string(next.dim()) +
                        ": algebra is not nilpotent");
    }
    series.push_back(std::move(next));
  }
  return series;
}

inline std::vector<std::size_t> lcs_dims(const LieAlgebra& L) {
  std::vector<std::size_t> dims;
  for (const auto& s : lower_central_series(L)) dims.push_back(s.dim());
  return dims;
}

/// Smallest k with 𝒢ₖ = 0.
inline std::size_t nilpotency_class(const LieAlgebra& L) { return lower_central_series(L).size() - 1; }

/// Matrix of y ↦ [x, y].
inline Matrix ad_matrix(const LieAlgebra& L, const Vector& x) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.bracket(x, L.basis_vector(j)));
  return Matrix::from_columns(L.dim(), cols);
}

/// {x : [x, L] = 0}: kernel of the stacked maps x ↦ [x, b_j].
inline Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = L.structure(i, j)[k];
  return kernel_basis(stacked);
}

inline LieAlgebra abelian_algebra(std::size_t n) { return LieAlgebra(n, {}, {}); }

/// Heisenberg algebra of dimension 2m+1: [x_i, y_i] = z.
inline LieAlgebra heisenberg_algebra(std::size_t m = 1) {
  const std::size_t n = 2 * m + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t i = 0; i < m; ++i) brackets.push_back({i, m + i, unit_vector(n, n - 1)});
  return LieAlgebra(n, std::move(labels), brackets);
}

}  // namespace nilcert
