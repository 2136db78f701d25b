#pragma once

// Derivation algebras, stabilizer algebras inside gl(V), automorphism and
// unipotence tests, shear spaces, and the eigenvalue/eigenline tools used to
// certify statements about automorphisms of 𝒢 and 𝒩.
//
// A derivation or endomorphism of an n-dimensional algebra is an n×n matrix
// (column m = image of b_m); derivation spaces are subspaces of ℚ^{n²} in
// the row-major flattening of matrix.hpp.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/liecore.hpp"
#include "nilcert/models.hpp"
#include "nilcert/qlinalg.hpp"
#include "nilcert/wedgerep.hpp"

namespace nilcert {

/// Matrices of a subspace of flattened n×n matrices.
inline std::vector<Matrix> unflatten_basis(std::size_t n, const Subspace& s) {
  std::vector<Matrix> out;
  for (const auto& v : s.basis_vectors()) out.push_back(Matrix::unflatten(n, v));
  return out;
}

inline Subspace span_of_matrices(std::size_t n, const std::vector<Matrix>& ms) {
  std::vector<Vector> flat;
  for (const auto& m : ms) flat.push_back(m.flatten());
  return Subspace::span(n * n, flat);
}

struct DerivationSpace {
  LieAlgebra algebra;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  std::vector<Matrix> matrices() const { return unflatten_basis(algebra.dim(), space); }
  bool contains(const Matrix& d) const { return space.contains(d.flatten()); }
};

namespace detail {

/// Rows of D[b_i,b_j] − [Db_i,b_j] − [b_i,Db_j] = 0 over all i < j, one row
/// per output coordinate k.
inline Matrix leibniz_system(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix sys(n * n * (n - (n ? 1 : 0)) / 2, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& bij = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m)
          if (bij[m] != 0) sys(row, k * n + m) += bij[m];
        for (std::size_t r = 0; r < n; ++r) {
          const Rational& a = L.structure(r, j)[k];
          if (a != 0) sys(row, r * n + i) -= a;
          const Rational& b = L.structure(i, r)[k];
          if (b != 0) sys(row, r * n + j) -= b;
        }
      }
    }
  }
  return sys;
}

/// Rows forcing every column of D into C: y·D(b_m) = 0 for y in C's annihilator.
inline Matrix image_constraint(std::size_t n, const Subspace& C) {
  const auto ys = annihilator(C).basis_vectors();
  Matrix sys(ys.size() * n, n * n);
  std::size_t row = 0;
  for (const auto& y : ys)
    for (std::size_t m = 0; m < n; ++m, ++row)
      for (std::size_t k = 0; k < n; ++k)
        if (y[k] != 0) sys(row, k * n + m) = y[k];
  return sys;
}

}  // namespace detail

/// All derivations, as the kernel of one Leibniz system.
inline DerivationSpace derivation_algebra(const LieAlgebra& L) {
  if (L.dim() == 0) return {L, Subspace::zero(0)};
  return {L, kernel_basis(detail::leibniz_system(L))};
}

inline bool is_derivation(const LieAlgebra& L, const Matrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("is_derivation: shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * L.structure(i, j);
      const Vector rhs = L.bracket(d.column(i), L.basis_vector(j)) + L.bracket(L.basis_vector(i), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

/// All D with D(L) ⊆ C.
inline Subspace shear_space(const LieAlgebra& L, const Subspace& C) {
  C.require_ambient(L.dim());
  const std::size_t n = L.dim();
  return kernel_basis(vstack(detail::leibniz_system(L), detail::image_constraint(n, C)));
}

struct StabilizerAlgebra {
  std::size_t n = 0;  // acts on ℚⁿ
  Subspace space;     // inside ℚ^{n²}

  std::size_t dim() const noexcept { return space.dim(); }
  std::vector<Matrix> matrices() const { return unflatten_basis(n, space); }
  bool contains(const Matrix& x) const { return space.contains(x.flatten()); }
};

/// {x ∈ gl(V) : induced_algebra_action(x)·W ⊆ W} for W ⊆ ∧²V.
inline StabilizerAlgebra stabilizer_algebra(const Subspace& W) {
  const std::size_t n = WedgeBasis::for_wedge_dim(W.ambient_dim()).n();
  const auto ws = W.basis_vectors();
  const auto ys = annihilator(W).basis_vectors();
  Matrix sys(ws.size() * ys.size(), n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Matrix e(n, n);
      e(r, c) = 1;
      const Matrix a = induced_algebra_action(e);
      std::size_t row = 0;
      for (const auto& w : ws) {
        const Vector aw = a * w;
        for (const auto& y : ys) {
          Rational dot = 0;
          for (std::size_t k = 0; k < aw.size(); ++k)
            if (aw[k] != 0 && y[k] != 0) dot += y[k] * aw[k];
          sys(row++, r * n + c) = dot;
        }
      }
    }
  }
  return {n, kernel_basis(sys)};
}

/// Endomorphism of V ⊕ V′ acting as x on V and as its induced factor on V′.
inline Matrix lift_to_two_step(const Matrix& x, const Quotient& vprime) {
  return block_diagonal(x, vprime.action(induced_algebra_action(x)));
}

/// Factor of an endomorphism on L/[L,L], in the basis of classes of the
/// coordinates not used as pivots of [L,L].
inline Matrix factor_on_abelianization(const LieAlgebra& L, const Matrix& d) {
  return Quotient::canonical(derived_algebra(L)).action(d);
}

inline bool is_automorphism(const LieAlgebra& L, const Matrix& t) {
  const std::size_t n = L.dim();
  if (t.rows() != n || t.cols() != n) throw DimensionError("is_automorphism: shape");
  if (rank(t) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t * L.structure(i, j) != L.bracket(t.column(i), t.column(j))) return false;
  return true;
}

/// Σ mᵏ/k! for nilpotent m.
inline Matrix exp_nilpotent(const Matrix& m) {
  if (!is_nilpotent(m)) throw DomainError("exp_nilpotent: matrix is not nilpotent");
  Matrix out = Matrix::identity(m.rows());
  Matrix term = out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    term = Rational(1, k) * (term * m);
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

/// For a ℚ-diagonalizable derivation D with spectrum in (1/q)ℤ, the map
/// acting by base^{qλ} on the λ-eigenspace. Eigenspaces of a derivation grade
/// the algebra, so this is an automorphism.
inline Matrix torus_automorphism(const Matrix& d, const Rational& base) {
  d.require_square("torus_automorphism");
  const std::size_t n = d.rows();
  const auto roots = rational_roots(char_poly(d));
  Integer q = 1;
  for (const auto& [lambda, mult] : roots) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), lambda.get_den_mpz_t());
  std::vector<Vector> cols;
  std::vector<Rational> scale;
  for (const auto& [lambda, mult] : roots) {
    const Rational e = lambda * q;
    const long exponent = e.get_num().get_si();
    Rational s = 1;
    for (long k = 0; k < std::labs(exponent); ++k) s *= base;
    if (exponent < 0) s = 1 / s;
    for (const auto& v : eigenspace(d, lambda).basis_vectors()) {
      cols.push_back(v);
      scale.push_back(s);
    }
  }
  if (cols.size() != n) throw DomainError("torus_automorphism: matrix is not diagonalizable over Q");
  const Matrix p = Matrix::from_columns(n, cols);
  return p * Matrix::diagonal(scale) * inverse(p);
}

/// One-based index pairs (i, j) carrying nonzero coordinates in any of `vs`.
inline std::vector<std::pair<std::size_t, std::size_t>> wedge_support_pairs(const std::vector<Vector>& vs) {
  if (vs.empty()) return {};
  const WedgeBasis basis = WedgeBasis::for_wedge_dim(vs.front().size());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& v : vs)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) pairs.emplace(basis.pair(k).first + 1, basis.pair(k).second + 1);
  return {pairs.begin(), pairs.end()};
}

/// Kernel of the exponent system lᵢ + lⱼ = 0 over the given one-based pairs.
inline Subspace eigen_relation_kernel(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t n) {
  Matrix sys(pairs.size(), n);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    sys(r, pairs[r].first - 1) += 1;
    sys(r, pairs[r].second - 1) += 1;
  }
  return kernel_basis(sys);
}

/// The system built from the pairs that occur in W's generators.
inline Subspace eigen_relation_kernel() {
  return eigen_relation_kernel(wedge_support_pairs(models::W_generators()), models::kVDim);
}

inline Subspace fixed_space(const Matrix& g) { return eigenspace(g, 1); }

/// {(a, b, c) : (a·G₀ + b·G₁ + c·G₂)p ∧ p = 0}, in generator coordinates.
inline Subspace infinitesimal_line_stabilizer(const Vector& p, const GeneratorSet& gens) {
  if (p.size() != gens.dim()) throw DimensionError("infinitesimal_line_stabilizer: length");
  if (is_zero(p)) throw DomainError("infinitesimal_line_stabilizer: p must be nonzero");
  std::vector<Vector> cols;
  for (const auto& g : gens.matrices()) cols.push_back(wedge_vector(g * p, p));
  return kernel_basis(Matrix::from_columns(WedgeBasis(p.size()).size(), cols));
}

/// True when g maps the line through p to itself.
inline bool line_fixed_by(const Vector& p, const Matrix& g) {
  if (is_zero(p)) throw DomainError("line_fixed_by: p must be nonzero");
  return is_zero(wedge_vector(g * p, p));
}

/// Largest dimension of a real eigenspace. Throws DomainError when some
/// real eigenvalue is irrational.
inline std::size_t max_eigenspace_dim(const Matrix& m) {
  m.require_square("max_eigenspace_dim");
  const Polynomial cp = char_poly(m);
  const auto roots = rational_roots(cp);
  if (count_real_roots(cp) != roots.size())
    throw DomainError("max_eigenspace_dim: characteristic polynomial has an irrational real root");
  std::size_t best = 0;
  for (const auto& [lambda, mult] : roots) best = std::max(best, eigenspace(m, lambda).dim());
  return best;
}

}  // namespace nilcert
