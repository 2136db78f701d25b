#pragma once

// The exterior square ∧²V of a coordinate space V = ℚⁿ, the actions that
// matrices on V induce on it, quotients by invariant subspaces, and the
// representation-theoretic tools used on top (weights, commutants, closures).
//
// ∧²V uses the basis e_i∧e_j (i < j) in lexicographic order; the coordinate
// of u∧v at (i, j) is u_i v_j − u_j v_i.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/qlinalg.hpp"

namespace nilcert {

class WedgeBasis {
 public:
  explicit WedgeBasis(std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  }

  /// Recovers n from dim ∧²V = n(n−1)/2.
  static WedgeBasis for_wedge_dim(std::size_t wedge_dim) {
    std::size_t n = 0;
    while (n * (n - 1) / 2 < wedge_dim) ++n;
    if (n * (n - 1) / 2 != wedge_dim) throw DimensionError("not the dimension of an exterior square");
    return WedgeBasis(n);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  std::pair<std::size_t, std::size_t> pair(std::size_t k) const { return pairs_.at(k); }

  /// Position of e_i∧e_j for i < j.
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= j || j >= n_) throw DimensionError("wedge index needs i < j < n");
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  /// e_i∧e_j as a coordinate vector, for any i ≠ j (sign included).
  Vector unit(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(size());
    return i < j ? unit_vector(size(), index(i, j)) : -unit_vector(size(), index(j, i));
  }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline Vector wedge_vector(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionError("wedge_vector: length mismatch");
  const WedgeBasis basis(u.size());
  Vector out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto [i, j] = basis.pair(k);
    out[k] = u[i] * v[j] - u[j] * v[i];
  }
  return out;
}

/// ξ·(u∧v) = ξu∧v + u∧ξv.
inline Matrix induced_algebra_action(const Matrix& x) {
  x.require_square("induced_algebra_action");
  const std::size_t n = x.rows();
  const WedgeBasis basis(n);
  std::vector<Vector> cols;
  for (const auto& [i, j] : basis.pairs()) {
    cols.push_back(wedge_vector(x.column(i), unit_vector(n, j)) + wedge_vector(unit_vector(n, i), x.column(j)));
  }
  return Matrix::from_columns(basis.size(), cols);
}

/// g·(u∧v) = gu∧gv; entries are the 2×2 minors of g.
inline Matrix induced_group_action(const Matrix& g) {
  g.require_square("induced_group_action");
  const WedgeBasis basis(g.rows());
  std::vector<Vector> cols;
  for (const auto& [i, j] : basis.pairs()) cols.push_back(wedge_vector(g.column(i), g.column(j)));
  return Matrix::from_columns(basis.size(), cols);
}

/// Index of the first basis vector of `s` that m maps outside `s`, if any.
inline std::optional<std::size_t> invariance_witness(const Matrix& m, const Subspace& s) {
  const auto vs = s.basis_vectors();
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (!s.contains(m * vs[k])) return k;
  return std::nullopt;
}

inline bool is_invariant(const Matrix& m, const Subspace& s) { return !invariance_witness(m, s).has_value(); }

/// The quotient U/W together with a chosen set of representatives: the
/// classes of the representatives form the quotient basis.
class Quotient {
 public:
  /// Representatives must complete a basis of W to a basis of the ambient space.
  Quotient(Subspace kernel, std::vector<Vector> representatives)
      : kernel_(std::move(kernel)), reps_(std::move(representatives)) {
    const std::size_t n = kernel_.ambient_dim();
    if (reps_.size() + kernel_.dim() != n) throw DimensionError("quotient: wrong number of representatives");
    std::vector<Vector> cols = reps_;
    for (const auto& w : kernel_.basis_vectors()) cols.push_back(w);
    Matrix inv;
    try {
      inv = inverse(Matrix::from_columns(n, cols));
    } catch (const DomainError&) {
      throw DomainError("quotient: representatives are not independent modulo the kernel");
    }
    projector_ = Matrix(reps_.size(), n);
    for (std::size_t r = 0; r < reps_.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) projector_(r, c) = inv(r, c);
  }

  /// Representatives are the unit vectors of the kernel's non-pivot coordinates.
  static Quotient canonical(const Subspace& kernel) {
    std::vector<Vector> reps;
    for (std::size_t c : kernel.free_coordinates()) reps.push_back(unit_vector(kernel.ambient_dim(), c));
    return Quotient(kernel, std::move(reps));
  }

  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t ambient_dim() const noexcept { return kernel_.ambient_dim(); }
  const Subspace& kernel() const noexcept { return kernel_; }
  const std::vector<Vector>& representatives() const noexcept { return reps_; }

  /// Coordinates of the class of v.
  Vector project(const Vector& v) const { return projector_ * v; }

  Vector lift(const Vector& coords) const {
    if (coords.size() != dim()) throw DimensionError("quotient lift: wrong length");
    Vector v = zero_vector(ambient_dim());
    for (std::size_t k = 0; k < dim(); ++k)
      if (coords[k] != 0) v = v + coords[k] * reps_[k];
    return v;
  }

  /// The factor of m on the quotient; throws NotInvariantError when m
  /// does not preserve the kernel (witness = offending kernel basis index).
  Matrix action(const Matrix& m) const {
    if (m.rows() != ambient_dim() || m.cols() != ambient_dim()) throw DimensionError("quotient action: shape");
    if (const auto w = invariance_witness(m, kernel_)) {
      throw NotInvariantError("quotient action: kernel basis vector " + std::to_string(*w) + " " +
                                  to_string(kernel_.basis().row(*w)) + " leaves the kernel",
                              *w);
    }
    std::vector<Vector> cols;
    for (const auto& r : reps_) cols.push_back(project(m * r));
    return Matrix::from_columns(dim(), cols);
  }

 private:
  Subspace kernel_;
  std::vector<Vector> reps_;
  Matrix projector_;
};

inline Matrix quotient_action(const Matrix& m, const Quotient& q) { return q.action(m); }

/// Labelled square matrices acting on a common space.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t dim) : dim_(dim) {}

  GeneratorSet& add(std::string label, Matrix m) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("generator '" + label + "' has wrong size");
    labels_.push_back(std::move(label));
    mats_.push_back(std::move(m));
    return *this;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return mats_.size(); }
  const std::vector<Matrix>& matrices() const noexcept { return mats_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Applies f to every generator, keeping labels; results act on new_dim.
  template <class F>
  GeneratorSet transformed(std::size_t new_dim, F&& f) const {
    GeneratorSet out(new_dim);
    for (std::size_t k = 0; k < mats_.size(); ++k) out.add(labels_[k], f(mats_[k]));
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Matrix> mats_;
};

struct WeightDecomposition {
  std::vector<std::pair<Rational, Subspace>> spaces;
  bool spans = false;  // the eigenspaces add up to the whole space
};

/// ker(m − λI) for each candidate λ. Distinct eigenvalues give independent
/// eigenspaces, so the sum is direct iff its dimension is the total.
inline WeightDecomposition weight_decomposition(const Matrix& m, const std::vector<Rational>& candidates) {
  m.require_square("weight_decomposition");
  WeightDecomposition out;
  Subspace total = Subspace::zero(m.rows());
  for (const auto& lambda : candidates) {
    Subspace e = eigenspace(m, lambda);
    total = subspace_sum(total, e);
    out.spaces.emplace_back(lambda, std::move(e));
  }
  out.spans = total.dim() == m.rows();
  return out;
}

/// {X : Xg = gX for every generator g}, as a subspace of row-major flattened
/// n×n matrices. For completely reducible actions (representations of a
/// semisimple algebra) dimension 1 certifies irreducibility (Schur), and in
/// general the dimension counts Σ mᵢ² over isotypic multiplicities.
inline Subspace commutant(const GeneratorSet& gens) {
  const std::size_t n = gens.dim();
  Matrix system(gens.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& g : gens.matrices()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        // (Xg − gX)_{ij} = Σ_k X_{ik} g_{kj} − g_{ik} X_{kj}
        for (std::size_t k = 0; k < n; ++k) {
          system(row, i * n + k) += g(k, j);
          system(row, k * n + j) -= g(i, k);
        }
      }
    }
  }
  return kernel_basis(system);
}

/// Smallest subspace containing the seed and invariant under every generator.
inline Subspace invariant_closure(const std::vector<Vector>& seed, const GeneratorSet& gens) {
  Subspace current = Subspace::span(gens.dim(), seed);
  for (;;) {
    std::vector<Vector> vs = current.basis_vectors();
    const std::size_t count = vs.size();
    for (std::size_t k = 0; k < count; ++k)
      for (const auto& g : gens.matrices()) vs.push_back(g * vs[k]);
    Subspace next = Subspace::span(gens.dim(), vs);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

}  // namespace nilcert
