#pragma once

// Concrete objects: the 5-dimensional space V of 3×3 symmetric matrices
// with σ₂₂ = 2σ₁₃, the acting sl₂-triple (δ, ν⁺, ν⁻), the symmetric-square
// copy of SL(2,ℚ) inside SL(3,ℚ), the subspaces W, W′ ⊂ ∧²V, the quotient
// V′ = ∧²V / W, and the 12-dimensional algebras 𝒢 (2-step) and 𝒩 (3-step).
//
// Index conventions (zero-based in code, one-based in labels):
//   V   : σ₁ … σ₅                         -> 0 … 4
//   V′  : p12 p13 p14 p15 p25 p35 p45     -> 0 … 6
//   𝒢,𝒩 : σ₁ … σ₅ then the V′ basis      -> 0 … 11
// In V′ the classes p23, p24, p34 coincide with p14, p15, p25.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/liecore.hpp"
#include "nilcert/qlinalg.hpp"
#include "nilcert/wedgerep.hpp"

namespace nilcert::models {

inline constexpr std::size_t kVDim = 5;
inline constexpr std::size_t kWedgeDim = 10;
inline constexpr std::size_t kVPrimeDim = 7;
inline constexpr std::size_t kAlgebraDim = kVDim + kVPrimeDim;

/// One-based (i, j) of the V′ basis representatives σᵢ∧σⱼ.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, kVPrimeDim> kVPrimePairs{
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}};

inline std::vector<std::string> sigma_labels() { return {"sigma1", "sigma2", "sigma3", "sigma4", "sigma5"}; }

inline std::vector<std::string> vprime_labels() {
  std::vector<std::string> out;
  for (const auto& [i, j] : kVPrimePairs) out.push_back("p" + std::to_string(i) + std::to_string(j));
  return out;
}

inline std::vector<std::string> algebra_labels() {
  auto out = sigma_labels();
  for (auto& l : vprime_labels()) out.push_back(std::move(l));
  return out;
}

/// Algebra index of p_ij (one-based i < j, either spelling of a class).
inline std::size_t p_index(std::size_t i, std::size_t j) {
  static constexpr std::pair<std::size_t, std::size_t> kAliases[] = {{2, 3}, {2, 4}, {3, 4}};
  static constexpr std::pair<std::size_t, std::size_t> kTargets[] = {{1, 4}, {1, 5}, {2, 5}};
  for (std::size_t a = 0; a < 3; ++a)
    if (kAliases[a] == std::pair{i, j}) std::tie(i, j) = kTargets[a];
  for (std::size_t k = 0; k < kVPrimeDim; ++k)
    if (kVPrimePairs[k] == std::pair{i, j}) return kVDim + k;
  throw DimensionError("no V' basis element p" + std::to_string(i) + std::to_string(j));
}

/// E_kl with one-based indices.
inline Matrix unit3(std::size_t k, std::size_t l) {
  Matrix m(3, 3);
  m(k - 1, l - 1) = 1;
  return m;
}

inline std::array<Matrix, kVDim> sigma_basis() {
  return {Rational(2) * unit3(1, 1), unit3(1, 2) + unit3(2, 1), unit3(1, 3) + Rational(2) * unit3(2, 2) + unit3(3, 1),
          unit3(2, 3) + unit3(3, 2), Rational(2) * unit3(3, 3)};
}

inline Matrix delta() { return Matrix::diagonal({2, 0, -2}); }
inline Matrix nu_plus() { return unit3(1, 2) + unit3(2, 3); }
inline Matrix nu_minus() { return unit3(2, 1) + unit3(3, 2); }

/// σ-coordinates of a 3×3 matrix, or nullopt if it is not in V.
inline std::optional<Vector> coordinates_in_V(const Matrix& s) {
  if (s.rows() != 3 || s.cols() != 3) throw DimensionError("coordinates_in_V: need a 3x3 matrix");
  if (s != s.transpose() || s(1, 1) != 2 * s(0, 2)) return std::nullopt;
  return Vector{s(0, 0) / 2, s(0, 1), s(0, 2), s(1, 2), s(2, 2) / 2};
}

inline Matrix vector_to_V(const Vector& coords) {
  const auto sigma = sigma_basis();
  Matrix s(3, 3);
  for (std::size_t i = 0; i < kVDim; ++i) s = s + coords.at(i) * sigma[i];
  return s;
}

namespace detail {

template <class F>
Matrix action_on_V(F&& image, const char* what) {
  const auto sigma = sigma_basis();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < kVDim; ++i) {
    auto c = coordinates_in_V(image(sigma[i]));
    if (!c) throw NotInvariantError(std::string(what) + ": image of sigma" + std::to_string(i + 1) + " is not in V", i);
    cols.push_back(std::move(*c));
  }
  return Matrix::from_columns(kVDim, cols);
}

}  // namespace detail

/// σ ↦ ξσ + σξᵗ in the σ-basis.
inline Matrix rho_V(const Matrix& xi) {
  const Matrix xt = xi.transpose();
  return detail::action_on_V([&](const Matrix& s) { return xi * s + s * xt; }, "rho_V");
}

/// σ ↦ hσhᵗ in the σ-basis.
inline Matrix group_action_on_V(const Matrix& h) {
  const Matrix ht = h.transpose();
  return detail::action_on_V([&](const Matrix& s) { return h * s * ht; }, "group_action_on_V");
}

/// (a b; c d) with ad − bc = 1.
class SL2Element {
 public:
  static SL2Element make(Rational a, Rational b, Rational c, Rational d) {
    if (a * d - b * c != 1) throw DomainError("SL2 element must have determinant 1");
    return SL2Element(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  static SL2Element identity() { return SL2Element(1, 0, 0, 1); }
  static SL2Element diagonal(const Rational& t) { return make(t, 0, 0, 1 / t); }
  static SL2Element upper(const Rational& s) { return make(1, s, 0, 1); }
  static SL2Element lower(const Rational& r) { return make(1, 0, r, 1); }
  /// Rotation with cos = c, sin = s, c² + s² = 1.
  static SL2Element rotation(const Rational& c, const Rational& s) { return make(c, -s, s, c); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  SL2Element inverse() const { return SL2Element(d_, -b_, -c_, a_); }

  /// ±I, the kernel of the map to PSL(2).
  bool is_central() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  friend SL2Element operator*(const SL2Element& x, const SL2Element& y) {
    return SL2Element(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                      x.c_ * y.b_ + x.d_ * y.d_);
  }

  friend bool operator==(const SL2Element& x, const SL2Element& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  SL2Element(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Rational a_, b_, c_, d_;
};

/// Symmetric-square image in SL(3,ℚ), on binary quadratics with basis
/// (x², xy, y²/2). Its derivative sends e ↦ ν⁺, h ↦ δ, f ↦ 2ν⁻.
inline Matrix sym2_embed(const SL2Element& g) {
  const Rational &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  return Matrix{{a * a, a * b, b * b / 2}, {2 * a * c, a * d + b * c, b * d}, {2 * c * c, 2 * c * d, d * d}};
}

inline const WedgeBasis& wedge_basis() {
  static const WedgeBasis basis(kVDim);
  return basis;
}

/// σᵢ∧σⱼ (one-based).
inline Vector sigma_wedge(std::size_t i, std::size_t j) { return wedge_basis().unit(i - 1, j - 1); }

inline std::vector<Vector> W_generators() {
  return {sigma_wedge(1, 4) - sigma_wedge(2, 3), sigma_wedge(1, 5) - sigma_wedge(2, 4),
          sigma_wedge(2, 5) - sigma_wedge(3, 4)};
}

inline Subspace build_W() { return Subspace::span(kWedgeDim, W_generators()); }

inline GeneratorSet h_generators_on_V() {
  GeneratorSet g(kVDim);
  g.add("delta", rho_V(delta())).add("nu+", rho_V(nu_plus())).add("nu-", rho_V(nu_minus()));
  return g;
}

inline GeneratorSet h_generators_on_wedge() {
  return h_generators_on_V().transformed(kWedgeDim, [](const Matrix& m) { return induced_algebra_action(m); });
}

/// Invariant closure of σ₁∧σ₂ under the induced sl₂ action.
inline Subspace build_Wprime() { return invariant_closure({sigma_wedge(1, 2)}, h_generators_on_wedge()); }

inline Quotient vprime_quotient() {
  std::vector<Vector> reps;
  for (const auto& [i, j] : kVPrimePairs) reps.push_back(sigma_wedge(i, j));
  return Quotient(build_W(), std::move(reps));
}

inline GeneratorSet h_generators_on_Vprime() {
  const Quotient q = vprime_quotient();
  return h_generators_on_wedge().transformed(kVPrimeDim, [&](const Matrix& m) { return q.action(m); });
}

/// Factor on V′ of the action an element of GL(V) induces on ∧²V.
inline Matrix group_action_on_Vprime(const Matrix& on_V) { return vprime_quotient().action(induced_group_action(on_V)); }

/// L = span(p13, p14, p15, p25, p35, p45) ⊂ V′.
inline Subspace build_L() {
  std::vector<Vector> vs;
  for (std::size_t k = 1; k < kVPrimeDim; ++k) vs.push_back(unit_vector(kVPrimeDim, k));
  return Subspace::span(kVPrimeDim, vs);
}

/// L′ = span(p14, p15, p25, p35, p45).
inline Subspace build_Lprime() {
  std::vector<Vector> vs;
  for (std::size_t k = 2; k < kVPrimeDim; ++k) vs.push_back(unit_vector(kVPrimeDim, k));
  return Subspace::span(kVPrimeDim, vs);
}

/// p13 + p45 in V′ coordinates.
inline Vector default_p() { return {0, 1, 0, 0, 0, 0, 1}; }

/// Throws DomainError unless p is a nonzero element of L.
inline void validate_p(const Vector& p) {
  if (p.size() != kVPrimeDim) throw DomainError("p needs 7 coordinates (p12 p13 p14 p15 p25 p35 p45)");
  if (is_zero(p)) throw DomainError("p must be nonzero");
  if (p[0] != 0) throw DomainError("p must lie in L = span(p13, ..., p45): its p12 coefficient must be 0");
}

/// Embeds V′ coordinates into the 12-dimensional algebra.
inline Vector vprime_in_algebra(const Vector& v) {
  Vector out = zero_vector(kAlgebraDim);
  for (std::size_t k = 0; k < kVPrimeDim; ++k) out[kVDim + k] = v.at(k);
  return out;
}

namespace detail {

inline std::vector<LieAlgebra::Bracket> two_step_brackets() {
  const Quotient q = vprime_quotient();
  std::vector<LieAlgebra::Bracket> out;
  for (std::size_t i = 0; i < kVDim; ++i)
    for (std::size_t j = i + 1; j < kVDim; ++j)
      out.push_back({i, j, vprime_in_algebra(q.project(wedge_basis().unit(i, j)))});
  return out;
}

}  // namespace detail

/// 𝒢 = V ⊕ V′ with [σᵢ, σⱼ] = σᵢ∧σⱼ mod W and V′ central.
inline LieAlgebra build_two_step() {
  LieAlgebra g(kAlgebraDim, algebra_labels(), detail::two_step_brackets());
  require_jacobi(g);
  return g;
}

/// 𝒩: the brackets of 𝒢 plus [σ₁, p12] = p, for a nonzero p ∈ L.
inline LieAlgebra build_three_step(const Vector& p) {
  validate_p(p);
  auto brackets = detail::two_step_brackets();
  brackets.push_back({0, p_index(1, 2), vprime_in_algebra(p)});
  LieAlgebra n(kAlgebraDim, algebra_labels(), brackets);
  require_jacobi(n);
  return n;
}

/// Every model object built once; immutable and shareable between threads.
struct ModelData {
  std::array<Matrix, kVDim> sigma;
  Matrix rho_delta, rho_nuplus, rho_numinus;
  Subspace W, Wprime;
  Quotient vprime;
  Subspace L, Lprime;
  Vector p;
};

inline ModelData make_model_data(const Vector& p = default_p()) {
  validate_p(p);
  return ModelData{sigma_basis(),  rho_V(delta()),   rho_V(nu_plus()), rho_V(nu_minus()), build_W(),
                   build_Wprime(), vprime_quotient(), build_L(),       build_Lprime(),    p};
}

}  // namespace nilcert::models
