#pragma once

// Named checks over the models, a deterministic runner, and the report type
// with its JSON and text forms.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcert/autos.hpp"
#include "nilcert/liecore.hpp"
#include "nilcert/models.hpp"
#include "nilcert/qlinalg.hpp"
#include "nilcert/sampling.hpp"
#include "nilcert/wedgerep.hpp"

namespace nilcert {

inline constexpr const char* kToolName = "nilcert";
inline constexpr const char* kToolVersion = "0.1.0";

/// Bad check id or bad configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Status { pass, fail, warn };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn: return "warn";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "warn") return Status::warn;
  throw Error("unknown status '" + s + "'");
}

struct CheckResult {
  std::string id;
  Status status = Status::fail;
  std::string expected;
  std::string actual;
  std::string citation;
  std::uint64_t duration_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Config {
  Vector p = models::default_p();
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  bool timings = false;
};

struct Summary {
  std::size_t pass = 0, fail = 0, warn = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  Vector p;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckResult> results;
  Summary summary;

  bool any_fail() const noexcept { return summary.fail > 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

// ---------------------------------------------------------------------------
// Shared, lazily built data for one run.

template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) const {
    std::call_once(flag_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable std::optional<T> value_;
};

class Context {
 public:
  explicit Context(Config config)
      : config_(std::move(config)),
        data_(models::make_model_data(config_.p)),
        G_(models::build_two_step()),
        N_(models::build_three_step(config_.p)) {}

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const Config& config() const noexcept { return config_; }
  const models::ModelData& data() const noexcept { return data_; }
  const LieAlgebra& G() const noexcept { return G_; }
  const LieAlgebra& N() const noexcept { return N_; }

  const DerivationSpace& der_G() const {
    return der_G_.get([&] { return derivation_algebra(G_); });
  }
  const DerivationSpace& der_N() const {
    return der_N_.get([&] { return derivation_algebra(N_); });
  }
  const StabilizerAlgebra& stab_W() const {
    return stab_W_.get([&] { return stabilizer_algebra(data_.W); });
  }

  /// V′ as a subspace of the 12-dimensional algebra.
  Subspace vprime_in_algebra() const {
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < models::kVPrimeDim; ++k) vs.push_back(unit_vector(models::kAlgebraDim, models::kVDim + k));
    return Subspace::span(models::kAlgebraDim, vs);
  }

  Subspace L_in_algebra() const {
    std::vector<Vector> vs;
    for (const auto& v : data_.L.basis_vectors()) vs.push_back(models::vprime_in_algebra(v));
    return Subspace::span(models::kAlgebraDim, vs);
  }

  Matrix on_V(const models::SL2Element& g) const { return models::group_action_on_V(models::sym2_embed(g)); }
  Matrix on_Vprime(const Matrix& on_v) const { return data_.vprime.action(induced_group_action(on_v)); }

  Sampler sampler(std::uint64_t stream) const { return Sampler(config_.seed, stream); }

 private:
  Config config_;
  models::ModelData data_;
  LieAlgebra G_, N_;
  Lazy<DerivationSpace> der_G_, der_N_;
  Lazy<StabilizerAlgebra> stab_W_;
};

// ---------------------------------------------------------------------------
// Formatting helpers.

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string tuple_string(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, Rational>) parts.push_back(to_string(x));
    else parts.push_back(std::to_string(x));
  }
  return "(" + join(parts) + ")";
}

/// "1/2 sigma1 - p13", or "0".
inline std::string combination_string(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const bool neg = v[k] < 0;
    const Rational a = neg ? Rational(-v[k]) : v[k];
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) out += to_string(a) + " ";
    out += labels.at(k);
  }
  return out.empty() ? "0" : out;
}

/// "x -> image; ..." over the basis vectors that the map does not kill.
inline std::string map_string(const Matrix& m, const std::vector<std::string>& labels) {
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Vector col = m.column(c);
    if (!is_zero(col)) parts.push_back(labels.at(c) + " -> " + combination_string(col, labels));
  }
  return parts.empty() ? "0" : join(parts, "; ");
}

/// Rational eigenvalues in decreasing order, repeated by multiplicity.
inline std::vector<Rational> rational_spectrum(const Matrix& m) {
  std::vector<Rational> out;
  const auto roots = rational_roots(char_poly(m));
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    for (std::size_t k = 0; k < it->second; ++k) out.push_back(it->first);
  return out;
}

// ---------------------------------------------------------------------------
// Registry.

struct Outcome {
  Status status;
  std::string expected;
  std::string actual;
};

/// pass iff the strings agree.
inline Outcome equal_outcome(std::string expected, std::string actual) {
  const Status s = expected == actual ? Status::pass : Status::fail;
  return {s, std::move(expected), std::move(actual)};
}

inline Outcome judged_outcome(bool ok, std::string expected, std::string actual) {
  return {ok ? Status::pass : Status::fail, std::move(expected), std::move(actual)};
}

struct CheckInfo {
  std::string id;
  std::string description;
  std::string citation;
  std::function<Outcome(const Context&)> run;
};

namespace checks {

inline Outcome jacobi(const LieAlgebra& L) {
  const auto bad = check_jacobi(L);
  std::string actual = std::to_string(bad.size()) + " violations";
  if (!bad.empty())
    actual += ", first at (" + L.label(bad[0].i) + ", " + L.label(bad[0].j) + ", " + L.label(bad[0].k) + ")";
  return equal_outcome("0 violations", actual);
}

inline Outcome lcs(const LieAlgebra& L, const std::vector<std::size_t>& dims) {
  const std::string expected = "dims " + tuple_string(dims) + ", class " + std::to_string(dims.size() - 1);
  try {
    const auto got = lcs_dims(L);
    return equal_outcome(expected, "dims " + tuple_string(got) + ", class " + std::to_string(got.size() - 1));
  } catch (const DomainError& e) {
    return equal_outcome(expected, std::string("not nilpotent: ") + e.what());
  }
}

inline Outcome weights_V(const Context& ctx) {
  const Matrix& d = ctx.data().rho_delta;
  const std::vector<Rational> weights{4, 2, 0, -2, -4};
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Subspace e = eigenspace(d, weights[i]);
    lines.push_back(e == Subspace::span(5, {unit_vector(5, i)}) ? "sigma" + std::to_string(i + 1) : "?");
  }
  return equal_outcome("spectrum (4, 2, 0, -2, -4), eigenlines (sigma1, sigma2, sigma3, sigma4, sigma5)",
                       "spectrum " + tuple_string(rational_spectrum(d)) + ", eigenlines (" + join(lines) + ")");
}

inline Outcome weights_Vprime(const Context& ctx) {
  const Matrix d = ctx.data().vprime.action(induced_algebra_action(ctx.data().rho_delta));
  const auto spec = rational_spectrum(d);
  std::string actual = "spectrum " + tuple_string(spec);
  if (spec.size() != d.rows()) actual += ", only " + std::to_string(spec.size()) + " rational eigenvalues";
  return equal_outcome("spectrum (6, 4, 2, 0, -2, -4, -6)", actual);
}

inline Outcome identifications(const Context& ctx) {
  const LieAlgebra& G = ctx.G();
  const std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> ids[] = {
      {{0, 3}, {1, 2}}, {{0, 4}, {1, 3}}, {{1, 4}, {2, 3}}};
  std::vector<std::string> bad;
  for (const auto& [a, b] : ids) {
    if (G.structure(a.first, a.second) != G.structure(b.first, b.second))
      bad.push_back("[sigma" + std::to_string(a.first + 1) + ", sigma" + std::to_string(a.second + 1) + "] != [sigma" +
                    std::to_string(b.first + 1) + ", sigma" + std::to_string(b.second + 1) + "]");
  }
  return equal_outcome("3 of 3 identifications hold",
                       std::to_string(3 - bad.size()) + " of 3 identifications hold" +
                           (bad.empty() ? "" : ": " + join(bad, "; ")));
}

inline Outcome w_invariant(const Context& ctx) {
  const auto gens = models::h_generators_on_wedge();
  std::vector<std::string> bad;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!is_invariant(gens.matrices()[k], ctx.data().W)) bad.push_back(gens.labels()[k]);
  return equal_outcome("dim 3, invariant under delta, nu+, nu-",
                       "dim " + std::to_string(ctx.data().W.dim()) +
                           (bad.empty() ? ", invariant under delta, nu+, nu-" : ", not invariant under " + join(bad)));
}

inline Outcome wedge_decomposition(const Context& ctx) {
  const Subspace& W = ctx.data().W;
  const Subspace& Wp = ctx.data().Wprime;
  const bool direct = is_direct_sum(W, Wp, Subspace::full(models::kWedgeDim));
  return equal_outcome("dim W' 7, wedge^2 V = W + W' direct",
                       "dim W' " + std::to_string(Wp.dim()) + ", wedge^2 V = W + W' " + (direct ? "direct" : "not direct"));
}

inline Outcome stabilizer_W(const Context& ctx) {
  const auto& s = ctx.stab_W();
  const auto& d = ctx.data();
  const Subspace expected_span =
      span_of_matrices(5, {Matrix::identity(5), d.rho_delta, d.rho_nuplus, d.rho_numinus});
  return equal_outcome("dim 4, equals span{I, rho(delta), rho(nu+), rho(nu-)}",
                       "dim " + std::to_string(s.dim()) + (s.space == expected_span ? ", equals" : ", differs from") +
                           " span{I, rho(delta), rho(nu+), rho(nu-)}");
}

inline Outcome no_open_orbit(const Context& ctx) {
  const std::size_t d = ctx.stab_W().dim();
  return judged_outcome(d < models::kVDim, "dim A < 5 = dim V",
                        "dim A = " + std::to_string(d) + (d < models::kVDim ? " < " : " >= ") + "5 = dim V");
}

inline Outcome stabilizer_Wprime(const Context& ctx) {
  const auto s = stabilizer_algebra(ctx.data().Wprime);
  const bool inside = ctx.stab_W().space.contains(s.space);
  return equal_outcome("dim 4, contained in the stabilizer of W",
                       "dim " + std::to_string(s.dim()) + (inside ? ", contained in" : ", not contained in") +
                           " the stabilizer of W");
}

inline Outcome eigen_relations(const Context&) {
  const auto pairs = wedge_support_pairs(models::W_generators());
  std::vector<std::string> ps;
  for (const auto& [i, j] : pairs) ps.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return equal_outcome("kernel dim 0 over pairs (1,4) (1,5) (2,3) (2,4) (2,5) (3,4)",
                       "kernel dim " + std::to_string(eigen_relation_kernel(pairs, models::kVDim).dim()) +
                           " over pairs " + join(ps, " "));
}

inline Outcome g_derivations(const Context& ctx) {
  const auto& der = ctx.der_G();
  std::vector<Matrix> lifts;
  for (const auto& x : ctx.stab_W().matrices()) lifts.push_back(lift_to_two_step(x, ctx.data().vprime));
  const Subspace lift = span_of_matrices(models::kAlgebraDim, lifts);
  const Subspace shear = shear_space(ctx.G(), ctx.vprime_in_algebra());
  const bool ok = is_direct_sum(lift, shear, der.space);
  return equal_outcome("dim 39 = lift 4 + Hom(V,V') 35, direct and equal",
                       "dim " + std::to_string(der.dim()) + " = lift " + std::to_string(lift.dim()) + " + Hom(V,V') " +
                           std::to_string(shear.dim()) + (ok ? ", direct and equal" : ", not a direct decomposition"));
}

inline Outcome n_derivations(const Context& ctx) {
  const auto& der = ctx.der_N();
  const LieAlgebra& N = ctx.N();
  const Subspace shear = shear_space(N, ctx.L_in_algebra());
  const Subspace inner = span_of_matrices(
      models::kAlgebraDim, {ad_matrix(N, N.basis_vector(0)), ad_matrix(N, N.basis_vector(1))});
  const Subspace sum = subspace_sum(shear, inner);
  const bool ok = is_direct_sum(shear, inner, der.space);
  std::string actual = "dim " + std::to_string(der.dim()) + " = shear " + std::to_string(shear.dim()) + " + inner " +
                       std::to_string(inner.dim()) + (ok ? ", direct and equal" : ", not a direct decomposition");
  if (!ok) {
    for (const auto& d : der.matrices()) {
      if (!sum.contains(d.flatten())) {
        actual += "; derivation outside the sum: " + map_string(d, N.labels());
        break;
      }
    }
  }
  return equal_outcome("dim 32 = shear 30 + inner 2, direct and equal", actual);
}

inline Outcome n_derivations_nilpotent(const Context& ctx) {
  const LieAlgebra& N = ctx.N();
  const auto ds = ctx.der_N().matrices();
  std::size_t bad_factor = 0, bad_cube = 0;
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const bool f = !factor_on_abelianization(N, ds[k]).is_zero();
    const bool c = !power(ds[k], 3).is_zero();
    bad_factor += f;
    bad_cube += c;
    if ((f || c) && !first) first = k;
  }
  std::string actual = "basis derivations: " + std::to_string(bad_factor) + " with nonzero factor, " +
                       std::to_string(bad_cube) + " with D^3 != 0";
  if (first) {
    const Matrix& d = ds[*first];
    actual += "; e.g. basis derivation " + std::to_string(*first) + " has factor spectrum " +
              tuple_string(rational_spectrum(factor_on_abelianization(N, d))) + " and char poly " +
              char_poly(d).to_string();
  }
  return equal_outcome("basis derivations: 0 with nonzero factor, 0 with D^3 != 0", actual);
}

inline constexpr std::size_t kAutomorphismTrials = 50;

inline Outcome n_automorphisms_unipotent(const Context& ctx) {
  const LieAlgebra& N = ctx.N();
  const auto basis = ctx.der_N().matrices();
  const Sampler sampler = ctx.sampler(3);
  std::size_t good = 0;
  std::string first;
  for (std::size_t t = 0; t < kAutomorphismTrials; ++t) {
    auto rng = sampler.engine(t);
    Matrix tau = Matrix::identity(N.dim());
    std::string why;
    for (int factor = 0; factor < 2 && why.empty(); ++factor) {
      const Matrix d = random_combination(rng, basis, 2);
      if (!is_nilpotent(d)) {
        why = "sampled derivation is not nilpotent (char poly " + char_poly(d).to_string() +
              "), so its exponential is not unipotent";
        break;
      }
      tau = tau * exp_nilpotent(d);
    }
    if (why.empty() && !is_automorphism(N, tau)) why = "product is not an automorphism";
    if (why.empty() && !is_unipotent(tau)) why = "product is not unipotent";
    if (why.empty()) ++good;
    else if (first.empty()) first = "trial " + std::to_string(t) + ": " + why;
  }
  const std::string n = std::to_string(kAutomorphismTrials);
  return equal_outcome(n + " of " + n + " sampled automorphisms unipotent",
                       std::to_string(good) + " of " + n + " sampled automorphisms unipotent" +
                           (first.empty() ? "" : "; first failure " + first));
}

inline Outcome p_infinitesimal(const Context& ctx) {
  const Subspace s = infinitesimal_line_stabilizer(ctx.config().p, models::h_generators_on_Vprime());
  std::string actual = "dim " + std::to_string(s.dim());
  if (!s.is_zero()) actual += ", contains " + combination_string(s.basis().row(0), {"delta", "nu+", "nu-"});
  return equal_outcome("dim 0", actual);
}

inline std::vector<HSample> h_samples(const Context& ctx, std::uint64_t stream, std::size_t count) {
  std::vector<HSample> out;
  const Sampler sampler = ctx.sampler(stream);
  for (std::size_t t = 0; t < count; ++t) out.push_back(sample_h(sampler, t));
  return out;
}

inline const char* kEllipticCaveat = "finite-order elliptic elements are not covered";

inline Outcome p_sampled(const Context& ctx) {
  auto samples = h_representatives();
  for (auto& s : h_samples(ctx, 1, ctx.config().trials)) samples.push_back(std::move(s));
  std::size_t fixed = 0;
  std::string first;
  for (const auto& s : samples) {
    if (line_fixed_by(ctx.config().p, ctx.on_Vprime(ctx.on_V(s.element)))) {
      if (!fixed++) first = "; first: " + s.description;
    }
  }
  const std::string n = std::to_string(samples.size());
  const std::string expected = "0 of " + n + " sampled elements fix the line (" + kEllipticCaveat + ")";
  const std::string actual = std::to_string(fixed) + " of " + n + " sampled elements fix the line (" +
                             kEllipticCaveat + ")" + first;
  if (expected != actual) return {Status::fail, expected, actual};
  return {Status::warn, expected, actual};
}

inline Outcome eigenspace_bound(const Context& ctx) {
  auto samples = h_representatives();
  for (auto& s : h_samples(ctx, 2, ctx.config().trials)) samples.push_back(std::move(s));
  std::size_t largest = 0;
  std::string problem;
  for (const auto& s : samples) {
    try {
      const std::size_t d = max_eigenspace_dim(ctx.on_Vprime(ctx.on_V(s.element)));
      if (d > largest) largest = d;
      if (d > 3 && problem.empty()) problem = "; d(h) = " + std::to_string(d) + " for " + s.description;
    } catch (const DomainError& e) {
      if (problem.empty()) problem = std::string("; ") + e.what() + " for " + s.description;
    }
  }
  const std::string n = std::to_string(samples.size());
  return judged_outcome(problem.empty(), "d(h) <= 3 < 7/2 for all " + n + " elements on V'",
                        "largest d(h) = " + std::to_string(largest) + " over " + n + " elements on V'" + problem);
}

inline constexpr std::size_t kFixedPointSamples = 25;

inline Outcome coran(const Context& ctx) {
  std::size_t good = 0;
  std::string first;
  for (const auto& s : h_samples(ctx, 4, kFixedPointSamples)) {
    if (!fixed_space(ctx.on_V(s.element)).is_zero()) ++good;
    else if (first.empty()) first = "; no fixed vector for " + s.description;
  }
  const Subspace d1 = fixed_space(ctx.on_V(models::SL2Element::diagonal(2)));
  const Subspace u1 = fixed_space(exp_nilpotent(ctx.data().rho_nuplus));
  const auto name = [](const Subspace& s) {
    if (s == Subspace::span(5, {unit_vector(5, 2)})) return std::string("span(sigma3)");
    if (s == Subspace::span(5, {unit_vector(5, 0)})) return std::string("span(sigma1)");
    return "a subspace of dim " + std::to_string(s.dim());
  };
  const std::string n = std::to_string(kFixedPointSamples);
  return equal_outcome(n + " of " + n + " with a fixed vector; d1 fixes span(sigma3); exp(nu+) fixes span(sigma1)",
                       std::to_string(good) + " of " + n + " with a fixed vector; d1 fixes " + name(d1) +
                           "; exp(nu+) fixes " + name(u1) + first);
}

inline Outcome h_group_invariance(const Context& ctx) {
  auto samples = h_representatives();
  for (auto& s : h_samples(ctx, 5, kFixedPointSamples)) samples.push_back(std::move(s));
  std::size_t good = 0;
  for (const auto& s : samples)
    if (is_invariant(induced_group_action(ctx.on_V(s.element)), ctx.data().W)) ++good;
  const std::string n = std::to_string(samples.size());
  return equal_outcome(n + " of " + n + " sampled elements preserve W",
                       std::to_string(good) + " of " + n + " sampled elements preserve W");
}

inline Outcome scalar_automorphisms(const Context& ctx) {
  Vector diag;
  for (std::size_t k = 0; k < models::kAlgebraDim; ++k) diag.push_back(k < models::kVDim ? 3 : 9);
  const bool z3 = is_automorphism(ctx.G(), Matrix::diagonal(diag));
  const bool two = is_automorphism(ctx.G(), Rational(2) * Matrix::identity(models::kAlgebraDim));
  return equal_outcome("z_3 is an automorphism; 2I is not",
                       std::string("z_3 is ") + (z3 ? "an automorphism" : "not an automorphism") + "; 2I is " +
                           (two ? "an automorphism" : "not"));
}

inline Outcome p_hypothesis(const Context& ctx) {
  const Vector& p = ctx.config().p;
  return equal_outcome("p13 coefficient nonzero (p in L, not in L')",
                       ctx.data().Lprime.contains(p) ? "p13 coefficient is 0 (p in L')"
                                                     : "p13 coefficient nonzero (p in L, not in L')");
}

inline Outcome heisenberg_oracle(const Context&) {
  return equal_outcome("dim 6", "dim " + std::to_string(derivation_algebra(heisenberg_algebra(1)).dim()));
}

inline Outcome abelian_oracle(const Context&) {
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= 4; ++n) dims.push_back(derivation_algebra(abelian_algebra(n)).dim());
  return equal_outcome("dims (1, 4, 9, 16) for n = 1..4", "dims " + tuple_string(dims) + " for n = 1..4");
}

}  // namespace checks

inline const std::vector<CheckInfo>& registry() {
  using namespace checks;
  static const std::vector<CheckInfo> table = {
      {"jacobi.G", "Jacobi identity in G", "G = V + V' is a Lie algebra",
       [](const Context& c) { return jacobi(c.G()); }},
      {"jacobi.N", "Jacobi identity in N for the configured p", "N is a Lie algebra for every nonzero p in L",
       [](const Context& c) { return jacobi(c.N()); }},
      {"lcs.G-12-7-0", "lower central series of G", "G is 2-step nilpotent",
       [](const Context& c) { return lcs(c.G(), {12, 7, 0}); }},
      {"lcs.N-12-7-1-0", "lower central series of N", "N is 3-step nilpotent",
       [](const Context& c) { return lcs(c.N(), {12, 7, 1, 0}); }},
      {"weights.V", "delta acts on V with weights 4, 2, 0, -2, -4 on sigma1..sigma5",
       "sigma1..sigma5 are weight vectors of weights 4, 2, 0, -2, -4", weights_V},
      {"weights.Vprime", "delta acts on V' with weights 6, 4, ..., -6", "V' is the 7-dimensional irreducible module",
       weights_Vprime},
      {"ident.G-brackets", "[s1,s4]=[s2,s3], [s1,s5]=[s2,s4], [s2,s5]=[s3,s4] in G", "p14 = p23, p15 = p24, p25 = p34",
       identifications},
      {"w.invariant", "W is a 3-dimensional H-submodule of wedge^2 V", "W is invariant under the induced action of H",
       w_invariant},
      {"w.h-group-invariant", "sampled elements of H preserve W", "W is invariant under the induced action of H",
       h_group_invariance},
      {"irreducible.V", "commutant of H on V has dim 1", "V is an irreducible H-module",
       [](const Context&) { return equal_outcome("commutant dim 1", "commutant dim " + std::to_string(commutant(models::h_generators_on_V()).dim())); }},
      {"wedge.commutant-dim2", "commutant of H on wedge^2 V has dim 2",
       "wedge^2 V = W + W' with W, W' irreducible and non-isomorphic",
       [](const Context&) { return equal_outcome("commutant dim 2", "commutant dim " + std::to_string(commutant(models::h_generators_on_wedge()).dim())); }},
      {"wedge.decomposition", "wedge^2 V = W + W' with dim W' = 7", "wedge^2 V = W + W', both H-invariant",
       wedge_decomposition},
      {"thm.stabilizer-dim4", "stabilizer algebra of W is span{I, rho(delta), rho(nu+), rho(nu-)}",
       "A = ZH (Lie algebra level)", stabilizer_W},
      {"thm.no-open-orbit", "dim A < dim V", "dim A < dim V rules out an open A-orbit on V", no_open_orbit},
      {"stab.Wprime", "stabilizer algebra of W' has dim 4 and lies in that of W",
       "W is invariant under the stabilizer of W'", stabilizer_Wprime},
      {"thm.eigen-relations", "exponent system from W's support has zero kernel",
       "diagonal elements of A with positive eigenvalues are trivial", eigen_relations},
      {"g.derivations", "der(G) = lift(stabilizer of W) + Hom(V, V')", "Aut(G) is A(G) extended by the shears",
       g_derivations},
      {"g.scalar-automorphisms", "z_3 (3 on V, 9 on V') is an automorphism of G, 2I is not",
       "scalar maps of V extend to automorphisms of G", scalar_automorphisms},
      {"n.derivations", "der(N) = shear(N, L) + span(ad sigma1, ad sigma2)", "Aut(N) = N* Psi",
       n_derivations},
      {"n.derivations-nilpotent", "every derivation of N has zero factor on N/[N,N] and cube zero",
       "A(N) is trivial", n_derivations_nilpotent},
      {"n.automorphisms-unipotent", "sampled automorphisms exp(D1)exp(D2) of N are unipotent",
       "trivial factor on N/[N,N] implies unipotent", n_automorphisms_unipotent},
      {"p.hypothesis", "p has nonzero p13 coefficient", "p lies in L but not in L'", p_hypothesis},
      {"p.infinitesimal-stabilizer", "no nonzero element of sl2 stabilizes the line through p",
       "the line through p has trivial stabilizer in H", p_infinitesimal},
      {"p.sampled-genericity", "no sampled element of H fixes the line through p",
       "the line through p has trivial stabilizer in H", p_sampled},
      {"lemma.eigenspace-bound", "eigenspaces of sampled elements on V' have dim <= 3",
       "d(h) <= n/2 on an irreducible module of dim n", eigenspace_bound},
      {"coran.fixed-points", "sampled elements of H have a nonzero fixed vector on V",
       "each h in H fixes a nonzero vector of V", coran},
      {"oracle.heisenberg", "der of the 3-dimensional Heisenberg algebra has dim 6", "classical value",
       heisenberg_oracle},
      {"oracle.abelian", "der of the abelian algebra Q^n has dim n^2", "classical value", abelian_oracle},
  };
  return table;
}

inline const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

inline void tally(Report& r) {
  r.summary = {};
  for (const auto& x : r.results) {
    switch (x.status) {
      case Status::pass: ++r.summary.pass; break;
      case Status::fail: ++r.summary.fail; break;
      case Status::warn: ++r.summary.warn; break;
    }
  }
}

/// Runs the given checks (registry order, duplicates dropped) with `jobs`
/// worker threads. Throws UsageError for an unknown id or an invalid p.
inline Report run(const std::vector<std::string>& ids, const Config& config, std::size_t jobs = 1) {
  std::vector<const CheckInfo*> selected;
  for (const auto& id : ids)
    if (!find_check(id)) throw UsageError("unknown check id '" + id + "' (see `nilcert list`)");
  for (const auto& c : registry())
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) selected.push_back(&c);

  std::optional<Context> ctx;
  try {
    ctx.emplace(config);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid configuration: ") + e.what());
  }

  Report report;
  report.p = config.p;
  report.seed = config.seed;
  report.trials = config.trials;
  report.results.resize(selected.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < selected.size();) {
      const CheckInfo& info = *selected[k];
      CheckResult& out = report.results[k];
      out.id = info.id;
      out.citation = info.citation;
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = info.run(*ctx);
        out.status = o.status;
        out.expected = std::move(o.expected);
        out.actual = std::move(o.actual);
      } catch (const std::exception& e) {
        out.status = Status::fail;
        out.actual = std::string("error: ") + e.what();
      }
      if (config.timings) {
        out.duration_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, selected.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  tally(report);
  return report;
}

inline Report run_all(const Config& config, std::size_t jobs = 1) { return run(all_check_ids(), config, jobs); }

// ---------------------------------------------------------------------------
// Report serialization.

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  auto& cfg = j["config"];
  cfg["p"] = nlohmann::ordered_json::array();
  for (const auto& x : r.p) cfg["p"].push_back(to_string(x));
  cfg["seed"] = r.seed;
  cfg["trials"] = r.trials;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& c : r.results) {
    j["results"].push_back({{"id", c.id},
                            {"status", to_string(c.status)},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"citation", c.citation},
                            {"duration_ms", c.duration_ms}});
  }
  j["summary"] = {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"warn", r.summary.warn}};
  return j;
}

inline std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  const auto& cfg = j.at("config");
  for (const auto& x : cfg.at("p")) r.p.push_back(parse_rational(x.get<std::string>()));
  r.seed = cfg.at("seed").get<std::uint64_t>();
  r.trials = cfg.at("trials").get<std::size_t>();
  for (const auto& c : j.at("results")) {
    r.results.push_back({c.at("id").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                         c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                         c.at("citation").get<std::string>(), c.at("duration_ms").get<std::uint64_t>()});
  }
  const auto& s = j.at("summary");
  r.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(), s.at("warn").get<std::size_t>()};
  return r;
}

inline Report parse_report(const std::string& text) { return report_from_json(nlohmann::ordered_json::parse(text)); }

inline void write_text(std::ostream& os, const Report& r) {
  os << r.tool << " " << r.version << "  p = " << combination_string(r.p, models::vprime_labels())
     << "  seed = " << r.seed << "  trials = " << r.trials << "\n";
  for (const auto& c : r.results) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << "  " << c.id << "  " << c.actual;
    if (c.duration_ms) os << "  [" << c.duration_ms << " ms]";
    os << "\n";
    if (c.status == Status::fail) os << "      expected: " << c.expected << "\n";
  }
  os << r.summary.pass << " pass, " << r.summary.fail << " fail, " << r.summary.warn << " warn\n";
}

inline int exit_code(const Report& r) { return r.any_fail() ? 1 : 0; }

}  // namespace nilcert
