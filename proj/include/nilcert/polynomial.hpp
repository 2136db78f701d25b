#pragma once

// Univariate polynomials over ℚ, characteristic polynomials, rational roots
// and exact real-root counting.

#include <gmp.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/error.hpp"
#include "nilcert/matrix.hpp"

namespace nilcert {

class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients lowest degree first; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  static Polynomial monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
  }

  /// x − r.
  static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

  static Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p = p * linear_root(r);
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, with −1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  const Rational& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    const Rational inv = 1 / leading();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + Polynomial::constant(-1) * b;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational inv = 1 / b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
      const auto top = static_cast<std::size_t>(k) + b.coeffs_.size() - 1;
      const Rational q = rem[top] * inv;
      quot[static_cast<std::size_t>(k)] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Human-readable form in the variable x, highest degree first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += nilcert::to_string(mag);
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// det(xI − m), computed with the division-free Berkowitz recurrence: the
/// coefficient vector of the leading r×r block is multiplied by a Toeplitz
/// matrix built from the next row, column and diagonal entry.
inline Polynomial char_poly(const Matrix& m) {
  m.require_square("char_poly");
  const std::size_t n = m.rows();
  std::vector<Rational> vect{Rational(1)};  // highest degree first
  for (std::size_t r = 0; r < n; ++r) {
    // toeplitz[0] = 1, toeplitz[1] = −a_rr, toeplitz[k + 2] = −R·M^k·C.
    std::vector<Rational> toeplitz(r + 2, Rational(0));
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    Vector col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * col[j];
      toeplitz[k + 2] = -dot;
      Vector next(r, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) != 0 && col[j] != 0) next[i] += m(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<Rational> out(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j < vect.size() && j <= i; ++j) out[i] += toeplitz[i - j] * vect[j];
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return Polynomial(std::move(vect));
}

namespace detail {

inline void add_factor(std::map<Integer, unsigned>& factors, const Integer& p) { ++factors[p]; }

// Pollard–Brent rho; returns a nontrivial factor of a composite n.
inline Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& factors) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      add_factor(factors, Integer(p));
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    add_factor(factors, n);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, factors);
  factor_into(Integer(n / d), factors);
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
  std::map<Integer, unsigned> factors;
  factor_into(n, factors);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 2'000'000) throw DomainError("rational_roots: too many divisor candidates");
  }
  return divs;
}

// Primitive integer polynomial proportional to p (coefficients lowest first).
inline std::vector<Integer> integer_primitive(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * Rational(lcm);
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content != 0)
    for (auto& c : out) c /= content;
  return out;
}

}  // namespace detail

/// Distinct rational roots with multiplicities, in increasing order.
inline std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, std::size_t>> out;
  Polynomial rest = p;
  std::size_t zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = divmod(rest, Polynomial::monomial(1, 1)).first;
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rational(0), zero_mult);
  if (rest.degree() <= 0) return out;

  const Polynomial squarefree = divmod(rest, gcd(rest, rest.derivative())).first;
  const auto ints = detail::integer_primitive(squarefree);
  const auto nums = detail::positive_divisors(ints.front());
  const auto dens = detail::positive_divisors(ints.back());
  std::vector<Rational> found;
  for (const auto& q : dens) {
    for (const auto& num : nums) {
      for (int sign : {1, -1}) {
        const Rational r = make_rational(Integer(num * sign), q);
        if (r.get_den() != q) continue;  // already tried with the reduced denominator
        if (squarefree(r) == 0) found.push_back(r);
      }
    }
  }
  for (const auto& r : found) {
    std::size_t mult = 0;
    const Polynomial lin = Polynomial::linear_root(r);
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Number of distinct real roots, by Sturm's theorem evaluated at ±∞.
inline std::size_t count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("count_real_roots of the zero polynomial");
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(Polynomial::constant(-1) * rem);
  }
  chain.pop_back();
  auto sign_changes = [&](bool at_plus_infinity) {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
      int s = q.leading() > 0 ? 1 : -1;
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  };
  return sign_changes(false) - sign_changes(true);
}

}  // namespace nilcert
