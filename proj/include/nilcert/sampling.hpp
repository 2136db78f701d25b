#pragma once

// Seeded exact sample points of H ≅ PSL(2) and random integer combinations.
//
// Draws are keyed by (seed, stream, index): each key seeds its own engine, so
// a draw never depends on how many other draws ran before it or on which
// thread ran them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilcert/models.hpp"

namespace nilcert {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  Sampler substream(std::uint64_t stream) const { return Sampler(seed_, stream); }

  std::mt19937_64 engine(std::uint64_t index) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

inline long draw_int(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// n/d with 1 ≤ |n| ≤ bound, 1 ≤ d ≤ bound.
inline Rational draw_nonzero_rational(std::mt19937_64& rng, long bound) {
  const long n = draw_int(rng, 1, bound) * (draw_int(rng, 0, 1) ? 1 : -1);
  return make_rational(n, draw_int(rng, 1, bound));
}

enum class SampleKind { hyperbolic, unipotent, elliptic };

inline std::string to_string(SampleKind k) {
  switch (k) {
    case SampleKind::hyperbolic: return "hyperbolic";
    case SampleKind::unipotent: return "unipotent";
    case SampleKind::elliptic: return "elliptic";
  }
  return "?";
}

struct HSample {
  SampleKind kind;
  models::SL2Element element;
  std::string description;
};

/// Sample `index` of the stream. Kinds rotate hyperbolic, unipotent,
/// elliptic; the core element is conjugated by a random (1 s; 0 1)(1 0; r 1).
/// Elliptic cores are rotations by Pythagorean angles (m²−n², 2mn)/(m²+n²)
/// with m ≠ n, which have infinite order.
inline HSample sample_h(const Sampler& sampler, std::uint64_t index) {
  using models::SL2Element;
  auto rng = sampler.engine(index);
  HSample out{static_cast<SampleKind>(index % 3), SL2Element::identity(), ""};
  SL2Element core = SL2Element::identity();
  switch (out.kind) {
    case SampleKind::hyperbolic: {
      Rational t = draw_nonzero_rational(rng, 5);
      while (t == 1 || t == -1) t = draw_nonzero_rational(rng, 5);
      core = SL2Element::diagonal(t);
      out.description = "diag(t, 1/t), t=" + to_string(t);
      break;
    }
    case SampleKind::unipotent: {
      const Rational s = draw_nonzero_rational(rng, 5);
      core = SL2Element::upper(s);
      out.description = "(1 s; 0 1), s=" + to_string(s);
      break;
    }
    case SampleKind::elliptic: {
      const long m = draw_int(rng, 1, 6);
      long n = draw_int(rng, 1, 5);
      if (n >= m) ++n;
      const Rational h = m * m + n * n;
      const Rational c = (m * m - n * n) / h;
      const Rational s = (draw_int(rng, 0, 1) ? 2 : -2) * m * n / h;
      core = SL2Element::rotation(c, s);
      out.description = "rotation cos=" + to_string(c) + " sin=" + to_string(s);
      break;
    }
  }
  const Rational ds = draw_int(rng, -2, 2);
  const Rational dr = draw_int(rng, -2, 2);
  const SL2Element g = SL2Element::upper(ds) * SL2Element::lower(dr);
  out.element = g * core * g.inverse();
  out.description += ", conjugated by (1 " + to_string(ds) + "; 0 1)(1 0; " + to_string(dr) + " 1)";
  return out;
}

/// Fixed representatives of the three kinds: diag(2, 1/2), (1 1; 0 1) and
/// the rotation with cos 3/5, sin 4/5.
inline std::vector<HSample> h_representatives() {
  using models::SL2Element;
  return {{SampleKind::hyperbolic, SL2Element::diagonal(2), "d1 = diag(2, 1/2)"},
          {SampleKind::unipotent, SL2Element::upper(1), "u1 = (1 1; 0 1)"},
          {SampleKind::elliptic, SL2Element::rotation(Rational(3, 5), Rational(4, 5)), "k1 = rotation(3/5, 4/5)"}};
}

/// Σ cₖ·basisₖ with integer cₖ drawn from [−bound, bound].
inline Matrix random_combination(std::mt19937_64& rng, const std::vector<Matrix>& basis, long bound) {
  if (basis.empty()) throw DomainError("random_combination: empty basis");
  Matrix out(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const long c = draw_int(rng, -bound, bound);
    if (c != 0) out = out + Rational(c) * b;
  }
  return out;
}

}  // namespace nilcert
