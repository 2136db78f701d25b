#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nilcert/qlinalg.hpp"

namespace nilcert::testkit {

inline Rational random_rational(std::mt19937& rng, int bound = 4) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return make_rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound = 4) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, bound);
  return m;
}

/// Product of `rank` random rows, giving a matrix of rank at most `rank`.
inline Matrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  return random_matrix(rng, rows, rank) * random_matrix(rng, rank, cols);
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, int bound = 4) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, bound);
  return v;
}

/// Leibniz expansion over all permutations.
inline Rational permutation_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(x·I − m) evaluated at x.
inline Rational char_poly_at(const Matrix& m, const Rational& x) {
  return permutation_det(x * Matrix::identity(m.rows()) - m);
}

}  // namespace nilcert::testkit
