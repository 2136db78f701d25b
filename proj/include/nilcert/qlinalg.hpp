#pragma once

// Exact linear algebra over ℚ: rationals, dense matrices, canonical
// subspaces, characteristic polynomials and nilpotence tests.

#include "nilcert/error.hpp"
#include "nilcert/matrix.hpp"
#include "nilcert/polynomial.hpp"
#include "nilcert/rational.hpp"
#include "nilcert/subspace.hpp"

namespace nilcert {

/// char_poly(m) = xⁿ.
inline bool is_nilpotent(const Matrix& m) {
  m.require_square("is_nilpotent");
  return char_poly(m) == Polynomial::monomial(1, m.rows());
}

inline bool is_unipotent(const Matrix& m) {
  m.require_square("is_unipotent");
  return is_nilpotent(m - Matrix::identity(m.rows()));
}

/// ker(m − λI).
inline Subspace eigenspace(const Matrix& m, const Rational& lambda) {
  m.require_square("eigenspace");
  return kernel_basis(m - lambda * Matrix::identity(m.rows()));
}

}  // namespace nilcert
