#include <gtest/gtest.h>

#include <random>

#include "nilcert/models.hpp"
#include "nilcert/qlinalg.hpp"
#include "test_support.hpp"

using namespace nilcert;

TEST(Rational, AlwaysReduced) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(1, 2) + make_rational(1, 3), make_rational(5, 6));
  EXPECT_EQ(make_rational(1, 6) + make_rational(1, 3), make_rational(1, 2));
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational(" -3/6 "), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("+4/2"), Rational(2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
  for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/0", "--1", "2/-"}) {
    EXPECT_THROW(parse_rational(bad), DomainError) << bad;
  }
}

TEST(Matrix, ShapesAndProducts) {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), 5);
  EXPECT_EQ(a * (Vector{1, 1}), (Vector{3, 7}));
  EXPECT_EQ(Matrix::unflatten(2, a.flatten()), a);
  EXPECT_THROW(a * Matrix(3, 1), DimensionError);
  EXPECT_THROW(Matrix(2, 2, {1, 2, 3}), DimensionError);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionError);
  EXPECT_THROW(Matrix(2, 3).trace(), DimensionError);
}

TEST(Rref, Examples) {
  const auto id = rref(Matrix::identity(2));
  EXPECT_EQ(id.matrix, Matrix::identity(2));
  EXPECT_EQ(id.rank, 2u);

  const auto r = rref(Matrix{{2, 4}, {1, 2}});
  EXPECT_EQ(r.matrix, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});

  EXPECT_EQ(rank(models::rho_V(models::nu_plus())), 4u);
}

TEST(Rref, IdempotentOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Matrix m = t % 2 ? testkit::random_matrix(rng, rows, cols) : testkit::random_low_rank(rng, rows, cols, 2);
    const auto once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
    EXPECT_LE(once.rank, std::min(rows, cols));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix(5, 5)), Subspace::full(5));
  EXPECT_EQ(kernel_basis(models::rho_V(models::nu_plus())), Subspace::span(5, {unit_vector(5, 0)}));
  EXPECT_TRUE(kernel_basis(Matrix{{1, 2}, {3, 4}}).is_zero());
}

TEST(Kernel, VectorsAreAnnihilatedAndDimensionIsNullity) {
  std::mt19937 rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    const Matrix m = testkit::random_low_rank(rng, rows, cols, 1 + rng() % 3);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), cols - rank(m));
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = testkit::random_matrix(rng, 4, 4);
    if (rank(m) < 4) continue;
    EXPECT_EQ(m * inverse(m), Matrix::identity(4));
  }
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), DomainError);
}

TEST(Subspace, CanonicalAcrossSpanningSets) {
  const Vector a{1, 2, 0, 1}, b{0, 1, 1, 1};
  const Subspace s1 = Subspace::span(4, {a, b});
  const Subspace s2 = Subspace::span(4, {a + b, Rational(3) * a - b, a});
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.basis(), s2.basis());

  std::mt19937 rng(14);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = testkit::random_matrix(rng, 3, 6);
    const Matrix mix = testkit::random_matrix(rng, 3, 3);
    if (rank(mix) < 3) continue;
    EXPECT_EQ(Subspace::row_space(m), Subspace::row_space(mix * m));
  }
}

TEST(Subspace, SumIntersectMembership) {
  const auto s = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  const auto t = Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}});
  EXPECT_EQ(subspace_sum(s, t), Subspace::full(3));
  EXPECT_EQ(subspace_intersect(s, t), Subspace::span(3, {Vector{0, 1, 0}}));
  EXPECT_EQ(subspace_sum(s, s), s);
  EXPECT_EQ(subspace_intersect(s, s), s);
  EXPECT_TRUE(subspace_contains(s, Vector{2, -1, 0}));
  EXPECT_FALSE(subspace_contains(s, Vector{0, 0, 1}));
  EXPECT_THROW(subspace_sum(s, Subspace::full(4)), DimensionError);
  EXPECT_THROW(s.contains(Vector{1, 2}), DimensionError);
  EXPECT_EQ(s.coordinates(Vector{2, -1, 0}), (Vector{2, -1}));
  EXPECT_THROW(s.coordinates(Vector{0, 0, 1}), DomainError);

  const auto L = models::build_L();
  EXPECT_TRUE(subspace_contains(L, models::default_p()));
}

TEST(Subspace, IntersectionDimensionFormula) {
  std::mt19937 rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto a = Subspace::row_space(testkit::random_low_rank(rng, 3, 6, 1 + rng() % 3));
    const auto b = Subspace::row_space(testkit::random_low_rank(rng, 4, 6, 1 + rng() % 4));
    const auto meet = subspace_intersect(a, b);
    EXPECT_EQ(subspace_sum(a, b).dim() + meet.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(b.contains(meet));
  }
}

TEST(Subspace, AnnihilatorAndImage) {
  const auto s = Subspace::span(3, {Vector{1, 1, 0}});
  const auto ann = annihilator(s);
  EXPECT_EQ(ann.dim(), 2u);
  EXPECT_FALSE(ann.contains(Vector{1, 1, 0}));
  EXPECT_EQ(image(Matrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, s), Subspace::span(3, {Vector{0, 1, 1}}));
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(Matrix::identity(2)), Polynomial({1, -2, 1}));
  EXPECT_EQ(char_poly(models::nu_plus()), Polynomial::monomial(1, 3));
  EXPECT_EQ(char_poly(models::rho_V(models::delta())), Polynomial::from_roots({4, 2, 0, -2, -4}));
  EXPECT_EQ(char_poly(Matrix(0, 0)), Polynomial::constant(1));
  EXPECT_THROW(char_poly(Matrix(2, 3)), DimensionError);
}

TEST(CharPoly, AgreesWithPermutationExpansion) {
  std::mt19937 rng(16);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix m = testkit::random_matrix(rng, n, n);
    const Polynomial p = char_poly(m);
    EXPECT_EQ(p.degree(), static_cast<long>(n));
    EXPECT_TRUE(p.is_monic());
    for (int x = -2; x <= 2; ++x) EXPECT_EQ(p(x), testkit::char_poly_at(m, x));
  }
}

TEST(CharPoly, BlockTriangularFactorizes) {
  std::mt19937 rng(17);
  for (int t = 0; t < 15; ++t) {
    const Matrix a = testkit::random_matrix(rng, 3, 3), b = testkit::random_matrix(rng, 2, 2);
    Matrix m = block_diagonal(a, b);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 3; c < 5; ++c) m(r, c) = testkit::random_rational(rng);
    EXPECT_EQ(char_poly(m), char_poly(a) * char_poly(b));
  }
}

TEST(Polynomial, ArithmeticAndFormatting) {
  const Polynomial p({1, -2, 0, 1});
  EXPECT_EQ(p.to_string(), "x^3 - 2x + 1");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial().degree(), -1);
  const auto [q, r] = divmod(p, Polynomial::linear_root(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * Polynomial::linear_root(1), p);
  EXPECT_EQ(p.derivative(), Polynomial({-2, 0, 3}));
  EXPECT_EQ(gcd(Polynomial::from_roots({1, 2, 2}), Polynomial::from_roots({2, 3})), Polynomial::linear_root(2));
}

TEST(Polynomial, RationalRootsAndSturm) {
  const auto roots = rational_roots(Polynomial::from_roots({make_rational(1, 2), -3, -3, 0}));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], (std::pair<Rational, std::size_t>{-3, 2}));
  EXPECT_EQ(roots[1], (std::pair<Rational, std::size_t>{0, 1}));
  EXPECT_EQ(roots[2], (std::pair<Rational, std::size_t>{make_rational(1, 2), 1}));

  const Polynomial x2m2({-2, 0, 1});  // roots ±√2
  EXPECT_TRUE(rational_roots(x2m2).empty());
  EXPECT_EQ(count_real_roots(x2m2), 2u);
  EXPECT_EQ(count_real_roots(Polynomial({1, 0, 1})), 0u);
  EXPECT_EQ(count_real_roots(Polynomial::from_roots({1, 1, 2})), 2u);

  // Large roots exercise the factorization path.
  const Rational big = make_rational(15625, 4096);
  const auto big_roots = rational_roots(Polynomial::from_roots({big, 1 / big, 1}));
  EXPECT_EQ(big_roots.size(), 3u);
}

TEST(Nilpotence, Examples) {
  EXPECT_TRUE(is_nilpotent(models::nu_plus()));
  EXPECT_FALSE(is_nilpotent(models::delta()));
  EXPECT_FALSE(is_unipotent(models::delta()));
  EXPECT_TRUE(is_unipotent(Matrix::identity(3) + models::nu_plus()));
  EXPECT_THROW(is_nilpotent(Matrix(2, 3)), DimensionError);
}

TEST(Nilpotence, PolynomialTestAgreesWithPowers) {
  std::mt19937 rng(18);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 4;
    Matrix m = testkit::random_matrix(rng, n, n, 2);
    if (t % 2) {
      // strictly upper triangular, conjugated
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c) m(r, c) = 0;
      const Matrix g = Matrix::identity(n) + testkit::random_matrix(rng, n, n, 1);
      if (rank(g) == n) m = g * m * inverse(g);
    }
    EXPECT_EQ(is_nilpotent(m), power(m, n).is_zero());
  }
}
