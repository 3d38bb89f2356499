#include <gtest/gtest.h>

#include "generators.hpp"
#include "ksod/abelian.hpp"
#include "ksod/algebraic.hpp"
#include "ksod/error.hpp"
#include "ksod/factor.hpp"
#include "ksod/matrix.hpp"
#include "ksod/poly.hpp"

using namespace ksod;
using ksod::testing::Rng;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

bool divides_chain(const std::vector<Integer>& d) {
  // nonzero entries first, each dividing the next; zeros trail.
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i + 1 < d.size() && d[i + 1] != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

TEST(SquarefreePart, AlreadySquarefree) { EXPECT_EQ(squarefree_part(P({1, 0, 1})), P({1, 0, 1})); }

TEST(SquarefreePart, DoubleRoot) { EXPECT_EQ(squarefree_part(P({1, -2, 1})), P({-1, 1})); }

TEST(SquarefreePart, MixedMultiplicity) {
  // t^3 - t^2 = t^2 (t - 1) -> t (t - 1)
  EXPECT_EQ(squarefree_part(P({0, 0, -1, 1})), P({0, -1, 1}));
}

TEST(SquarefreePart, ZeroPolynomialThrows) {
  try {
    squarefree_part(UniPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(SquarefreePart, SquareHasSameSquarefreePart) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c;
    const long deg = ksod::testing::uniform(rng, 1, 5);
    for (long i = 0; i <= deg; ++i) c.emplace_back(ksod::testing::uniform(rng, -5, 5));
    if (c.back() == 0) c.back() = 1;
    const UniPoly p(c);
    EXPECT_EQ(squarefree_part(p * p), squarefree_part(p));
  }
}

TEST(Polynomials, DivmodAndGcd) {
  const UniPoly a = P({-1, 0, 1});  // t^2 - 1
  const UniPoly b = P({1, 1});      // t + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, P({1, 2, 1})), P({1, 1}));
}

TEST(Polynomials, BivariateGcdAndSquarefree) {
  const BiPoly z = BiPoly::z(), w = BiPoly::w();
  const BiPoly f = z * z + w * w * w;
  const BiPoly g = z - w;
  EXPECT_EQ(gcd(f * g, g * (z + w)), g);
  EXPECT_TRUE(is_squarefree(f * g));
  EXPECT_FALSE(is_squarefree(f * f));
  EXPECT_FALSE(is_squarefree(z * z));
  // Pure-w common factors and leading coefficients vanishing at w = 0.
  EXPECT_EQ(gcd(w * w * z + w, w * z * z), w);
  EXPECT_EQ(gcd(w * z + BiPoly::constant(Rational(1)), w * z - BiPoly::constant(Rational(1))),
            BiPoly::constant(Rational(1)));
}

TEST(Polynomials, BivariateGcdRecoversPlantedFactor) {
  ksod::testing::Rng rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const BiPoly f = ksod::testing::random_bipoly(rng, 3, 3);
    const BiPoly g = ksod::testing::random_bipoly(rng, 3, 3);
    const BiPoly h = ksod::testing::random_bipoly(rng, 3, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero() || gcd(g, h).total_degree() > 0) continue;
    const BiPoly d = gcd(f * g, f * h);
    EXPECT_EQ(d, gcd(f, f)) << to_string(f);
    EXPECT_EQ(gcd(d, f), d);
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(Polynomials, SquarefreeMatchesPlantedSquares) {
  ksod::testing::Rng rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly f = ksod::testing::random_bipoly(rng, 3, 3);
    const BiPoly g = ksod::testing::random_bipoly(rng, 3, 3);
    if (f.total_degree() <= 0 || g.is_zero()) continue;
    EXPECT_FALSE(is_squarefree(f * f * g)) << to_string(f);
  }
}

TEST(Factor, RationalRoots) {
  // (2t - 1)(t + 3)(t^2 + 1)
  const UniPoly p = P({-1, 2}) * P({3, 1}) * P({1, 0, 1});
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-3));
  EXPECT_EQ(roots[1], Rational(1, 2));
}

TEST(Factor, IrreducibleFactorsFindsQuadraticPair) {
  // (t^2 + 1)(t^2 - 2) has no rational roots but splits over Q.
  const auto f = irreducible_factors(P({1, 0, 1}) * P({-2, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], P({-2, 0, 1}));
  EXPECT_EQ(f[1], P({1, 0, 1}));
}

TEST(Factor, IrreducibleQuarticStaysWhole) {
  const auto f = irreducible_factors(P({1, 0, 0, 0, 1}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].degree(), 4);
}

TEST(Factor, ProductOfCubics) {
  const UniPoly p = P({-2, 0, 0, 1}) * P({1, 1, 0, 1});
  const auto f = irreducible_factors(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0] * f[1], p);
}

TEST(AlgebraicNumbers, GaussianArithmetic) {
  auto field = std::make_shared<const NumberField>(P({1, 0, 1}));
  const AlgNum i = AlgNum::generator(field);
  EXPECT_EQ(i * i, AlgNum(-1));
  const AlgNum x = AlgNum(3) + i * AlgNum(2);
  EXPECT_EQ(x * x.inverse(), AlgNum(1));
  EXPECT_TRUE((i * i).is_rational());
}

TEST(Smith, DiagonalExample) {
  const auto f = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(f.d, IntMatrix::from_rows({{1, 0}, {0, 6}}));
  EXPECT_EQ(f.u * IntMatrix::from_rows({{2, 0}, {0, 3}}) * f.v, f.d);
}

TEST(Smith, OneByOneIdentity) {
  const auto f = smith_normal_form(IntMatrix::from_rows({{1}}));
  EXPECT_EQ(f.d, IntMatrix::identity(1));
  EXPECT_EQ(f.u, IntMatrix::identity(1));
  EXPECT_EQ(f.v, IntMatrix::identity(1));
}

TEST(Smith, ZeroMatrix) {
  const auto f = smith_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(f.d, IntMatrix(2, 2));
}

TEST(Smith, EmptyShapes) {
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 3)).d, IntMatrix(0, 3));
  EXPECT_EQ(cokernel(IntMatrix(2, 0)), FinAbGroup::free(2));
  EXPECT_TRUE(cokernel(IntMatrix(0, 2)).is_trivial());
}

TEST(Smith, NegativePivotIsNormalised) {
  const auto f = smith_normal_form(IntMatrix::from_rows({{-4}}));
  EXPECT_EQ(f.d, IntMatrix::from_rows({{4}}));
}

TEST(Smith, RandomProperties) {
  Rng rng(20240501);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = static_cast<std::size_t>(ksod::testing::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(ksod::testing::uniform(rng, 1, 6));
    const IntMatrix m = ksod::testing::random_matrix(rng, r, c, 9);
    const SmithForm f = smith_normal_form(m);
    ASSERT_EQ(f.u * m * f.v, f.d) << m.to_string();
    ASSERT_TRUE(f.d.is_diagonal());
    ASSERT_TRUE(divides_chain(f.diagonal())) << f.d.to_string();
    ASSERT_EQ(abs(f.u.determinant()), 1);
    ASSERT_EQ(abs(f.v.determinant()), 1);
    if (r == c) {
      Integer prod = 1;
      for (const auto& d : f.diagonal()) prod *= d;
      ASSERT_EQ(prod, abs(m.determinant()));
    }
  }
}

TEST(Cokernel, Examples) {
  EXPECT_TRUE(cokernel(IntMatrix::from_rows({{1}})).is_trivial());
  EXPECT_EQ(cokernel(IntMatrix::from_rows({{0}})), FinAbGroup::free(1));
  EXPECT_EQ(cokernel(IntMatrix::from_rows({{2}})), FinAbGroup::from_cyclic_orders({Integer(2)}));
}

TEST(Cokernel, RankIsRowsMinusMatrixRank) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(ksod::testing::uniform(rng, 1, 5));
    const auto c = static_cast<std::size_t>(ksod::testing::uniform(rng, 1, 5));
    const IntMatrix m = ksod::testing::random_matrix(rng, r, c, 3);
    EXPECT_EQ(cokernel(m).free_rank(), r - m.rank());
  }
}

TEST(Cokernel, TorsionOrderIsDeterminant) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(ksod::testing::uniform(rng, 1, 5));
    const IntMatrix m = ksod::testing::random_matrix(rng, n, n, 6);
    const Integer det = m.determinant();
    if (det == 0) continue;
    const FinAbGroup g = cokernel(m);
    Integer order = 1;
    for (const auto& d : g.invariant_factors()) order *= d;
    EXPECT_EQ(g.free_rank(), 0u);
    EXPECT_EQ(order, abs(det));
  }
}

TEST(FinAbGroup, NormalisesToInvariantFactors) {
  const auto g = FinAbGroup::from_cyclic_orders({Integer(2), Integer(3), Integer(0), Integer(1), Integer(4)});
  EXPECT_EQ(g.free_rank(), 1u);
  ASSERT_EQ(g.invariant_factors().size(), 2u);
  EXPECT_EQ(g.invariant_factors()[0], 2);
  EXPECT_EQ(g.invariant_factors()[1], 12);
  EXPECT_EQ(g.to_string(), "Z + Z/2 + Z/12");
}

TEST(FinAbGroup, DirectSumAndPower) {
  const auto z2 = FinAbGroup::from_cyclic_orders({Integer(2)});
  EXPECT_EQ(z2.power(2), FinAbGroup::from_cyclic_orders({Integer(2), Integer(2)}));
  EXPECT_EQ(direct_sum(FinAbGroup::free(2), z2).to_string(), "Z^2 + Z/2");
  EXPECT_TRUE(z2.power(0).is_trivial());
  EXPECT_EQ(FinAbGroup().to_string(), "0");
}

TEST(IntMatrix, ShapeMismatch) {
  try {
    IntMatrix(2, 2, {Integer(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MatrixShapeMismatch);
  }
}
