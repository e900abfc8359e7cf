#include <gtest/gtest.h>

#include <random>

#include "landen/oracle.hpp"
#include "landen/quartic.hpp"

using namespace landen;
using namespace landen::quartic;

namespace {

double diff(const BigFloat& a, const BigFloat& b) { return abs(a - b).to_double(); }

}  // namespace

TEST(Coeffs, PositiveAndIntegral) {
  for (long m = 0; m <= 30; ++m) {
    QuarticCoeffs q = quartic_coeffs(m);  // throws if either invariant breaks
    ASSERT_EQ(q.d.size(), static_cast<std::size_t>(m + 1));
    ASSERT_EQ(q.A.size(), static_cast<std::size_t>(m + 1));
  }
}

TEST(Coeffs, SmallValues) {
  EXPECT_EQ(d_coeff(0, 0), BigRat(1));
  EXPECT_EQ(d_coeff(0, 1), BigRat(3, 2));
  EXPECT_EQ(d_coeff(1, 1), BigRat(1));
  // P_2(a) = (21 + 30a + 12a^2)/8, by hand from the sum
  EXPECT_EQ(P_poly(2), (QPoly{BigRat(21, 8), BigRat(15, 4), BigRat(3, 2)}));
  EXPECT_EQ(A_coeff(1, 1), BigInt(4));
  EXPECT_EQ(d_coeff(3, 2), BigRat(0));
}

TEST(Integral, MZero) {
  Digits d{40};
  BigFloat v = quartic_integral(BigFloat(1L, d), 0);
  EXPECT_LT(diff(v, const_pi(d) / 4), 1e-38);
}

// a = 1 is (1+x^2)^-(2m+2); its integral is pi/2 (4m+1)!!/(4m+2)!!
TEST(Integral, WallisCase) {
  Digits d{40};
  for (long m = 0; m <= 6; ++m) {
    BigRat w(1, 2);
    for (long j = 1; j <= 2 * m + 1; ++j) w *= BigRat(2 * j - 1, 2 * j);
    BigFloat want = const_pi(d) * BigFloat(w, d);
    EXPECT_LT(diff(quartic_integral(BigFloat(1L, d), m), want), 1e-36) << m;
  }
}

TEST(Integral, MatchesOracle) {
  Digits d{30};
  const BigRat as[] = {BigRat(1, 2), BigRat(1), BigRat(2), BigRat(5)};
  for (long m = 0; m <= 6; ++m)
    for (const BigRat& a : as) {
      auto q = oracle::integrate_half_line(quartic_integrand(a, m), d);
      BigFloat v = quartic_integral(BigFloat(a, d), m);
      EXPECT_LT(diff(v, q.value), 1e-12) << "m=" << m << " a=" << a.get_str();
    }
}

TEST(Integral, NegativeA) {
  Digits d{30};
  BigRat a(-1, 2);
  auto q = oracle::integrate_half_line(quartic_integrand(a, 3), d);
  EXPECT_LT(diff(quartic_integral(BigFloat(a, d), 3), q.value), 1e-12);
}

TEST(Integral, Errors) {
  Digits d{30};
  EXPECT_THROW(quartic_integral(BigFloat(-1L, d), 2), domain_error);
  EXPECT_THROW(quartic_integral(BigFloat(-3L, d), 0), domain_error);
  EXPECT_THROW(quartic_integral(BigFloat(1L, d), -1), invalid_input);
}

TEST(Jacobi, ExactForSmallM) {
  const std::vector<BigRat> samples = {BigRat(0), BigRat(1, 2), BigRat(3), BigRat(-2, 7), BigRat(5)};
  for (long m = 0; m <= 12; ++m) {
    EXPECT_TRUE(jacobi_identity_check(m, samples)) << m;
    EXPECT_EQ(P_poly(m), jacobi_poly(m)) << m;
  }
  EXPECT_EQ(P_poly(2)(BigRat(1, 2)), jacobi_poly(2)(BigRat(1, 2)));
  EXPECT_EQ(P_poly(5)(BigRat(3)), jacobi_poly(5)(BigRat(3)));
}

TEST(Jacobi, RandomRationals) {
  std::mt19937 rng(22);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 97);
  std::vector<BigRat> samples;
  for (int i = 0; i < 20; ++i) samples.push_back(make_rat(num(rng), den(rng)));
  for (long m = 0; m <= 8; ++m) EXPECT_TRUE(jacobi_identity_check(m, samples)) << m;
}

TEST(Shape, UnimodalAndLogConcave) {
  EXPECT_EQ(unimodal_check(1), std::optional<long>(0));  // 3/2, 1
  for (long m = 2; m <= 30; ++m) {
    auto peak = unimodal_check(m);
    ASSERT_TRUE(peak.has_value()) << m;
    EXPECT_LE(*peak, m);
    EXPECT_TRUE(logconcave_check(m)) << m;
  }
  // m = 2: 21/8, 30/8, 12/8
  EXPECT_EQ(unimodal_check(2), std::optional<long>(1));
}

TEST(Nu2, Identity) {
  for (long m = 0; m <= 20; ++m) EXPECT_EQ(mpz_odd_p(A_coeff(0, m).get_mpz_t()), 1) << m;
  EXPECT_TRUE(nu2_identity_check(1, 1));
  for (long m = 1; m <= 30; ++m)
    for (long l = 1; l <= m; ++l) EXPECT_TRUE(nu2_identity_check(l, m)) << l << "," << m;
  EXPECT_THROW(nu2_identity_check(3, 2), precondition_error);
  EXPECT_THROW(nu2(BigInt(0)), domain_error);
}

TEST(AlphaBeta, FirstPairs) {
  AlphaBetaPair one = alpha_beta_reconstruct(1);
  EXPECT_EQ(one.alpha, (QPoly{BigRat(1), BigRat(2)}));
  EXPECT_EQ(one.beta, QPoly{BigRat(1)});
  AlphaBetaPair zero = alpha_beta_reconstruct(0);
  EXPECT_EQ(zero.alpha, QPoly{BigRat(1)});
  EXPECT_TRUE(zero.beta.is_zero());
}

TEST(AlphaBeta, ReconstructionMatchesRecurrence) {
  for (long l = 0; l <= 8; ++l) {
    AlphaBetaPair r = alpha_beta_reconstruct(l), y = alpha_beta_recurrence(l);
    EXPECT_EQ(r.alpha, y.alpha) << l;
    EXPECT_EQ(r.beta, y.beta) << l;
    EXPECT_EQ(r.alpha.degree(), l);
    if (l > 0) EXPECT_EQ(r.beta.degree(), l - 1);
  }
}

TEST(AlphaBeta, RepresentsA) {
  for (long l = 0; l <= 6; ++l) {
    AlphaBetaPair ab = alpha_beta_recurrence(l);
    for (long m = l; m <= 30; ++m) {
      BigRat v = ab.alpha(BigRat(m)) * BigRat(four_product(m, -1)) - ab.beta(BigRat(m)) * BigRat(four_product(m, 1));
      EXPECT_EQ(v, BigRat(A_coeff(l, m))) << l << "," << m;
    }
  }
}

TEST(AlphaBeta, LinearCoefficient) {
  for (long m = 0; m <= 15; ++m) EXPECT_EQ(d1_formula(m), d_coeff(1, m)) << m;
}

TEST(AlphaBeta, LittleRoots) {
  for (long l = 1; l <= 8; ++l) {
    BigFloat dev = little_root_deviation(alpha_beta_reconstruct(l));
    EXPECT_LT(dev.to_double(), 1e-8) << l;
  }
  EXPECT_TRUE(little_root_check(4));
}

TEST(AlphaBeta, InconsistentSystem) {
  std::vector<std::vector<BigRat>> M = {{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}, {BigRat(1), BigRat(1)}};
  EXPECT_THROW(quartic::detail::solve_exact(M, {BigRat(1), BigRat(1), BigRat(3)}), internal_error);
  auto x = quartic::detail::solve_exact(M, {BigRat(1), BigRat(2), BigRat(3)});
  EXPECT_EQ(x[0], BigRat(1));
  EXPECT_EQ(x[1], BigRat(2));
}

TEST(Expansion, SqrtNest) {
  SeriesCheck z = sqrt_expansion_check(BigRat(3), BigRat(0), 5);
  EXPECT_LT(z.residual.to_double(), 1e-45);
  EXPECT_TRUE(sqrt_expansion_check(BigRat(1), BigRat(1, 10), 8).holds(10));
  EXPECT_TRUE(sqrt_expansion_check(BigRat(2), BigRat(-1, 20), 6).holds(10));
  EXPECT_THROW(sqrt_expansion_check(BigRat(1), BigRat(1), 4), precondition_error);
}

// halving c should shrink the residual by about 2^(K+1)
TEST(Expansion, SqrtNestOrder) {
  for (long K : {3L, 5L, 8L}) {
    double r1 = sqrt_expansion_check(BigRat(3, 2), BigRat(1, 50), K).residual.to_double();
    double r2 = sqrt_expansion_check(BigRat(3, 2), BigRat(1, 100), K).residual.to_double();
    double order = std::log2(r1 / r2);
    EXPECT_NEAR(order, K + 1, 0.2) << K;
  }
}

TEST(Expansion, Ramanujan) {
  EXPECT_LT(ramanujan_bk_check(BigRat(2), BigRat(0), 6).residual.to_double(), 1e-45);
  EXPECT_TRUE(ramanujan_bk_check(BigRat(1), BigRat(1, 10), 8).holds(10));
  EXPECT_TRUE(ramanujan_bk_check(BigRat(2), BigRat(1, 10), 8).holds(10));
  EXPECT_TRUE(ramanujan_bk_check(BigRat(1, 3), BigRat(-1, 8), 12).holds(10));
  EXPECT_TRUE(ramanujan_bk_check(BigRat(-5, 2), BigRat(1, 5), 10).holds(100));
  // integer n, even k beyond n: the series terminates in the odd/even pattern
  EXPECT_EQ(ramanujan_b(2, BigRat(1)), BigRat(1));
  EXPECT_EQ(ramanujan_b(4, BigRat(2)), BigRat(0));
  EXPECT_EQ(ramanujan_b(3, BigRat(3)), BigRat(24));
  EXPECT_THROW(ramanujan_bk_check(BigRat(1), BigRat(1, 2), 4), precondition_error);
}
