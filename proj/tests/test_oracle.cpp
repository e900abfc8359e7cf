#include <gtest/gtest.h>

#include <random>

#include "landen/agm.hpp"
#include "landen/oracle.hpp"

using namespace landen;
using namespace landen::oracle;

namespace {

double diff(const BigFloat& a, const BigFloat& b) { return abs(a - b).to_double(); }

QRatFunc rf(std::initializer_list<long> n, std::initializer_list<long> d) {
  return QRatFunc(make_qpoly(n), make_qpoly(d));
}

// random integrand: product of positive-definite quadratics over a numerator two degrees short
QRatFunc random_integrand(std::mt19937& rng, int quads) {
  std::uniform_int_distribution<long> small(-4, 4), pos(1, 6);
  QPoly den = QPoly::constant(BigRat(1));
  for (int i = 0; i < quads; ++i) {
    long b = small(rng), c = pos(rng);
    if (b * b >= 4 * c) c = b * b / 4 + 1;
    den *= make_qpoly({c, b, 1});
  }
  std::vector<BigRat> num;
  for (int k = 0; k <= 2 * quads - 2; ++k) num.emplace_back(small(rng));
  if (QPoly(num).is_zero()) num[0] = 1;
  return QRatFunc(QPoly(num), den);
}

}  // namespace

TEST(RealLine, Examples) {
  Digits d{40};
  EXPECT_LT(diff(integrate_real_line(rf({1}, {1, 0, 1}), d).value, const_pi(d)), 1e-35);

  BigFloat pi = const_pi(d), r3 = sqrt(BigFloat(3L, d));
  BigFloat want = pi / 9 * (r3 * cos(pi / 9) * 2 + r3 * cos(pi * 2 / 9) + sin(pi * 2 / 9) * 3);
  QuadratureResult q = integrate_real_line(rf({1}, {1, 0, 0, 1, 0, 0, 1}), d);
  EXPECT_TRUE(q.converged);
  EXPECT_LT(diff(q.value, want), 1e-35);

  q = integrate_real_line(rf({5, 3}, {208, 184, 74, 14, 1}), d);
  EXPECT_LT(diff(q.value, -pi * 7 / 12), 1e-35);
}

TEST(RealLine, Errors) {
  Digits d{30};
  EXPECT_THROW(integrate_real_line(rf({1}, {-1, 0, 1}), d), domain_error);
  EXPECT_THROW(integrate_real_line(rf({0, 1}, {1, 0, 1}), d), domain_error);
  EXPECT_THROW(integrate_real_line(rf({1}, {0, 0, 1}), d), domain_error);
}

TEST(HalfLine, Examples) {
  Digits d{40};
  BigFloat pi = const_pi(d);
  EXPECT_LT(diff(integrate_half_line(rf({1}, {1, 0, 1}), d).value, pi / 2), 1e-35);
  EXPECT_LT(diff(integrate_half_line(rf({1}, {1, 0, 2, 0, 1}), d).value, pi / 4), 1e-35);
  // (x^4+2x^2+1)/(x^2+1)^3 is 1/(x^2+1)
  EXPECT_LT(diff(integrate_half_line(rf({1, 0, 2, 0, 1}, {1, 0, 3, 0, 3, 0, 1}), d).value, pi / 2), 1e-35);
  // not even: 1/(x^2+x+1) gives 2 pi / (3 sqrt 3)
  QuadratureResult q = integrate_half_line(rf({1}, {1, 1, 1}), d);
  EXPECT_TRUE(q.converged);
  EXPECT_LT(diff(q.value, pi * 2 / (sqrt(BigFloat(3L, d)) * 3)), 1e-30);
}

TEST(HalfLine, FloatIntegrandAgrees) {
  Digits d{40};
  QRatFunc r = rf({3, 0, 1}, {2, 0, 5, 0, 1, 0, 1});
  FRatFunc f(to_float(r.num, d), to_float(r.den, d));
  EXPECT_LT(diff(integrate_half_line(f, d).value, integrate_half_line(r, d).value), 1e-35);
  FRatFunc odd(to_float(make_qpoly({0, 1}), d), to_float(make_qpoly({1, 0, 0, 0, 1}), d));
  EXPECT_THROW(integrate_half_line(odd, d), invalid_input);
}

TEST(HalfLine, Errors) {
  Digits d{30};
  EXPECT_THROW(integrate_half_line(rf({1}, {-1, 0, 1}), d), domain_error);
  EXPECT_THROW(integrate_half_line(rf({1}, {0, 1, 1}), d), domain_error);
  EXPECT_THROW(integrate_half_line(rf({1, 1}, {1, 0, 1}), d), domain_error);
  // root only on the negative axis is fine
  EXPECT_NO_THROW(integrate_half_line(rf({1}, {1, 2, 1}), d));
}

TEST(Trig, Examples) {
  Digits d{40};
  BigFloat pi = const_pi(d), one(1L, d), two(2L, d), r2 = sqrt(two);
  EXPECT_LT(diff(integrate_trig(one, one, d).value, pi / 2), 1e-35);
  EXPECT_LT(diff(integrate_trig(two, one, d).value, pi / (means::agm_value(two, one) * 2)), 1e-35);
  BigFloat g1 = integrate_trig(r2, one, d).value, g2 = integrate_trig(one, r2, d).value;
  EXPECT_LT(diff(g1, g2), 1e-35);
  EXPECT_LT(diff(g1, pi / (means::agm_value(r2, one) * 2)), 1e-35);
  EXPECT_THROW(integrate_trig(BigFloat(0L, d), one, d), domain_error);
  EXPECT_THROW(integrate_trig(one, -one, d), domain_error);
}

TEST(Interval, EndpointSingularity) {
  Digits d{30};
  auto q = integrate_interval([](const BigFloat& x) { return 1L / sqrt(x); }, BigFloat(0L, d), BigFloat(1L, d), d);
  EXPECT_LT(diff(q.value, BigFloat(2L, d)), 1e-20);
  auto g = integrate_function_real_line([](const BigFloat& x) { return exp(-x * x); }, d);
  EXPECT_LT(diff(g.value, sqrt(const_pi(d))), 1e-20);
}

// error estimate covers the change seen at twice the precision
TEST(Properties, SelfConsistency) {
  std::mt19937 rng(31);
  for (int i = 0; i < 12; ++i) {
    QRatFunc r = random_integrand(rng, 1 + i % 4);
    QuadratureResult lo = integrate_real_line(r, Digits{30});
    QuadratureResult hi = integrate_real_line(r, Digits{60});
    ASSERT_TRUE(lo.converged);
    EXPECT_GE(lo.error_estimate.to_double(), 0.0);
    EXPECT_GT(lo.evaluations, 0);
    double slack = 1e-25 * std::max(1.0, std::abs(hi.value.to_double()));
    EXPECT_LE(diff(lo.value, hi.value), lo.error_estimate.to_double() + slack) << i;
  }
}

TEST(Properties, OddPartVanishes) {
  std::mt19937 rng(32);
  Digits d{40};
  for (int i = 0; i < 10; ++i) {
    QRatFunc r = random_integrand(rng, 2 + i % 3);
    QPoly even_den = r.den * r.den.compose(make_qpoly({0, -1}));
    std::vector<BigRat> odd;
    for (int k = 0; k <= even_den.degree() - 2; ++k) odd.emplace_back(k % 2 ? BigRat(k + 1) : BigRat(0));
    QuadratureResult q = integrate_real_line(QRatFunc(QPoly(odd), even_den), d);
    EXPECT_TRUE(q.converged) << i;
    EXPECT_LT(std::abs(q.value.to_double()), 1e-30) << i;
  }
}

TEST(Properties, Scaling) {
  std::mt19937 rng(33);
  Digits d{40};
  for (int i = 0; i < 8; ++i) {
    QRatFunc r = random_integrand(rng, 1 + i % 3);
    BigFloat base = integrate_real_line(r, d).value;
    for (long lam : {2L, 5L}) {
      QPoly sub{BigRat(0), BigRat(1, lam)};
      QRatFunc s(r.num.compose(sub), r.den.compose(sub) * BigRat(lam));
      EXPECT_LT(diff(integrate_real_line(s, d).value, base), 1e-33) << i << " " << lam;
    }
  }
}
