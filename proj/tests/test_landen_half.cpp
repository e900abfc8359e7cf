#include <gtest/gtest.h>

#include <random>

#include "landen/convergence.hpp"
#include "landen/landen_half.hpp"

using namespace landen;
using namespace landen::half;

namespace {

const Digits D50{50};

SexticParams<BigFloat> fparams(long a, long b, long c, long d, long e) {
  return {BigFloat(a, D50), BigFloat(b, D50), BigFloat(c, D50), BigFloat(d, D50), BigFloat(e, D50)};
}

double rel(const BigFloat& x, const BigFloat& y) { return (abs(x - y) / abs(y)).to_double(); }

// random point of Lambda_6 with a + b + 2 > 0 and a positive numerator
SexticParams<BigRat> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ab(-16, 64), num(0, 40);
  for (;;) {
    BigRat a = make_rat(ab(rng), 8), b = make_rat(ab(rng), 8);
    if (!in_lambda6(a, b) || a + b + 2 <= 0) continue;
    // keep away from the boundary so the quadrature stays cheap
    if (!in_lambda6(BigRat(a - make_rat(1, 2)), BigRat(b - make_rat(1, 2)))) continue;
    BigRat c = make_rat(num(rng), 8), d = make_rat(num(rng), 8), e = make_rat(num(rng) + 1, 8);
    return {a, b, c, d, e};
  }
}

}  // namespace

TEST(Phi6, FixedPoint) {
  auto o = phi6(fparams(3, 3, 1, 2, 1));
  EXPECT_LT(abs(o.a - 3).to_double(), 1e-45);
  EXPECT_LT(abs(o.b - 3).to_double(), 1e-45);
  EXPECT_LT(abs(o.c - 1).to_double(), 1e-45);
  EXPECT_LT(abs(o.d - 2).to_double(), 1e-45);
  EXPECT_LT(abs(o.e - 1).to_double(), 1e-45);
}

TEST(Phi6, OriginExample) {
  auto o = phi6(fparams(0, 0, 1, 0, 0));
  BigFloat two(2L, D50);
  EXPECT_LT(abs(o.a - BigFloat(9L, D50) / root(pow(two, 4L), 3)).to_double(), 1e-45);
  EXPECT_LT(abs(o.b - BigFloat(6L, D50) / root(pow(two, 2L), 3)).to_double(), 1e-45);
  EXPECT_LT(abs(o.c - 1L / root(pow(two, 2L), 3)).to_double(), 1e-45);
  EXPECT_LT(abs(o.d - BigFloat(3L, D50) / 2).to_double(), 1e-45);
  EXPECT_LT(abs(o.e - 1L / cbrt(two)).to_double(), 1e-45);
  EXPECT_LT(rel(u6(o, D50), u6(fparams(0, 0, 1, 0, 0), D50)), 1e-40);
}

TEST(Phi6, DomainError) {
  EXPECT_THROW(phi6(fparams(-1, -1, 1, 0, 0)), domain_error);
  EXPECT_THROW(phi6(fparams(-5, 1, 1, 0, 0)), domain_error);
}

TEST(Phi6, FromFourFourQuadratically) {
  SexticOrbit orbit = iterate_phi6(fparams(4, 4, 0, 0, 1), 20, 8);
  ASSERT_TRUE(orbit.converged);
  EXPECT_LE(orbit.states.size(), 9u);
  std::vector<BigFloat> err;
  for (const auto& x : orbit.states) err.push_back(distance_to_fixed(x));
  std::vector<BigFloat> last(err.end() - 3, err.end());
  EXPECT_GE(fitted_orders(last).at(0), 1.8);
}

TEST(Phi6, InvariantOnRandomPoints) {
  std::mt19937_64 rng(6);
  Digits d{30};
  for (int trial = 0; trial < 25; ++trial) {
    SexticParams<BigFloat> x = to_float(random_point(rng), d);
    EXPECT_LT(rel(u6(phi6(x), d), u6(x, d)), 1e-9);
  }
}

TEST(EvenStep, AgreesWithPhi6) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    SexticParams<BigRat> x = random_point(rng);
    SexticParams<BigFloat> via_chain = to_sextic(normalize_even(even_landen_step(from_sextic(x)), D50));
    SexticParams<BigFloat> closed = phi6(to_float(x, D50));
    EXPECT_LT(abs(via_chain.a - closed.a).to_double(), 1e-40);
    EXPECT_LT(abs(via_chain.b - closed.b).to_double(), 1e-40);
    EXPECT_LT(abs(via_chain.c - closed.c).to_double(), 1e-40);
    EXPECT_LT(abs(via_chain.d - closed.d).to_double(), 1e-40);
    EXPECT_LT(abs(via_chain.e - closed.e).to_double(), 1e-40);
  }
}

TEST(EvenStep, CubeOfUnitCircle) {
  QRatFunc r(make_qpoly({1}), make_qpoly({1, 0, 3, 0, 3, 0, 1}));
  SexticParams<BigFloat> o = to_sextic(normalize_even(even_landen_step(r), D50));
  EXPECT_LT(abs(o.a - 3).to_double(), 1e-45);
  EXPECT_LT(abs(o.b - 3).to_double(), 1e-45);
  EXPECT_LT(abs(o.c - make_rat(1, 4)).to_double(), 1e-45);
  EXPECT_LT(abs(o.d - make_rat(3, 4)).to_double(), 1e-45);
  EXPECT_LT(abs(o.e - make_rat(1, 2)).to_double(), 1e-45);
  BigFloat before = oracle::integrate_half_line(r, D50).value;
  EXPECT_LT(rel(u6(o, D50), before), 1e-40);
  EXPECT_LT(rel(before, const_pi(D50) * 3 / 16), 1e-40);
}

TEST(EvenStep, DegreeTwo) {
  QRatFunc r(make_qpoly({1}), make_qpoly({1, 0, 1}));
  QRatFunc o = even_landen_step(r);
  EXPECT_EQ(o.num, make_qpoly({1}));
  EXPECT_EQ(o.den, make_qpoly({1, 0, 1}));
}

TEST(EvenStep, OracleEqualOutputs) {
  QRatFunc r(make_qpoly({1, 0, 1, 0, 1}), make_qpoly({1, 0, 1, 0, 1, 0, 1}));
  QRatFunc o = even_landen_step(r);
  EXPECT_LT(rel(oracle::integrate_half_line(o, D50).value, oracle::integrate_half_line(r, D50).value), 1e-40);
  // degree 8 and 10: no closed form for the map, only the integral
  QRatFunc r8(make_qpoly({2, 0, 0, 0, 1, 0, 3}), make_qpoly({5, 0, 1, 0, 0, 0, 2, 0, 1}));
  QRatFunc o8 = even_landen_step(r8);
  EXPECT_EQ(o8.den.degree(), 8);
  EXPECT_LE(o8.num.degree(), 6);
  EXPECT_LT(rel(oracle::integrate_half_line(o8, D50).value, oracle::integrate_half_line(r8, D50).value), 1e-40);
  QRatFunc r10(make_qpoly({1, 0, 0, 0, 0, 0, 0, 0, 1}), make_qpoly({1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6}));
  QRatFunc o10 = even_landen_step(even_landen_step(r10));
  EXPECT_LT(rel(oracle::integrate_half_line(o10, D50).value, oracle::integrate_half_line(r10, D50).value), 1e-40);
}

TEST(EvenStep, Errors) {
  EXPECT_THROW(even_landen_step(QRatFunc(make_qpoly({0, 1}), make_qpoly({1, 0, 0, 0, 1}))), invalid_input);
  EXPECT_THROW(even_landen_step(QRatFunc(make_qpoly({1}), make_qpoly({1, 1, 1}))), invalid_input);
  EXPECT_THROW(even_landen_step(QRatFunc(make_qpoly({1}), make_qpoly({-1, 0, 1}))), precondition_error);
}

TEST(Discriminant, Values) {
  EXPECT_EQ(discriminant(BigRat(3), BigRat(3)), 0);
  EXPECT_EQ(discriminant(BigRat(0), BigRat(0)), 27);
  DiscriminantPoint<BigRat> p = discriminant_point(BigRat(5), make_rat(17, 4));
  EXPECT_EQ(p.r_value, 0);
}

TEST(Discriminant, IdentityExact) {
  EXPECT_TRUE(discriminant_identity_check(BigRat(3), BigRat(3)));
  EXPECT_TRUE(discriminant_identity_check(BigRat(1), BigRat(2)));
  EXPECT_TRUE(discriminant_identity_check(BigRat(0), BigRat(0)));
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    BigRat a = make_rat(static_cast<long>(rng() % 200) - 60, 1 + static_cast<long>(rng() % 9));
    BigRat b = make_rat(static_cast<long>(rng() % 200) - 60, 1 + static_cast<long>(rng() % 9));
    if (a + b + 2 == 0) continue;
    EXPECT_TRUE(discriminant_identity_check(a, b));
  }
  EXPECT_THROW(discriminant_identity_check(BigRat(-1), BigRat(-1)), domain_error);
}

TEST(Discriminant, IdentityThroughFloatMap) {
  EXPECT_LT(discriminant_identity_residual(BigFloat(1L, D50), BigFloat(2L, D50)).to_double(), 1e-40);
  // (0, 0) is mapped onto the curve
  auto o = phi6(fparams(0, 0, 1, 0, 0));
  EXPECT_LT(abs(discriminant(o.a, o.b)).to_double(), 1e-40);
}

TEST(Curve, Parametrization) {
  auto [a2, b2] = curve_param(BigRat(2));
  EXPECT_EQ(a2, 3);
  EXPECT_EQ(b2, 3);
  auto [a1, b1] = curve_param(BigRat(1));
  EXPECT_EQ(a1, 5);
  EXPECT_EQ(b1, make_rat(17, 4));
  EXPECT_EQ(discriminant(a1, b1), 0);
  EXPECT_THROW(curve_param(BigRat(0)), domain_error);
  EXPECT_THROW(flow_param(BigFloat(0L, D50)), domain_error);
}

TEST(Curve, FlowMatchesPhi6) {
  BigFloat phi = flow_param(BigFloat(1L, D50));
  EXPECT_LT(abs(phi - cbrt(BigFloat(100L, D50) / 9)).to_double(), 1e-45);
  for (long k = 1; k <= 10; ++k) {
    BigFloat s = BigFloat(k, D50) / 3;
    auto [a, b] = curve_param(s);
    auto img = phi6(SexticParams<BigFloat>{a, b, a * 0 + 1, a * 0, a * 0});
    auto [fa, fb] = curve_param(flow_param(s));
    EXPECT_LT(abs(img.a - fa).to_double(), 1e-40);
    EXPECT_LT(abs(img.b - fb).to_double(), 1e-40);
    EXPECT_LT(abs(discriminant(fa, fb)).to_double(), 1e-20);
  }
}

TEST(FixedPoints, SuperAttracting) {
  Digits d{60};
  Matrix2 j = phi6_jacobian(BigFloat(3L, d), BigFloat(3L, d), ten_pow(-15, d));
  for (const auto& ev : eigenvalues(j)) EXPECT_LT(abs(ev).to_double(), 1e-6);
}

TEST(FixedPoints, SaddleOnLowerBranch) {
  Digits d{60};
  auto [a, b] = saddle_point(d);
  EXPECT_LT(abs(discriminant(a, b)).to_double(), 1e-40);
  auto img = phi6(SexticParams<BigFloat>{a, b, a * 0 + 1, a * 0, a * 0});
  EXPECT_LT(abs(img.a - a).to_double(), 1e-40);
  EXPECT_LT(abs(img.b - b).to_double(), 1e-40);
  auto ev = eigenvalues(phi6_jacobian(a, b, ten_pow(-15, d)));
  ASSERT_LT(abs(ev[0].im).to_double(), 1e-30);
  double l0 = std::abs(ev[0].re.to_double()), l1 = std::abs(ev[1].re.to_double());
  EXPECT_GT(std::max(l0, l1), 1.0);
  EXPECT_LT(std::min(l0, l1), 1.0);
}

TEST(Basin, ConvergesIffIntegralFinite) {
  Digits d{30};
  int in = 0, out = 0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      // cell centres of a 20 x 20 grid on [-2, 8]^2
      BigRat a = make_rat(-7 + 2 * i, 4), b = make_rat(-7 + 2 * j, 4);
      const bool finite = in_lambda6(a, b);
      SexticParams<BigFloat> x{BigFloat(a, d), BigFloat(b, d), BigFloat(1L, d), BigFloat(0L, d), BigFloat(0L, d)};
      SexticOrbit orbit = iterate_phi6(x, 15, 80);
      EXPECT_EQ(orbit.converged, finite) << "a=" << a << " b=" << b;
      if (finite) {
        ++in;
        auto q = oracle::integrate_half_line(from_sextic(SexticParams<BigRat>{a, b, 1, 0, 0}), Digits{20});
        EXPECT_TRUE(q.converged);
      } else {
        ++out;
      }
    }
  EXPECT_GT(in, 0);
  EXPECT_GT(out, 0);
}

TEST(Basin, NumeratorLimit) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    SexticOrbit orbit = iterate_phi6(to_float(random_point(rng), D50), 30, 40);
    ASSERT_TRUE(orbit.converged);
    // c/e and d/e converge quadratically too, but a few steps behind (a, b)
    SexticParams<BigFloat> x = orbit.states.back();
    for (int k = 0; k < 4; ++k) x = phi6(x);
    EXPECT_LT(abs(x.c / x.e - 1).to_double(), 1e-20);
    EXPECT_LT(abs(x.d / x.e - 2).to_double(), 1e-20);
  }
}

TEST(Lambda6, Membership) {
  EXPECT_TRUE(in_lambda6(BigRat(3), BigRat(3)));
  EXPECT_TRUE(in_lambda6(BigRat(0), BigRat(0)));
  EXPECT_FALSE(in_lambda6(BigRat(-3), BigRat(0)));
  // t^3 - 2t^2 + 1 has the root t = 1
  EXPECT_FALSE(in_lambda6(BigRat(-2), BigRat(0)));
}
