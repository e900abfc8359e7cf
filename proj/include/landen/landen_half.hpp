#pragma once

#include <array>
#include <utility>
#include <vector>

#include "landen/complex.hpp"
#include "landen/oracle.hpp"
#include "landen/ratfunc.hpp"
#include "landen/sturm.hpp"

namespace landen::half {

// (c x^4 + d x^2 + e) / (x^6 + a x^4 + b x^2 + 1) on [0, inf)
template <class T>
struct SexticParams {
  T a, b, c, d, e;
};

template <class T>
RatFunc<T> from_sextic(const SexticParams<T>& s) {
  T z = lift(0, s.a), one = lift(1, s.a);
  return {Poly<T>{s.e, z, s.d, z, s.c}, Poly<T>{one, z, s.b, z, s.a, z, one}};
}

// (a, b) in Lambda_6: t^3 + a t^2 + b t + 1 has no root in (0, inf).
inline bool in_lambda6(const BigRat& a, const BigRat& b) {
  return sturm_positive_root_count(QPoly{BigRat(1), b, a, BigRat(1)}) == 0;
}

// The closed-form sextic map. Only defined for a + b + 2 > 0.
inline SexticParams<BigFloat> phi6(const SexticParams<BigFloat>& x) {
  BigFloat s = x.a + x.b + 2;
  if (!(s > 0L)) throw domain_error("phi6: need a + b + 2 > 0");
  BigFloat r = cbrt(s);
  BigFloat r2 = r * r;
  SexticParams<BigFloat> o;
  o.a = (x.a * x.b + x.a * 5 + x.b * 5 + 9) / (r2 * r2);
  o.b = (x.a + x.b + 6) / r2;
  o.c = (x.c + x.d + x.e) / r2;
  o.d = ((x.b + 3) * x.c + x.d * 2 + (x.a + 3) * x.e) / s;
  o.e = (x.c + x.e) / r;
  return o;
}

inline SexticParams<BigFloat> to_float(const SexticParams<BigRat>& x, Digits d) {
  return {BigFloat(x.a, d), BigFloat(x.b, d), BigFloat(x.c, d), BigFloat(x.d, d), BigFloat(x.e, d)};
}

inline BigFloat u6(const SexticParams<BigFloat>& x, Digits d) {
  return oracle::integrate_half_line(from_sextic(x), d).value;
}

// Even Landen step by the trigonometric chain, in exact arithmetic.
// Output is even, deg den = deg D, deg num <= deg D - 2, same integral over
// [0, inf); coefficients are scaled jointly to coprime integers.
inline QRatFunc even_landen_step(const QRatFunc& r) {
  const QPoly& N = r.num;
  const QPoly& D = r.den;
  for (const QPoly* q : {&N, &D})
    for (int k = 1; k <= q->degree(); k += 2)
      if (!is_zero(q->coeff(k)))
        throw invalid_input("even_landen_step: integrand has an odd part; only even integrands are handled");
  const int deg = D.degree();
  if (deg < 2) throw precondition_error("even_landen_step: denominator degree must be >= 2");
  if (N.degree() > deg - 2) throw precondition_error("even_landen_step: need deg num <= deg den - 2");
  const int p = deg / 2;

  // t = x^2
  std::vector<BigRat> sv, qv;
  for (int k = 0; k <= p; ++k) qv.push_back(D.coeff(2 * k));
  for (int k = 0; k < p; ++k) sv.push_back(N.coeff(2 * k));
  QPoly Q(qv), S(sv);
  if (is_zero(Q[0]) || sturm_positive_root_count(Q) != 0)
    throw precondition_error("even_landen_step: denominator vanishes on [0, inf); the integral diverges");

  // symmetrize: T = Q(t) t^p Q(1/t), reciprocal of degree 2p
  QPoly qrev(std::vector<BigRat>(qv.rbegin(), qv.rend()));
  QPoly T = Q * qrev;
  QPoly Sn = S * qrev;

  // x = tan(theta), w = cos(2 theta): sin^2 = (1-w)/2, cos^2 = (1+w)/2
  const QPoly one_m = make_qpoly({1, -1}), one_p = make_qpoly({1, 1});
  auto in_w = [&](const QPoly& c, int n) {
    std::vector<QPoly> mp{QPoly::constant(1)}, pp{QPoly::constant(1)};
    for (int k = 1; k <= n; ++k) {
      mp.push_back(mp.back() * one_m);
      pp.push_back(pp.back() * one_p);
    }
    QPoly acc;
    for (int j = 0; j <= n; ++j)
      if (!is_zero(c.coeff(j))) acc += mp[static_cast<std::size_t>(j)] * pp[static_cast<std::size_t>(n - j)] * c.coeff(j);
    BigRat scale = 1;
    mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(n));
    return acc / scale;
  };
  QPoly Nw = in_w(Sn, 2 * p - 1);
  QPoly Dw = in_w(T, 2 * p);
  for (int k = 1; k <= Dw.degree(); k += 2)
    if (!is_zero(Dw.coeff(k))) throw internal_error("symmetrized denominator is not even in cos(2 theta)");

  // odd powers of cos(psi) integrate to zero against an even denominator;
  // the rest is a function of u = cos^2(psi) = 1/(1+y^2), y = tan(psi)
  const QPoly y2p1 = make_qpoly({1, 0, 1});
  std::vector<QPoly> hp{QPoly::constant(1)};
  for (int k = 1; k <= p; ++k) hp.push_back(hp.back() * y2p1);
  QPoly num, den;
  for (int k = 0; k < p; ++k)
    if (!is_zero(Nw.coeff(2 * k))) num += hp[static_cast<std::size_t>(p - 1 - k)] * Nw.coeff(2 * k);
  for (int k = 0; k <= p; ++k)
    if (!is_zero(Dw.coeff(2 * k))) den += hp[static_cast<std::size_t>(p - k)] * Dw.coeff(2 * k);
  if (den.degree() != deg) throw internal_error("even_landen_step: degree of the denominator changed");
  return canonical(QRatFunc(num, den));
}

// Rescale y -> lambda y so the even denominator has unit leading and
// constant coefficients: lambda^(2p) = D(0) / lead(D).
inline FRatFunc normalize_even(const QRatFunc& r, Digits d) {
  const int deg = r.den.degree();
  BigFloat d0(r.den[0], d), dl(r.den.lead(), d);
  BigFloat lam = root(d0 / dl, deg);
  std::vector<BigFloat> nc, dc;
  BigFloat pw(1L, d);
  for (int k = 0; k <= deg; ++k) {
    if (k <= r.num.degree()) nc.push_back(lam * pw * BigFloat(r.num[k], d) / d0);
    dc.push_back(pw * BigFloat(r.den[k], d) / d0);
    pw = pw * lam;
  }
  return canonical(FRatFunc(FPoly(std::move(nc)), FPoly(std::move(dc))));
}

inline SexticParams<BigFloat> to_sextic(const FRatFunc& r) {
  if (r.den.degree() != 6) throw invalid_input("to_sextic: need a degree-6 denominator");
  const BigFloat& c0 = r.den[0];
  return {r.den.coeff(4) / c0, r.den.coeff(2) / c0, r.num.coeff(4) / c0, r.num.coeff(2) / c0,
          r.num.coeff(0) / c0};
}

// R(a, b); its lower branch bounds Lambda_6
template <class T>
T discriminant(const T& a, const T& b) {
  T r = a * a * a * 4 + b * b * b * 4 - a * b * 18 - a * a * b * b + 27;
  return r;
}

template <class T>
struct DiscriminantPoint {
  T a, b, r_value;
};

template <class T>
DiscriminantPoint<T> discriminant_point(const T& a, const T& b) {
  return {a, b, discriminant(a, b)};
}

// R(a1, b1) (a+b+2)^4 == (a-b)^2 R(a, b), exactly. With r the cube root of
// s = a+b+2, a1 = Na / r^4 and b1 = Nb / r^2; r^6 = s^2 and r^12 = s^4, so
// after multiplying by s^4 no radical is left.
inline bool discriminant_identity_check(const BigRat& a, const BigRat& b) {
  BigRat s = a + b + 2;
  if (s == 0) throw domain_error("discriminant identity: a + b + 2 = 0");
  BigRat na = a * b + 5 * a + 5 * b + 9;
  BigRat nb = a + b + 6;
  BigRat s2 = s * s;
  BigRat lhs = 4 * na * na * na + 4 * nb * nb * nb * s2 - 18 * na * nb * s2 - na * na * nb * nb + 27 * s2 * s2;
  BigRat rhs = (a - b) * (a - b) * discriminant(a, b);
  return lhs == rhs;
}

// Same identity through the floating map; returns |lhs - rhs|.
inline BigFloat discriminant_identity_residual(const BigFloat& a, const BigFloat& b) {
  SexticParams<BigFloat> x{a, b, a * 0 + 1, a * 0, a * 0};
  SexticParams<BigFloat> y = phi6(x);
  BigFloat s = a + b + 2;
  BigFloat s2 = s * s;
  return abs(discriminant(y.a, y.b) * s2 * s2 - (a - b) * (a - b) * discriminant(a, b));
}

// Parametrization of R = 0.
template <class T>
std::pair<T, T> curve_param(const T& s) {
  if (is_zero(s)) throw domain_error("curve_param: s = 0");
  T s3 = s * s * s;
  T a = (s3 + lift(4, s)) / (s * s);
  T b = (s3 + lift(16, s)) / (s * lift(4, s));
  return {a, b};
}

// phi6 restricted to the curve, in the parameter s.
inline BigFloat flow_param(const BigFloat& s) {
  if (is_zero(s)) throw domain_error("flow_param: s = 0");
  BigFloat q = s * s + 4;
  BigFloat den = s * (s + 2) * (s + 2);
  if (is_zero(den)) throw domain_error("flow_param: s = -2");
  return cbrt(q * q * 4 / den);
}

struct SexticOrbit {
  std::vector<SexticParams<BigFloat>> states;
  bool converged = false;
};

inline BigFloat distance_to_fixed(const SexticParams<BigFloat>& x) {
  BigFloat da = x.a - 3, db = x.b - 3;
  return sqrt(da * da + db * db);
}

// Iterate phi6 until (a, b) is within 10^-tol_digits of (3, 3). Stops early
// once a + b + 2 <= 0 or the parameters blow up.
inline SexticOrbit iterate_phi6(const SexticParams<BigFloat>& x0, long tol_digits = 20, int max_iter = 60) {
  const Digits d = x0.a.precision();
  const BigFloat tol = ten_pow(-tol_digits, d), huge = ten_pow(40, d);
  SexticOrbit orbit;
  orbit.states.push_back(x0);
  for (int n = 0;; ++n) {
    const auto& x = orbit.states.back();
    if (distance_to_fixed(x) < tol) {
      orbit.converged = true;
      break;
    }
    if (n == max_iter || !(x.a + x.b + 2 > 0L) || abs(x.a) > huge || abs(x.b) > huge) break;
    orbit.states.push_back(phi6(x));
  }
  return orbit;
}

using Matrix2 = std::array<std::array<BigFloat, 2>, 2>;

// Central differences of the (a, b) part of phi6.
inline Matrix2 phi6_jacobian(const BigFloat& a, const BigFloat& b, const BigFloat& h) {
  auto ab = [](const BigFloat& x, const BigFloat& y) {
    SexticParams<BigFloat> s{x, y, x * 0, x * 0, x * 0};
    SexticParams<BigFloat> o = phi6(s);
    return std::array<BigFloat, 2>{o.a, o.b};
  };
  auto fa_p = ab(a + h, b), fa_m = ab(a - h, b);
  auto fb_p = ab(a, b + h), fb_m = ab(a, b - h);
  Matrix2 j;
  for (int i = 0; i < 2; ++i) {
    j[static_cast<std::size_t>(i)][0] = (fa_p[static_cast<std::size_t>(i)] - fa_m[static_cast<std::size_t>(i)]) / (h * 2);
    j[static_cast<std::size_t>(i)][1] = (fb_p[static_cast<std::size_t>(i)] - fb_m[static_cast<std::size_t>(i)]) / (h * 2);
  }
  return j;
}

inline std::array<ComplexF, 2> eigenvalues(const Matrix2& m) {
  BigFloat tr = m[0][0] + m[1][1];
  BigFloat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  BigFloat disc = tr * tr / 4 - det;
  BigFloat z = tr * 0;
  if (disc >= 0L) {
    BigFloat r = sqrt(disc);
    return {ComplexF{tr / 2 + r, z}, ComplexF{tr / 2 - r, z}};
  }
  BigFloat r = sqrt(-disc);
  return {ComplexF{tr / 2, r}, ComplexF{tr / 2, -r}};
}

// The fixed point on the lower branch: fixed points of the curve flow solve
// (8 - s^3)(s^3 + 4 s^2 + 8) = 0, and s = 2 gives (3, 3).
inline std::pair<BigFloat, BigFloat> saddle_point(Digits d) {
  // single real root of s^3 + 4 s^2 + 8, in (-5, -4); Newton from -4.5
  BigFloat s(-9L, d);
  s = s / 2;
  for (int it = 0; it < 200; ++it) {
    BigFloat f = ((s + 4) * s) * s + 8;
    BigFloat fp = (s * 3 + 8) * s;
    BigFloat step = f / fp;
    s = s - step;
    if (abs(step) < ten_pow(-(d.value + 5), d)) break;
  }
  return curve_param(s);
}

}  // namespace landen::half
