#pragma once

#include <functional>
#include <vector>

#include "landen/bigfloat.hpp"
#include "landen/ratfunc.hpp"
#include "landen/sturm.hpp"

namespace landen::oracle {

struct QuadratureResult {
  BigFloat value;
  BigFloat error_estimate;
  long evaluations = 0;
  bool converged = false;
};

namespace detail {

// Homogenized integrand on the circle: with s = sin t, c = cos t,
// R(s/c)/c^2 = sum b_k s^k c^(p-2-k) / sum a_k s^k c^(p-k).
struct TangentIntegrand {
  std::vector<BigFloat> num, den;
  int p = 0;

  TangentIntegrand(const QRatFunc& r, Digits d) : p(r.den.degree()) {
    for (int k = 0; k <= p; ++k) den.emplace_back(r.den.coeff(k), d);
    for (int k = 0; k <= p - 2; ++k) num.emplace_back(r.num.coeff(k), d);
  }
  TangentIntegrand(const FRatFunc& r, Digits d) : p(r.den.degree()) {
    for (int k = 0; k <= p; ++k) den.emplace_back(r.den.coeff(k), d);
    for (int k = 0; k <= p - 2; ++k) num.emplace_back(r.num.coeff(k), d);
  }

  static BigFloat homogeneous(const std::vector<BigFloat>& c, int deg, const BigFloat& s,
                              const BigFloat& co) {
    // sum c_k s^k co^(deg-k), evaluated by Horner in both variables
    BigFloat acc = c.empty() ? s * 0 : c[static_cast<std::size_t>(deg)];
    BigFloat cp = co;
    for (int k = deg - 1; k >= 0; --k) {
      acc = acc * s + c[static_cast<std::size_t>(k)] * cp;
      cp = cp * co;
    }
    return acc;
  }

  BigFloat operator()(const BigFloat& t) const {
    BigFloat s = sin(t), c = cos(t);
    if (p < 2) return s * 0;
    return homogeneous(num, p - 2, s, c) / homogeneous(den, p, s, c);
  }
};

// Trapezoid rule over one full period [0, period), doubling nodes until two
// successive sums agree.
template <class F>
QuadratureResult periodic_trapezoid(const F& f, const BigFloat& period, Digits d, int max_level = 22) {
  const BigFloat tol = ten_pow(-(d.value - 5), d);
  long n = 8;
  BigFloat h = period / n;
  BigFloat sum(0L, d), mag(0L, d);  // mag tracks sum |f|, the scale near a zero integral
  for (long j = 0; j < n; ++j) {
    BigFloat v = f(h * j);
    sum += v;
    mag += abs(v);
  }
  long evals = n;
  BigFloat t_old = sum * h;
  QuadratureResult out;
  for (int level = 1; level <= max_level; ++level) {
    BigFloat h_new = h / 2;
    for (long j = 0; j < n; ++j) {
      BigFloat v = f(h_new * (2 * j + 1));
      sum += v;
      mag += abs(v);
    }
    evals += n;
    n *= 2;
    h = h_new;
    BigFloat t_new = sum * h;
    BigFloat diff = abs(t_new - t_old);
    out.value = t_new;
    out.error_estimate = diff;
    out.evaluations = evals;
    BigFloat scale = mag * h;
    if (is_zero(scale)) scale = BigFloat(1L, d);
    if (level >= 2 && diff <= tol * scale) {
      out.converged = true;
      return out;
    }
    t_old = t_new;
  }
  return out;
}

inline void require_real_line(const QRatFunc& r) {
  if (r.num.degree() > r.den.degree() - 2)
    throw domain_error("integrand decays too slowly: need deg num <= deg den - 2");
  if (sturm_real_root_count(r.den) != 0) throw domain_error("denominator has a real root");
}

inline bool is_even(const QPoly& p) {
  for (int k = 1; k <= p.degree(); k += 2)
    if (!is_zero(p[k])) return false;
  return true;
}

}  // namespace detail

// Tanh-sinh quadrature of f over [a, b]; tolerates integrable endpoint singularities.
inline QuadratureResult integrate_interval(const std::function<BigFloat(const BigFloat&)>& f,
                                           const BigFloat& a, const BigFloat& b, Digits d,
                                           int max_level = 12) {
  const BigFloat tol = ten_pow(-(d.value - 5), d);
  const BigFloat tiny = ten_pow(-(2 * d.value + 20), d);
  const BigFloat half_pi = const_pi(d) / 2;
  const BigFloat half = (b - a) / 2;
  const BigFloat mid = (a + b) / 2;
  long evals = 0;
  BigFloat mag(0L, d);  // weighted sum of |f|

  // contribution of node t (and -t when t > 0), weight folded in
  auto node = [&](const BigFloat& t, bool pair) -> std::pair<BigFloat, bool> {
    BigFloat v = half_pi * sinh(t);
    BigFloat ch = cosh(v);
    BigFloat w = half_pi * cosh(t) / (ch * ch);
    if (w < tiny) return {BigFloat(0L, d), false};
    BigFloat u = tanh(v);
    BigFloat acc(0L, d);
    BigFloat x1 = mid + half * u;
    BigFloat f1 = f(x1);
    ++evals;
    if (isfinite(f1)) {
      acc += f1;
      mag += abs(f1) * w;
    }
    if (pair) {
      BigFloat x2 = mid - half * u;
      BigFloat f2 = f(x2);
      ++evals;
      if (isfinite(f2)) {
        acc += f2;
        mag += abs(f2) * w;
      }
    }
    return {acc * w, true};
  };

  QuadratureResult out;
  BigFloat h(1L, d);
  BigFloat sum = node(BigFloat(0L, d), false).first;
  for (long k = 1;; ++k) {
    auto [v, alive] = node(h * k, true);
    if (!alive) break;
    sum += v;
  }
  BigFloat i_old = sum * h * half;
  for (int level = 1; level <= max_level; ++level) {
    h = h / 2;
    for (long k = 1;; k += 2) {
      auto [v, alive] = node(h * k, true);
      if (!alive) break;
      sum += v;
    }
    BigFloat i_new = sum * h * half;
    BigFloat diff = abs(i_new - i_old);
    out.value = i_new;
    out.error_estimate = diff;
    out.evaluations = evals;
    BigFloat scale = mag * h * half;
    if (is_zero(scale)) scale = BigFloat(1L, d);
    if (level >= 3 && diff <= tol * scale) {
      out.converged = true;
      return out;
    }
    i_old = i_new;
  }
  return out;
}

// Integral over the whole real line of a rational function whose denominator
// has no real roots, via x = tan(t) and the periodic trapezoid rule.
inline QuadratureResult integrate_real_line(const QRatFunc& r, Digits d) {
  detail::require_real_line(r);
  detail::TangentIntegrand g(r, d);
  return detail::periodic_trapezoid(g, const_pi(d), d);
}

// Integral over [0, inf). Even integrands reuse the periodic rule; others go
// through tanh-sinh on [0, pi/2].
inline QuadratureResult integrate_half_line(const QRatFunc& r, Digits d) {
  if (r.num.degree() > r.den.degree() - 2)
    throw domain_error("integrand decays too slowly: need deg num <= deg den - 2");
  if (is_zero(r.den[0]) || sturm_positive_root_count(r.den) != 0)
    throw domain_error("denominator has a root on [0, inf)");
  if (detail::is_even(r.num) && detail::is_even(r.den)) {
    detail::TangentIntegrand g(r, d);
    QuadratureResult q = detail::periodic_trapezoid(g, const_pi(d), d);
    q.value = q.value / 2;
    q.error_estimate = q.error_estimate / 2;
    return q;
  }
  detail::TangentIntegrand g(r, d);
  return integrate_interval(g, BigFloat(0L, d), const_pi(d) / 2, d);
}

// Even floating integrand on [0, inf); the caller vouches for the
// denominator having no root there.
inline QuadratureResult integrate_half_line(const FRatFunc& r, Digits d) {
  if (r.num.degree() > r.den.degree() - 2)
    throw domain_error("integrand decays too slowly: need deg num <= deg den - 2");
  for (const FPoly* q : {&r.num, &r.den})
    for (int k = 1; k <= q->degree(); k += 2)
      if (!is_zero(q->coeff(k))) throw invalid_input("integrate_half_line: float integrand must be even");
  detail::TangentIntegrand g(r, d);
  QuadratureResult q = detail::periodic_trapezoid(g, const_pi(d), d);
  q.value = q.value / 2;
  q.error_estimate = q.error_estimate / 2;
  return q;
}

// G(a, b) = int_0^{pi/2} dt / sqrt(a^2 cos^2 t + b^2 sin^2 t), by the periodic
// trapezoid rule over [0, pi) (the integrand has period pi and is even).
inline QuadratureResult integrate_trig(const BigFloat& a, const BigFloat& b, Digits d) {
  if (a <= 0L || b <= 0L) throw domain_error("integrate_trig: a, b must be positive");
  BigFloat a2 = a * a, b2 = b * b;
  auto f = [&](const BigFloat& t) {
    BigFloat c = cos(t), s = sin(t);
    return 1L / sqrt(a2 * c * c + b2 * s * s);
  };
  QuadratureResult q = detail::periodic_trapezoid(f, const_pi(d), d);
  q.value = q.value / 2;
  q.error_estimate = q.error_estimate / 2;
  return q;
}

// Whole-line integral of an arbitrary smooth integrand decaying like 1/x^2,
// via x = tan(t) and tanh-sinh on (-pi/2, pi/2).
inline QuadratureResult integrate_function_real_line(const std::function<BigFloat(const BigFloat&)>& f,
                                                     Digits d) {
  auto g = [&](const BigFloat& t) {
    BigFloat c = cos(t);
    return f(tan(t)) / (c * c);
  };
  BigFloat hp = const_pi(d) / 2;
  return integrate_interval(g, -hp, hp, d);
}

}  // namespace landen::oracle
