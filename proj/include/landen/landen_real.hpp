#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "landen/cotmap.hpp"
#include "landen/ratfunc.hpp"
#include "landen/resultant.hpp"
#include "landen/sturm.hpp"

namespace landen::line {

// Denominator a_0 x^p + ... + a_p, numerator b_0 x^(p-2) + ... + b_(p-2).
template <class T>
struct LineParams {
  std::vector<T> a;
  std::vector<T> b;
  int p() const { return static_cast<int>(a.size()) - 1; }
};

template <class T>
LineParams<T> to_params(const RatFunc<T>& r) {
  const int p = r.den.degree();
  LineParams<T> out;
  for (int k = 0; k <= p; ++k) out.a.push_back(r.den.coeff(p - k));
  for (int k = 0; k <= p - 2; ++k) out.b.push_back(r.num.coeff(p - 2 - k));
  return out;
}

template <class T>
RatFunc<T> from_params(const LineParams<T>& s) {
  const int p = s.p();
  std::vector<T> den(s.a.rbegin(), s.a.rend());
  std::vector<T> num(s.b.rbegin(), s.b.rend());
  (void)p;
  return {Poly<T>(std::move(num)), Poly<T>(std::move(den))};
}

inline void check_step_preconditions(const QRatFunc& r, int m) {
  if (m < 2) throw invalid_input("Landen step order m must be >= 2");
  if (r.den.degree() < 2) throw precondition_error("denominator degree must be >= 2");
  if (r.num.degree() > r.den.degree() - 2)
    throw precondition_error("need deg(num) <= deg(den) - 2 for convergence at infinity");
  if (sturm_real_root_count(r.den) != 0) {
    auto [lo, hi] = isolate_a_real_root(r.den);
    std::ostringstream near;
    near << BigRat((lo + hi) / 2).get_d();
    throw precondition_error("denominator has a real root near " + near.str() + ", in [" + lo.get_str() + ", " +
                             hi.get_str() + "] (Sturm count " + std::to_string(sturm_real_root_count(r.den)) +
                             "); the integral diverges");
  }
}

// Intermediate polynomials of one exact step.
struct StepPolys {
  QPoly H, E, Z, C, J;
};

// H(x) = Res_z(A(z), P_m(z) - x Q_m(z)).
inline QPoly landen_denominator(const QPoly& a, const CotPair& cp) {
  std::vector<QPoly> f;
  for (int k = 0; k <= cp.m; ++k) f.push_back(QPoly{cp.P.coeff(k), -cp.Q.coeff(k)});
  return resultant_poly(a, Poly<QPoly>(std::move(f)));
}

// sum over the roots x_j of t of g(x_j), exactly.
inline BigRat root_trace(const QPoly& g, const QPoly& t) {
  QPoly tm = monic(t);
  QPoly red = divmod(g, tm).second;
  std::vector<BigRat> s = power_sums(tm, tm.degree());
  BigRat acc = 0;
  for (int k = 0; k <= red.degree(); ++k) acc += red[k] * s[static_cast<std::size_t>(k)];
  return acc;
}

// All six steps in exact arithmetic (no normalization of the result).
inline StepPolys landen_step_polys(const QRatFunc& r, int m) {
  check_step_preconditions(r, m);
  const QPoly& A = r.den;
  const QPoly& B = r.num;
  const int p = A.degree();
  CotPair cp = cot_pair(m);

  StepPolys s;
  s.H = landen_denominator(A, cp);
  if (s.H.degree() != p) throw internal_error("resultant degree differs from deg A");

  // E = H(P/Q) Q^p
  std::vector<QPoly> ppow{QPoly::constant(1)}, qpow{QPoly::constant(1)};
  for (int k = 1; k <= p; ++k) {
    ppow.push_back(ppow.back() * cp.P);
    qpow.push_back(qpow.back() * cp.Q);
  }
  for (int k = 0; k <= p; ++k)
    if (!is_zero(s.H[k])) s.E += ppow[static_cast<std::size_t>(k)] * qpow[static_cast<std::size_t>(p - k)] * s.H[k];

  s.Z = poly_div_exact(s.E, A);
  s.C = B * s.Z;

  // J(y) = sum over roots x of P - yQ of C(x) / (Q(x)^(p-2) m (x^2+1)^(m-1)).
  QPoly w = QPoly::constant(m);
  QPoly x2p1 = make_qpoly({1, 0, 1});
  for (int k = 1; k < m; ++k) w = w * x2p1;
  QPoly denom = w * qpow[static_cast<std::size_t>(p - 2)];
  std::vector<BigRat> ys, vals;
  for (int i = 0; i <= p; ++i) {
    BigRat y = (i % 2 ? (i + 1) / 2 : -(i / 2));
    QPoly t = cp.P - cp.Q * y;
    QPoly inv = inverse_mod(divmod(denom, t).second, t);
    QPoly g = divmod(s.C * inv, t).second;
    ys.push_back(y);
    vals.push_back(root_trace(g, t));
  }
  s.J = interpolate(ys, vals);
  if (s.J.degree() > p - 2) throw internal_error("pushforward numerator has degree > p-2");
  return s;
}

// One rational Landen step of order m, exact; output in canonical form.
inline QRatFunc landen_step(const QRatFunc& r, int m) {
  StepPolys s = landen_step_polys(r, m);
  return canonical(QRatFunc(s.J, s.H));
}

// Floating step: evaluates H and J at p+1 nodes through the explicit roots
// x_j = cot((arccot y + j pi)/m) of P_m - y Q_m, then interpolates.
// The result has a monic denominator.
inline FRatFunc landen_step(const FRatFunc& r, int m) {
  if (m < 2) throw invalid_input("Landen step order m must be >= 2");
  const FPoly& A = r.den;
  const FPoly& B = r.num;
  const int p = A.degree();
  if (p < 2 || B.degree() > p - 2) throw precondition_error("need deg(num) <= deg(den) - 2");
  const Digits d = A.lead().precision();
  const BigFloat pi = const_pi(d);
  CotPairF cp = cot_pair_float(m, d);

  std::vector<BigFloat> ys, hs, js;
  for (int i = 0; i <= p; ++i) {
    BigFloat y(i % 2 ? (i + 1) / 2 : -(i / 2), d);
    BigFloat theta0 = acot(y);
    BigFloat h(1L, d), sum(0L, d);
    for (int j = 0; j < m; ++j) {
      BigFloat x = cot((theta0 + pi * j) / m);
      BigFloat ax = A(x);
      BigFloat qx = cp.Q(x);
      BigFloat w = pow(x * x + 1L, m - 1) * m;
      h = h * ax;
      sum = sum + B(x) * qx * qx / (ax * w);
    }
    ys.push_back(y);
    hs.push_back(h);
    js.push_back(h * sum);
  }
  FPoly H = interpolate(ys, hs);
  FPoly Jfull = interpolate(ys, js);
  std::vector<BigFloat> jc;
  for (int k = 0; k <= p - 2; ++k) jc.push_back(Jfull.coeff(k));
  return canonical(FRatFunc(FPoly(std::move(jc)), H));
}

// The explicit order-2 formulas for p = 6: (e_0..e_6; j_0..j_4).
template <class T>
LineParams<T> landen_step_m2_p6(const LineParams<T>& s) {
  if (s.p() != 6 || s.b.size() != 5) throw invalid_input("landen_step_m2_p6 needs p = 6");
  const T &a0 = s.a[0], &a1 = s.a[1], &a2 = s.a[2], &a3 = s.a[3], &a4 = s.a[4], &a5 = s.a[5], &a6 = s.a[6];
  const T &b0 = s.b[0], &b1 = s.b[1], &b2 = s.b[2], &b3 = s.b[3], &b4 = s.b[4];
  auto k = [&](long v) { return lift(v, a0); };
  LineParams<T> o;
  o.a.resize(7);
  o.b.resize(5);
  o.a[0] = k(64) * a0 * a6;
  o.a[1] = k(-32) * (a0 * a5 - a1 * a6);
  o.a[2] = k(16) * (a0 * a4 - a1 * a5 + k(6) * a0 * a6 + a2 * a6);
  o.a[3] = k(-8) * (a0 * a3 - a1 * a4 + k(5) * a0 * a5 + a2 * a5 - k(5) * a1 * a6 - a3 * a6);
  o.a[4] = k(4) * (a0 * a2 - a1 * a3 + k(4) * a0 * a4 + a2 * a4 - k(4) * a1 * a5 - a3 * a5 + k(9) * a0 * a6 +
                   k(4) * a2 * a6 + a4 * a6);
  o.a[5] = k(-2) * (a0 * a1 - a1 * a2 + k(3) * a0 * a3 + a2 * a3 - k(3) * a1 * a4 - a3 * a4 + k(5) * a0 * a5 +
                    k(3) * a2 * a5 + a4 * a5 - k(5) * a1 * a6 - k(3) * a3 * a6 - a5 * a6);
  o.a[6] = (a0 - a1 + a2 - a3 + a4 - a5 + a6) * (a0 + a1 + a2 + a3 + a4 + a5 + a6);

  o.b[0] = k(32) * (a6 * b0 + a0 * b4);
  o.b[1] = k(-16) * (a5 * b0 - a6 * b1 + a0 * b3 - a1 * b4);
  o.b[2] = k(8) * (a4 * b0 + k(3) * a6 * b0 - a5 * b1 + a0 * b2 + a6 * b2 - a1 * b3 + k(3) * a0 * b4 + a2 * b4);
  // a2*b3, not a3*b3: every term of j3 has an odd index sum
  o.b[3] = k(-4) * (a3 * b0 + k(2) * a5 * b0 + a0 * b1 - a4 * b1 - k(2) * a6 * b1 - a1 * b2 + a5 * b2 +
                    k(2) * a0 * b3 + a2 * b3 - a6 * b3 - k(2) * a1 * b4 - a3 * b4);
  o.b[4] = k(2) * (a0 * b0 + a2 * b0 + a4 * b0 + a6 * b0 - a1 * b1 - a3 * b1 - a5 * b1 + a0 * b2 + a2 * b2 +
                   a4 * b2 + a6 * b2 - a1 * b3 - a3 * b3 - a5 * b3 + a0 * b4 + a2 * b4 + a4 * b4 + a6 * b4);
  return o;
}

// Order-3 map on the quadratic integrand 1/(a x^2 + b x + c).
template <class T>
std::array<T, 3> landen_step_quadratic_m3(const T& a, const T& b, const T& c) {
  auto k = [&](long v) { return lift(v, a); };
  if (sgn(T(b * b - k(4) * a * c)) >= 0) throw domain_error("b^2 - 4ac >= 0: the integral diverges");
  T delta = (k(3) * a + c) * (a + k(3) * c) - b * b;
  T a1 = a * ((a + k(3) * c) * (a + k(3) * c) - k(3) * b * b) / delta;
  T b1 = b * (k(3) * (a - c) * (a - c) - b * b) / delta;
  T c1 = c * ((k(3) * a + c) * (k(3) * a + c) - k(3) * b * b) / delta;
  return {a1, b1, c1};
}

// Interleaved binomial limit of the normalized state, q = p/2.
inline std::vector<BigRat> limit_vector(int p) {
  if (p < 2 || p % 2) throw invalid_input("limit_vector: p must be even and >= 2");
  const int q = p / 2;
  std::vector<BigRat> v;
  for (int k = 1; k <= p; ++k) v.emplace_back(k % 2 ? BigInt(0) : binomial(q, k / 2));
  for (int k = 1; k <= p - 2; ++k) v.emplace_back(k % 2 ? BigInt(0) : binomial(q - 1, k / 2));
  return v;
}

struct ConvergenceRow {
  int n = 0;
  bool defined = false;  // false when a_0 or b_0 vanishes
  BigFloat l2;
  BigFloat linf;
  std::optional<BigFloat> rel_error;
  std::optional<long> size;  // only for exact states
  BigFloat estimate;         // pi * b_0 / a_0
};

namespace detail {

inline std::vector<BigFloat> normalized(const LineParams<BigFloat>& s) {
  std::vector<BigFloat> x;
  for (std::size_t k = 1; k < s.a.size(); ++k) x.push_back(s.a[k] / s.a[0]);
  for (std::size_t k = 1; k < s.b.size(); ++k) x.push_back(s.b[k] / s.b[0]);
  return x;
}

inline std::vector<BigFloat> normalized(const LineParams<BigRat>& s, Digits d) {
  std::vector<BigFloat> x;
  for (std::size_t k = 1; k < s.a.size(); ++k) x.emplace_back(BigRat(s.a[k] / s.a[0]), d);
  for (std::size_t k = 1; k < s.b.size(); ++k) x.emplace_back(BigRat(s.b[k] / s.b[0]), d);
  return x;
}

inline ConvergenceRow finish_row(const std::vector<BigFloat>& x, int p, const BigFloat& est,
                                 const std::optional<BigFloat>& exact, Digits d) {
  std::vector<BigRat> lim = limit_vector(p);
  ConvergenceRow row;
  row.defined = true;
  row.estimate = est;
  BigFloat sum(0L, d), mx(0L, d);
  for (std::size_t k = 0; k < x.size(); ++k) {
    BigFloat v = abs(x[k] - lim[k]);
    sum += v * v;
    if (v > mx) mx = v;
  }
  row.l2 = sqrt(sum / static_cast<long>(2 * p - 2));
  row.linf = mx;
  if (exact) row.rel_error = abs(est - *exact) / abs(*exact);
  return row;
}

}  // namespace detail

inline ConvergenceRow metrics(const LineParams<BigRat>& s, const std::optional<BigFloat>& exact, Digits d) {
  const int p = s.p();
  if (is_zero(s.a[0]) || s.b.empty() || is_zero(s.b[0])) return {};
  BigFloat est = const_pi(d) * BigRat(s.b[0] / s.a[0]);
  ConvergenceRow row = detail::finish_row(detail::normalized(s, d), p, est, exact, d);
  row.size = coefficient_size(from_params(s));
  return row;
}

inline ConvergenceRow metrics(const LineParams<BigFloat>& s, const std::optional<BigFloat>& exact) {
  const int p = s.p();
  if (is_zero(s.a[0]) || s.b.empty() || is_zero(s.b[0])) return {};
  const Digits d = s.a[0].precision();
  BigFloat est = const_pi(d) * s.b[0] / s.a[0];
  return detail::finish_row(detail::normalized(s), p, est, exact, d);
}

struct IterateOptions {
  int m = 2;
  long tol_digits = 30;  // stop once l2 < 10^-tol_digits
  int max_iter = 40;
  Digits digits{128};
  int exact_steps = 4;   // negative: stay exact throughout
  long size_cap = 5000;  // decimal digits
  std::optional<BigFloat> exact_integral;
};

enum class StopReason { converged, max_iter, size_cap };

struct LandenTrace {
  int m = 2;
  int p = 0;
  std::vector<LineParams<BigFloat>> states;
  std::vector<std::optional<QRatFunc>> exact_states;
  std::vector<ConvergenceRow> rows;
  BigFloat integral_estimate;
  bool converged = false;
  StopReason stop = StopReason::max_iter;
};

inline LineParams<BigFloat> to_float(const LineParams<BigRat>& s, Digits d) {
  LineParams<BigFloat> o;
  for (const auto& v : s.a) o.a.emplace_back(v, d);
  for (const auto& v : s.b) o.b.emplace_back(v, d);
  return o;
}

inline LandenTrace landen_iterate(const QRatFunc& r, const IterateOptions& opt) {
  check_step_preconditions(r, opt.m);
  const Digits d = opt.digits;
  const BigFloat tol = ten_pow(-opt.tol_digits, d);
  LandenTrace tr;
  tr.m = opt.m;
  tr.p = r.den.degree();

  std::optional<QRatFunc> exact = canonical(r);
  FRatFunc approx;
  auto record = [&](int n) {
    ConvergenceRow row;
    if (exact) {
      LineParams<BigRat> s = to_params(*exact);
      tr.states.push_back(to_float(s, d));
      row = metrics(s, opt.exact_integral, d);
    } else {
      LineParams<BigFloat> s = to_params(approx);
      tr.states.push_back(s);
      row = metrics(s, opt.exact_integral);
    }
    row.n = n;
    tr.exact_states.push_back(exact);
    tr.rows.push_back(row);
    if (row.defined) tr.integral_estimate = row.estimate;
    return row.defined && row.l2 < tol;
  };

  if (record(0)) {
    tr.converged = true;
    tr.stop = StopReason::converged;
    return tr;
  }
  for (int n = 1; n <= opt.max_iter; ++n) {
    if (exact && (opt.exact_steps < 0 || n <= opt.exact_steps)) {
      exact = landen_step(*exact, opt.m);
    } else {
      if (exact) {
        approx = canonical(to_float(*exact, d));
        exact.reset();
      }
      approx = landen_step(approx, opt.m);
    }
    if (record(n)) {
      tr.converged = true;
      tr.stop = StopReason::converged;
      return tr;
    }
    if (exact && tr.rows.back().size && *tr.rows.back().size > opt.size_cap) {
      if (opt.exact_steps < 0) {
        tr.stop = StopReason::size_cap;
        return tr;
      }
      approx = canonical(to_float(*exact, d));
      exact.reset();
    }
  }
  tr.stop = StopReason::max_iter;
  return tr;
}

}  // namespace landen::line
