#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "landen/bigfloat.hpp"
#include "landen/complex.hpp"
#include "landen/scalar.hpp"

namespace landen::means {

// ---------------------------------------------------------------- AGM

struct AGMState {
  BigFloat a, b;  // last pair
  std::vector<std::pair<BigFloat, BigFloat>> history;  // (a_0, b_0), (a_1, b_1), ...
  bool converged = false;
  BigFloat value() const { return a; }
  int iterations() const { return static_cast<int>(history.size()) - 1; }
};

inline void require_positive(const BigFloat& x, const char* what) {
  if (!(x > 0L)) throw domain_error(std::string(what) + ": arguments must be positive");
}

inline std::pair<BigFloat, BigFloat> agm_step(const BigFloat& a, const BigFloat& b) {
  return {(a + b) / 2, sqrt(a * b)};
}

// Iterate until |a_n - b_n| <= 10^-d |a_n|.
inline AGMState agm(const BigFloat& a0, const BigFloat& b0, int max_iter = 200) {
  require_positive(a0, "agm");
  require_positive(b0, "agm");
  const Digits d = BigFloat::result_for(a0, b0).precision();
  const BigFloat tol = ten_pow(-d.value, d);
  AGMState s{a0, b0, {{a0, b0}}, false};
  for (int n = 0;; ++n) {
    if (abs(s.a - s.b) <= tol * s.a) {
      s.converged = true;
      break;
    }
    if (n == max_iter) break;
    std::tie(s.a, s.b) = agm_step(s.a, s.b);
    s.history.emplace_back(s.a, s.b);
  }
  return s;
}

// Exactly n steps, whatever the agreement.
inline AGMState agm_steps(const BigFloat& a0, const BigFloat& b0, int n) {
  require_positive(a0, "agm");
  require_positive(b0, "agm");
  AGMState s{a0, b0, {{a0, b0}}, false};
  for (int k = 0; k < n; ++k) {
    std::tie(s.a, s.b) = agm_step(s.a, s.b);
    s.history.emplace_back(s.a, s.b);
  }
  s.converged = is_zero(s.a - s.b);
  return s;
}

inline BigFloat agm_value(const BigFloat& a, const BigFloat& b) { return agm(a, b).a; }

// K(k) = int_0^{pi/2} dx / sqrt(1 - k^2 sin^2 x)
inline BigFloat elliptic_K(const BigFloat& k) {
  if (k < 0L || k >= 1L) throw domain_error("elliptic_K: need 0 <= k < 1");
  BigFloat one = k * 0 + 1;
  return pi_like(k) / (agm_value(one, sqrt(one - k * k)) * 2);
}

// G(a, b) = int_0^{pi/2} dt / sqrt(a^2 cos^2 t + b^2 sin^2 t)
inline BigFloat elliptic_G(const BigFloat& a, const BigFloat& b) {
  require_positive(a, "elliptic_G");
  require_positive(b, "elliptic_G");
  return pi_like(a) / (agm_value(a, b) * 2);
}

// Gauss' closed form for a_3 from (sqrt 2, 1).
inline BigFloat gauss_a3(Digits d) {
  BigFloat two(2L, d);
  BigFloat r4 = root(two, 4), r8 = root(two, 8), s2 = sqrt(two);
  BigFloat t = 1L + r4;
  return (t * t + s2 * r8 * sqrt(1L + s2) * 2) / 8;
}

// The stated octic for a_3; its value at gauss_a3 is reported, not asserted.
inline BigFloat gauss_octic(const BigFloat& a) {
  static const long c[] = {1, -59840, 4436, -1896448, 942080, -10747904, 5242880, -16777216, 16777216};
  BigFloat acc = a * 0;
  for (int k = 8; k >= 0; --k) acc = acc * a + c[k];
  return acc;
}

// ---------------------------------------------------------- complex AGM

struct ComplexAGMResult {
  ComplexF value;
  std::vector<std::pair<ComplexF, ComplexF>> history;
  bool converged = false;
};

// The square root c of ab with |(a+b)/2 - c| <= |(a+b)/2 + c|; ties go to
// the root with nonnegative real part.
inline ComplexF right_choice(const ComplexF& a, const ComplexF& b) {
  ComplexF c = sqrt(a * b);
  ComplexF m = (a + b) / 2L;
  BigFloat lhs = norm2(m - c), rhs = norm2(m + c);
  if (lhs > rhs) return -c;
  if (lhs == rhs && c.re < 0L) return -c;
  return c;
}

inline ComplexAGMResult agm_complex(const ComplexF& a0, const ComplexF& b0, bool right = true,
                                    int max_iter = 200) {
  if (is_zero(a0) || is_zero(b0)) throw domain_error("agm_complex: zero argument");
  if (is_zero(a0 + b0) || is_zero(a0 - b0)) throw domain_error("agm_complex: need a != +-b");
  const Digits d = a0.re.precision();
  const BigFloat tol = ten_pow(-d.value, d);
  ComplexAGMResult r;
  ComplexF a = a0, b = b0;
  r.history.emplace_back(a, b);
  for (int n = 0; n < max_iter; ++n) {
    ComplexF c = right_choice(a, b);
    if (!right) c = -c;
    ComplexF an = (a + b) / 2L;
    a = an;
    b = c;
    r.history.emplace_back(a, b);
    if (norm2(a - b) <= tol * tol * norm2(a)) {
      r.converged = true;
      break;
    }
  }
  r.value = a;
  return r;
}

// ------------------------------------------------------------ Borchardt

struct QuadState {
  std::array<BigFloat, 4> v;
  std::vector<std::array<BigFloat, 4>> history;
  bool converged = false;
  BigFloat value() const { return v[0]; }
};

inline std::array<BigFloat, 4> borchardt_step(const std::array<BigFloat, 4>& x) {
  const auto& [a, b, c, d] = x;
  return {(a + b + c + d) / 4, (sqrt(a * b) + sqrt(c * d)) / 2, (sqrt(a * c) + sqrt(b * d)) / 2,
          (sqrt(a * d) + sqrt(b * c)) / 2};
}

inline BigFloat spread(const std::array<BigFloat, 4>& x) {
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

inline QuadState borchardt(const BigFloat& a, const BigFloat& b, const BigFloat& c, const BigFloat& d,
                           int max_iter = 200) {
  for (const BigFloat* x : {&a, &b, &c, &d}) require_positive(*x, "borchardt");
  const Digits dg = a.precision();
  const BigFloat tol = ten_pow(-dg.value, dg);
  QuadState s{{a, b, c, d}, {{a, b, c, d}}, false};
  for (int n = 0;; ++n) {
    if (spread(s.v) <= tol * s.v[0]) {
      s.converged = true;
      break;
    }
    if (n == max_iter) break;
    s.v = borchardt_step(s.v);
    s.history.push_back(s.v);
  }
  return s;
}

// ------------------------------------------------------- hypergeometric

struct SeriesResult {
  BigFloat value;
  long terms = 0;
  BigFloat tail_bound;
};

// 2F1(a, b; c; x) for |x| < 1 by its power series. Summation stops once a
// geometric bound on the remaining tail drops below 10^-(d+5).
inline SeriesResult hyp2f1_series(const BigFloat& a, const BigFloat& b, const BigFloat& c, const BigFloat& x,
                                  long max_terms = 5000000) {
  if (!(abs(x) < 1L)) throw domain_error("hyp2f1: need |x| < 1");
  if (c <= 0L && is_zero(c - floor(c))) throw domain_error("hyp2f1: c is a nonpositive integer");
  const Digits d = BigFloat::result_for(BigFloat::result_for(a, b), BigFloat::result_for(c, x)).precision();
  const BigFloat eps = ten_pow(-(d.value + 5), d);
  const BigFloat ax = abs(x);
  const double settle = std::abs(a.to_double()) + std::abs(b.to_double()) + std::abs(c.to_double()) + 2;
  BigFloat term(1L, d), sum(1L, d);
  for (long k = 0; k < max_terms; ++k) {
    BigFloat f = (a + k) * (b + k) / ((c + k) * (k + 1));
    term = term * f * x;
    sum += term;
    if (is_zero(term)) return {sum, k + 1, term * 0};
    if (static_cast<double>(k) > settle) {
      // past this point the factor is monotone in k and tends to 1
      BigFloat rho = ax * (abs(f) > 1L ? abs(f) : f * 0 + 1);
      if (rho < 1L) {
        BigFloat tail = abs(term) * rho / (1L - rho);
        if (tail < eps * abs(sum)) return {sum, k + 1, tail};
      }
    }
  }
  throw internal_error("hyp2f1: series did not settle");
}

inline BigFloat hyp2f1(const BigFloat& a, const BigFloat& b, const BigFloat& c, const BigFloat& x) {
  return hyp2f1_series(a, b, c, x).value;
}

inline BigFloat frac(long p, long q, Digits d) { return BigFloat(p, d) / q; }

// ------------------------------------------------------------- AG_N etc

// a' = (a + (N-1) b)/N, c' = (a - b)/N with b = (a^N - c^N)^(1/N);
// start (a, c), 0 <= c < a.
inline AGMState ag_n(int N, const BigFloat& a0, const BigFloat& c0, int max_iter = 200) {
  if (N < 2) throw invalid_input("ag_n: need N >= 2");
  require_positive(a0, "ag_n");
  if (c0 < 0L || c0 >= a0) throw domain_error("ag_n: need 0 <= c < a");
  const Digits d = BigFloat::result_for(a0, c0).precision();
  const BigFloat tol = ten_pow(-d.value, d);
  BigFloat a = a0, c = c0;
  auto bn = [&] { return root(pow(a, static_cast<long>(N)) - pow(c, static_cast<long>(N)), static_cast<unsigned long>(N)); };
  BigFloat b = bn();
  AGMState s{a, b, {{a, b}}, false};
  for (int n = 0;; ++n) {
    if (abs(a - b) <= tol * a) {
      s.converged = true;
      break;
    }
    if (n == max_iter) break;
    BigFloat an = (a + b * (N - 1)) / N;
    c = (a - b) / N;
    a = an;
    b = bn();
    s.history.emplace_back(a, b);
  }
  s.a = a;
  s.b = b;
  return s;
}

// AG_N(a, b): the same iteration started from b_0 = b.
inline BigFloat ag_n_mean(int N, const BigFloat& a, const BigFloat& b) {
  require_positive(a, "ag_n");
  require_positive(b, "ag_n");
  if (b > a) throw domain_error("ag_n: need b <= a");
  BigFloat c = root(pow(a, static_cast<long>(N)) - pow(b, static_cast<long>(N)), static_cast<unsigned long>(N));
  return ag_n(N, a, c).a;
}

template <class Step>
AGMState two_term_mean(const BigFloat& a0, const BigFloat& b0, Step step, int max_iter) {
  const Digits d = BigFloat::result_for(a0, b0).precision();
  const BigFloat tol = ten_pow(-d.value, d);
  AGMState s{a0, b0, {{a0, b0}}, false};
  for (int n = 0;; ++n) {
    if (abs(s.a - s.b) <= tol * abs(s.a)) {
      s.converged = true;
      break;
    }
    if (n == max_iter) break;
    std::tie(s.a, s.b) = step(s.a, s.b);
    s.history.emplace_back(s.a, s.b);
  }
  return s;
}

// a' = (a + 3b)/4, b' = sqrt(b (a + b)/2)
inline AGMState a4_mean(const BigFloat& a, const BigFloat& b, int max_iter = 400) {
  require_positive(a, "a4_mean");
  require_positive(b, "a4_mean");
  return two_term_mean(
      a, b, [](const BigFloat& x, const BigFloat& y) { return std::pair{(x + y * 3) / 4, sqrt(y * (x + y) / 2)}; },
      max_iter);
}

// a' = (a + 2b)/3, b' = cbrt(b (a^2 + ab + b^2)/3), from (1, x)
inline AGMState cubic_mean(const BigFloat& x, int max_iter = 400) {
  if (!(x > 0L) || x > 1L) throw domain_error("cubic_mean: need 0 < x <= 1");
  return two_term_mean(
      x * 0 + 1, x,
      [](const BigFloat& p, const BigFloat& q) {
        return std::pair{(p + q * 2) / 3, cbrt(q * (p * p + p * q + q * q) / 3)};
      },
      max_iter);
}

// (a, b) -> ((a + 3b)/4, (sqrt(ab) + b)/2)
inline AGMState borwein_b_mean(const BigFloat& a, const BigFloat& b, int max_iter = 20000) {
  require_positive(a, "borwein_b_mean");
  require_positive(b, "borwein_b_mean");
  return two_term_mean(
      a, b, [](const BigFloat& x, const BigFloat& y) { return std::pair{(x + y * 3) / 4, (sqrt(x * y) + y) / 2}; },
      max_iter);
}

// Closed form of B(1, x) for 2/3 < x < 1.
inline BigFloat borwein_b_closed_form(const BigFloat& x) {
  if (!(x * 3 > 2L) || !(x < 1L)) throw domain_error("borwein_b_closed_form: need 2/3 < x < 1");
  const Digits d = x.precision();
  BigFloat z = x * x * (1L - x) * 27 / 4;
  BigFloat f = hyp2f1(frac(1, 3, d), frac(1, 6, d), BigFloat(1L, d), z);
  return 1L / (f * f);
}

// ----------------------------------------------------------- quartic pi

struct PiQuarticResult {
  std::vector<BigFloat> estimates;  // after iteration 1, 2, ...
  std::vector<long> correct_digits;
  bool saturated = false;  // precision too low to show every iterate's full gain
};

// a_0 = 1, b_0 = (12 sqrt 2 - 16)^(1/4); two AG_2 steps per iterate, then
// pi ~ 3 a_(n+1)^4 / (1 - sum_j 4^(j+1) (a_j^4 - a_(j+1)^4)).
inline PiQuarticResult pi_quartic(int iterations, Digits d) {
  if (iterations < 1) throw invalid_input("pi_quartic: need iterations >= 1");
  if (d.value < 16) throw precondition_error("pi_quartic: precision below 16 digits");
  // iterate n is good to roughly 2 * 4^n digits
  PiQuarticResult r;
  r.saturated = static_cast<double>(d.value) < 2.0 * std::pow(4.0, iterations);
  const BigFloat pi = const_pi(Digits{d.value + 20});
  BigFloat a(1L, d), b = root(sqrt(BigFloat(2L, d)) * 12 - 16, 4);
  BigFloat sum(0L, d), w(1L, d);
  for (int n = 0; n < iterations; ++n) {
    BigFloat a1 = (a + b) / 2;
    BigFloat b1 = root((a * b * b * b + b * a * a * a) / 2, 4);
    w = w * 4;
    BigFloat a4 = pow(a, 4L), a14 = pow(a1, 4L);
    sum += w * (a4 - a14);
    BigFloat est = a14 * 3 / (1L - sum);
    r.estimates.push_back(est);
    r.correct_digits.push_back(agreeing_digits(BigFloat(pi, d), est));
    a = a1;
    b = b1;
  }
  return r;
}

// 4 sum_{k<terms} (-1)^k / (2k+1), in double: it never gets far.
inline double leibniz_pi(long terms) {
  double s = 0;
  for (long k = terms - 1; k >= 0; --k) s += (k % 2 ? -1.0 : 1.0) / static_cast<double>(2 * k + 1);
  return 4 * s;
}

// ------------------------------------------------------------- fast log

// G(1, 10^-n) - G(1, 10^-n x); within n 10^(-2(n-1)) of log x.
inline BigFloat fast_log(const BigFloat& x, long n) {
  if (!(x > 0L) || !(x < 1L)) throw domain_error("fast_log: need 0 < x < 1");
  if (n < 3) throw domain_error("fast_log: need n >= 3");
  const Digits d = x.precision();
  BigFloat one(1L, d), e = ten_pow(-n, d);
  return elliptic_G(one, e) - elliptic_G(one, e * x);
}

inline BigFloat fast_log_bound(long n, Digits d) { return ten_pow(-2 * (n - 1), d) * n; }

// ---------------------------------------------------------------- theta

struct ThetaParams {
  ComplexF omega;
  long truncation = 0;  // number of q^(n^2) terms kept; 0 = choose automatically
};

inline ComplexF theta_q(const ComplexF& omega) {
  if (!(omega.im > 0L)) throw domain_error("theta: need Im omega > 0");
  BigFloat pi = pi_like(omega.re);
  return exp(ComplexF{-pi * omega.im, pi * omega.re});
}

// n with |q|^(n^2) below 10^-(d+5)
inline long theta_truncation(const ComplexF& q, Digits d) {
  BigFloat lq = -log10(abs(q));
  double per = lq.to_double();
  long n = 1;
  while (per * static_cast<double>(n * n) < static_cast<double>(d.value + 5)) ++n;
  return n;
}

// theta_3(0, omega) for j = 3, theta_4(0, omega) for j = 4
inline ComplexF theta_null(int j, const ThetaParams& p) {
  if (j != 3 && j != 4) throw invalid_input("theta_null: j must be 3 or 4");
  const Digits d = p.omega.re.precision();
  ComplexF q = theta_q(p.omega);
  long n_max = p.truncation > 0 ? p.truncation : theta_truncation(q, d);
  // q^(n^2) by q^((n+1)^2) = q^(n^2) q^(2n+1)
  ComplexF sum = lift(1, q), qn2 = lift(1, q), q2n1 = q, qq = q * q;
  for (long n = 1; n <= n_max; ++n) {
    qn2 = qn2 * q2n1;
    q2n1 = q2n1 * qq;
    ComplexF t = qn2 * 2L;
    sum = (j == 4 && n % 2) ? sum - t : sum + t;
  }
  return sum;
}

struct ThetaDoubling {
  BigFloat theta4_residual;  // |th4^2(2w) - th3(w) th4(w)|
  BigFloat theta3_residual;  // |th3^2(2w) - (th3^2(w) + th4^2(w))/2|
  BigFloat agm_residual;     // one AGM step on (th3^2, th4^2)(w) vs (th3^2, th4^2)(2w)
  bool holds(const BigFloat& tol) const {
    return theta4_residual < tol && theta3_residual < tol && agm_residual < tol;
  }
};

inline ThetaDoubling theta_doubling_check(const ThetaParams& p) {
  ThetaParams p2{p.omega * 2L, p.truncation};
  ComplexF t3 = theta_null(3, p), t4 = theta_null(4, p);
  ComplexF u3 = theta_null(3, p2), u4 = theta_null(4, p2);
  ThetaDoubling r;
  r.theta4_residual = abs(u4 * u4 - t3 * t4);
  r.theta3_residual = abs(u3 * u3 - (t3 * t3 + t4 * t4) / 2L);
  ComplexF A = t3 * t3, B = t4 * t4;
  ComplexF A1 = (A + B) / 2L, B1 = right_choice(A, B);
  BigFloat e1 = abs(A1 - u3 * u3), e2 = abs(B1 - u4 * u4);
  r.agm_residual = e1 > e2 ? e1 : e2;
  return r;
}

// ------------------------------------------------- continued fraction

struct CFResult {
  BigFloat value;
  BigFloat error_estimate;  // |R(depth) - R(depth/2)|
  long depth = 0;
  bool converged = false;
};

// a / (eta + b^2 / (eta + 4a^2 / (eta + 9b^2 / ...))) cut at the given depth,
// by backward recurrence.
inline BigFloat ramanujan_cf_at(const BigFloat& eta, const BigFloat& a, const BigFloat& b, long depth) {
  BigFloat a2 = a * a, b2 = b * b;
  BigFloat v = a * 0;
  for (long k = depth; k >= 1; --k) {
    BigFloat kk(k * k, a.precision());
    v = kk * (k % 2 ? b2 : a2) / (eta + v);
  }
  return a / (eta + v);
}

inline CFResult ramanujan_cf(const BigFloat& eta, const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                             long max_depth = 1L << 20) {
  require_positive(eta, "ramanujan_cf");
  require_positive(a, "ramanujan_cf");
  require_positive(b, "ramanujan_cf");
  long depth = 16;
  BigFloat prev = ramanujan_cf_at(eta, a, b, depth);
  for (;;) {
    depth *= 2;
    BigFloat cur = ramanujan_cf_at(eta, a, b, depth);
    BigFloat err = abs(cur - prev);
    if (err < tol) return {cur, err, depth, true};
    if (depth >= max_depth) return {cur, err, depth, false};
    prev = cur;
  }
}

struct CFIdentity {
  BigFloat lhs, rhs, residual;
  bool converged = false;
};

// R((a+b)/2, sqrt(ab)) against (R(a, b) + R(b, a))/2
inline CFIdentity cf_agm_identity_check(const BigFloat& eta, const BigFloat& a, const BigFloat& b,
                                        const BigFloat& tol) {
  CFResult l = ramanujan_cf(eta, (a + b) / 2, sqrt(a * b), tol);
  CFResult r1 = ramanujan_cf(eta, a, b, tol), r2 = ramanujan_cf(eta, b, a, tol);
  CFIdentity out;
  out.lhs = l.value;
  out.rhs = (r1.value + r2.value) / 2;
  out.residual = abs(out.lhs - out.rhs);
  out.converged = l.converged && r1.converged && r2.converged;
  return out;
}

// --------------------------------------- power series of 1/AGM(1+k, 1-k)

// Coefficients c_n of 1/AGM(1+k, 1-k) = sum c_n k^(2n), n < count, from
// samples on the circle |k^2| = r via the discrete Cauchy formula.
inline std::vector<BigFloat> agm_series_coefficients(int count, Digits d, int samples = 128) {
  const BigFloat r = BigFloat(1L, d) / 4;
  const BigFloat pi = const_pi(d);
  std::vector<ComplexF> vals;
  for (int j = 0; j < samples; ++j) {
    BigFloat t = pi * 2 * j / samples;
    ComplexF u{r * cos(t), r * sin(t)};  // u = k^2
    ComplexF k = sqrt(u);
    ComplexF one = lift(1, u);
    ComplexAGMResult m = agm_complex(one + k, one - k);
    vals.push_back(one / m.value);
  }
  std::vector<BigFloat> out;
  for (int n = 0; n < count; ++n) {
    ComplexF acc = lift(0, vals[0]);
    for (int j = 0; j < samples; ++j) {
      BigFloat t = -pi * 2 * j * n / samples;
      acc += vals[static_cast<std::size_t>(j)] * ComplexF{cos(t), sin(t)};
    }
    out.push_back(acc.re / samples / pow(r, static_cast<long>(n)));
  }
  return out;
}

}  // namespace landen::means
