#pragma once

#include <vector>

#include "landen/complex.hpp"
#include "landen/poly.hpp"
#include "landen/resultant.hpp"
#include "landen/sturm.hpp"

namespace landen {

// cot(m t) = P(cot t) / Q(cot t)
struct CotPair {
  int m = 1;
  QPoly P;
  QPoly Q;
};

inline CotPair cot_pair(int m) {
  if (m < 1) throw invalid_input("cot_pair: m must be >= 1");
  std::vector<BigRat> p(static_cast<std::size_t>(m) + 1), q(static_cast<std::size_t>(m));
  for (int j = 0; 2 * j <= m; ++j) {
    BigInt c = binomial(m, 2 * j);
    p[static_cast<std::size_t>(m - 2 * j)] = j % 2 ? BigRat(-c) : BigRat(c);
  }
  for (int j = 0; 2 * j + 1 <= m; ++j) {
    BigInt c = binomial(m, 2 * j + 1);
    q[static_cast<std::size_t>(m - 2 * j - 1)] = j % 2 ? BigRat(-c) : BigRat(c);
  }
  return {m, QPoly(std::move(p)), QPoly(std::move(q))};
}

// Floating copies of P_m, Q_m.
struct CotPairF {
  int m = 1;
  FPoly P;
  FPoly Q;
};

inline CotPairF cot_pair_float(int m, Digits d) {
  CotPair c = cot_pair(m);
  return {m, to_float(c.P, d), to_float(c.Q, d)};
}

struct ConjugacyCheck {
  bool holds = true;
  int checked = 0;
  int skipped = 0;  // samples at a pole of M or R_m
  explicit operator bool() const { return holds; }
};

// R_m(x) == M^-1(M(x)^m) with M(x) = (x+i)/(x-i), at each sample.
inline ConjugacyCheck verify_conjugacy(int m, const std::vector<ComplexF>& samples, Digits d) {
  CotPairF c = cot_pair_float(m, d);
  const ComplexF i_unit = make_complex(0, 1, d);
  const BigFloat tiny = ten_pow(-(d.value / 2), d);
  const BigFloat tol = ten_pow(-(d.value - 10), d);
  ConjugacyCheck out;
  for (const auto& x : samples) {
    ComplexF qx = c.Q(x);
    ComplexF xm = x - i_unit;
    if (abs(qx) < tiny || abs(xm) < tiny) {
      ++out.skipped;
      continue;
    }
    ComplexF lhs = c.P(x) / qx;
    ComplexF w = (x + i_unit) / xm;
    ComplexF wm = lift(1, w);
    for (int k = 0; k < m; ++k) wm = wm * w;
    ComplexF wm1 = wm - lift(1, w);
    if (abs(wm1) < tiny) {
      ++out.skipped;
      continue;
    }
    ComplexF rhs = i_unit * (wm + lift(1, w)) / wm1;
    BigFloat scale = abs(lhs) + 1L;
    if (abs(lhs - rhs) > tol * scale) out.holds = false;
    ++out.checked;
  }
  return out;
}

struct RootCheck {
  bool holds = true;
  int p_roots = 0;  // distinct real roots of P_m
  int q_roots = 0;  // distinct real roots of Q_m
  BigFloat max_residual;
  explicit operator bool() const { return holds; }
};

// P_m vanishes at cot((2k+1)pi/2m), Q_m at cot(k pi/m), and every root is simple.
inline RootCheck root_check(int m, Digits d = Digits{64}) {
  if (m < 2) throw invalid_input("root_check: m must be >= 2");
  CotPair c = cot_pair(m);
  CotPairF f = cot_pair_float(m, d);
  FPoly dp = f.P.derivative(), dq = f.Q.derivative();
  const BigFloat pi = const_pi(d);
  const BigFloat tol = ten_pow(-(d.value - 10), d);
  RootCheck out;
  out.max_residual = BigFloat(0L, d);
  auto check = [&](const FPoly& p, const FPoly& dpoly, const BigFloat& x) {
    BigFloat scale = BigFloat(1L, d);
    for (const auto& v : p.coeffs()) scale = scale + abs(v) * pow(abs(x) + 1L, p.degree());
    BigFloat r = abs(p(x)) / scale;
    if (r > out.max_residual) out.max_residual = r;
    if (r > tol) out.holds = false;
    if (abs(dpoly(x)) < tol) out.holds = false;
  };
  for (int k = 0; k < m; ++k) check(f.P, dp, cot(pi * (2 * k + 1) / (2 * m)));
  for (int k = 1; k < m; ++k) check(f.Q, dq, cot(pi * k / m));
  out.p_roots = sturm_real_root_count(c.P);
  out.q_roots = sturm_real_root_count(c.Q);
  if (out.p_roots != m || out.q_roots != m - 1) out.holds = false;
  // simple roots <=> squarefree
  if (gcd(c.P, c.P.derivative()).degree() > 0) out.holds = false;
  if (m > 2 && gcd(c.Q, c.Q.derivative()).degree() > 0) out.holds = false;
  return out;
}

}  // namespace landen
