#pragma once

#include <optional>
#include <string>
#include <vector>

#include "landen/bigfloat.hpp"
#include "landen/poly.hpp"
#include "landen/ratfunc.hpp"
#include "landen/roots.hpp"
#include "landen/scalar.hpp"

namespace landen::quartic {

inline void require_m(long m, const char* what) {
  if (m < 0) throw invalid_input(std::string(what) + ": m must be >= 0");
}

// d_l(m) = 2^-2m sum_{k=l}^m 2^k C(2m-2k, m-k) C(m+k, m) C(k, l)
inline BigRat d_coeff(long l, long m) {
  require_m(m, "d_coeff");
  if (l < 0 || l > m) return 0;
  BigInt s = 0;
  for (long k = l; k <= m; ++k) {
    BigInt t = binomial(2 * m - 2 * k, m - k) * binomial(m + k, m) * binomial(k, l);
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    s += t;
  }
  BigRat r(s);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(2 * m));
  return r;
}

struct QuarticCoeffs {
  long m = 0;
  std::vector<BigRat> d;  // d_0(m) .. d_m(m)
  std::vector<BigInt> A;  // A_{l,m} = d_l(m) l! m! 2^(m+l)
};

inline QuarticCoeffs quartic_coeffs(long m) {
  require_m(m, "quartic_coeffs");
  QuarticCoeffs q{m, {}, {}};
  const BigInt mf = factorial(m);
  for (long l = 0; l <= m; ++l) {
    BigRat d = d_coeff(l, m);
    if (sgn(d) <= 0) throw internal_error("quartic_coeffs: d_l(m) not positive");
    BigRat a = d * BigRat(factorial(l) * mf);
    mpq_mul_2exp(a.get_mpq_t(), a.get_mpq_t(), static_cast<unsigned long>(m + l));
    if (a.get_den() != 1) throw internal_error("quartic_coeffs: A_{l,m} not an integer");
    q.d.push_back(std::move(d));
    q.A.push_back(a.get_num());
  }
  return q;
}

inline BigInt A_coeff(long l, long m) {
  if (l < 0 || l > m) return 0;
  return quartic_coeffs(m).A[static_cast<std::size_t>(l)];
}

// P_m(a) = sum d_l(m) a^l
inline QPoly P_poly(long m) { return QPoly(quartic_coeffs(m).d); }

// Jacobi form with alpha = m + 1/2, beta = -m - 1/2:
// sum (-1)^(m-k) C(-1/2, m-k) C(m+k, k) 2^-k (a+1)^k
inline QPoly jacobi_poly(long m) {
  require_m(m, "jacobi_poly");
  const QPoly ap1{BigRat(1), BigRat(1)};
  QPoly acc, pw = QPoly::constant(BigRat(1));
  for (long k = 0; k <= m; ++k) {
    BigRat c = binomial(BigRat(-1, 2), m - k) * BigRat(binomial(m + k, k));
    mpq_div_2exp(c.get_mpq_t(), c.get_mpq_t(), static_cast<unsigned long>(k));
    if ((m - k) % 2) c = -c;
    acc += pw * c;
    pw *= ap1;
  }
  return acc;
}

inline bool jacobi_identity_check(long m, const std::vector<BigRat>& samples) {
  const QPoly p = P_poly(m), j = jacobi_poly(m);
  for (const BigRat& a : samples)
    if (p(a) != j(a)) return false;
  return true;
}

// 1/(x^4 + 2a x^2 + 1)^(m+1), for the oracle
inline QRatFunc quartic_integrand(const BigRat& a, long m) {
  require_m(m, "quartic_integrand");
  const QPoly q{BigRat(1), BigRat(0), 2 * a, BigRat(0), BigRat(1)};
  return QRatFunc(QPoly::constant(BigRat(1)), ipow(q, m + 1));
}

// int_0^inf dx/(x^4+2ax^2+1)^(m+1) = pi P_m(a) / (2^(m+3/2) (a+1)^(m+1/2))
inline BigFloat quartic_integral(const BigFloat& a, long m) {
  require_m(m, "quartic_integral");
  if (!(a > -1L)) throw domain_error("quartic_integral: need a > -1");
  const Digits d = a.precision();
  const QPoly p = P_poly(m);
  BigFloat pm(0L, d);
  for (int k = p.degree(); k >= 0; --k) pm = pm * a + BigFloat(p[k], d);
  const BigFloat ap1 = a + 1L;
  BigFloat den = sqrt(ap1 * 2) * pow(ap1 * 2, m) * 2;
  return const_pi(d) * pm / den;
}

// Peak index if d_0(m)..d_m(m) rises then falls, nullopt otherwise.
inline std::optional<long> unimodal_check(long m) {
  const auto d = quartic_coeffs(m).d;
  std::size_t k = 0;
  while (k + 1 < d.size() && d[k + 1] >= d[k]) ++k;
  const long peak = static_cast<long>(k);
  for (; k + 1 < d.size(); ++k)
    if (d[k + 1] > d[k]) return std::nullopt;
  return peak;
}

inline bool logconcave_check(long m) {
  const auto d = quartic_coeffs(m).d;
  for (std::size_t k = 1; k + 1 < d.size(); ++k)
    if (d[k] * d[k] - d[k - 1] * d[k + 1] < 0) return false;
  return true;
}

// 2-adic valuation; throws on zero.
inline long nu2(const BigInt& z) {
  if (sgn(z) == 0) throw domain_error("nu2: zero has no valuation");
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

inline BigInt pochhammer(long a, long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

// nu2(A_{l,m}) == nu2((m+1-l)_{2l}) + l
inline bool nu2_identity_check(long l, long m) {
  if (l < 0 || l > m) throw precondition_error("nu2_identity_check: need 0 <= l <= m");
  return nu2(A_coeff(l, m)) == nu2(pochhammer(m + 1 - l, 2 * l)) + l;
}

// prod_{k=1}^m (4k + sign)
inline BigInt four_product(long m, int sign) {
  BigInt r = 1;
  for (long k = 1; k <= m; ++k) r *= 4 * k + sign;
  return r;
}

// coefficient of a in P_m(a) via alpha_1, beta_1
inline BigRat d1_formula(long m) {
  require_m(m, "d1_formula");
  BigRat r(BigInt(2 * m + 1) * four_product(m, -1) - four_product(m, 1));
  r /= BigRat(factorial(m));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(m + 1));
  return r;
}

struct AlphaBetaPair {
  long l = 0;
  QPoly alpha;  // in m
  QPoly beta;
};

namespace detail {

// Gauss-Jordan over Q. Rows may exceed unknowns; extra rows must be consistent.
inline std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> M, std::vector<BigRat> rhs) {
  const std::size_t rows = M.size(), n = M.empty() ? 0 : M[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(M[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(M[i][c]) == 0) continue;
      BigRat f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < n) throw internal_error("solve_exact: singular system");
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(rhs[i]) != 0) throw internal_error("solve_exact: inconsistent system");
  std::vector<BigRat> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / M[i][pivot_col[i]];
  return x;
}

}  // namespace detail

// Solve A_{l,m} = alpha(m) prod(4k-1) - beta(m) prod(4k+1) for alpha (deg l), beta (deg l-1).
// Uses m = l..3l+1: 2l+1 unknowns plus one consistency row.
inline AlphaBetaPair alpha_beta_reconstruct(long l) {
  if (l < 0) throw invalid_input("alpha_beta_reconstruct: l must be >= 0");
  const std::size_t na = static_cast<std::size_t>(l) + 1, nb = static_cast<std::size_t>(l);
  std::vector<std::vector<BigRat>> M;
  std::vector<BigRat> rhs;
  for (long m = l; m <= 3 * l + 1; ++m) {
    const BigInt pm = four_product(m, -1), pp = four_product(m, 1);
    std::vector<BigRat> row;
    BigInt mk = 1;
    for (std::size_t k = 0; k < na; ++k, mk *= m) row.emplace_back(mk * pm);
    mk = 1;
    for (std::size_t k = 0; k < nb; ++k, mk *= m) row.emplace_back(-mk * pp);
    M.push_back(std::move(row));
    rhs.emplace_back(A_coeff(l, m));
  }
  auto x = detail::solve_exact(std::move(M), std::move(rhs));
  std::vector<BigRat> a(x.begin(), x.begin() + static_cast<long>(na));
  std::vector<BigRat> b(x.begin() + static_cast<long>(na), x.end());
  return {l, QPoly(std::move(a)), QPoly(std::move(b))};
}

// y_{l+1}(s) = 2s y_l - (s^2 - (2l-1)^2) y_{l-1}, s = 2m+1.
// alpha: y_0 = 1, y_1 = s.  beta: y_0 = 0, y_1 = 1.
inline AlphaBetaPair alpha_beta_recurrence(long l) {
  if (l < 0) throw invalid_input("alpha_beta_recurrence: l must be >= 0");
  const QPoly s{BigRat(0), BigRat(1)};
  auto run = [&](QPoly y0, QPoly y1) {
    if (l == 0) return y0;
    for (long j = 1; j < l; ++j) {
      QPoly w = QPoly::constant(BigRat((2 * j - 1) * (2 * j - 1)));
      QPoly y2 = s * y1 * BigRat(2) - (s * s - w) * y0;
      y0 = std::move(y1);
      y1 = std::move(y2);
    }
    return y1;
  };
  const QPoly to_m{BigRat(1), BigRat(2)};  // s = 2m+1
  QPoly a = run(QPoly::constant(BigRat(1)), s).compose(to_m);
  QPoly b = run(QPoly(), QPoly::constant(BigRat(1))).compose(to_m);
  return {l, std::move(a), std::move(b)};
}

// max |Re(root) + 1/2| over the roots of alpha_l and beta_l
inline BigFloat little_root_deviation(const AlphaBetaPair& ab, Digits d = Digits{50}) {
  BigFloat worst(0L, d);
  const BigFloat half = BigFloat(1L, d) / 2;
  for (const QPoly* p : {&ab.alpha, &ab.beta})
    for (const ComplexF& z : poly_roots(to_float(*p, d), d)) {
      BigFloat dev = abs(z.re + half);
      if (dev > worst) worst = dev;
    }
  return worst;
}

inline bool little_root_check(long l, Digits d = Digits{50}) {
  return little_root_deviation(alpha_beta_reconstruct(l), d) < ten_pow(-8, d);
}

struct SeriesCheck {
  BigFloat series;
  BigFloat direct;
  BigFloat residual;  // |series - direct|
  BigFloat scale;     // |x|^(K+1) for the expansion variable x
  bool holds(long C) const { return residual <= scale * C; }
};

// sqrt(a + sqrt(1+c)) = sqrt(a+1) [1 - sum_{k>=1} (-1)^k/k P_{k-1}(a) c^k / (2^(k+1) (a+1)^k)]
inline SeriesCheck sqrt_expansion_check(const BigRat& a, const BigRat& c, long K, Digits d = Digits{50}) {
  if (!(sgn(a) > 0) || !(abs(c) < 1)) throw precondition_error("sqrt_expansion_check: need a > 0 and |c| < 1");
  if (K < 0) throw invalid_input("sqrt_expansion_check: K must be >= 0");
  BigRat sum = 1;
  BigRat ck = 1;
  for (long k = 1; k <= K; ++k) {
    ck *= c / (a + 1);
    BigRat t = P_poly(k - 1)(a) * ck / k;
    mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), static_cast<unsigned long>(k + 1));
    sum += (k % 2) ? t : BigRat(-t);
  }
  const BigFloat fa(a, d), fc(c, d);
  BigFloat series = sqrt(fa + 1L) * BigFloat(sum, d);
  BigFloat direct = sqrt(fa + sqrt(fc + 1L));
  return {series, direct, abs(series - direct), pow(abs(fc), K + 1)};
}

// b_k(n): n^2 (n^2-2^2)...(n^2-(k-2)^2) for even k, n (n^2-1)(n^2-3^2)...(n^2-(k-2)^2) for odd k
inline BigRat ramanujan_b(long k, const BigRat& n) {
  if (k < 2) throw invalid_input("ramanujan_b: k must be >= 2");
  BigRat r = (k % 2) ? n : n * n;
  for (long j = (k % 2) ? 1 : 2; j <= k - 2; j += 2) r *= n * n - j * j;
  return r;
}

// (a + sqrt(1+a^2))^n = 1 + n a + sum_{k>=2} b_k(n) a^k / k!
inline SeriesCheck ramanujan_bk_check(const BigRat& n, const BigRat& a, long K, Digits d = Digits{50}) {
  if (!(abs(a) < BigRat(1, 2))) throw precondition_error("ramanujan_bk_check: need |a| < 1/2");
  if (K < 1) throw invalid_input("ramanujan_bk_check: K must be >= 1");
  BigRat sum = 1 + n * a;
  BigRat ak = a;
  for (long k = 2; k <= K; ++k) {
    ak *= a;
    sum += ramanujan_b(k, n) * ak / BigRat(factorial(k));
  }
  const BigFloat fa(a, d);
  BigFloat direct = pow(fa + sqrt(fa * fa + 1L), BigFloat(n, d));
  return {BigFloat(sum, d), direct, abs(BigFloat(sum, d) - direct), pow(abs(fa), K + 1)};
}

}  // namespace landen::quartic
