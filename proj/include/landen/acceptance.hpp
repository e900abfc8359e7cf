#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "landen/agm.hpp"
#include "landen/convergence.hpp"
#include "landen/cotmap.hpp"
#include "landen/landen_half.hpp"
#include "landen/landen_real.hpp"
#include "landen/oracle.hpp"
#include "landen/quartic.hpp"
#include "landen/resultant.hpp"
#include "landen/samples.hpp"

namespace landen::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct TableRow {
  int n;
  double l2, linf, error;
  long size;
};

// Reference convergence tables for (3x+5)/(x^4+14x^3+74x^2+184x+208).
inline const std::vector<TableRow>& reference_table(int m) {
  static const std::vector<TableRow> t2 = {
      {1, 58.7171, 69.1000, 1.02060, 5},
      {2, 7.444927, 9.64324, 1.04473, 10},
      {3, 4.04691, 5.36256, 0.945481, 18},
      {4, 1.81592, 2.41858, 1.15092, 41},
      {5, 0.360422, 0.411437, 0.262511, 82},
      {6, 0.0298892, 0.0249128, 0.0189903, 164},
      {7, 0.000256824, 0.000299728, 0.0000362352, 327},
      {8, 1.92454e-8, 2.24568e-8, 1.47053e-8, 659},
      {9, 1.0823e-16, 1.2609e-16, 8.2207e-17, 1318},
  };
  static const std::vector<TableRow> t3 = {
      {1, 15.2207, 20.2945, 1.03511, 8},
      {2, 1.97988, 1.83067, 0.859941, 23},
      {3, 0.41100, 0.338358, 0.197044, 69},
      {4, 0.00842346, 0.00815475, 0.00597363, 208},
      {5, 5.05016e-8, 5.75969e-8, 1.64059e-9, 626},
      {6, 1.09651e-23, 1.02510e-23, 3.86286e-24, 1878},
      {7, 1.12238e-70, 1.22843e-70, 8.59237e-71, 5634},
  };
  static const std::vector<TableRow> t4 = {
      {1, 7.44927, 9.64324, 1.04473, 10},
      {2, 1.81592, 2.41858, 1.15092, 41},
      {3, 0.0298892, 0.0249128, 0.0189903, 164},
      {4, 1.92454e-8, 2.249128e-8, 1.47053e-8, 659},
      {5, 3.40769e-33, 3.96407e-33, 2.56817e-33, 2637},
  };
  if (m == 2) return t2;
  if (m == 3) return t3;
  if (m == 4) return t4;
  throw invalid_input("reference_table: m must be 2, 3 or 4");
}

inline QRatFunc quartic_example() { return {make_qpoly({5, 3}), make_qpoly({208, 184, 74, 14, 1})}; }
inline QRatFunc sextic_example() { return {make_qpoly({1}), make_qpoly({1, 0, 0, 1, 0, 0, 1})}; }

// Rows n = 0..rows of the order-m iteration, exact throughout.
inline line::LandenTrace table_trace(int m, int rows, Digits d = Digits{128}) {
  line::IterateOptions opt;
  opt.m = m;
  opt.max_iter = rows;
  opt.tol_digits = 4 * d.value;
  opt.digits = d;
  opt.exact_steps = -1;
  opt.size_cap = 10000;
  opt.exact_integral = -const_pi(d) * 7 / 12;
  return line::landen_iterate(quartic_example(), opt);
}

struct ColumnScore {
  int l2 = 0, linf = 0, error = 0, size = 0, rows = 0;
  std::vector<std::string> misses;
};

inline bool within_rel(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

inline ColumnScore score_table(int m, const line::LandenTrace& tr) {
  ColumnScore s;
  for (const TableRow& p : reference_table(m)) {
    ++s.rows;
    if (static_cast<std::size_t>(p.n) >= tr.rows.size() || !tr.rows[p.n].defined) {
      s.misses.push_back("m=" + std::to_string(m) + " n=" + std::to_string(p.n) + " missing");
      continue;
    }
    const line::ConvergenceRow& r = tr.rows[p.n];
    auto note = [&](const char* col, double got, double want) {
      std::ostringstream o;
      o << "m=" << m << " n=" << p.n << " " << col << " " << got << " vs " << want;
      s.misses.push_back(o.str());
    };
    const double l2 = r.l2.to_double(), linf = r.linf.to_double(), err = r.rel_error->to_double();
    if (within_rel(l2, p.l2, 2e-3)) ++s.l2; else note("L2", l2, p.l2);
    if (within_rel(linf, p.linf, 2e-3)) ++s.linf; else note("Linf", linf, p.linf);
    if (within_rel(err, p.error, 2e-3)) ++s.error; else note("Error", err, p.error);
    const long size = r.size.value_or(-1);
    if (std::abs(size - p.size) <= 2) ++s.size; else note("Size", static_cast<double>(size), static_cast<double>(p.size));
  }
  return s;
}

namespace detail {

inline bool same_function(const QRatFunc& r, const QRatFunc& s) { return r.num * s.den == s.num * r.den; }

inline double rel(const BigFloat& a, const BigFloat& b) { return (abs(a - b) / abs(b)).to_double(); }

template <class F>
CriterionResult timed(int id, std::string title, F body) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{id, std::move(title), false, "", 0};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

inline CriterionResult criterion_1() {
  return detail::timed(1, "exact integrand reproduction", [](CriterionResult& r) {
    QRatFunc one = line::landen_step(sextic_example(), 2);
    QRatFunc two = line::landen_step(one, 2);
    QRatFunc p1(make_qpoly({2, 2, 12, 0, 16}) * BigRat(2), make_qpoly({3, 0, 36, 0, 96, 0, 64}));
    QRatFunc p2(make_qpoly({5970, -884, 8400, -1024, 2816}) * BigRat(4),
                make_qpoly({39601, 0, 87216, 0, 59904, 0, 12288}));
    const bool a = detail::same_function(one, p1), b = detail::same_function(two, p2);
    r.pass = a && b;
    r.detail = std::string("first step ") + (a ? "exact" : "differs") + ", second step " + (b ? "exact" : "differs");
  });
}

inline CriterionResult criterion_2() {
  return detail::timed(2, "convergence tables m = 2, 3, 4", [](CriterionResult& r) {
    std::ostringstream o;
    bool ok = true;
    std::vector<std::string> misses;
    for (int m : {2, 3, 4}) {
      line::LandenTrace tr = table_trace(m, static_cast<int>(reference_table(m).size()));
      ColumnScore s = score_table(m, tr);
      o << "m=" << m << " L2 " << s.l2 << "/" << s.rows << " Linf " << s.linf << "/" << s.rows << " Error "
        << s.error << "/" << s.rows << " Size " << s.size << "/" << s.rows << "; ";
      ok = ok && s.misses.empty();
      misses.insert(misses.end(), s.misses.begin(), s.misses.end());
    }
    if (!misses.empty()) o << "first miss: " << misses.front();
    r.pass = ok;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_3() {
  return detail::timed(3, "integral to 1e-30 at 128 digits", [](CriterionResult& r) {
    line::IterateOptions opt;
    opt.m = 2;
    opt.max_iter = 12;
    opt.digits = Digits{128};
    BigFloat exact = -const_pi(opt.digits) * 7 / 12;
    line::LandenTrace tr = line::landen_iterate(quartic_example(), opt);
    double e = detail::rel(tr.integral_estimate, exact);
    r.pass = tr.converged && e < 1e-30 && tr.rows.size() <= 13;
    std::ostringstream o;
    o << "relative error " << e << " after " << tr.rows.size() - 1 << " iterations";
    r.detail = o.str();
  });
}

inline CriterionResult criterion_4() {
  return detail::timed(4, "empirical convergence order", [](CriterionResult& r) {
    std::ostringstream o;
    bool ok = true;
    for (int m : {2, 3, 4}) {
      line::IterateOptions opt;
      opt.m = m;
      line::LandenTrace tr = line::landen_iterate(quartic_example(), opt);
      std::vector<BigFloat> err;
      for (const auto& row : tr.rows)
        if (row.defined) err.push_back(row.l2);
      if (!tr.converged || err.size() < 3) {
        ok = false;
        o << "m=" << m << " did not converge; ";
        continue;
      }
      double q = fitted_orders(std::vector<BigFloat>(err.end() - 3, err.end())).at(0);
      ok = ok && q >= m - 0.3;
      o << "m=" << m << " order " << q << "; ";
    }
    Digits d{300};
    BigFloat a(1L, d), b(1L, d), c(1L, d);
    const BigFloat lim = sqrt(a * c * 4 - b * b) / 2;
    std::vector<BigFloat> err;
    for (int n = 0; n < 6; ++n) {
      BigFloat e = sqrt((a - lim) * (a - lim) + b * b + (c - lim) * (c - lim));
      if (e < ten_pow(-250, d)) break;
      err.push_back(e);
      auto next = line::landen_step_quadratic_m3(a, b, c);
      a = next[0];
      b = next[1];
      c = next[2];
    }
    double q3 = err.size() >= 3 ? fitted_orders(std::vector<BigFloat>(err.end() - 3, err.end())).at(0) : 0;
    ok = ok && q3 >= 2.7;
    o << "quadratic m=3 order " << q3;
    r.pass = ok;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_5() {
  return detail::timed(5, "AGM digits", [](CriterionResult& r) {
    Digits d{200};
    auto s = means::agm_steps(sqrt(BigFloat(2L, d)), BigFloat(1L, d), 6);
    long agree = agreeing_digits(s.history[6].first, s.history[6].second);
    Digits d16{16};
    auto t = means::agm_steps(sqrt(BigFloat(2L, d16)), BigFloat(1L, d16), 11);
    std::string a11 = t.a.str(10);
    Digits d30{30};
    auto u = means::agm_steps(sqrt(BigFloat(2L, d30)), BigFloat(1L, d30), 11);
    auto q = oracle::integrate_interval([](const BigFloat& x) { return 1L / sqrt(1L - x * x * x * x); },
                                        BigFloat(0L, d30), BigFloat(1L, d30), d30);
    BigFloat lem = q.value * 2 / const_pi(d30);
    double gap = abs(1L / u.a - lem).to_double();
    r.pass = agree >= 85 && a11 == "1.198140235" && gap < 1e-9;
    std::ostringstream o;
    o << "a6/b6 agree to " << agree << " digits; a11 = " << a11 << "; |1/a11 - oracle| = " << gap;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_6() {
  return detail::timed(6, "sextic invariance and convergence", [](CriterionResult& r) {
    std::mt19937_64 rng(6);
    Digits d{30};
    double worst = 0;
    for (int k = 0; k < 25; ++k) {
      auto x = half::to_float(random_lambda6_point(rng), d);
      worst = std::max(worst, detail::rel(half::u6(half::phi6(x), d), half::u6(x, d)));
    }
    Digits d50{50};
    BigFloat z(0L, d50);
    half::SexticOrbit orbit = half::iterate_phi6({z + 4, z + 4, z, z, z + 1}, 20, 8);
    std::vector<BigFloat> err;
    for (const auto& x : orbit.states) err.push_back(half::distance_to_fixed(x));
    double order = err.size() >= 3 ? fitted_orders(std::vector<BigFloat>(err.end() - 3, err.end())).at(0) : 0;
    double final_dist = err.empty() ? 1 : err.back().to_double();
    r.pass = worst < 1e-9 && orbit.converged && orbit.states.size() <= 9 && final_dist < 1e-20 && order >= 1.8;
    std::ostringstream o;
    o << "worst relative change " << worst << "; (4,4) reaches " << final_dist << " in "
      << orbit.states.size() - 1 << " steps, order " << order;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_7() {
  return detail::timed(7, "discriminant identity and curve", [](CriterionResult& r) {
    Digits d{50};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(-400, 800);
    double worst = 0;
    for (int k = 0; k < 20;) {
      BigFloat a = BigFloat(u(rng), d) / 100, b = BigFloat(u(rng), d) / 100;
      if (a + b + 2 < BigFloat(1L, d) / 10) continue;
      worst = std::max(worst, half::discriminant_identity_residual(a, b).to_double());
      ++k;
    }
    double curve = 0;
    for (long k = 1; k <= 10; ++k) {
      auto [a, b] = half::curve_param(BigFloat(k, d) / 3);
      curve = std::max(curve, abs(half::discriminant(a, b)).to_double());
    }
    auto [a1, b1] = half::curve_param(BigRat(1));
    bool exact = a1 == 5 && b1 == make_rat(17, 4) && half::discriminant(a1, b1) == 0;
    r.pass = worst < 1e-25 && curve < 1e-25 && exact;
    std::ostringstream o;
    o << "identity residual " << worst << "; curve residual " << curve << "; (a(1), b(1)) "
      << (exact ? "= (5, 17/4)" : "wrong");
    r.detail = o.str();
  });
}

inline CriterionResult criterion_8() {
  return detail::timed(8, "quartic integral combinatorics", [](CriterionResult& r) {
    Digits d{30};
    double worst = 0;
    for (long m = 0; m <= 6; ++m)
      for (BigRat a : {BigRat(1, 2), BigRat(1), BigRat(2), BigRat(5)}) {
        auto q = oracle::integrate_half_line(quartic::quartic_integrand(a, m), d);
        worst = std::max(worst, abs(quartic::quartic_integral(BigFloat(a, d), m) - q.value).to_double());
      }
    bool jac = true;
    const std::vector<BigRat> samples = {BigRat(0), BigRat(1, 2), BigRat(3), BigRat(-2, 7), BigRat(5)};
    for (long m = 0; m <= 8; ++m) jac = jac && quartic::jacobi_identity_check(m, samples);
    bool shape = true, nu = true;
    for (long m = 0; m <= 30; ++m) {
      quartic::quartic_coeffs(m);
      shape = shape && quartic::unimodal_check(m).has_value() && quartic::logconcave_check(m);
      for (long l = 0; l <= m; ++l) nu = nu && quartic::nu2_identity_check(l, m);
    }
    double roots = 0;
    bool recur = true;
    for (long l = 1; l <= 6; ++l) {
      auto ab = quartic::alpha_beta_reconstruct(l);
      auto y = quartic::alpha_beta_recurrence(l);
      recur = recur && ab.alpha == y.alpha && ab.beta == y.beta;
      roots = std::max(roots, quartic::little_root_deviation(ab).to_double());
    }
    r.pass = worst < 1e-12 && jac && shape && nu && recur && roots < 1e-8;
    std::ostringstream o;
    o << "closed form vs oracle " << worst << "; Jacobi " << (jac ? "exact" : "fails") << "; unimodal/log-concave "
      << (shape ? "ok" : "fails") << "; nu2 " << (nu ? "ok" : "fails") << "; alpha/beta recurrence "
      << (recur ? "agrees" : "differs") << "; max |Re+1/2| " << roots;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_9() {
  return detail::timed(9, "hypergeometric limits", [](CriterionResult& r) {
    using namespace means;
    Digits d{40};
    BigFloat one(1L, d);
    double worst = 0;
    for (const char* ks : {"0.3", "0.5", "0.8"}) {
      BigFloat k(std::string(ks), d);
      BigFloat k2 = one - k * k, k3 = one - k * k * k;
      worst = std::max(worst, abs(1L / ag_n_mean(2, one, k) - hyp2f1(frac(1, 2, d), frac(1, 2, d), one, k2)).to_double());
      worst = std::max(worst, abs(1L / ag_n_mean(3, one, k) - hyp2f1(frac(1, 3, d), frac(2, 3, d), one, k3)).to_double());
      BigFloat f4 = hyp2f1(frac(1, 4, d), frac(3, 4, d), one, k2);
      worst = std::max(worst, abs(1L / a4_mean(one, k).a - f4 * f4).to_double());
      worst = std::max(worst, abs(1L / cubic_mean(k).a - hyp2f1(frac(1, 3, d), frac(2, 3, d), one, k3)).to_double());
    }
    double bworst = 0;
    for (const char* xs : {"0.7", "0.8", "0.95"}) {
      BigFloat x(std::string(xs), d);
      bworst = std::max(bworst, abs(borwein_b_mean(one, x).a - borwein_b_closed_form(x)).to_double());
    }
    r.pass = worst < 1e-12 && bworst < 1e-10;
    std::ostringstream o;
    o << "AG2/AG3/A4/F worst " << worst << "; B(x) worst " << bworst;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_10() {
  return detail::timed(10, "quartic pi", [](CriterionResult& r) {
    auto p = means::pi_quartic(4, Digits{400});
    const auto& c = p.correct_digits;
    r.pass = c.size() == 4 && c[1] >= 3 * c[0] && c[2] >= 3 * c[1] && c[3] >= 150;
    std::ostringstream o;
    o << "correct digits";
    for (long v : c) o << " " << v;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_11() {
  return detail::timed(11, "fast log bound", [](CriterionResult& r) {
    Digits d{64};
    int ok = 0, total = 0;
    for (const char* xs : {"0.5", "0.1", "0.9"})
      for (long n : {3L, 5L, 8L}) {
        BigFloat x(std::string(xs), d);
        ++total;
        if (abs(log(x) - means::fast_log(x, n)) < means::fast_log_bound(n, d)) ++ok;
      }
    r.pass = ok == total;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " pairs within bound";
  });
}

inline CriterionResult criterion_12() {
  return detail::timed(12, "theta doubling", [](CriterionResult& r) {
    Digits d{30};
    BigFloat tol = ten_pow(-25, d);
    double worst = 0;
    bool ok = true;
    for (auto [im, den] : {std::pair{1L, 1L}, std::pair{2L, 1L}, std::pair{1L, 2L}}) {
      means::ThetaParams p{ComplexF{BigFloat(0L, d), BigFloat(im, d) / den}, 0};
      auto t = means::theta_doubling_check(p);
      ok = ok && t.holds(tol);
      for (const BigFloat* v : {&t.theta3_residual, &t.theta4_residual, &t.agm_residual})
        worst = std::max(worst, v->to_double());
    }
    r.pass = ok;
    std::ostringstream o;
    o << "worst residual " << worst;
    r.detail = o.str();
  });
}

inline CriterionResult criterion_13() {
  return detail::timed(13, "continued fraction identity", [](CriterionResult& r) {
    Digits d{30};
    double worst = 0;
    bool ok = true;
    for (long eta : {1L, 2L})
      for (auto [a, b] : {std::pair{1L, 2L}, std::pair{3L, 1L}}) {
        auto c = means::cf_agm_identity_check(BigFloat(eta, d), BigFloat(a, d), BigFloat(b, d), ten_pow(-12, d));
        ok = ok && c.converged;
        worst = std::max(worst, c.residual.to_double());
      }
    r.pass = ok && worst < 1e-8;
    std::ostringstream o;
    o << "worst residual " << worst;
    r.detail = o.str();
  });
}

// Seeded invariants from every module, run as one battery.
inline std::vector<std::pair<std::string, bool>> property_battery(unsigned seed = 14) {
  std::vector<std::pair<std::string, bool>> out;
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    out.emplace_back(name, ok);
  };
  std::mt19937_64 rng(seed);
  auto rpoly = [&](int deg) {
    std::vector<BigRat> c;
    for (int k = 0; k <= deg; ++k) c.push_back(random_rat(rng, -9, 9, 4));
    if (is_zero(c.back())) c.back() = 1;
    return QPoly(std::move(c));
  };

  check("exactq: resultant antisymmetry and multiplicativity", [&] {
    for (int t = 0; t < 10; ++t) {
      QPoly a = rpoly(1 + t % 4), b = rpoly(1 + (t + 1) % 3), c = rpoly(2);
      BigRat sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
      if (resultant(a, b) != sign * resultant(b, a)) return false;
      if (resultant(a, b * c) != resultant(a, b) * resultant(a, c)) return false;
    }
    return true;
  });
  check("exactq: exact division and canonical form", [&] {
    for (int t = 0; t < 10; ++t) {
      QPoly a = rpoly(1 + t % 4), z = rpoly(t % 5);
      if (poly_div_exact(a * z, a) != z) return false;
      QRatFunc r(z, a * a + QPoly::constant(BigRat(1)));
      QRatFunc c = canonical(r);
      if (canonical(c).num != c.num || canonical(c).den != c.den) return false;
      for (int k = 0; k < 10; ++k) {
        BigRat x = random_rat(rng, -20, 20, 7);
        if (r.num(x) * c.den(x) != c.num(x) * r.den(x)) return false;
      }
      BigRat p = random_rat(rng, -50, 50, 9), q = random_rat(rng, -50, 50, 9);
      if (BigRat(p + q - q) != p) return false;
    }
    return true;
  });
  check("cotmap: conjugacy and semigroup", [&] {
    Digits d{64};
    std::uniform_real_distribution<double> th(0.05, 3.09);
    for (int m = 2; m <= 6; ++m) {
      CotPair c = cot_pair(m);
      if (c.P.degree() != m || c.Q.degree() != m - 1 || is_zero(resultant(c.P, c.Q))) return false;
      for (int k = 0; k < 20; ++k) {
        BigFloat t(th(rng), d);
        BigFloat ct = cot(t), lhs = cot(t * m);
        BigFloat rhs = c.P(ct) / c.Q(ct);
        if (abs(lhs - rhs) > ten_pow(-12, d) * (abs(lhs) + 1L)) return false;
      }
    }
    CotPair r2 = cot_pair(2), r3 = cot_pair(3), r6 = cot_pair(6);
    for (int k = 0; k < 10; ++k) {
      BigRat x = random_rat(rng, -30, 30, 7);
      if (is_zero(r3.Q(x))) continue;
      BigRat y = r3.P(x) / r3.Q(x);
      if (is_zero(r2.Q(y)) || is_zero(r6.Q(x))) continue;
      if (BigRat(r2.P(y) / r2.Q(y)) != BigRat(r6.P(x) / r6.Q(x))) return false;
    }
    return true;
  });
  check("landen_real: integral invariance and degree contract", [&] {
    Digits d{30};
    for (int t = 0; t < 50; ++t) {
      int p = 2 + 2 * (t % 3), m = 2 + t % 3;
      QRatFunc r = random_line_integrand(rng, p);
      QRatFunc s = line::landen_step(r, m);
      if (s.den.degree() != p || s.num.degree() > p - 2) return false;
      BigFloat a = oracle::integrate_real_line(r, d).value, b = oracle::integrate_real_line(s, d).value;
      if (detail::rel(b, a) > 1e-9) return false;
    }
    return true;
  });
  check("landen_real: m=2 paths agree and 2 o 2 = 4", [&] {
    for (int t = 0; t < 10; ++t) {
      QRatFunc r6 = random_line_integrand(rng, 6);
      QRatFunc g = line::landen_step(r6, 2);
      QRatFunc e = line::from_params(line::landen_step_m2_p6(line::to_params(r6)));
      if (!detail::same_function(g, e)) return false;
      QRatFunc r4 = random_line_integrand(rng, 4);
      if (!detail::same_function(line::landen_step(line::landen_step(r4, 2), 2), line::landen_step(r4, 4)))
        return false;
    }
    return true;
  });
  check("landen_half: curve invariance", [&] {
    Digits d{50};
    for (long k = 1; k <= 10; ++k) {
      BigFloat s = BigFloat(k, d) / 3;
      auto [a, b] = half::curve_param(s);
      auto img = half::phi6(half::SexticParams<BigFloat>{a, b, a * 0 + 1, a * 0, a * 0});
      if (abs(half::discriminant(img.a, img.b)) > ten_pow(-20, d)) return false;
    }
    return true;
  });
  check("landen_half: (3,3) super-attracting", [&] {
    Digits d{60};
    auto ev = half::eigenvalues(half::phi6_jacobian(BigFloat(3L, d), BigFloat(3L, d), ten_pow(-15, d)));
    for (const auto& z : ev)
      if (sqrt(z.re * z.re + z.im * z.im) > ten_pow(-6, d)) return false;
    return true;
  });
  check("landen_half: convergence iff integral finite", [&] {
    Digits d{30};
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        BigRat a = make_rat(-7 + 2 * i, 4), b = make_rat(-7 + 2 * j, 4);
        half::SexticParams<BigFloat> x{BigFloat(a, d), BigFloat(b, d), BigFloat(1L, d), BigFloat(0L, d),
                                       BigFloat(0L, d)};
        if (half::iterate_phi6(x, 15, 80).converged != half::in_lambda6(a, b)) return false;
      }
    return true;
  });
  check("landen_half: numerator limit (1,2,1)", [&] {
    Digits d{50};
    for (int t = 0; t < 5; ++t) {
      auto orbit = half::iterate_phi6(half::to_float(random_lambda6_point(rng), d), 30, 40);
      if (!orbit.converged) return false;
      auto x = orbit.states.back();
      for (int k = 0; k < 4; ++k) x = half::phi6(x);
      if (abs(x.c / x.e - 1L) > ten_pow(-20, d) || abs(x.d / x.e - 2L) > ten_pow(-20, d)) return false;
    }
    return true;
  });
  check("agm: bracketing, contraction, homogeneity", [&] {
    Digits d{60};
    std::uniform_real_distribution<double> u(0.01, 10);
    for (int t = 0; t < 10; ++t) {
      BigFloat a(u(rng), d), b(u(rng), d), lam(u(rng), d);
      if (a < b) std::swap(a, b);
      auto s = means::agm(a, b);
      for (std::size_t n = 0; n + 1 < s.history.size(); ++n) {
        const auto& [an, bn] = s.history[n];
        const auto& [a1, b1] = s.history[n + 1];
        // once a_n - b_n is tiny, a_1 - b_1 is below the last bit and may round either way
        BigFloat eps = ten_pow(-(d.value + 25), d) * an;
        if (!(bn <= b1 + eps && b1 <= a1 + eps && a1 <= an + eps)) return false;
        BigFloat rs = sqrt(an) + sqrt(bn);
        if (abs((a1 - b1) - (an - bn) * (an - bn) / (rs * rs * 2)) > ten_pow(-55, d) * an) return false;
      }
      if (abs(means::agm_value(a * lam, b * lam) - s.value() * lam) > ten_pow(-50, d) * s.value() * lam)
        return false;
    }
    return true;
  });
  check("agm: functional equation and series", [&] {
    Digits d{50};
    for (long j = 1; j <= 9; ++j) {
      BigFloat k = BigFloat(j, d) / 10, ks = sqrt(k) * 2 / (1L + k);
      if (abs(means::agm_value(1L + k, 1L - k) - (1L + k) * means::agm_value(1L + ks, 1L - ks)) > ten_pow(-45, d))
        return false;
    }
    auto c = means::agm_series_coefficients(9, d);
    for (long n = 0; n <= 8; ++n) {
      BigInt c2 = binomial(2 * n, n) * binomial(2 * n, n);
      BigRat want(c2, BigInt(BigInt(1) << (4 * n)));
      if (abs(c[static_cast<std::size_t>(n)] - BigFloat(want, d)) > ten_pow(-30, d)) return false;
    }
    return true;
  });
  check("agm: Newman form and Gauss a3", [&] {
    Digits d{30};
    BigFloat a(3L, d), b(5L, d);
    auto q = oracle::integrate_function_real_line(
        [&](const BigFloat& x) { return 1L / sqrt((a * a + x * x) * (b * b + x * x)); }, d);
    if (abs(q.value / 2 - means::elliptic_G(a, b)) > ten_pow(-20, d)) return false;
    Digits d50{50};
    auto s = means::agm_steps(sqrt(BigFloat(2L, d50)), BigFloat(1L, d50), 3);
    return abs(s.history[3].first - means::gauss_a3(d50)) < ten_pow(-30, d50);
  });
  check("oracle: scaling and odd part", [&] {
    Digits d{40};
    for (int t = 0; t < 6; ++t) {
      QRatFunc r = random_line_integrand(rng, 2 + 2 * (t % 3));
      BigFloat base = oracle::integrate_real_line(r, d).value;
      for (long lam : {2L, 5L}) {
        QPoly sub{BigRat(0), BigRat(1, lam)};
        QRatFunc s(r.num.compose(sub), r.den.compose(sub) * BigRat(lam));
        if (detail::rel(oracle::integrate_real_line(s, d).value, base) > 1e-30) return false;
      }
      QPoly even = r.den * r.den.compose(make_qpoly({0, -1}));
      std::vector<BigRat> odd;
      for (int k = 0; k <= even.degree() - 2; ++k) odd.emplace_back(k % 2 ? BigRat(k) : BigRat(0));
      if (abs(oracle::integrate_real_line(QRatFunc(QPoly(odd), even), d).value) > ten_pow(-30, d)) return false;
    }
    return true;
  });
  check("oracle: error estimate covers refinement", [&] {
    for (int t = 0; t < 6; ++t) {
      QRatFunc r = random_line_integrand(rng, 2 + 2 * (t % 3));
      auto lo = oracle::integrate_real_line(r, Digits{30});
      auto hi = oracle::integrate_real_line(r, Digits{60});
      if (!lo.converged) return false;
      if (abs(lo.value - hi.value) > lo.error_estimate + ten_pow(-25, Digits{60}) * (abs(hi.value) + 1L)) return false;
    }
    return true;
  });
  check("quartic: alpha/beta from values equals recurrence", [&] {
    for (long l = 0; l <= 6; ++l) {
      auto a = quartic::alpha_beta_reconstruct(l), b = quartic::alpha_beta_recurrence(l);
      if (a.alpha != b.alpha || a.beta != b.beta) return false;
    }
    return true;
  });
  return out;
}

inline CriterionResult criterion_14(const std::vector<CriterionResult>& earlier, unsigned seed = 14) {
  return detail::timed(14, "property suites and full verification", [&](CriterionResult& r) {
    auto props = property_battery(seed);
    int ok = 0;
    std::string first_bad;
    for (const auto& [name, pass] : props) {
      if (pass) ++ok;
      else if (first_bad.empty()) first_bad = name;
    }
    int crit_ok = 0;
    std::string failing;
    for (const auto& c : earlier) {
      if (c.pass) ++crit_ok;
      else failing += (failing.empty() ? "" : ",") + std::to_string(c.id);
    }
    r.pass = ok == static_cast<int>(props.size()) && crit_ok == static_cast<int>(earlier.size());
    std::ostringstream o;
    o << "properties " << ok << "/" << props.size();
    if (!first_bad.empty()) o << " (first failure: " << first_bad << ")";
    o << "; criteria " << crit_ok << "/" << earlier.size();
    if (!failing.empty()) o << " (failing: " << failing << ")";
    r.detail = o.str();
  });
}

inline CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12();
    case 13: return criterion_13();
    default: throw invalid_input("criterion ids 1..13 run alone; 14 needs the others");
  }
}

// Runtime limits: criterion 1 under a second, 2 under two minutes, whole run under ten.
inline std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_done = {},
                                            unsigned seed = 14) {
  std::vector<CriterionResult> out;
  auto t0 = std::chrono::steady_clock::now();
  for (int id = 1; id <= 13; ++id) {
    CriterionResult r = run_criterion(id);
    if (id == 1 && r.seconds >= 1.0) {
      r.pass = false;
      r.detail += "; too slow";
    }
    if (id == 2 && r.seconds >= 120.0) {
      r.pass = false;
      r.detail += "; too slow";
    }
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  CriterionResult last = criterion_14(out, seed);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (total >= 600.0) {
    last.pass = false;
    last.detail += "; suite exceeded ten minutes";
  }
  if (on_done) on_done(last);
  out.push_back(std::move(last));
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream o;
  o << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail;
  return o.str();
}

}  // namespace landen::acceptance
