#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "landen/acceptance.hpp"
#include "landen/agm.hpp"
#include "landen/landen_half.hpp"
#include "landen/landen_real.hpp"
#include "landen/oracle.hpp"
#include "landen/parse.hpp"
#include "landen/quartic.hpp"

namespace landen::cli {

using json = nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, verification_failed = 2 };

struct RunConfig {
  long precision = 50;
  std::string mode = "exact";  // exact | float
  std::optional<int> max_iter;  // each command has its own default
  std::optional<BigRat> tol;
  std::string output = "text";  // text | json | csv
  unsigned long seed = 14;
  Digits digits() const { return Digits{precision}; }
  int iters(int fallback) const { return max_iter.value_or(fallback); }
};

inline void validate(const RunConfig& c) {
  if (c.precision < 16) throw invalid_input("--precision must be at least 16");
  if (c.mode != "exact" && c.mode != "float") throw invalid_input("--mode must be exact or float");
  if (c.max_iter && *c.max_iter < 0) throw invalid_input("--iters must be >= 0");
  if (c.tol && *c.tol <= 0) throw invalid_input("--tol must be positive");
  if (c.output != "text" && c.output != "json" && c.output != "csv")
    throw invalid_input("--output must be text, json or csv");
}

// largest t with 10^-t >= tol
inline long tol_digits(const BigRat& tol) {
  long t = 0;
  BigRat p = 1;
  while (p / 10 >= tol) {
    p /= 10;
    ++t;
  }
  while (p < tol) {
    p *= 10;
    --t;
  }
  return t;
}

// What a command produced. JSON is the canonical form; numbers that are not
// small integers are carried as strings that read back exactly.
struct Report {
  json data = json::object();
  std::vector<std::string> text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = Exit::ok;
};

inline std::string exact(const BigFloat& x) { return x.exact_str(); }
inline std::string exact(const BigRat& q) { return q.get_str(); }
inline std::string exact(const BigInt& z) { return z.get_str(); }

inline std::string show(const BigFloat& x, long sig = 12) { return x.str(sig); }

inline json poly_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(exact(c));
  return a;
}

// Reads an integer, rational "p/q" or terminating decimal.
inline BigRat parse_number(const std::string& s, const char* what) {
  try {
    return parse_rat(s);
  } catch (const invalid_input&) {
    throw invalid_input(std::string(what) + ": not a number: " + s);
  }
}

// also "sqrt(q)", so irrational starting values need not be typed out
inline BigFloat parse_real(const std::string& s, const char* what, Digits d) {
  if (s.rfind("sqrt(", 0) == 0 && s.size() > 6 && s.back() == ')') {
    BigRat q = parse_number(s.substr(5, s.size() - 6), what);
    if (q < 0) throw invalid_input(std::string(what) + ": sqrt of a negative number");
    return sqrt(BigFloat(q, d));
  }
  return BigFloat(parse_number(s, what), d);
}

inline std::string render(const Report& r, const std::string& format) {
  std::ostringstream o;
  if (format == "json") {
    o << r.data.dump(2) << "\n";
  } else if (format == "csv") {
    if (!r.csv_header.empty()) {
      for (std::size_t k = 0; k < r.csv_header.size(); ++k) o << (k ? "," : "") << r.csv_header[k];
      o << "\n";
      for (const auto& row : r.csv_rows) {
        for (std::size_t k = 0; k < row.size(); ++k) o << (k ? "," : "") << row[k];
        o << "\n";
      }
    } else {
      o << "key,value\n";
      for (const auto& [k, v] : r.data.items())
        if (v.is_primitive()) o << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    for (const auto& line : r.text) o << line << "\n";
  }
  return o.str();
}

// ---------------------------------------------------------------- agm

struct AgmArgs {
  std::string a, b;
  bool check_g = false;
};

inline Report cmd_agm(const AgmArgs& args, const RunConfig& cfg) {
  const Digits d = cfg.digits();
  BigFloat a = parse_real(args.a, "a", d), b = parse_real(args.b, "b", d);
  means::AGMState s = cfg.max_iter ? means::agm_steps(a, b, *cfg.max_iter) : means::agm(a, b);
  Report r;
  r.data["command"] = "agm";
  r.data["precision"] = cfg.precision;
  r.data["a0"] = exact(a);
  r.data["b0"] = exact(b);
  r.data["value"] = exact(s.value());
  r.data["iterations"] = s.iterations();
  r.data["converged"] = s.converged;
  json hist = json::array();
  r.csv_header = {"n", "a", "b", "agreeing_digits"};
  r.text.push_back("AGM(" + show(a) + ", " + show(b) + ") = " + show(s.value(), std::min<long>(cfg.precision, 60)));
  r.text.push_back("iterations: " + std::to_string(s.iterations()));
  for (std::size_t n = 0; n < s.history.size(); ++n) {
    const auto& [an, bn] = s.history[n];
    long agree = agreeing_digits(an, bn);
    hist.push_back({{"n", n}, {"a", exact(an)}, {"b", exact(bn)}, {"agreeing_digits", agree}});
    r.csv_rows.push_back({std::to_string(n), exact(an), exact(bn), std::to_string(agree)});
    r.text.push_back("  n=" + std::to_string(n) + "  a=" + show(an, 20) + "  b=" + show(bn, 20) + "  agree " +
                     std::to_string(agree));
  }
  r.data["history"] = hist;
  if (s.history.size() > 6) {
    long agree6 = agreeing_digits(s.history[6].first, s.history[6].second);
    r.data["a6_b6_agreeing_digits"] = agree6;
    r.text.push_back("a6/b6 agree to " + std::to_string(agree6) + " digits");
  }
  if (args.check_g) {
    BigFloat g = const_pi(d) / (s.value() * 2);
    auto q = oracle::integrate_trig(a, b, d);
    BigFloat gap = abs(g - q.value);
    r.data["G_from_agm"] = exact(g);
    r.data["G_oracle"] = exact(q.value);
    r.data["G_difference"] = exact(gap);
    r.text.push_back("pi/(2 AGM) = " + show(g, 30));
    r.text.push_back("trig oracle = " + show(q.value, 30) + "  (difference " + show(gap, 3) + ")");
  }
  return r;
}

// ---------------------------------------------------------------- landen

struct LandenArgs {
  std::string num, den;
  int m = 2;
  long size_cap = 10000;
  bool show_integrand = false;
};

// c * primitive integer polynomial, c > 0 unless p is negative throughout
inline std::pair<BigRat, QPoly> split_content(const QPoly& p) {
  if (p.is_zero()) return {BigRat(0), p};
  BigInt g = 0, l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRat content(g, l);
  content.canonicalize();
  return {content, p / content};
}

inline std::string integrand_string(const QRatFunc& r) {
  auto [c, prim] = split_content(r.num);
  std::string out;
  if (c != 1) out = c.get_str() + "(" + to_string(prim) + ")";
  else out = "(" + to_string(prim) + ")";
  return out + " / (" + to_string(r.den) + ")";
}

inline std::string sci(const BigFloat& x) {
  std::ostringstream o;
  o << std::setprecision(6) << x.to_double();
  return o.str();
}

inline Report cmd_landen(const LandenArgs& args, const RunConfig& cfg) {
  validate(cfg);
  const int iters = cfg.iters(12);
  const Digits d = cfg.digits();
  QRatFunc f = parse_ratfunc(args.num, args.den);
  line::check_step_preconditions(f, args.m);
  auto ref = oracle::integrate_real_line(f, Digits{cfg.precision + 10});

  line::IterateOptions opt;
  opt.m = args.m;
  opt.max_iter = iters;
  opt.digits = d;
  opt.tol_digits = cfg.tol ? tol_digits(*cfg.tol) : cfg.precision - 5;
  opt.exact_steps = cfg.mode == "exact" ? iters : 0;
  opt.size_cap = args.size_cap;
  opt.exact_integral = BigFloat(ref.value, d);
  line::LandenTrace tr = line::landen_iterate(f, opt);

  Report r;
  r.data["command"] = "landen";
  r.data["precision"] = cfg.precision;
  r.data["m"] = args.m;
  r.data["integrand"] = {{"num", poly_json(f.num)}, {"den", poly_json(f.den)}};
  r.data["reference"] = exact(BigFloat(ref.value, d));
  r.text.push_back("integrand: " + integrand_string(f));
  r.text.push_back("method of order " + std::to_string(args.m) + ", " + cfg.mode + " mode");

  if (args.show_integrand) {
    json shown = json::array();
    QRatFunc g = f;
    for (int k = 1; k <= 2; ++k) {
      g = line::landen_step(g, args.m);
      shown.push_back({{"step", k}, {"num", poly_json(g.num)}, {"den", poly_json(g.den)}});
      r.text.push_back("step " + std::to_string(k) + ": " + integrand_string(g));
    }
    r.data["transformed"] = shown;
  }

  r.csv_header = {"n", "l2", "linf", "error", "size"};
  std::ostringstream head;
  head << std::left << std::setw(4) << "n" << std::setw(16) << "L2-norm" << std::setw(16) << "Linf-norm"
       << std::setw(16) << "Error" << "Size";
  r.text.push_back(head.str());
  json rows = json::array();
  for (const auto& row : tr.rows) {
    if (!row.defined) {
      rows.push_back({{"n", row.n}, {"defined", false}});
      r.csv_rows.push_back({std::to_string(row.n), "", "", "", ""});
      r.text.push_back(std::to_string(row.n) + "   (a_0 or b_0 vanishes)");
      continue;
    }
    std::string size = row.size ? std::to_string(*row.size) : "";
    json jr = {{"n", row.n}, {"l2", exact(row.l2)}, {"linf", exact(row.linf)},
               {"error", row.rel_error ? exact(*row.rel_error) : ""}, {"estimate", exact(row.estimate)}};
    if (row.size) jr["size"] = *row.size;
    rows.push_back(jr);
    std::string err = row.rel_error ? sci(*row.rel_error) : "";
    r.csv_rows.push_back({std::to_string(row.n), sci(row.l2), sci(row.linf), err, size});
    std::ostringstream line;
    line << std::left << std::setw(4) << row.n << std::setw(16) << sci(row.l2) << std::setw(16) << sci(row.linf)
         << std::setw(16) << err << size;
    r.text.push_back(line.str());
  }
  r.data["rows"] = rows;
  r.data["estimate"] = exact(tr.integral_estimate);
  r.data["converged"] = tr.converged;
  r.text.push_back("estimate: " + show(tr.integral_estimate, std::min<long>(cfg.precision, 40)));
  r.text.push_back(tr.converged ? "converged" : "not converged within the iteration budget");
  return r;
}

// ---------------------------------------------------------------- halfline

struct HalflineArgs {
  std::string action = "phi6";  // phi6 | step
  std::string a = "4", b = "4", c = "0", d = "0", e = "1";
  std::string num, den;
};

inline Report cmd_halfline(const HalflineArgs& args, const RunConfig& cfg) {
  const Digits dg = cfg.digits();
  Report r;
  r.data["command"] = "halfline";
  r.data["precision"] = cfg.precision;
  if (args.action == "step") {
    QRatFunc f = parse_ratfunc(args.num, args.den);
    QRatFunc g = half::even_landen_step(f);
    BigFloat before = oracle::integrate_half_line(f, dg).value;
    BigFloat after = oracle::integrate_half_line(g, dg).value;
    r.data["action"] = "step";
    r.data["num"] = poly_json(g.num);
    r.data["den"] = poly_json(g.den);
    r.data["integral_before"] = exact(before);
    r.data["integral_after"] = exact(after);
    r.text.push_back("step: " + integrand_string(g));
    r.text.push_back("half-line integral before " + show(before, 30) + ", after " + show(after, 30));
    return r;
  }
  if (args.action != "phi6") throw invalid_input("halfline action must be phi6 or step");
  half::SexticParams<BigRat> q{parse_number(args.a, "a"), parse_number(args.b, "b"), parse_number(args.c, "c"),
                               parse_number(args.d, "d"), parse_number(args.e, "e")};
  const bool inside = half::in_lambda6(q.a, q.b);
  half::SexticParams<BigFloat> x = half::to_float(q, dg);
  r.data["action"] = "phi6";
  r.data["in_lambda6"] = inside;
  r.data["discriminant"] = exact(half::discriminant(q.a, q.b));
  r.csv_header = {"n", "a", "b", "c", "d", "e", "distance"};
  r.text.push_back(std::string("(a, b) ") + (inside ? "inside" : "outside") + " the convergence region");
  json traj = json::array();
  auto emit = [&](int n, const half::SexticParams<BigFloat>& s) {
    BigFloat dist = half::distance_to_fixed(s);
    traj.push_back({{"n", n}, {"a", exact(s.a)}, {"b", exact(s.b)}, {"c", exact(s.c)}, {"d", exact(s.d)},
                    {"e", exact(s.e)}, {"distance", exact(dist)}});
    r.csv_rows.push_back({std::to_string(n), exact(s.a), exact(s.b), exact(s.c), exact(s.d), exact(s.e), exact(dist)});
    r.text.push_back("  n=" + std::to_string(n) + "  a=" + show(s.a, 15) + "  b=" + show(s.b, 15) +
                     "  |(a,b)-(3,3)|=" + show(dist, 4));
  };
  emit(0, x);
  std::string stop = "iteration budget";
  for (int n = 1; n <= cfg.iters(8); ++n) {
    if (x.a + x.b + 2L <= 0L) {
      stop = "a + b + 2 <= 0";
      break;
    }
    x = half::phi6(x);
    emit(n, x);
  }
  r.data["trajectory"] = traj;
  r.data["stopped_by"] = stop;
  return r;
}

// ---------------------------------------------------------------- quartic

struct QuarticArgs {
  long m = 3;
  std::string a = "2";
  long alpha_beta = -1;
};

inline Report cmd_quartic(const QuarticArgs& args, const RunConfig& cfg) {
  const Digits d = cfg.digits();
  BigRat a = parse_number(args.a, "a");
  BigFloat closed = quartic::quartic_integral(BigFloat(a, d), args.m);
  auto q = oracle::integrate_half_line(quartic::quartic_integrand(a, args.m), d);
  quartic::QuarticCoeffs c = quartic::quartic_coeffs(args.m);
  Report r;
  r.data["command"] = "quartic";
  r.data["precision"] = cfg.precision;
  r.data["m"] = args.m;
  r.data["a"] = exact(a);
  r.data["closed_form"] = exact(closed);
  r.data["oracle"] = exact(q.value);
  r.data["difference"] = exact(abs(closed - q.value));
  json dj = json::array(), aj = json::array();
  for (const auto& v : c.d) dj.push_back(exact(v));
  for (const auto& v : c.A) aj.push_back(exact(v));
  r.data["d"] = dj;
  r.data["A"] = aj;
  r.text.push_back("m=" + std::to_string(args.m) + " a=" + a.get_str());
  r.text.push_back("closed form " + show(closed, 30));
  r.text.push_back("oracle      " + show(q.value, 30));
  r.text.push_back("difference  " + show(abs(closed - q.value), 3));
  r.text.push_back("P_m(a) = " + to_string(quartic::P_poly(args.m), "a"));
  r.csv_header = {"l", "d", "A"};
  for (std::size_t l = 0; l < c.d.size(); ++l)
    r.csv_rows.push_back({std::to_string(l), exact(c.d[l]), exact(c.A[l])});
  if (args.alpha_beta >= 0) {
    auto ab = quartic::alpha_beta_reconstruct(args.alpha_beta);
    BigFloat dev = quartic::little_root_deviation(ab);
    r.data["alpha"] = poly_json(ab.alpha);
    r.data["beta"] = poly_json(ab.beta);
    r.data["root_deviation"] = exact(dev);
    r.text.push_back("alpha_" + std::to_string(args.alpha_beta) + "(m) = " + to_string(ab.alpha, "m"));
    r.text.push_back("beta_" + std::to_string(args.alpha_beta) + "(m) = " + to_string(ab.beta, "m"));
    r.text.push_back("max |Re(root) + 1/2| = " + show(dev, 3));
  }
  return r;
}

// ---------------------------------------------------------------- means

struct MeansArgs {
  std::string kind;  // pi-quartic | ag-n | a4 | cubic | b | fast-log | theta | cf
  int order = 3;
  std::string x;  // empty: 4/5 for b, 1/2 otherwise
  long n = 5;
  std::string re = "0", im = "1";
  std::string eta = "1", a = "1", b = "2";
};

inline Report cmd_means(const MeansArgs& args, const RunConfig& cfg) {
  using namespace means;
  const Digits d = cfg.digits();
  Report r;
  r.data["command"] = "means";
  r.data["kind"] = args.kind;
  r.data["precision"] = cfg.precision;
  BigFloat one(1L, d);
  const std::string xs = !args.x.empty() ? args.x : args.kind == "b" ? "4/5" : "1/2";
  auto pair_line = [&](const std::string& label, const BigFloat& got, const BigFloat& want) {
    r.data["value"] = exact(got);
    r.data["reference"] = exact(want);
    r.data["difference"] = exact(abs(got - want));
    r.text.push_back(label + " = " + show(got, 30));
    r.text.push_back("reference = " + show(want, 30) + "  (difference " + show(abs(got - want), 3) + ")");
  };
  if (args.kind == "pi-quartic") {
    PiQuarticResult p = pi_quartic(cfg.iters(4), d);
    r.csv_header = {"iteration", "estimate", "correct_digits"};
    json it = json::array();
    for (std::size_t k = 0; k < p.estimates.size(); ++k) {
      it.push_back({{"iteration", k + 1}, {"estimate", exact(p.estimates[k])}, {"correct_digits", p.correct_digits[k]}});
      r.csv_rows.push_back({std::to_string(k + 1), exact(p.estimates[k]), std::to_string(p.correct_digits[k])});
      r.text.push_back("iteration " + std::to_string(k + 1) + ": " + std::to_string(p.correct_digits[k]) +
                       " correct digits");
    }
    r.data["iterations"] = it;
    r.data["saturated"] = p.saturated;
    if (p.saturated) r.text.push_back("precision saturated: later counts are capped by the working precision");
  } else if (args.kind == "ag-n") {
    BigFloat k = parse_real(xs, "x", d);
    BigFloat got = 1L / ag_n_mean(args.order, one, k);
    BigFloat arg = one - pow(k, static_cast<long>(args.order));
    if (args.order != 2 && args.order != 3) throw invalid_input("ag-n: reference known for order 2 and 3");
    BigFloat want = args.order == 2 ? hyp2f1(frac(1, 2, d), frac(1, 2, d), one, one - k * k)
                                    : hyp2f1(frac(1, 3, d), frac(2, 3, d), one, arg);
    pair_line("1/AG" + std::to_string(args.order) + "(1, " + xs + ")", got, want);
  } else if (args.kind == "a4") {
    BigFloat k = parse_real(xs, "x", d);
    BigFloat f = hyp2f1(frac(1, 4, d), frac(3, 4, d), one, one - k * k);
    pair_line("1/A4(1, " + xs + ")", 1L / a4_mean(one, k).a, f * f);
  } else if (args.kind == "cubic") {
    BigFloat x = parse_real(xs, "x", d);
    pair_line("1/F(" + xs + ")", 1L / cubic_mean(x).a, hyp2f1(frac(1, 3, d), frac(2, 3, d), one, one - x * x * x));
  } else if (args.kind == "b") {
    BigFloat x = parse_real(xs, "x", d);
    pair_line("B(" + xs + ")", borwein_b_mean(one, x).a, borwein_b_closed_form(x));
  } else if (args.kind == "fast-log") {
    BigFloat x = parse_real(xs, "x", d);
    BigFloat got = fast_log(x, args.n);
    pair_line("fast log(" + xs + ")", got, log(x));
    r.data["bound"] = exact(fast_log_bound(args.n, d));
    r.data["within_bound"] = abs(got - log(x)) < fast_log_bound(args.n, d);
  } else if (args.kind == "theta") {
    ThetaParams p{ComplexF{parse_real(args.re, "re", d), parse_real(args.im, "im", d)}, 0};
    ThetaDoubling t = theta_doubling_check(p);
    r.data["theta3_residual"] = exact(t.theta3_residual);
    r.data["theta4_residual"] = exact(t.theta4_residual);
    r.data["agm_residual"] = exact(t.agm_residual);
    r.text.push_back("theta3 doubling residual " + show(t.theta3_residual, 3));
    r.text.push_back("theta4 doubling residual " + show(t.theta4_residual, 3));
    r.text.push_back("AGM step residual " + show(t.agm_residual, 3));
  } else if (args.kind == "cf") {
    CFIdentity c = cf_agm_identity_check(parse_real(args.eta, "eta", d), parse_real(args.a, "a", d),
                                         parse_real(args.b, "b", d), ten_pow(-(cfg.precision / 2), d));
    r.data["converged"] = c.converged;
    pair_line("continued fraction", c.lhs, c.rhs);
  } else {
    throw invalid_input("unknown means kind: " + args.kind +
                        " (pi-quartic, ag-n, a4, cubic, b, fast-log, theta, cf)");
  }
  return r;
}

// ---------------------------------------------------------------- verify

inline Report cmd_verify(const RunConfig& cfg, const std::function<void(const std::string&)>& progress = {}) {
  Report r;
  r.data["command"] = "verify";
  r.data["seed"] = cfg.seed;
  auto results = acceptance::run_all(
      [&](const acceptance::CriterionResult& c) {
        if (progress) progress(acceptance::format_line(c));
      },
      static_cast<unsigned>(cfg.seed));
  json crit = json::array();
  r.csv_header = {"id", "pass", "title", "detail"};
  int failed = 0;
  for (const auto& c : results) {
    crit.push_back({{"id", c.id}, {"pass", c.pass}, {"title", c.title}, {"detail", c.detail}});
    std::string detail = c.detail;
    for (char& ch : detail)
      if (ch == ',') ch = ';';
    r.csv_rows.push_back({std::to_string(c.id), c.pass ? "PASS" : "FAIL", c.title, detail});
    r.text.push_back(acceptance::format_line(c));
    failed += c.pass ? 0 : 1;
  }
  r.data["criteria"] = crit;
  r.data["failed"] = failed;
  r.text.push_back(std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " criteria pass");
  r.exit_code = failed ? Exit::verification_failed : Exit::ok;
  return r;
}

}  // namespace landen::cli
