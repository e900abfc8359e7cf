#include <gtest/gtest.h>

#include "landen/cli.hpp"

using namespace landen;
using cli::json;

namespace {

cli::RunConfig config(long precision = 50) {
  cli::RunConfig c;
  c.precision = precision;
  return c;
}

QPoly poly_from(const json& a) {
  std::vector<BigRat> c;
  for (const auto& v : a) c.emplace_back(v.get<std::string>());
  for (auto& q : c) q.canonicalize();
  return QPoly(c);
}

bool same_function(const QPoly& n1, const QPoly& d1, const QPoly& n2, const QPoly& d2) {
  return (n1 * d2 - n2 * d1).is_zero();
}

BigFloat read(const json& v, long precision) { return BigFloat(v.get<std::string>(), Digits{precision}); }

}  // namespace

TEST(Parser, Forms) {
  EXPECT_EQ(parse_poly("3x+5"), make_qpoly({5, 3}));
  EXPECT_EQ(parse_poly("x^4+14x^3+74x^2+184x+208"), make_qpoly({208, 184, 74, 14, 1}));
  EXPECT_EQ(parse_poly(" - x^3 + 2 * x "), make_qpoly({0, 2, 0, -1}));
  EXPECT_EQ(parse_poly("3/2x^2 - 1"), QPoly({BigRat(-1), BigRat(0), BigRat(3, 2)}));
  EXPECT_EQ(parse_poly("0.25x"), QPoly({BigRat(0), BigRat(1, 4)}));
  EXPECT_EQ(parse_poly("x^2 + x^2"), make_qpoly({0, 0, 2}));
  EXPECT_EQ(parse_poly("7"), make_qpoly({7}));
}

TEST(Parser, Errors) {
  for (const char* bad : {"", "x^", "3y", "x*x", "2//3", "x + ", "3x 5", "1/", "x^1234567", "*x", "1."})
    EXPECT_THROW(parse_poly(bad), invalid_input) << bad;
  EXPECT_THROW(parse_ratfunc("1", "0"), invalid_input);
  try {
    parse_poly("x + 3z");
    FAIL();
  } catch (const invalid_input& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
}

TEST(Config, Validation) {
  cli::RunConfig c = config();
  EXPECT_NO_THROW(cli::validate(c));
  c.precision = 15;
  EXPECT_THROW(cli::validate(c), invalid_input);
  c = config();
  c.output = "xml";
  EXPECT_THROW(cli::validate(c), invalid_input);
  c = config();
  c.tol = BigRat(0);
  EXPECT_THROW(cli::validate(c), invalid_input);
  c = config();
  c.mode = "fast";
  EXPECT_THROW(cli::validate(c), invalid_input);
  EXPECT_EQ(cli::tol_digits(BigRat(1, 1000)), 3);
  EXPECT_EQ(cli::tol_digits(BigRat(1, 999)), 2);
  EXPECT_EQ(cli::tol_digits(BigRat(1)), 0);
  EXPECT_EQ(cli::tol_digits(BigRat(50)), -2);
}

TEST(Numbers, Parsing) {
  Digits d{40};
  EXPECT_LT(abs(cli::parse_real("sqrt(2)", "a", d) - sqrt(BigFloat(2L, d))).to_double(), 1e-38);
  EXPECT_EQ(cli::parse_number("-3/6", "a"), BigRat(-1, 2));
  EXPECT_THROW(cli::parse_real("sqrt(-2)", "a", d), invalid_input);
  EXPECT_THROW(cli::parse_number("abc", "a"), invalid_input);
}

TEST(Agm, EqualArguments) {
  cli::Report r = cli::cmd_agm({"5", "5"}, config());
  EXPECT_EQ(r.data["iterations"], 0);
  EXPECT_EQ(r.data["value"], "5");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Agm, SqrtTwo) {
  cli::Report r = cli::cmd_agm({"1", "sqrt(2)"}, config(200));
  EXPECT_GE(r.data["a6_b6_agreeing_digits"].get<long>(), 85);
  // truncated input converges just as fast
  r = cli::cmd_agm({"1", "1.41421356"}, config(200));
  EXPECT_GE(r.data["a6_b6_agreeing_digits"].get<long>(), 85);
}

TEST(Agm, CheckG) {
  cli::AgmArgs a{"2", "1", true};
  cli::Report r = cli::cmd_agm(a, config());
  EXPECT_LT(read(r.data["G_difference"], 50).to_double(), 1e-45);
  EXPECT_THROW(cli::cmd_agm({"0", "1"}, config()), domain_error);
  EXPECT_THROW(cli::cmd_agm({"x", "1"}, config()), invalid_input);
}

TEST(Agm, FixedSteps) {
  cli::RunConfig c = config();
  c.max_iter = 2;
  cli::Report r = cli::cmd_agm({"1", "2"}, c);
  EXPECT_EQ(r.data["history"].size(), 3u);
  EXPECT_FALSE(r.data["converged"].get<bool>());
}

TEST(Landen, OrderTwoTable) {
  cli::RunConfig c = config();
  c.max_iter = 9;
  cli::LandenArgs a{"3x+5", "x^4+14x^3+74x^2+184x+208", 2};
  cli::Report r = cli::cmd_landen(a, c);
  const json& rows = r.data["rows"];
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_FALSE(rows[0]["defined"].get<bool>());
  for (const acceptance::TableRow& p : acceptance::reference_table(2)) {
    const json& row = rows[p.n];
    EXPECT_NEAR(read(row["linf"], 50).to_double(), p.linf, 2e-3 * p.linf) << p.n;
    EXPECT_NEAR(read(row["error"], 50).to_double(), p.error, 2e-3 * p.error) << p.n;
    EXPECT_NEAR(row["size"].get<long>(), p.size, 2) << p.n;
  }
  EXPECT_EQ(r.csv_header, (std::vector<std::string>{"n", "l2", "linf", "error", "size"}));
  EXPECT_EQ(r.csv_rows.size(), 10u);
}

TEST(Landen, TrivialIntegrand) {
  cli::RunConfig c = config();
  cli::Report r = cli::cmd_landen({"1", "x^2+1", 3}, c);
  EXPECT_TRUE(r.data["converged"].get<bool>());
  EXPECT_EQ(r.data["rows"].size(), 1u);
  EXPECT_LT(abs(read(r.data["estimate"], 50) - const_pi(Digits{50})).to_double(), 1e-45);
}

TEST(Landen, ShowIntegrand) {
  cli::RunConfig c = config();
  c.max_iter = 1;
  cli::LandenArgs a{"1", "x^6+x^3+1", 2};
  a.show_integrand = true;
  cli::Report r = cli::cmd_landen(a, c);
  const json& t = r.data["transformed"];
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(same_function(poly_from(t[0]["num"]), poly_from(t[0]["den"]), parse_poly("32x^4+24x^2+4x+4"),
                            parse_poly("64x^6+96x^4+36x^2+3")));
  EXPECT_TRUE(same_function(poly_from(t[1]["num"]), poly_from(t[1]["den"]),
                            parse_poly("11264x^4-4096x^3+33600x^2-3536x+23880"),
                            parse_poly("12288x^6+59904x^4+87216x^2+39601")));
}

TEST(Landen, FloatModeAgrees) {
  cli::RunConfig c = config(60);
  c.max_iter = 12;
  cli::LandenArgs a{"3x+5", "x^4+14x^3+74x^2+184x+208", 3};
  cli::Report ex = cli::cmd_landen(a, c);
  c.mode = "float";
  cli::Report fl = cli::cmd_landen(a, c);
  EXPECT_LT(abs(read(ex.data["estimate"], 60) - read(fl.data["estimate"], 60)).to_double(), 1e-40);
  EXPECT_FALSE(fl.data["rows"][1].contains("size"));
}

TEST(Landen, Errors) {
  cli::RunConfig c = config();
  try {
    cli::cmd_landen({"1", "x^2-1", 2}, c);
    FAIL();
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("Sturm"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("near -1"), std::string::npos);
  }
  EXPECT_THROW(cli::cmd_landen({"x^3", "x^4+1", 2}, c), std::exception);
  EXPECT_THROW(cli::cmd_landen({"1", "x^2+1", 1}, c), std::exception);
  EXPECT_THROW(cli::cmd_landen({"1", "x^2+", 2}, c), invalid_input);
}

TEST(Halfline, Phi6Trajectory) {
  cli::RunConfig c = config();
  c.max_iter = 8;
  cli::HalflineArgs a;
  cli::Report r = cli::cmd_halfline(a, c);
  EXPECT_TRUE(r.data["in_lambda6"].get<bool>());
  const json& tr = r.data["trajectory"];
  ASSERT_EQ(tr.size(), 9u);
  EXPECT_LT(read(tr.back()["distance"], 50).to_double(), 1e-40);
  // quadratic contraction towards (3, 3)
  EXPECT_LT(read(tr[3]["distance"], 50).to_double(), read(tr[2]["distance"], 50).to_double());
}

TEST(Halfline, Outside) {
  cli::RunConfig c = config();
  cli::HalflineArgs a;
  a.a = "-5";
  a.b = "1";
  cli::Report r = cli::cmd_halfline(a, c);
  EXPECT_FALSE(r.data["in_lambda6"].get<bool>());
}

TEST(Halfline, Step) {
  cli::RunConfig c = config();
  cli::HalflineArgs a;
  a.action = "step";
  a.num = "x^2+3";
  a.den = "x^6+5x^4+2x^2+2";
  cli::Report r = cli::cmd_halfline(a, c);
  EXPECT_LT(abs(read(r.data["integral_before"], 50) - read(r.data["integral_after"], 50)).to_double(), 1e-40);
  a.action = "jump";
  EXPECT_THROW(cli::cmd_halfline(a, c), invalid_input);
}

TEST(Quartic, ClosedFormVsOracle) {
  cli::Report r = cli::cmd_quartic({3, "2"}, config());
  EXPECT_LT(read(r.data["difference"], 50).to_double(), 1e-40);
  EXPECT_EQ(r.data["d"].size(), 4u);
  cli::QuarticArgs q{2, "1/3", 3};
  r = cli::cmd_quartic(q, config());
  EXPECT_TRUE(r.data.contains("alpha"));
  EXPECT_LT(read(r.data["root_deviation"], 50).to_double(), 1e-8);
  EXPECT_THROW(cli::cmd_quartic({-1, "2"}, config()), invalid_input);
}

TEST(Means, PiQuartic) {
  cli::RunConfig c = config(400);
  c.max_iter = 4;
  cli::MeansArgs a;
  a.kind = "pi-quartic";
  cli::Report r = cli::cmd_means(a, c);
  std::vector<long> got;
  for (const auto& it : r.data["iterations"]) got.push_back(it["correct_digits"].get<long>());
  ASSERT_EQ(got.size(), 4u);
  EXPECT_GE(got[0], 8);
  EXPECT_GE(got[1], 40);
  EXPECT_GE(got[2], 170);
}

TEST(Means, Kinds) {
  for (const char* k : {"ag-n", "a4", "cubic", "b", "cf"}) {
    cli::MeansArgs a;
    a.kind = k;
    cli::Report r = cli::cmd_means(a, config());
    EXPECT_LT(read(r.data["difference"], 50).to_double(), 1e-20) << k;
  }
  cli::MeansArgs a;
  a.kind = "fast-log";
  EXPECT_TRUE(cli::cmd_means(a, config()).data["within_bound"].get<bool>());
  a.n = 12;
  a.x = "1/7";
  EXPECT_LT(read(cli::cmd_means(a, config()).data["difference"], 50).to_double(), 1e-20);
  a.kind = "theta";
  cli::Report r = cli::cmd_means(a, config());
  EXPECT_LT(read(r.data["agm_residual"], 50).to_double(), 1e-40);
  a.kind = "nope";
  EXPECT_THROW(cli::cmd_means(a, config()), invalid_input);
}

TEST(Output, Deterministic) {
  cli::RunConfig c = config(80);
  c.max_iter = 6;
  cli::LandenArgs a{"1", "x^6+x^3+1", 3};
  EXPECT_EQ(cli::cmd_landen(a, c).data.dump(), cli::cmd_landen(a, c).data.dump());
  cli::HalflineArgs h;
  EXPECT_EQ(cli::cmd_halfline(h, c).data.dump(), cli::cmd_halfline(h, c).data.dump());
}

// every float written to JSON reads back to the same bits
TEST(Output, JsonRoundTrip) {
  cli::RunConfig c = config(60);
  cli::Report r = cli::cmd_agm({"1", "sqrt(3)"}, c);
  json back = json::parse(cli::render(r, "json"));
  EXPECT_EQ(back, r.data);
  means::AGMState s = means::agm(BigFloat(1L, c.digits()), sqrt(BigFloat(3L, c.digits())));
  for (std::size_t n = 0; n < s.history.size(); ++n) {
    BigFloat a = read(back["history"][n]["a"], 60), b = read(back["history"][n]["b"], 60);
    EXPECT_TRUE(is_zero(a - s.history[n].first)) << n;
    EXPECT_TRUE(is_zero(b - s.history[n].second)) << n;
    EXPECT_EQ(a.exact_str(), s.history[n].first.exact_str());
  }
}

TEST(Output, Formats) {
  cli::RunConfig c = config();
  c.max_iter = 1;
  cli::Report r = cli::cmd_agm({"1", "2"}, c);
  std::string csv = cli::render(r, "csv");
  EXPECT_EQ(csv.rfind("n,a,b,agreeing_digits\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  std::string text = cli::render(r, "text");
  EXPECT_NE(text.find("AGM(1, 2)"), std::string::npos);
  cli::Report q = cli::cmd_means([] {
    cli::MeansArgs a;
    a.kind = "cubic";
    return a;
  }(), c);
  EXPECT_EQ(cli::render(q, "csv").rfind("key,value\n", 0), 0u);
}
