#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "landen/cli.hpp"

using namespace landen;

int main(int argc, char** argv) {
  CLI::App app{"Landen transformations, AGM means and quartic integrals"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig cfg;
  std::string tol, dump;
  int iters = -1;
  app.add_option("--precision", cfg.precision, "working precision in decimal digits (>= 16)");
  app.add_option("--output", cfg.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for the randomized property suite");
  app.add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", tol, "stopping tolerance");
  app.add_option("--dump", dump, "also write the JSON report to this file");

  auto iters_opt = [&](CLI::App* sub) { sub->add_option("--iters", iters, "iteration count"); };

  cli::AgmArgs agm;
  auto* c_agm = app.add_subcommand("agm", "arithmetic-geometric mean of two positive reals");
  c_agm->add_option("a", agm.a)->required();
  c_agm->add_option("b", agm.b)->required();
  c_agm->add_flag("--check-G", agm.check_g, "compare pi/(2 AGM) with the trigonometric integral");
  iters_opt(c_agm);

  cli::LandenArgs lan;
  auto* c_lan = app.add_subcommand("landen", "iterate the Landen map on a rational integrand over the real line");
  c_lan->add_option("--num", lan.num)->required();
  c_lan->add_option("--den", lan.den)->required();
  c_lan->add_option("--m", lan.m, "order of the method (>= 2)");
  c_lan->add_option("--size-cap", lan.size_cap, "switch to floating point past this many digits");
  c_lan->add_flag("--show-integrand", lan.show_integrand, "print the first two transformed integrands");
  iters_opt(c_lan);

  cli::HalflineArgs hl;
  auto* c_hl = app.add_subcommand("halfline", "even integrands on [0, inf)");
  c_hl->require_subcommand(1);
  c_hl->fallthrough();
  auto* c_phi = c_hl->add_subcommand("phi6", "iterate the sextic map");
  for (auto [name, field] : {std::pair{"--a", &hl.a}, {"--b", &hl.b}, {"--c", &hl.c}, {"--d", &hl.d}, {"--e", &hl.e}})
    c_phi->add_option(name, *field);
  iters_opt(c_phi);
  auto* c_step = c_hl->add_subcommand("step", "one exact even Landen step");
  c_step->add_option("--num", hl.num)->required();
  c_step->add_option("--den", hl.den)->required();

  cli::QuarticArgs qa;
  auto* c_q = app.add_subcommand("quartic", "integral of 1/(x^4+2ax^2+1)^(m+1) over [0, inf)");
  c_q->add_option("--m", qa.m);
  c_q->add_option("--a", qa.a);
  c_q->add_option("--alpha-beta", qa.alpha_beta, "reconstruct alpha_l, beta_l for this l");

  cli::MeansArgs ma;
  auto* c_m = app.add_subcommand("means", "AGM variants and their checks");
  c_m->add_option("kind", ma.kind, "pi-quartic, ag-n, a4, cubic, b, fast-log, theta, cf")->required();
  c_m->add_option("--order", ma.order);
  c_m->add_option("--x", ma.x);
  c_m->add_option("--n", ma.n);
  c_m->add_option("--re", ma.re);
  c_m->add_option("--im", ma.im);
  c_m->add_option("--eta", ma.eta);
  c_m->add_option("--a", ma.a);
  c_m->add_option("--b", ma.b);
  iters_opt(c_m);

  auto* c_v = app.add_subcommand("verify", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? cli::Exit::ok : cli::Exit::usage;
  }

  cli::Report report;
  try {
    if (iters >= 0) cfg.max_iter = iters;
    else if (iters != -1) throw invalid_input("--iters must be >= 0");
    if (!tol.empty()) cfg.tol = cli::parse_number(tol, "tol");
    cli::validate(cfg);
    if (*c_agm) report = cli::cmd_agm(agm, cfg);
    else if (*c_lan) report = cli::cmd_landen(lan, cfg);
    else if (*c_hl) {
      hl.action = *c_step ? "step" : "phi6";
      report = cli::cmd_halfline(hl, cfg);
    } else if (*c_q) report = cli::cmd_quartic(qa, cfg);
    else if (*c_m) report = cli::cmd_means(ma, cfg);
    else if (*c_v) {
      bool live = cfg.output == "text";
      report = cli::cmd_verify(cfg, [&](const std::string& line) {
        if (live) std::cout << line << std::endl;
      });
      if (live) {
        std::cout << report.text.back() << "\n";
        report.text.clear();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::Exit::usage;
  }

  std::cout << cli::render(report, cfg.output);
  if (!dump.empty()) {
    std::ofstream f(dump);
    if (!f) {
      std::cerr << "error: cannot write " << dump << "\n";
      return cli::Exit::usage;
    }
    f << report.data.dump(2) << "\n";
  }
  return report.exit_code;
}
