#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "splitmod/reports.hpp"

using namespace splitmod;

namespace {

// 0 all checks pass, 1 a check failed, 2 config/budget/parse error
int emit(const ReportConfig& cfg, const Report& rep) {
  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("SPLITMOD_OUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / (cfg.command + "." + cfg.format)).string();
  }
  if (path.empty()) {
    std::cout << rep.text << std::flush;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << path << "\n";
      return 2;
    }
    f << rep.text;
    std::cerr << "wrote " << path << "\n";
  }
  if (!rep.ok) std::cerr << cfg.command << ": failing checks, see report\n";
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitmod: finite checks on splitting models at pi-modular level"};
  app.require_subcommand(1, 1);

  ReportConfig cfg;
  unsigned q = 0;
  auto common = [&](CLI::App* sub, bool frame) {
    if (frame) {
      sub->add_option("--n", cfg.n, "rank n");
      sub->add_option("--s", cfg.s, "signature s");
    }
    sub->add_option("--q", q, "field size (3, 5, 7 or 9)");
    sub->add_option("--N", cfg.N, "truncation precision");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--budget", cfg.budget, "candidate cap or sample count");
    sub->add_option("--out", cfg.out, "output file (default: stdout or $SPLITMOD_OUT_DIR/<command>.<format>)");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };

  auto* census = app.add_subcommand("census", "count points per stratum");
  common(census, true);
  census->add_option("--strategy", cfg.strategy, "exhaustive or chart-sampled");

  auto* closure = app.add_subcommand("closure", "closure poset and lift verification");
  common(closure, true);

  auto* charts = app.add_subcommand("charts", "chart invariants against predictions");
  common(charts, true);

  auto* flatlift = app.add_subcommand("flatlift", "flat lift identities over F_q(pi)");
  common(flatlift, false);

  auto* groebner = app.add_subcommand("groebner", "reducedness certificates and substitution chain");
  common(groebner, false);
  groebner->add_option("--m", cfg.m, "skew block size (2, or 4 with --allow-long)");
  groebner->add_flag("--allow-long", cfg.allow_long, "permit long jobs");
  groebner->add_option("--input", cfg.input, "polynomial file; reports its reduced basis instead");
  groebner->add_option("--reduce", cfg.reduce, "polynomial to reduce against the input basis")->allow_extra_args(false);
  groebner->add_option("--member", cfg.member, "polynomial that must lie in the input ideal")->allow_extra_args(false);

  auto* schubert = app.add_subcommand("schubert", "Schubert cells, Demazure checks, tau and phi");
  common(schubert, true);
  schubert->add_option("--strategy", cfg.strategy, "census strategy");
  schubert->add_option("--variant", cfg.variant, "pimodular or selfdual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.q = q;

  try {
    auto rep = run_report(cfg);
    return emit(cfg, rep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
