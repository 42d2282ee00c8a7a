// Command-line front end: single-point rate reports, distance sweeps as CSV,
// and the verification suite.
//
//   relayrates rates --d 0.5
//   relayrates sweep --out sweep.csv
//   relayrates verify --suite all --seed 1
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relay/search.hpp"
#include "relay/verify.hpp"

namespace {

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  double p1 = 5.0, p2 = 5.0, n1 = 1.0, n2 = 1.0;
  int grid = 101;
  double tol = 1e-7;
  bool cutset_literal = false;

  relay::SearchConfig config() const {
    relay::SearchConfig cfg;
    cfg.grid_steps = grid;
    cfg.tol = tol;
    cfg.cutset_conditioned = !cutset_literal;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p1", opts.p1, "Source transmit power");
  cmd->add_option("--p2", opts.p2, "Relay transmit power");
  cmd->add_option("--n1", opts.n1, "Relay noise power");
  cmd->add_option("--n2", opts.n2, "Destination noise power");
  cmd->add_option("--grid", opts.grid, "Grid points per search axis");
  cmd->add_option("--tol", opts.tol, "Search convergence tolerance in bits");
  cmd->add_flag("--cutset-literal", opts.cutset_literal,
                "Use the unconditioned broadcast cut I(X1;Y2,Y3)");
}

void print_report(double d, const relay::RateReport& r) {
  std::printf("rates at d=%.6g (bits/channel use)\n", d);
  std::printf("  %-8s %-12s argmax\n", "scheme", "rate");
  std::printf("  %-8s %-12.9f rho=%.6g\n", "DF", r.r_df, r.rho_df);
  std::printf("  %-8s %-12.9f delta=%.6g\n", "CF", r.r_cf, r.delta_cf_star);
  std::printf("  %-8s %-12.9f alpha=%.6g beta=%.6g gamma=%.6g delta'=%.6g\n",
              "SF", r.r_sf, r.arg_sf.alpha, r.arg_sf.beta, r.arg_sf.gamma,
              r.arg_sf.delta_prime);
  std::printf("  %-8s %-12.9f theta_u=%.6g theta_2=%.6g\n", "BDF", r.r_bdf,
              r.arg_bdf.theta_u, r.arg_bdf.theta_2);
  std::printf("  %-8s %-12.9f rho=%.6g\n", "cut-set", r.r_cs, r.rho_cs);
}

int run_rates(double d, const CommonOpts& opts) {
  const relay::ChannelParams ch =
      relay::from_geometry(d, opts.p1, opts.p2, opts.n1, opts.n2);
  const relay::RateReport rep = relay::report(ch, opts.config());
  print_report(d, rep);
  return 0;
}

int run_sweep(double d_min, double d_max, int steps, const std::string& out,
              const CommonOpts& opts) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (!(d_min > 0.0) || !(d_max < 1.0) || !(d_min <= d_max)) {
    throw std::invalid_argument("sweep range must satisfy 0 < d_min <= d_max < 1");
  }
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out, std::ios::binary);  // '\n' line endings on every platform
    if (!file) throw std::invalid_argument("cannot open output path: " + out);
    os = &file;
  }
  const relay::SearchConfig cfg = opts.config();
  *os << "d,r_df,r_cf,r_sf,r_bdf,r_cs,rho_df,delta_cf,alpha,beta,gamma,"
         "delta_prime\n";
  for (int i = 0; i < steps; ++i) {
    const double d = d_min + (d_max - d_min) * static_cast<double>(i) /
                                 (steps - 1);
    const relay::ChannelParams ch =
        relay::from_geometry(d, opts.p1, opts.p2, opts.n1, opts.n2);
    const relay::RateReport r = relay::report(ch, cfg);
    *os << full_precision(d) << "," << full_precision(r.r_df) << ","
        << full_precision(r.r_cf) << "," << full_precision(r.r_sf) << ","
        << full_precision(r.r_bdf) << "," << full_precision(r.r_cs) << ","
        << full_precision(r.rho_df) << "," << full_precision(r.delta_cf_star)
        << "," << full_precision(r.arg_sf.alpha) << ","
        << full_precision(r.arg_sf.beta) << ","
        << full_precision(r.arg_sf.gamma) << ","
        << full_precision(r.arg_sf.delta_prime) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out, const CommonOpts& opts) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path: " + out);
    os = &file;
  }
  const auto results = relay::run_suite(suite, seed, opts.config(), *os);
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable rates of the three-node Gaussian relay channel"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value config file");

  CommonOpts rates_opts, sweep_opts, verify_opts;

  auto* rates = app.add_subcommand("rates", "Rate report at one distance");
  double d = 0.5;
  rates->add_option("--d", d, "Relay distance from the source, in (0,1)");
  add_common(rates, rates_opts);

  auto* sweep = app.add_subcommand("sweep", "Distance sweep written as CSV");
  double d_min = 0.05, d_max = 0.95;
  int steps = 46;
  std::string sweep_out = "sweep.csv";
  sweep->add_option("--d-min", d_min, "Sweep start distance");
  sweep->add_option("--d-max", d_max, "Sweep end distance");
  sweep->add_option("--steps", steps, "Number of sweep points");
  sweep->add_option("--out", sweep_out, "Output CSV path ('-' for stdout)");
  add_common(sweep, sweep_opts);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::string verify_out;
  verify->add_option("--suite", suite,
                     "all|lemma1|lemma2|lemma3|penalty|main|theorem2|bdf|regimes");
  verify->add_option("--seed", seed, "RNG seed for randomized checks");
  verify->add_option("--out", verify_out, "Summary output path (default stdout)");
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rates->parsed()) return run_rates(d, rates_opts);
    if (sweep->parsed()) return run_sweep(d_min, d_max, steps, sweep_out, sweep_opts);
    if (verify->parsed()) return run_verify(suite, seed, verify_out, verify_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
