#include "relay/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace relay {

namespace {

std::string fmt_tuple(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os.precision(10);
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << " ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

struct Draw {
  ChannelParams ch;
  double d;
  double alpha, beta, gamma;
  double delta;  // compression noise variance
};

// Random SF operating point. bias_small_d / bias_large_d skew the relay
// position so that conditional-lemma premises are hit often enough.
Draw sample(std::mt19937_64& rng, bool bias_small_d, bool bias_large_d,
            double delta_lo_mult = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double d;
  const double coin = unit(rng);
  if (bias_small_d && coin < 0.5) {
    d = 0.05 + 0.20 * unit(rng);
  } else if (bias_large_d && coin < 0.5) {
    d = 0.70 + 0.25 * unit(rng);
  } else {
    d = 0.05 + 0.90 * unit(rng);
  }
  const double p1 = 0.5 + 9.5 * unit(rng);
  const double p2 = 0.5 + 9.5 * unit(rng);
  const double n1 = 0.5 + 1.5 * unit(rng);
  const double n2 = 0.5 + 1.5 * unit(rng);
  Draw dr;
  dr.d = d;
  dr.ch = from_geometry(d, p1, p2, n1, n2);
  dr.alpha = unit(rng);
  dr.beta = 0.999 * unit(rng);  // keep delta_sf finite
  dr.gamma = unit(rng);
  const double floor = delta_sf(dr.ch, dr.alpha, dr.beta, dr.gamma);
  const double lo = std::log10(floor * delta_lo_mult);
  const double hi = std::log10(floor * 1e3);
  dr.delta = std::pow(10.0, lo + (hi - lo) * unit(rng));
  return dr;
}

CheckResult make_result(std::string name, double worst_slack, double tol,
                        std::string witness, long draws = 0, long hits = 0) {
  CheckResult r;
  r.name = std::move(name);
  r.worst_slack = worst_slack;
  r.tolerance = tol;
  r.passed = worst_slack >= -tol;
  r.witness = std::move(witness);
  r.draws = draws;
  r.premise_hits = hits;
  return r;
}

}  // namespace

CheckResult check_lemma1(double grid_step) {
  double worst = 1.0;
  std::string witness;
  for (double p1 = -1.0; p1 <= 1.0 + 1e-12; p1 += grid_step) {
    for (double p2 = -1.0; p2 <= 1.0 + 1e-12; p2 += grid_step) {
      const double c1 = std::clamp(p1, -1.0, 1.0);
      const double c2 = std::clamp(p2, -1.0, 1.0);
      const CovModel chain = build_model({
          {"Y", {}, 1.0},
          {"X", {{"Y", c1}}, 1.0 - c1 * c1},
          {"Z", {{"Y", c2}}, 1.0 - c2 * c2},
      });
      const double err =
          std::abs(chain.correlation("X", "Z") - markov_corr_product(c1, c2));
      if (-err < worst) {
        worst = -err;
        witness = fmt_tuple({{"phi1", c1}, {"phi2", c2}});
      }
    }
  }
  return make_result("lemma1_markov_correlation", worst, 1e-12, witness);
}

CheckResult check_lemma2(long n_draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  std::string witness;
  long hits = 0, total = 0;
  const long max_total = 200 * n_draws;
  while (hits < n_draws && total < max_total) {
    const Draw dr = sample(rng, /*bias_small_d=*/true, false);
    ++total;
    const double rho = dr.alpha * dr.beta * dr.gamma;
    const bool premise = mi_x1_y2_given_x2(dr.ch, rho) >=
                         mi_x1_y2haty3_given_x2(dr.ch, rho, dr.delta);
    if (!premise) continue;
    ++hits;
    const double slack =
        mi_x1_y2_given_x2u(dr.ch, dr.gamma) -
        mi_x1_y2haty3_given_x2u(dr.ch, dr.gamma, dr.delta);
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", dr.d},
                           {"alpha", dr.alpha},
                           {"beta", dr.beta},
                           {"gamma", dr.gamma},
                           {"delta", dr.delta}});
    }
  }
  return make_result("lemma2_df_side", worst, 1e-9, witness, total, hits);
}

CheckResult check_lemma3(long n_draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  std::string witness;
  long hits = 0, total = 0;
  const long max_total = 200 * n_draws;
  while (hits < n_draws && total < max_total) {
    Draw dr = sample(rng, false, /*bias_large_d=*/true);
    ++total;
    // Exercise the gamma = 1 equality branch on a fixed fraction of draws.
    if (total % 10 == 0) dr.gamma = 1.0;
    const double rho = dr.alpha * dr.beta * dr.gamma;
    if (dr.gamma == 1.0) {
      const double eq1 = std::abs(mi_x1_y2_given_x2(dr.ch, rho) -
                                  mi_u_y2_given_x2(dr.ch, 1.0, rho));
      const double eq2 =
          std::abs(mi_x1_y2haty3_given_x2(dr.ch, rho, dr.delta) -
                   mi_u_y2haty3_given_x2(dr.ch, 1.0, rho, dr.delta));
      const double slack = -std::max(eq1, eq2);
      if (slack < worst) {
        worst = slack;
        witness = fmt_tuple({{"d", dr.d},
                             {"alpha", dr.alpha},
                             {"beta", dr.beta},
                             {"gamma", 1.0},
                             {"delta", dr.delta}});
      }
    }
    const bool premise = mi_x1_y2_given_x2(dr.ch, rho) <=
                         mi_x1_y2haty3_given_x2(dr.ch, rho, dr.delta);
    if (!premise) continue;
    ++hits;
    const double slack =
        mi_u_y2haty3_given_x2(dr.ch, dr.gamma, rho, dr.delta) -
        mi_u_y2_given_x2(dr.ch, dr.gamma, rho);
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", dr.d},
                           {"alpha", dr.alpha},
                           {"beta", dr.beta},
                           {"gamma", dr.gamma},
                           {"delta", dr.delta}});
    }
  }
  return make_result("lemma3_cf_side", worst, 1e-9, witness, total, hits);
}

CheckResult check_penalty_chain(long n_draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  std::string witness;
  for (long i = 0; i < n_draws; ++i) {
    const Draw dr = sample(rng, false, false);
    const CovModel m =
        sf_model(dr.ch, SfParams{dr.alpha, dr.beta, dr.gamma, dr.delta});
    const double with_u =
        conditional_mi(m, {"Y2hat"}, {"Y2"}, {"X1", "X2", "U", "Y3"});
    const double without_u =
        conditional_mi(m, {"Y2hat"}, {"Y2"}, {"X1", "X2", "Y3"});
    const double slack = with_u - without_u;
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", dr.d},
                           {"alpha", dr.alpha},
                           {"beta", dr.beta},
                           {"gamma", dr.gamma},
                           {"delta", dr.delta}});
    }
  }
  return make_result("penalty_conditioning_chain", worst, 1e-9, witness,
                     n_draws, n_draws);
}

CheckResult check_main_inequality(long n_draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  std::string witness;
  for (long i = 0; i < n_draws; ++i) {
    // delta' down to 1% of the feasibility floor: the inequality is claimed
    // (and tested) without the relay-link constraint.
    const Draw dr = sample(rng, false, false, /*delta_lo_mult=*/0.01);
    const CovModel m =
        sf_model(dr.ch, SfParams{dr.alpha, dr.beta, dr.gamma, dr.delta});
    const double lhs =
        conditional_mi(m, {"X1"}, {"Y3", "Y2hat"}, {"X2", "U"}) +
        conditional_mi(m, {"U"}, {"Y2"}, {"X2", "V"});
    const double rhs =
        std::max(conditional_mi(m, {"X1"}, {"Y2"}, {"X2"}),
                 conditional_mi(m, {"X1"}, {"Y2hat", "Y3"}, {"X2"}));
    const double slack = rhs - lhs;
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", dr.d},
                           {"alpha", dr.alpha},
                           {"beta", dr.beta},
                           {"gamma", dr.gamma},
                           {"delta", dr.delta}});
    }
  }
  return make_result("superposition_main_inequality", worst, 1e-9, witness,
                     n_draws, n_draws);
}

CheckResult check_theorem2(const std::vector<double>& d_list,
                           const SearchConfig& cfg) {
  double worst = 1.0;
  std::string witness;
  for (const double d : d_list) {
    const ChannelParams ch = from_geometry(d, 5.0, 5.0, 1.0, 1.0);
    const double df = maximize_df(ch, cfg).second;
    const double cf = maximize_cf(ch, cfg).second;
    const double sf = maximize_sf(ch, cfg).second;
    const double slack = -std::abs(sf - std::max(df, cf));
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", d}, {"r_sf", sf}, {"max_df_cf",
                                                    std::max(df, cf)}});
    }
  }
  return make_result("theorem2_sf_equals_max", worst, 1e-4, witness);
}

CheckResult check_bdf_reduction(const std::vector<double>& d_list,
                                const SearchConfig& cfg) {
  double worst = 1.0;
  std::string witness;
  for (const double d : d_list) {
    const ChannelParams ch = from_geometry(d, 5.0, 5.0, 1.0, 1.0);
    const double df = maximize_df(ch, cfg).second;
    const double bdf = maximize_bdf(ch, cfg).second;
    const double slack = df - bdf;
    if (slack < worst) {
      worst = slack;
      witness = fmt_tuple({{"d", d}, {"r_bdf", bdf}, {"r_df", df}});
    }
  }
  return make_result("bdf_bounded_by_df", worst, 1e-9, witness);
}

CheckResult check_regimes(const SearchConfig& cfg) {
  auto rates_at = [&](double d) {
    const ChannelParams ch = from_geometry(d, 5.0, 5.0, 1.0, 1.0);
    return std::array<double, 3>{maximize_df(ch, cfg).second,
                                 maximize_cf(ch, cfg).second,
                                 maximize_cutset(ch, cfg).second};
  };

  double worst = 1.0;
  std::string witness;
  auto consider = [&](double margin, const std::string& what) {
    if (margin < worst) {
      worst = margin;
      witness = what;
    }
  };

  {
    const auto [df, cf, cs] = rates_at(0.1);
    consider(1e-6 - std::abs(df - cs),
             "d=0.1 DF-vs-cutset " + fmt_tuple({{"r_df", df}, {"r_cs", cs}}));
  }
  {
    const auto [df, cf, cs] = rates_at(0.4);
    consider(df - cf,
             "d=0.4 DF>CF " + fmt_tuple({{"r_df", df}, {"r_cf", cf}}));
    consider(cs - 1e-3 - df,
             "d=0.4 DF below bound " + fmt_tuple({{"r_df", df}, {"r_cs", cs}}));
  }
  {
    const auto [df, cf, cs] = rates_at(0.8);
    consider(cf - df,
             "d=0.8 CF>DF " + fmt_tuple({{"r_df", df}, {"r_cf", cf}}));
  }
  {
    const auto [df, cf, cs] = rates_at(0.999);
    consider(0.01 - std::abs(cf - cs),
             "d=0.999 CF-vs-cutset " + fmt_tuple({{"r_cf", cf}, {"r_cs", cs}}));
  }
  {
    // DF/CF crossover by bisection: DF dominates on the left, CF on the right.
    double lo = 0.4, hi = 0.8;
    for (int i = 0; i < 50; ++i) {
      const double mid = 0.5 * (lo + hi);
      const auto [df, cf, cs] = rates_at(mid);
      (df > cf ? lo : hi) = mid;
    }
    const double cross = 0.5 * (lo + hi);
    consider(std::min(cross - 0.5, 0.7 - cross),
             "crossover " + fmt_tuple({{"d", cross}}));
  }

  return make_result("fig3_distance_regimes", worst, 0.0, witness);
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed, const SearchConfig& cfg,
                                   std::ostream& out) {
  std::vector<double> d_list;
  for (int i = 1; i <= 19; ++i) d_list.push_back(0.05 * i);

  std::vector<CheckResult> results;
  auto want = [&](const char* name) {
    return suite == "all" || suite == name;
  };
  bool known = suite == "all";

  if (want("lemma1")) results.push_back(check_lemma1()), known = true;
  if (want("lemma2")) results.push_back(check_lemma2(1000, seed)), known = true;
  if (want("lemma3")) results.push_back(check_lemma3(1000, seed)), known = true;
  if (want("penalty"))
    results.push_back(check_penalty_chain(1000, seed)), known = true;
  if (want("main"))
    results.push_back(check_main_inequality(1000, seed)), known = true;
  if (want("theorem2"))
    results.push_back(check_theorem2(d_list, cfg)), known = true;
  if (want("bdf"))
    results.push_back(check_bdf_reduction(d_list, cfg)), known = true;
  if (want("regimes")) results.push_back(check_regimes(cfg)), known = true;

  if (!known) throw std::invalid_argument("unknown verify suite: " + suite);

  for (const auto& r : results) {
    out << r.name << " " << (r.passed ? "PASS" : "FAIL")
        << " worst_slack=" << r.worst_slack << " tol=" << r.tolerance;
    if (r.draws > 0) {
      out << " draws=" << r.draws << " premise_hits=" << r.premise_hits
          << " hit_rate=" << static_cast<double>(r.premise_hits) / r.draws;
    }
    if (!r.witness.empty()) out << " witness{" << r.witness << "}";
    out << "\n";
  }
  return results;
}

}  // namespace relay
