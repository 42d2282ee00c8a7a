#include "relay/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace relay {

void SearchConfig::validate() const {
  if (grid_steps < 3) throw std::invalid_argument("grid_steps must be >= 3");
  if (sf_seed_steps < 3)
    throw std::invalid_argument("sf_seed_steps must be >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!std::isfinite(delta_max_mult) || !(delta_max_mult >= 1.0)) {
    throw std::invalid_argument("delta_max_mult must be finite and >= 1");
  }
}

namespace {

constexpr double kInvGolden = 0.6180339887498948482;  // (sqrt(5)-1)/2

struct Point {
  double x;
  double value;
};

// Golden-section maximization on [lo, hi]; deterministic, ties resolved by
// the fixed probe order which shrinks toward the left.
Point golden_max(const std::function<double(double)>& f, double lo, double hi,
                 int iters) {
  double a = lo, b = hi;
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

// Grid scan followed by golden-section refinement within the bracketing
// cells. The grid argmax takes the first (smallest-x) maximizer.
Point grid_then_golden(const std::function<double(double)>& f, double lo,
                       double hi, int steps, int iters) {
  int best_i = 0;
  double best_v = f(lo);
  std::vector<double> xs(steps);
  for (int i = 0; i < steps; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  for (int i = 1; i < steps; ++i) {
    const double v = f(xs[i]);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  const double bl = xs[std::max(0, best_i - 1)];
  const double bh = xs[std::min(steps - 1, best_i + 1)];
  const Point refined = golden_max(f, bl, bh, iters);
  if (refined.value > best_v) return refined;
  return {xs[best_i], best_v};
}

}  // namespace

std::pair<double, double> maximize_df(const ChannelParams& ch,
                                      const SearchConfig& cfg) {
  ch.validate();
  cfg.validate();

  // Min-of-monotone structure guard: the relay-decoding term must be
  // nonincreasing and the multiple-access term nondecreasing over the grid.
  const int n = cfg.grid_steps;
  double prev_dec = mi_x1_y2_given_x2(ch, 0.0);
  double prev_inc = mi_x1x2_y3(ch, 0.0);
  for (int i = 1; i < n; ++i) {
    const double rho = static_cast<double>(i) / (n - 1);
    const double dec = mi_x1_y2_given_x2(ch, rho);
    const double inc = mi_x1x2_y3(ch, rho);
    if (dec > prev_dec + 1e-12 || inc < prev_inc - 1e-12) {
      throw std::runtime_error(
          "DF objective lost its min-of-monotone structure on the rho grid");
    }
    prev_dec = dec;
    prev_inc = inc;
  }

  const Point best = grid_then_golden(
      [&](double rho) { return r_df_at(ch, rho); }, 0.0, 1.0, n,
      cfg.refine_iters);
  return {best.x, best.value};
}

std::pair<double, double> maximize_cf(const ChannelParams& ch,
                                      const SearchConfig& cfg) {
  ch.validate();
  cfg.validate();
  const double delta_star = delta_cf(ch);
  const double rate = r_cf_at(ch, delta_star);

  // The crossing point is the analytic optimum; verify by scan.
  for (int i = 0; i < cfg.grid_steps; ++i) {
    const double t =
        -1.0 + 2.0 * static_cast<double>(i) / (cfg.grid_steps - 1);
    const double delta = delta_star * std::pow(10.0, t);
    if (r_cf_at(ch, delta) > rate + cfg.tol) {
      std::ostringstream os;
      os << "CF scan found a point beating the crossing optimum: delta="
         << delta;
      throw std::runtime_error(os.str());
    }
  }
  return {delta_star, rate};
}

namespace {

// SF objective with the compression-noise floor enforced at every probe.
double sf_objective(const ChannelParams& ch, double alpha, double beta,
                    double gamma, double delta_prime) {
  const double floor = delta_sf(ch, alpha, beta, gamma);
  return r_sf_at(ch, SfParams{alpha, beta, gamma,
                              std::max(delta_prime, floor)});
}

}  // namespace

std::pair<SfParams, double> maximize_sf(const ChannelParams& ch,
                                        const SearchConfig& cfg) {
  ch.validate();
  cfg.validate();
  const double log_cap = std::log10(cfg.delta_max_mult);
  const int n = cfg.sf_seed_steps;
  // beta = 1 is excluded (delta_sf unbounded there); the refinement phase can
  // still approach it arbitrarily closely.
  const double beta_hi = 1.0 - 1e-12;

  // Coordinate descent: golden-section per correlation axis with the delta'
  // floor re-applied, then a logarithmic delta' line search.
  const int axis_grid = 31;
  const auto descend = [&](SfParams s) -> std::pair<SfParams, double> {
    double al = s.alpha, be = s.beta, ga = s.gamma, dp = s.delta_prime;
    double best_v = sf_objective(ch, al, be, ga, dp);
    for (int iter = 0; iter < 100; ++iter) {
      const double v0 = best_v;

      Point p = grid_then_golden(
          [&](double x) { return sf_objective(ch, x, be, ga, dp); }, 0.0, 1.0,
          axis_grid, cfg.refine_iters);
      al = p.x;
      dp = std::max(dp, delta_sf(ch, al, be, ga));

      p = grid_then_golden(
          [&](double x) { return sf_objective(ch, al, x, ga, dp); }, 0.0,
          beta_hi, axis_grid, cfg.refine_iters);
      be = p.x;
      dp = std::max(dp, delta_sf(ch, al, be, ga));

      p = grid_then_golden(
          [&](double x) { return sf_objective(ch, al, be, x, dp); }, 0.0, 1.0,
          axis_grid, cfg.refine_iters);
      ga = p.x;

      const double floor = delta_sf(ch, al, be, ga);
      p = grid_then_golden(
          [&](double t) {
            return r_sf_at(ch,
                           SfParams{al, be, ga, floor * std::pow(10.0, t)});
          },
          0.0, log_cap, axis_grid, cfg.refine_iters);
      dp = floor * std::pow(10.0, p.x);
      best_v = p.value;

      if (best_v - v0 < cfg.tol * 1e-3) break;
    }
    return {SfParams{al, be, ga, dp}, best_v};
  };

  // Coarse seed over the correlation cube and a log ladder above the floor.
  SfParams coarse{0.0, 0.0, 0.0, delta_cf(ch)};
  double coarse_v = -1.0;
  for (int ia = 0; ia < n; ++ia) {
    const double a = static_cast<double>(ia) / (n - 1);
    for (int ib = 0; ib + 1 < n; ++ib) {
      const double b = static_cast<double>(ib) / (n - 1);
      for (int ig = 0; ig < n; ++ig) {
        const double g = static_cast<double>(ig) / (n - 1);
        const double floor = delta_sf(ch, a, b, g);
        for (int id = 0; id <= 8; ++id) {
          const double d =
              floor * std::pow(10.0, log_cap * static_cast<double>(id) / 8.0);
          const double v = r_sf_at(ch, SfParams{a, b, g, d});
          if (v > coarse_v) {
            coarse_v = v;
            coarse = SfParams{a, b, g, d};
          }
        }
      }
    }
  }

  // Coordinate descent can stall on the ridge where beta and delta' must
  // move together, so descend from the full-compression corner and the
  // full-cooperation corner as well and keep the best.
  const double rho_df = maximize_df(ch, cfg).first;
  const std::array<SfParams, 3> seeds = {
      coarse,
      SfParams{0.0, 0.0, 0.0, delta_cf(ch)},
      SfParams{std::clamp(rho_df, 0.0, 1.0), beta_hi, 1.0,
               delta_sf(ch, std::clamp(rho_df, 0.0, 1.0), beta_hi, 1.0)},
  };
  std::pair<SfParams, double> best{coarse, -1.0};
  for (const SfParams& seed : seeds) {
    const auto cand = descend(seed);
    if (cand.second > best.second) best = cand;
  }
  return best;
}

std::pair<BdfParams, double> maximize_bdf(const ChannelParams& ch,
                                          const SearchConfig& cfg) {
  ch.validate();
  cfg.validate();
  const int n = 21;
  double best_v = -1.0;
  double tu = 0.0, t2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double v2 = (1.0 - u) * static_cast<double>(j) / (n - 1);
      const double v = r_bdf_at(ch, BdfParams{u, v2});
      if (v > best_v) {
        best_v = v;
        tu = u;
        t2 = v2;
      }
    }
  }
  for (int iter = 0; iter < 40; ++iter) {
    const double v0 = best_v;
    Point p = grid_then_golden(
        [&](double x) {
          return r_bdf_at(ch, BdfParams{x, std::min(t2, 1.0 - x)});
        },
        0.0, 1.0, 21, cfg.refine_iters);
    tu = p.x;
    t2 = std::min(t2, 1.0 - tu);
    p = grid_then_golden(
        [&](double x) { return r_bdf_at(ch, BdfParams{tu, x}); }, 0.0,
        1.0 - tu, 21, cfg.refine_iters);
    t2 = p.x;
    best_v = p.value;
    if (best_v - v0 < cfg.tol * 1e-3) break;
  }
  return {BdfParams{tu, t2}, best_v};
}

std::pair<double, double> maximize_cutset(const ChannelParams& ch,
                                          const SearchConfig& cfg) {
  ch.validate();
  cfg.validate();
  const Point best = grid_then_golden(
      [&](double rho) { return r_cutset_at(ch, rho, cfg.cutset_conditioned); },
      0.0, 1.0, cfg.grid_steps, cfg.refine_iters);
  return {best.x, best.value};
}

RateReport report(const ChannelParams& ch, const SearchConfig& cfg) {
  RateReport rep;
  std::tie(rep.rho_df, rep.r_df) = maximize_df(ch, cfg);
  std::tie(rep.delta_cf_star, rep.r_cf) = maximize_cf(ch, cfg);
  std::tie(rep.arg_sf, rep.r_sf) = maximize_sf(ch, cfg);
  std::tie(rep.arg_bdf, rep.r_bdf) = maximize_bdf(ch, cfg);
  std::tie(rep.rho_cs, rep.r_cs) = maximize_cutset(ch, cfg);

  std::ostringstream why;
  const double df_cf_max = std::max(rep.r_df, rep.r_cf);
  if (rep.r_df < 0.0 || rep.r_cf < 0.0 || rep.r_sf < 0.0 || rep.r_bdf < 0.0 ||
      rep.r_cs < 0.0) {
    why << "negative rate in report; ";
  }
  if (rep.r_df > rep.r_cs + 1e-9) why << "r_df exceeds the cut-set bound; ";
  if (rep.r_cf > rep.r_cs + 1e-9) why << "r_cf exceeds the cut-set bound; ";
  if (rep.r_bdf > rep.r_df + 1e-9) why << "r_bdf exceeds r_df; ";
  if (std::abs(rep.r_sf - df_cf_max) > 1e-4) {
    why << "r_sf deviates from max(r_df, r_cf) beyond search tolerance; ";
  }
  if (rep.arg_sf.delta_prime <
      delta_sf(ch, rep.arg_sf.alpha, rep.arg_sf.beta, rep.arg_sf.gamma) -
          1e-12) {
    why << "SF argmax violates the delta' feasibility floor; ";
  }
  if (!why.str().empty()) {
    std::ostringstream os;
    os << "rate report failed verification: " << why.str() << "(r_df="
       << rep.r_df << " r_cf=" << rep.r_cf << " r_sf=" << rep.r_sf
       << " r_bdf=" << rep.r_bdf << " r_cs=" << rep.r_cs << ")";
    throw std::runtime_error(os.str());
  }
  return rep;
}

}  // namespace relay
