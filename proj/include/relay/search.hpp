#pragma once

#include <string>

#include "relay/rates.hpp"

namespace relay {

struct SearchConfig {
  // Points per axis for 1-D grids (DF, CF scan, cut-set, delta').
  int grid_steps = 101;
  // Points per axis for the coarse 3-D (alpha,beta,gamma) seeding grid.
  int sf_seed_steps = 13;
  // Golden-section iterations per refinement bracket.
  int refine_iters = 60;
  // Convergence tolerance in bits.
  double tol = 1e-7;
  // Cap for the delta' scan, as a multiple of delta_sf at the current point.
  double delta_max_mult = 1e3;
  // Cut-set broadcast cut: conditioned on X2 (default) or the literal
  // unconditioned variant.
  bool cutset_conditioned = true;

  void validate() const;
};

struct RateReport {
  double r_df = 0.0;
  double r_cf = 0.0;
  double r_sf = 0.0;
  double r_bdf = 0.0;
  double r_cs = 0.0;
  double rho_df = 0.0;        // argmax input correlation for DF
  double delta_cf_star = 0.0; // argmax compression variance for CF
  SfParams arg_sf{0.0, 0.0, 0.0, 1.0};
  BdfParams arg_bdf{0.0, 0.0};
  double rho_cs = 0.0;        // argmax input correlation for the cut-set
};

// Each maximizer is deterministic: identical inputs yield bit-identical
// results. Ties break toward smaller parameter values.

// 1-D maximization of r_df_at over rho in [0,1]. The objective is a min of a
// nonincreasing and a nondecreasing term; this structure is asserted on the
// grid before golden-section refinement is trusted.
std::pair<double, double> maximize_df(const ChannelParams& ch,
                                      const SearchConfig& cfg);  // (rho*, rate)

// Returns delta* = delta_cf(ch) and the rate there, after verifying by a
// logarithmic scan of [delta_cf/10, 10*delta_cf] that no point beats it by
// more than cfg.tol.
std::pair<double, double> maximize_cf(const ChannelParams& ch,
                                      const SearchConfig& cfg);  // (delta*, rate)

// Coarse (alpha,beta,gamma) x delta' grid seeding followed by coordinate
// descent with golden-section per axis; delta' is kept >= delta_sf at every
// step and scanned on a logarithmic scale.
std::pair<SfParams, double> maximize_sf(const ChannelParams& ch,
                                        const SearchConfig& cfg);

// Grid over the (theta_u, theta_2) simplex plus coordinate descent.
std::pair<BdfParams, double> maximize_bdf(const ChannelParams& ch,
                                          const SearchConfig& cfg);

// 1-D maximization of the cut-set bound over rho in [0,1].
std::pair<double, double> maximize_cutset(const ChannelParams& ch,
                                          const SearchConfig& cfg);

// Runs all five maximizations and enforces the cross-scheme invariants,
// throwing std::runtime_error with diagnostics on violation rather than
// clamping.
RateReport report(const ChannelParams& ch, const SearchConfig& cfg);

}  // namespace relay
