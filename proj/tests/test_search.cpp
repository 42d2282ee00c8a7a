#include <doctest.h>

#include <cmath>

#include "relay/search.hpp"

using namespace relay;

namespace {
const ChannelParams kMid = from_geometry(0.5, 5.0, 5.0, 1.0, 1.0);
const SearchConfig kCfg;
}

TEST_CASE("maximize_df: relay-decoding term binds at the mid-range channel") {
  const auto [rho, rate] = maximize_df(kMid, kCfg);
  CHECK(rho == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rate == doctest::Approx(0.5 * std::log2(21.0)).epsilon(1e-9));
}

TEST_CASE("maximize_df: interior crossing at small d") {
  const ChannelParams near = from_geometry(0.1, 5.0, 5.0, 1.0, 1.0);
  const auto [rho, rate] = maximize_df(near, kCfg);
  CHECK(rho > 0.9);
  CHECK(rate == doctest::Approx(mi_x1x2_y3(near, rho)).epsilon(1e-9));
  CHECK(std::abs(mi_x1_y2_given_x2(near, rho) - mi_x1x2_y3(near, rho)) <=
        1e-6);
}

TEST_CASE("maximize_df: zero source power gives zero rate") {
  const ChannelParams ch = from_geometry(0.5, 0.0, 5.0, 1.0, 1.0);
  CHECK(maximize_df(ch, kCfg).second == doctest::Approx(0.0));
}

TEST_CASE("maximize_cf: crossing optimum and its value") {
  const auto [delta, rate] = maximize_cf(kMid, kCfg);
  CHECK(delta == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(rate == doctest::Approx(c_of(5.0 * 6.3 / 2.3)).epsilon(1e-9));

  ChannelParams no_relay = kMid;
  no_relay.p2 = 0.0;
  CHECK_THROWS_AS(maximize_cf(no_relay, kCfg), std::domain_error);
}

TEST_CASE("maximize_cf: approaches the cut-set bound as d -> 1") {
  const ChannelParams far = from_geometry(0.999, 5.0, 5.0, 1.0, 1.0);
  const double cf = maximize_cf(far, kCfg).second;
  const double cs = maximize_cutset(far, kCfg).second;
  CHECK(std::abs(cf - cs) <= 0.01);
}

TEST_CASE("maximize_sf: matches max(DF, CF) at representative distances") {
  for (const double d : {0.2, 0.5, 0.8}) {
    const ChannelParams ch = from_geometry(d, 5.0, 5.0, 1.0, 1.0);
    const double df = maximize_df(ch, kCfg).second;
    const double cf = maximize_cf(ch, kCfg).second;
    const auto [sf, rate] = maximize_sf(ch, kCfg);
    CHECK(std::abs(rate - std::max(df, cf)) <= 1e-4);
    CHECK(rate >= std::max(df, cf) - kCfg.tol);
    // Feasibility of the reported argmax.
    CHECK(sf.delta_prime >=
          delta_sf(ch, sf.alpha, sf.beta, sf.gamma) - 1e-12);
  }
}

TEST_CASE("maximize_bdf: never beats DF, corner reproduces a DF point") {
  const auto [arg, rate] = maximize_bdf(kMid, kCfg);
  const double df = maximize_df(kMid, kCfg).second;
  CHECK(rate <= df + kCfg.tol);
  CHECK(r_bdf_at(kMid, BdfParams{0.0, 0.0}) ==
        doctest::Approx(r_df_at(kMid, 0.0)).epsilon(1e-9));
}

TEST_CASE("maximize_cutset: mid-range value and zero-power edge") {
  const auto [rho, rate] = maximize_cutset(kMid, kCfg);
  CHECK(rate >= maximize_df(kMid, kCfg).second - 1e-9);
  CHECK(rate >= maximize_cf(kMid, kCfg).second - 1e-9);

  const ChannelParams silent = from_geometry(0.5, 0.0, 5.0, 1.0, 1.0);
  CHECK(maximize_cutset(silent, kCfg).second == doctest::Approx(0.0));
}

TEST_CASE("report: assembles all five maximizations and their invariants") {
  const RateReport rep = report(kMid, kCfg);
  CHECK(rep.r_df == doctest::Approx(0.5 * std::log2(21.0)).epsilon(1e-9));
  CHECK(rep.r_cf == doctest::Approx(1.9385).epsilon(1e-4));
  CHECK(std::abs(rep.r_sf - std::max(rep.r_df, rep.r_cf)) <= 1e-4);
  CHECK(rep.r_bdf <= rep.r_df + 1e-9);
  CHECK(rep.r_df <= rep.r_cs + 1e-9);
  CHECK(rep.r_cf <= rep.r_cs + 1e-9);
}

TEST_CASE("searches are deterministic") {
  const RateReport a = report(kMid, kCfg);
  const RateReport b = report(kMid, kCfg);
  CHECK(a.r_sf == b.r_sf);
  CHECK(a.arg_sf.alpha == b.arg_sf.alpha);
  CHECK(a.arg_sf.beta == b.arg_sf.beta);
  CHECK(a.arg_sf.gamma == b.arg_sf.gamma);
  CHECK(a.arg_sf.delta_prime == b.arg_sf.delta_prime);
  CHECK(a.r_bdf == b.r_bdf);
  CHECK(a.rho_cs == b.rho_cs);
}

TEST_CASE("grid refinement consistency: doubling the grid barely moves rates") {
  SearchConfig fine = kCfg;
  fine.grid_steps = 2 * kCfg.grid_steps;
  const ChannelParams ch = from_geometry(0.3, 5.0, 5.0, 1.0, 1.0);
  CHECK(std::abs(maximize_df(ch, kCfg).second -
                 maximize_df(ch, fine).second) < 10 * kCfg.tol);
  CHECK(std::abs(maximize_cutset(ch, kCfg).second -
                 maximize_cutset(ch, fine).second) < 10 * kCfg.tol);
}
