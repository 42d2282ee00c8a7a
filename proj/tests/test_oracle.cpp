#include <doctest.h>

#include <cmath>
#include <random>

#include "relay/oracle.hpp"
#include "test_util.hpp"

using namespace relay;

TEST_CASE("build_model: single unit-variance source") {
  const CovModel m = build_model({{"V", {}, 1.0}});
  CHECK(m.sigma.rows() == 1);
  CHECK(m.variance("V") == doctest::Approx(1.0));
}

TEST_CASE("build_model: correlated pair by construction") {
  const CovModel m = build_model({
      {"V", {}, 1.0},
      {"U", {{"V", 0.5}}, 1.0 - 0.25},
  });
  CHECK(m.variance("U") == doctest::Approx(1.0));
  CHECK(m.correlation("U", "V") == doctest::Approx(0.5));
}

TEST_CASE("build_model: error paths") {
  CHECK_THROWS_AS(build_model({{"U", {{"V", 1.0}}, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_model({{"V", {}, -0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_model({{"V", {}, 1.0}, {"V", {}, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("schur_conditional: empty conditioning returns the target block") {
  const CovModel m = build_model({
      {"X", {}, 2.0},
      {"Y", {{"X", 1.0}}, 3.0},
  });
  const Eigen::MatrixXd s = schur_conditional(m, {"X", "Y"}, {});
  CHECK(s(0, 0) == doctest::Approx(2.0));
  CHECK(s(1, 1) == doctest::Approx(5.0));
}

TEST_CASE("schur_conditional: channel noise remains after conditioning") {
  // Y2 = 2*X1 + Z1 with var(Z1) = 1.5: var(Y2|X1) = 1.5.
  const CovModel m = build_model({
      {"X1", {}, 5.0},
      {"Z1", {}, 1.5},
      {"Y2", {{"X1", 2.0}, {"Z1", 1.0}}, 0.0},
  });
  const Eigen::MatrixXd s = schur_conditional(m, {"Y2"}, {"X1"});
  CHECK(s(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("schur_conditional: full-model residual of Y2 given X1,X2,Y3") {
  // Y3 adds only Z2, independent of Z1, so var(Y2|X1,X2,Y3) = N1. Expected
  // value worked out by hand on the 3x3 conditioning block before the build.
  const ChannelParams ch = from_geometry(0.5, 5.0, 5.0, 1.0, 1.0);
  const CovModel m = sf_model(ch, SfParams{0.5, 0.5, 0.5, 2.0});
  const Eigen::MatrixXd s = schur_conditional(m, {"Y2"}, {"X1", "X2", "Y3"});
  CHECK(s(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("schur_conditional: singular conditioning block is an error") {
  // rho = 1 makes X1 a multiple of X2.
  const ChannelParams ch = from_geometry(0.5, 5.0, 5.0, 1.0, 1.0);
  const CovModel m = sf_model(ch, SfParams{1.0, 1.0, 1.0, 2.0});
  CHECK_THROWS_WITH_AS(schur_conditional(m, {"Y2"}, {"X1", "X2"}),
                       doctest::Contains("X1,X2"), std::runtime_error);
}

TEST_CASE("conditional_mi: independent variables carry zero information") {
  const CovModel m = build_model({{"A", {}, 1.0}, {"B", {}, 4.0}});
  CHECK(conditional_mi(m, {"A"}, {"B"}, {}) == doctest::Approx(0.0));
}

TEST_CASE("conditional_mi: scalar point-to-point value") {
  // Y2 = 2*X1 + Z1, P1=5, N1=1: I(X1;Y2) = 1/2 log2(1 + 4*5) = 1/2 log2(21).
  const CovModel m = build_model({
      {"X1", {}, 5.0},
      {"Z1", {}, 1.0},
      {"Y2", {{"X1", 2.0}, {"Z1", 1.0}}, 0.0},
  });
  CHECK(conditional_mi(m, {"X1"}, {"Y2"}, {}) ==
        doctest::Approx(0.5 * std::log2(21.0)).epsilon(1e-12));
}

TEST_CASE("conditional_mi: deterministic dependence in the pair is an error") {
  const CovModel m = build_model({
      {"X", {}, 1.0},
      {"Y", {{"X", 2.0}}, 0.0},
  });
  CHECK_THROWS_AS(conditional_mi(m, {"X"}, {"Y"}, {}), std::runtime_error);
}

TEST_CASE("conditional_mi: symmetry in the two argument sets") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const auto pt = testutil::random_point(rng);
    const CovModel m = sf_model(pt.ch, pt.sf);
    const double ab = conditional_mi(m, {"X1"}, {"Y2hat", "Y3"}, {"X2"});
    const double ba = conditional_mi(m, {"Y2hat", "Y3"}, {"X1"}, {"X2"});
    CHECK(std::abs(ab - ba) <= 1e-9);
  }
}

TEST_CASE("conditional_mi: chain rule on random label partitions") {
  std::mt19937_64 rng(7);
  const std::vector<std::vector<std::string>> partitions[] = {
      {{"X1"}, {"Y2"}, {"Y3"}, {"X2"}},
      {{"U"}, {"Y2hat"}, {"Y3"}, {"X2"}},
      {{"V"}, {"Y2"}, {"Y2hat"}, {"X1"}},
      {{"X1"}, {"Y3"}, {"Y2hat"}, {}},
  };
  for (int i = 0; i < 250; ++i) {
    const auto pt = testutil::random_point(rng);
    const CovModel m = sf_model(pt.ch, pt.sf);
    for (const auto& p : partitions) {
      const auto &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      std::vector<std::string> bc = b;
      bc.insert(bc.end(), c.begin(), c.end());
      std::vector<std::string> bd = b;
      bd.insert(bd.end(), d.begin(), d.end());
      const double joint = conditional_mi(m, a, bc, d);
      const double chained =
          conditional_mi(m, a, b, d) + conditional_mi(m, a, c, bd);
      CHECK(std::abs(joint - chained) <= 1e-9);
    }
  }
}

TEST_CASE("conditional_mi: data processing along U-(X1,X2)-Y2") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto pt = testutil::random_point(rng);
    const CovModel m = sf_model(pt.ch, pt.sf);
    CHECK(conditional_mi(m, {"U"}, {"Y2"}, {"X2"}) <=
          conditional_mi(m, {"X1"}, {"Y2"}, {"X2"}) + 1e-9);
  }
}

TEST_CASE("markov_corr_product: chain correlations multiply") {
  CHECK(markov_corr_product(1.0, 0.3) == doctest::Approx(0.3));
  CHECK(markov_corr_product(0.0, 0.3) == doctest::Approx(0.0));
  CHECK(markov_corr_product(0.6, 0.7) == doctest::Approx(0.42));
  CHECK_THROWS_AS(markov_corr_product(1.1, 0.5), std::invalid_argument);

  const CovModel chain = build_model({
      {"Y", {}, 1.0},
      {"X", {{"Y", 0.6}}, 1.0 - 0.36},
      {"Z", {{"Y", 0.7}}, 1.0 - 0.49},
  });
  CHECK(chain.correlation("X", "Z") == doctest::Approx(0.42).epsilon(1e-12));
}
