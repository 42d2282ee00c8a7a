#include "relay/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace relay {

void ChannelParams::validate() const {
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw std::invalid_argument("noise powers must be positive");
  }
  if (p1 < 0.0 || p2 < 0.0) {
    throw std::invalid_argument("transmit powers must be nonnegative");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("channel gains must be finite");
  }
}

void SfParams::validate() const {
  if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0 || gamma < 0.0 ||
      gamma > 1.0) {
    throw std::invalid_argument("alpha, beta, gamma must lie in [0,1]");
  }
  if (!(delta_prime > 0.0)) {
    throw std::invalid_argument("compression noise variance must be positive");
  }
}

void BdfParams::validate() const {
  // The sum may overshoot 1 by an ulp when theta_2 is derived as 1 - theta_u.
  if (theta_u < 0.0 || theta_2 < 0.0 || theta_u + theta_2 > 1.0 + 1e-12) {
    throw std::invalid_argument("theta_u + theta_2 must lie in the unit simplex");
  }
}

ChannelParams from_geometry(double d, double p1, double p2, double n1,
                            double n2) {
  if (!(d > 0.0) || !(d < 1.0)) {
    throw std::invalid_argument("relay distance d must lie in (0,1)");
  }
  ChannelParams ch{1.0 / d, 1.0 / (1.0 - d), n1, n2, p1, p2};
  ch.validate();
  return ch;
}

CovModel sf_model(const ChannelParams& ch, const SfParams& sf) {
  ch.validate();
  sf.validate();
  const double sp1 = std::sqrt(ch.p1);
  const double sp2 = std::sqrt(ch.p2);
  return build_model({
      {"V", {}, 1.0},
      {"U", {{"V", sf.alpha}}, 1.0 - sf.alpha * sf.alpha},
      {"X2", {{"V", sp2 * sf.beta}}, ch.p2 * (1.0 - sf.beta * sf.beta)},
      {"X1", {{"U", sp1 * sf.gamma}}, ch.p1 * (1.0 - sf.gamma * sf.gamma)},
      {"Z1", {}, ch.n1},
      {"Z2", {}, ch.n2},
      {"Zw", {}, sf.delta_prime},
      {"Y2", {{"X1", ch.a}, {"Z1", 1.0}}, 0.0},
      {"Y3", {{"X1", 1.0}, {"X2", ch.b}, {"Z2", 1.0}}, 0.0},
      {"Y2hat", {{"Y2", 1.0}, {"Zw", 1.0}}, 0.0},
  });
}

CovModel cf_model(const ChannelParams& ch, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("compression noise variance must be positive");
  }
  return sf_model(ch, SfParams{0.0, 0.0, 0.0, delta});
}

CovModel bdf_model(const ChannelParams& ch, const BdfParams& bdf) {
  ch.validate();
  bdf.validate();
  const double residual =
      std::max(0.0, (1.0 - bdf.theta_u - bdf.theta_2) * ch.p1);
  std::vector<std::pair<std::string, double>> x1_terms = {
      {"U", std::sqrt(bdf.theta_u * ch.p1)}};
  if (ch.p2 > 0.0) {
    x1_terms.push_back({"X2", std::sqrt(bdf.theta_2 * ch.p1 / ch.p2)});
  }
  return build_model({
      {"U", {}, 1.0},
      {"X2", {}, ch.p2},
      {"X1", x1_terms, residual},
      {"Z1", {}, ch.n1},
      {"Z2", {}, ch.n2},
      {"Y2", {{"X1", ch.a}, {"Z1", 1.0}}, 0.0},
      {"Y3", {{"X1", 1.0}, {"X2", ch.b}, {"Z2", 1.0}}, 0.0},
  });
}

CovModel two_input_model(const ChannelParams& ch, double rho) {
  ch.validate();
  if (rho < -1.0 || rho > 1.0) {
    throw std::invalid_argument("input correlation must lie in [-1,1]");
  }
  return build_model({
      {"X2", {}, ch.p2},
      {"X1", {{"X2", rho * std::sqrt(ch.p2 > 0.0 ? ch.p1 / ch.p2 : 0.0)}},
       ch.p1 * (1.0 - rho * rho)},
      {"Z1", {}, ch.n1},
      {"Z2", {}, ch.n2},
      {"Y2", {{"X1", ch.a}, {"Z1", 1.0}}, 0.0},
      {"Y3", {{"X1", 1.0}, {"X2", ch.b}, {"Z2", 1.0}}, 0.0},
  });
}

}  // namespace relay
