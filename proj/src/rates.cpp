#include "relay/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relay {

double c_of(double snr) {
  if (snr < 0.0) {
    throw std::invalid_argument("capacity function argument must be >= 0");
  }
  return 0.5 * std::log2(1.0 + snr);
}

double mi_x1_y2_given_x2(const ChannelParams& ch, double rho) {
  return c_of(ch.a * ch.a * ch.p1 * (1.0 - rho * rho) / ch.n1);
}

double mi_x1_y2_given_x2u(const ChannelParams& ch, double gamma) {
  return c_of(ch.a * ch.a * ch.p1 * (1.0 - gamma * gamma) / ch.n1);
}

double mi_x1_y2haty3_given_x2(const ChannelParams& ch, double rho,
                              double delta) {
  const double nd = ch.n1 + delta;
  return c_of(ch.p1 * (1.0 - rho * rho) * (nd + ch.a * ch.a * ch.n2) /
              (nd * ch.n2));
}

double mi_x1_y2haty3_given_x2u(const ChannelParams& ch, double gamma,
                               double delta) {
  const double nd = ch.n1 + delta;
  return c_of(ch.p1 * (1.0 - gamma * gamma) * (nd + ch.a * ch.a * ch.n2) /
              (nd * ch.n2));
}

double mi_u_y2_given_x2(const ChannelParams& ch, double gamma, double rho) {
  const double a2p1 = ch.a * ch.a * ch.p1;
  return c_of(std::max(0.0, a2p1 * (gamma * gamma - rho * rho)) /
              (ch.n1 + a2p1 * (1.0 - gamma * gamma)));
}

double mi_u_y2haty3_given_x2(const ChannelParams& ch, double gamma, double rho,
                             double delta) {
  const double nd = ch.n1 + delta;
  const double k = nd + ch.a * ch.a * ch.n2;
  return c_of(std::max(0.0, ch.p1 * (gamma * gamma - rho * rho)) * k /
              (nd * ch.n2 + ch.p1 * (1.0 - gamma * gamma) * k));
}

double mi_u_y2_given_x2v(const ChannelParams& ch, double alpha, double gamma) {
  const double a2p1 = ch.a * ch.a * ch.p1;
  return c_of(a2p1 * gamma * gamma * (1.0 - alpha * alpha) /
              (ch.n1 + a2p1 * (1.0 - gamma * gamma)));
}

double mi_x1x2_y3(const ChannelParams& ch, double rho) {
  return c_of((ch.p1 + ch.b * ch.b * ch.p2 +
               2.0 * rho * ch.b * std::sqrt(ch.p1 * ch.p2)) /
              ch.n2);
}

double mi_compression_penalty(const ChannelParams& ch, double delta) {
  return c_of(ch.n1 / delta);
}

double delta_cf(const ChannelParams& ch) {
  const double relay_link = ch.b * ch.b * ch.p2;
  if (!(relay_link > 0.0)) {
    throw std::domain_error(
        "relay link carries no power (b^2 p2 = 0): compression infeasible");
  }
  return (ch.n1 * ch.n2 + (ch.n1 + ch.a * ch.a * ch.n2) * ch.p1) / relay_link;
}

double delta_sf(const ChannelParams& ch, double alpha, double beta,
                double gamma) {
  if (beta >= 1.0) {
    throw std::domain_error(
        "delta_sf unbounded at beta = 1: no residual relay rate for the "
        "compressed observation");
  }
  const double relay_link = ch.b * ch.b * ch.p2;
  if (!(relay_link > 0.0)) {
    throw std::domain_error(
        "relay link carries no power (b^2 p2 = 0): compression infeasible");
  }
  const double g2 = gamma * gamma;
  const double num = (ch.n2 + ch.p1 * (1.0 - alpha * alpha * g2)) *
                     (ch.n1 * ch.n2 + (ch.n1 + ch.a * ch.a * ch.n2) * ch.p1 *
                                          (1.0 - g2));
  const double den =
      relay_link * (1.0 - beta * beta) * (ch.n2 + ch.p1 * (1.0 - g2));
  return num / den;
}

double r_df_at(const ChannelParams& ch, double rho) {
  return std::min(mi_x1_y2_given_x2(ch, rho), mi_x1x2_y3(ch, rho));
}

double r_cf_at(const ChannelParams& ch, double delta) {
  return std::min(mi_x1_y2haty3_given_x2(ch, 0.0, delta),
                  mi_x1x2_y3(ch, 0.0) - mi_compression_penalty(ch, delta));
}

double r_sf_at(const ChannelParams& ch, const SfParams& sf) {
  const double decoded =
      mi_x1_y2haty3_given_x2u(ch, sf.gamma, sf.delta_prime) +
      mi_u_y2_given_x2v(ch, sf.alpha, sf.gamma);
  const double multiple_access =
      mi_x1x2_y3(ch, sf.rho()) - mi_compression_penalty(ch, sf.delta_prime);
  return std::min(decoded, multiple_access);
}

double r_bdf_at(const ChannelParams& ch, const BdfParams& bdf) {
  const CovModel m = bdf_model(ch, bdf);
  const double broadcast = std::min(conditional_mi(m, {"U"}, {"Y3"}, {}),
                                    conditional_mi(m, {"U"}, {"Y2"}, {"X2"}));
  const double forwarded =
      std::min(conditional_mi(m, {"X1"}, {"Y2"}, {"X2", "U"}),
               conditional_mi(m, {"X1", "X2"}, {"Y3"}, {"U"}));
  return broadcast + forwarded;
}

double r_cutset_at(const ChannelParams& ch, double rho, bool conditioned) {
  const CovModel m = two_input_model(ch, rho);
  const double multiple_access = conditional_mi(m, {"X1", "X2"}, {"Y3"}, {});
  const double broadcast =
      conditioned ? conditional_mi(m, {"X1"}, {"Y2", "Y3"}, {"X2"})
                  : conditional_mi(m, {"X1"}, {"Y2", "Y3"}, {});
  return std::min(multiple_access, broadcast);
}

}  // namespace relay
