#pragma once

#include "relay/channel.hpp"

namespace relay {

// Gaussian capacity function C(x) = 1/2 log2(1+x), x >= 0, in bits.
double c_of(double snr);

// Closed-form conditional mutual informations under the jointly Gaussian
// SF model, each cross-checkable against the covariance oracle.
// rho = alpha*beta*gamma throughout.

// I(X1;Y2|X2) = C(a^2 p1 (1-rho^2) / n1)
double mi_x1_y2_given_x2(const ChannelParams& ch, double rho);

// I(X1;Y2|X2,U) = C(a^2 p1 (1-gamma^2) / n1)
double mi_x1_y2_given_x2u(const ChannelParams& ch, double gamma);

// I(X1;Y2hat,Y3|X2) = C(p1 (1-rho^2) ((n1+delta)+a^2 n2) / ((n1+delta) n2))
double mi_x1_y2haty3_given_x2(const ChannelParams& ch, double rho,
                              double delta);

// I(X1;Y2hat,Y3|X2,U); same shape with gamma in place of rho.
double mi_x1_y2haty3_given_x2u(const ChannelParams& ch, double gamma,
                               double delta);

// I(U;Y2|X2) = C(a^2 p1 (gamma^2-rho^2) / (n1 + a^2 p1 (1-gamma^2)))
double mi_u_y2_given_x2(const ChannelParams& ch, double gamma, double rho);

// I(U;Y2hat,Y3|X2)
double mi_u_y2haty3_given_x2(const ChannelParams& ch, double gamma, double rho,
                             double delta);

// I(U;Y2|X2,V) = C(a^2 p1 gamma^2 (1-alpha^2) / (n1 + a^2 p1 (1-gamma^2)))
double mi_u_y2_given_x2v(const ChannelParams& ch, double alpha, double gamma);

// I(X1,X2;Y3) = C((p1 + b^2 p2 + 2 rho b sqrt(p1 p2)) / n2)
double mi_x1x2_y3(const ChannelParams& ch, double rho);

// I(Y2hat;Y2|U,X1,X2,Y3) = C(n1/delta): the rate spent describing the
// compression noise to the destination.
double mi_compression_penalty(const ChannelParams& ch, double delta);

// Smallest compression noise variance the relay link supports under CF.
double delta_cf(const ChannelParams& ch);

// Smallest feasible compression noise variance under SF for the given
// correlations. Infinite (reported via exception) when beta = 1.
double delta_sf(const ChannelParams& ch, double alpha, double beta,
                double gamma);

// Achievable rates at a fixed operating point, min over the binding terms.
double r_df_at(const ChannelParams& ch, double rho);
double r_cf_at(const ChannelParams& ch, double delta);
// SF rate; callers may evaluate below the delta_sf constraint for analysis.
double r_sf_at(const ChannelParams& ch, const SfParams& sf);
// Broadcast-over-DF rate, evaluated through the covariance oracle.
double r_bdf_at(const ChannelParams& ch, const BdfParams& bdf);
// Cut-set bound at fixed input correlation. `conditioned` selects the
// standard broadcast cut I(X1;Y2,Y3|X2); false selects the unconditioned
// variant I(X1;Y2,Y3). Both are evaluated through the covariance oracle.
double r_cutset_at(const ChannelParams& ch, double rho,
                   bool conditioned = true);

}  // namespace relay
