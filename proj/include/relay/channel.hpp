#pragma once

#include "relay/oracle.hpp"

namespace relay {

/// Physical description of the three-node Gaussian relay channel
///   Y2 = a*X1 + Z1,  Y3 = X1 + b*X2 + Z2
/// with noise powers n1, n2 and transmit powers p1, p2.
struct ChannelParams {
  double a;
  double b;
  double n1;
  double n2;
  double p1;
  double p2;

  void validate() const;
};

/// Correlation parameters of the superposition-forwarding auxiliaries:
/// alpha = corr(U,V), beta = corr(V,X2), gamma = corr(U,X1), plus the
/// compression noise variance delta_prime. Restricted to [0,1]; negative
/// correlations are never rate-optimal here.
struct SfParams {
  double alpha;
  double beta;
  double gamma;
  double delta_prime;

  // corr(U,X2) along the chain U-V-X2.
  double delta() const { return alpha * beta; }
  // corr(X1,X2) along the chain X1-U-X2.
  double rho() const { return alpha * beta * gamma; }

  void validate() const;
};

/// Gaussian power split for the broadcast-over-DF scheme: theta_u is the
/// fraction of p1 spent on the broadcast codeword U, theta_2 the fraction
/// coherently aligned with the relay's X2. theta_u + theta_2 <= 1.
struct BdfParams {
  double theta_u;
  double theta_2;

  void validate() const;
};

// Relay at normalized distance d from the source on the unit source-
// destination segment: a = 1/d, b = 1/(1-d). Requires 0 < d < 1.
ChannelParams from_geometry(double d, double p1, double p2, double n1,
                            double n2);

// Full jointly-Gaussian system model for SF. Variables:
//   V ~ unit variance; U = alpha*V + fresh; X2 = sqrt(p2)*(beta*V + fresh);
//   X1 = sqrt(p1)*(gamma*U + fresh); Z1, Z2, Zw fresh noises;
//   Y2 = a*X1 + Z1; Y3 = X1 + b*X2 + Z2; Y2hat = Y2 + Zw (var delta_prime).
CovModel sf_model(const ChannelParams& ch, const SfParams& sf);

// CF system model: SF with independent inputs (alpha=beta=gamma=0) and
// compression noise variance delta.
CovModel cf_model(const ChannelParams& ch, double delta);

// Broadcast-over-DF model: U ~ unit variance independent of X2 ~ var p2;
// X1 = sqrt(theta_u*p1)*U + sqrt(theta_2*p1/p2)*X2 + fresh residual so that
// var(X1) = p1 exactly.
CovModel bdf_model(const ChannelParams& ch, const BdfParams& bdf);

// Minimal two-input model with corr(X1,X2) = rho, for cut-set evaluation.
CovModel two_input_model(const ChannelParams& ch, double rho);

}  // namespace relay
