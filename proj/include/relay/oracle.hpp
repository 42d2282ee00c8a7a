#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace relay {

// Rates are in bits/channel use throughout. Multiply by this to get nats.
inline constexpr double kBitsToNats = 0.693147180559945309417232121458;

// Relative determinant floor below which a covariance block is treated as a
// deterministic linear dependence rather than roundoff.
inline constexpr double kDetFloor = 1e-12;

// Negative MI values above this threshold are clamped to zero (Schur roundoff).
inline constexpr double kMiClampTol = 1e-9;

/// Joint covariance over a list of labeled, zero-mean, jointly Gaussian
/// variables. Acts as the ground-truth oracle for mutual-information
/// expressions: everything reduces to log-det ratios of Schur complements.
struct CovModel {
  std::vector<std::string> labels;
  Eigen::MatrixXd sigma;

  // Index of a label; throws std::invalid_argument on unknown names.
  int index(const std::string& label) const;

  double variance(const std::string& label) const;
  double covariance(const std::string& x, const std::string& y) const;
  double correlation(const std::string& x, const std::string& y) const;
};

/// One variable definition: a linear combination of previously defined
/// labels plus an independent fresh Gaussian noise term with the given
/// variance. Source variables are definitions with empty `terms`.
struct VarDef {
  std::string name;
  std::vector<std::pair<std::string, double>> terms;
  double noise_var = 0.0;
};

// Builds the exact covariance implied by the linear system. The fresh noise
// terms are mutually independent, so sigma = B * B^T for the mixing matrix B.
CovModel build_model(const std::vector<VarDef>& defs);

// Conditional covariance Sigma_{T|G} = Sigma_TT - Sigma_TG Sigma_GG^-1 Sigma_GT.
// Empty `given` returns Sigma_TT. Throws if the conditioning block is singular,
// naming the degenerate label set.
Eigen::MatrixXd schur_conditional(const CovModel& model,
                                  const std::vector<std::string>& targets,
                                  const std::vector<std::string>& given);

// I(A;B|C) = 1/2 log2( det Sigma_{A|C} / det Sigma_{A|B,C} ), in bits.
// Throws if a determinant is degenerate (deterministic linear dependence).
double conditional_mi(const CovModel& model,
                      const std::vector<std::string>& a,
                      const std::vector<std::string>& b,
                      const std::vector<std::string>& given);

// Correlation along a Gaussian Markov chain X-Y-Z multiplies:
// corr(X,Z) = corr(X,Y) * corr(Y,Z). Inputs must lie in [-1,1].
double markov_corr_product(double x_to_y, double y_to_z);

}  // namespace relay
