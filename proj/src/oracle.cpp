#include "relay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relay {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << labels[i];
  }
  return os.str();
}

// Determinant scale reference: product of diagonal entries, with a floor so
// that an all-zero block still yields a usable scale.
double det_scale(const Eigen::MatrixXd& m) {
  double s = 1.0;
  for (int i = 0; i < m.rows(); ++i) s *= std::max(m(i, i), 1.0e-300);
  return std::max(s, 1.0e-300);
}

}  // namespace

int CovModel::index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown variable label: " + label);
}

double CovModel::variance(const std::string& label) const {
  const int i = index(label);
  return sigma(i, i);
}

double CovModel::covariance(const std::string& x, const std::string& y) const {
  return sigma(index(x), index(y));
}

double CovModel::correlation(const std::string& x, const std::string& y) const {
  const int i = index(x);
  const int j = index(y);
  return sigma(i, j) / std::sqrt(sigma(i, i) * sigma(j, j));
}

CovModel build_model(const std::vector<VarDef>& defs) {
  const int n = static_cast<int>(defs.size());
  // Mixing matrix over the fresh noise basis: variable i = sum_j B(i,j) e_j
  // with e_j iid unit variance. Fresh noise j belongs to definition j.
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(n, n);
  CovModel model;
  model.labels.reserve(defs.size());

  for (int i = 0; i < n; ++i) {
    const VarDef& def = defs[i];
    if (std::find(model.labels.begin(), model.labels.end(), def.name) !=
        model.labels.end()) {
      throw std::invalid_argument("duplicate variable label: " + def.name);
    }
    for (const auto& [ref, coeff] : def.terms) {
      const auto it = std::find(model.labels.begin(), model.labels.end(), ref);
      if (it == model.labels.end()) {
        throw std::invalid_argument("definition of " + def.name +
                                    " references undefined label: " + ref);
      }
      mix.row(i) += coeff * mix.row(static_cast<int>(it - model.labels.begin()));
    }
    if (def.noise_var < 0.0) {
      throw std::invalid_argument("negative fresh-noise variance for " +
                                  def.name);
    }
    mix(i, i) += std::sqrt(def.noise_var);
    model.labels.push_back(def.name);
  }

  model.sigma = mix * mix.transpose();
  // Symmetrize to kill the last bits of roundoff from the product.
  model.sigma = 0.5 * (model.sigma + model.sigma.transpose()).eval();
  return model;
}

namespace {

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& sigma,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = sigma(rows[i], cols[j]);
  return out;
}

std::vector<int> resolve(const CovModel& model,
                         const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(model.index(l));
  return idx;
}

Eigen::MatrixXd schur_impl(const CovModel& model,
                           const std::vector<int>& t,
                           const std::vector<int>& g,
                           const std::vector<std::string>& given_names) {
  const Eigen::MatrixXd stt = submatrix(model.sigma, t, t);
  if (g.empty()) return stt;

  const Eigen::MatrixXd sgg = submatrix(model.sigma, g, g);
  const Eigen::MatrixXd stg = submatrix(model.sigma, t, g);

  Eigen::LDLT<Eigen::MatrixXd> ldlt(sgg);
  double det = 1.0;
  for (int i = 0; i < sgg.rows(); ++i) det *= ldlt.vectorD()(i);
  if (!(det > kDetFloor * det_scale(sgg))) {
    throw std::runtime_error(
        "singular conditioning block (deterministic linear dependence) on "
        "labels {" + join_labels(given_names) + "}");
  }

  Eigen::MatrixXd cond = stt - stg * ldlt.solve(stg.transpose());
  cond = 0.5 * (cond + cond.transpose()).eval();
  return cond;
}

double det_psd(const Eigen::MatrixXd& m) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  double det = 1.0;
  for (int i = 0; i < m.rows(); ++i) det *= ldlt.vectorD()(i);
  return det;
}

}  // namespace

Eigen::MatrixXd schur_conditional(const CovModel& model,
                                  const std::vector<std::string>& targets,
                                  const std::vector<std::string>& given) {
  return schur_impl(model, resolve(model, targets), resolve(model, given),
                    given);
}

double conditional_mi(const CovModel& model,
                      const std::vector<std::string>& a,
                      const std::vector<std::string>& b,
                      const std::vector<std::string>& given) {
  const std::vector<int> ia = resolve(model, a);
  std::vector<int> ic = resolve(model, given);
  const Eigen::MatrixXd cond_a_c = schur_impl(model, ia, ic, given);

  std::vector<std::string> bc_names = b;
  bc_names.insert(bc_names.end(), given.begin(), given.end());
  std::vector<int> ibc = resolve(model, b);
  ibc.insert(ibc.end(), ic.begin(), ic.end());
  const Eigen::MatrixXd cond_a_bc = schur_impl(model, ia, ibc, bc_names);

  // Degeneracy floor relative to the unconditioned target block: conditioning
  // can only shrink variances, so anything below it is a deterministic
  // dependence, not roundoff.
  const double ref = kDetFloor * det_scale(submatrix(model.sigma, ia, ia));

  const double det_c = det_psd(cond_a_c);
  // Targets deterministic given the conditioning set alone: zero information.
  if (!(det_c > ref)) return 0.0;

  const double det_bc = det_psd(cond_a_bc);
  if (!(det_bc > ref)) {
    throw std::runtime_error("degenerate conditional covariance for {" +
                             join_labels(a) +
                             "} (deterministic linear dependence)");
  }

  const double mi = 0.5 * (std::log2(det_c) - std::log2(det_bc));
  if (mi < 0.0 && mi > -kMiClampTol) return 0.0;
  return mi;
}

double markov_corr_product(double x_to_y, double y_to_z) {
  if (x_to_y < -1.0 || x_to_y > 1.0 || y_to_z < -1.0 || y_to_z > 1.0) {
    throw std::invalid_argument("correlation coefficients must lie in [-1,1]");
  }
  return x_to_y * y_to_z;
}

}  // namespace relay
