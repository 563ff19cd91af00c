#include "tra/quadrature.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tra/eigensolver.hpp"
#include "tra/errors.hpp"

namespace tra {

QuadratureRule::QuadratureRule(double alpha, std::vector<double> nodes,
                               std::vector<double> weights)
    : alpha_(alpha), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (!(alpha_ > -1.0)) throw ParameterError("quadrature: alpha must exceed -1");
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw ParameterError("quadrature: nodes and weights must be non-empty and aligned");
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!(nodes_[j] > 0.0) || (j > 0 && !(nodes_[j] > nodes_[j - 1]))) {
      throw ParameterError("quadrature: nodes must be positive and strictly increasing");
    }
    if (!(weights_[j] > 0.0)) throw ParameterError("quadrature: weights must be positive");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  const double mass = std::tgamma(alpha_ + 1.0);
  if (std::abs(total - mass) > 1e-10 * mass) {
    throw ParameterError("quadrature: weights do not sum to Gamma(alpha+1)");
  }
}

QuadratureRule gauss_laguerre_rule(double alpha, int K) {
  if (!(alpha > -1.0)) throw ParameterError("gauss_laguerre_rule: alpha must exceed -1");
  if (K < 1) throw ParameterError("gauss_laguerre_rule: need at least one node");

  TridiagonalSymmetric<double> jacobi;
  jacobi.diag.resize(K);
  jacobi.offdiag.resize(K - 1);
  for (int j = 0; j < K; ++j) {
    jacobi.diag(j) = 2.0 * j + alpha + 1.0;
    if (j + 1 < K) jacobi.offdiag(j) = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
  }
  const auto spectrum = tridiag_eigen<double>(jacobi, true);

  const double mass = std::tgamma(alpha + 1.0);
  std::vector<double> nodes(K), weights(K);
  for (int j = 0; j < K; ++j) {
    nodes[j] = spectrum.values(j).real();
    const double v0 = spectrum.vectors(0, j).real();
    weights[j] = mass * v0 * v0;
  }
  return QuadratureRule(alpha, std::move(nodes), std::move(weights));
}

}  // namespace tra
