#pragma once

#include <complex>
#include <concepts>
#include <type_traits>
#include <vector>

namespace tra {

/// K-point Gauss rule for the weight y^alpha e^{-y} on [0, inf).
/// Nodes ascend; the rule is immutable once built.
class QuadratureRule {
 public:
  QuadratureRule(double alpha, std::vector<double> nodes, std::vector<double> weights);

  double alpha() const noexcept { return alpha_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Golub-Welsch: eigen-decompose the Jacobi matrix with diagonal 2j+alpha+1
/// and off-diagonal sqrt(j(j+alpha)) (j = 1..K-1) using the symmetric
/// tridiagonal solver; weight_j = Gamma(alpha+1) (first component)^2.
QuadratureRule gauss_laguerre_rule(double alpha, int K);

/// Sum_j w_j f(node_j), summed in ascending node order.
template <typename F>
  requires std::invocable<F, double>
auto integrate(const QuadratureRule& rule, F&& f) {
  using Value = std::decay_t<std::invoke_result_t<F, double>>;
  Value acc{};
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * f(x[j]);
  return acc;
}

}  // namespace tra
