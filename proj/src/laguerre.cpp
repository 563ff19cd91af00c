#include "tra/laguerre.hpp"

#include <cmath>

#include "tra/errors.hpp"

namespace tra {
namespace {

void check_order(double nu) {
  if (!(nu > -1.0)) throw ParameterError("Laguerre order nu must exceed -1");
}

void check_args(int n, double nu, double y) {
  check_order(nu);
  if (n < 0) throw ParameterError("Laguerre degree must be non-negative");
  if (!(y >= 0.0)) throw ParameterError("Laguerre argument must be non-negative");
}

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

}  // namespace

double laguerre_eval(int n, double nu, double y) {
  check_args(n, nu, y);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + nu + 1.0 - y) * cur - (k + nu) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

LaguerreJet laguerre_jet(int n, double nu, double y) {
  check_args(n, nu, y);
  LaguerreJet prev{0.0, 0.0, 0.0};
  LaguerreJet cur{1.0, 0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * k + nu + 1.0 - y;
    const double b = k + nu;
    const double inv = 1.0 / (k + 1.0);
    LaguerreJet next;
    next.value = (a * cur.value - b * prev.value) * inv;
    next.d1 = (a * cur.d1 - cur.value - b * prev.d1) * inv;
    next.d2 = (a * cur.d2 - 2.0 * cur.d1 - b * prev.d2) * inv;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_sequence(int n_max, double nu, double y) {
  check_args(n_max, nu, y);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = nu + 1.0 - y;
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] = ((2.0 * k + nu + 1.0 - y) * out[k] - (k + nu) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

double laguerre_norm(int n, double nu) {
  check_order(nu);
  if (n < 0) throw ParameterError("Laguerre degree must be non-negative");
  return std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0));
}

IdentitySides laguerre_derivative_identity(int n, double nu, double y) {
  check_args(n, nu, y);
  if (n == 0) return {0.0, 0.0};
  const LaguerreJet jet = laguerre_jet(n, nu, y);
  const double lower = laguerre_eval(n - 1, nu, y);
  return {y * jet.d1, n * jet.value - (n + nu) * lower};
}

double laguerre_ode_residual(int n, double nu, double y) {
  const LaguerreJet jet = laguerre_jet(n, nu, y);
  return y * jet.d2 + (nu + 1.0 - y) * jet.d1 + n * jet.value;
}

double ExpansionCoefficients::evaluate(double y) const {
  const auto basis = laguerre_sequence(static_cast<int>(coeffs.size()) - 1, nu, y);
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * basis[k];
  return acc;
}

ExpansionCoefficients monomial_expansion(double N, double nu, ExpansionMode mode) {
  check_order(nu);
  if (!is_integer(N)) {
    throw ModeError("monomial expansion is a finite sum only for integer N");
  }
  const int order = static_cast<int>(std::lround(N));
  if (order < 1) throw ParameterError("monomial expansion needs N >= 1");

  ExpansionCoefficients out;
  out.N = order;
  out.nu = nu;
  out.mode = mode;
  out.coeffs.resize(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    // N!/(N-k)! as a falling product keeps small cases exact.
    double falling = 1.0;
    for (int j = order - k + 1; j <= order; ++j) falling *= j;
    double c = (k % 2 == 0 ? 1.0 : -1.0) * falling;
    if (mode == ExpansionMode::corrected) {
      // Gamma(N+nu+1)/Gamma(nu+k+1)
      for (int j = k + 1; j <= order; ++j) c *= nu + j;
    }
    out.coeffs[k] = c;
  }
  return out;
}

std::vector<double> monomial_projection(int N, double nu) {
  check_order(nu);
  if (N < 0) throw ParameterError("monomial degree must be non-negative");
  const QuadratureRule rule = gauss_laguerre_rule(nu + N, N + 2);
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    out[k] = integrate(rule, [&](double y) { return laguerre_eval(k, nu, y); }) /
             laguerre_norm(k, nu);
  }
  return out;
}

double triple_product(const QuadratureRule& rule, int k, int n, int m) {
  if (k < 0 || n < 0 || m < 0) throw ParameterError("degrees must be non-negative");
  if (rule.size() < (k + n + m) / 2 + 1) {
    throw ParameterError("triple_product: rule too small for the requested degrees");
  }
  const double nu = rule.alpha();
  return integrate(rule, [&](double y) {
    return laguerre_eval(k, nu, y) * laguerre_eval(n, nu, y) * laguerre_eval(m, nu, y);
  });
}

double triple_product(int k, int n, int m, double nu) {
  if (k < 0 || n < 0 || m < 0) throw ParameterError("degrees must be non-negative");
  return triple_product(gauss_laguerre_rule(nu, (k + n + m) / 2 + 1), k, n, m);
}

}  // namespace tra
