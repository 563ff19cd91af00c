#include "tra/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "tra/errors.hpp"

namespace tra {
namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

// sqrt(Gamma(n+1)/Gamma(n+3/2)) = A_n / sqrt(2 lambda).
double unit_scale(int n) {
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + 1.5)));
}

std::vector<double> unit_scales(int size) {
  std::vector<double> s(static_cast<std::size_t>(size));
  for (int n = 0; n < size; ++n) s[n] = unit_scale(n);
  return s;
}

// table[j][n] = L_n^{nu}(node_j)
std::vector<std::vector<double>> laguerre_table(const QuadratureRule& rule, int n_max,
                                                double nu) {
  std::vector<std::vector<double>> table;
  table.reserve(rule.nodes().size());
  for (double y : rule.nodes()) table.push_back(laguerre_sequence(n_max, nu, y));
  return table;
}

std::vector<std::string> assembly_warnings(const PotentialSpec& pot) {
  std::vector<std::string> w;
  if (pot.N() < 1.0) {
    w.emplace_back("N < 1: below the N >= 1 range; complex eigenvalues expected");
  }
  return w;
}

ComplexSymmetricMatrix empty_matrix(const BasisSpec& basis, const PotentialSpec& pot,
                                    int nodes) {
  const int m = basis.size();
  return ComplexSymmetricMatrix{Eigen::MatrixXcd::Zero(m, m), basis, pot, basis.d(),
                                nodes, assembly_warnings(pot)};
}

int resolve_nodes(const BasisSpec& basis, const PotentialSpec& pot, int minimum,
                  const AssemblyOptions& options) {
  const int k = options.quad_nodes.value_or(default_quadrature_nodes(basis, pot.N()));
  if (k < minimum) {
    throw ParameterError("quadrature node override " + std::to_string(k) +
                         " is below the exactness minimum " + std::to_string(minimum));
  }
  return k;
}

}  // namespace

BasisSpec::BasisSpec(double lambda, int size) : lambda_(lambda), size_(size) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("basis scale lambda must be positive and finite");
  }
  if (size < 1) throw ParameterError("basis size must be at least 1");
}

double BasisSpec::d() const noexcept {
  const double l2 = lambda_ * lambda_;
  return 0.25 - 0.5 / (l2 * l2);
}

PotentialSpec::PotentialSpec(double N, ExpansionMode mode)
    : N_(N), mode_(mode), phase_(phase_factor(N)) {
  if (!(N > 0.0) || !std::isfinite(N)) throw ParameterError("exponent N must be positive");
  if (mode == ExpansionMode::paper_faithful && !near_integer(N)) {
    throw ModeError("paper-faithful expansion requires integer N");
  }
}

bool ComplexSymmetricMatrix::is_real(double tol) const {
  if (entries.size() == 0) return true;
  return entries.imag().cwiseAbs().maxCoeff() <= tol * entries.cwiseAbs().maxCoeff();
}

std::complex<double> phase_factor(double N) {
  if (near_integer(N)) {
    return {std::lround(N) % 2 == 0 ? 1.0 : -1.0, 0.0};
  }
  return std::polar(1.0, std::numbers::pi * N);
}

bool is_hermitian(double N) { return near_integer(N); }

double normalization_constant(int n, double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive");
  if (n < 0) throw ParameterError("degree must be non-negative");
  return std::sqrt(2.0 * lambda) * unit_scale(n);
}

int default_quadrature_nodes(const BasisSpec& basis, double N) {
  return basis.size() + static_cast<int>(std::ceil(N - 1e-9)) + 2;
}

ComplexSymmetricMatrix potential_matrix(const BasisSpec& basis, const PotentialSpec& pot,
                                        const AssemblyOptions& options) {
  if (pot.mode() == ExpansionMode::paper_faithful) {
    const auto coeffs = monomial_expansion(pot.N(), BasisSpec::nu, pot.mode());
    return potential_matrix_from_expansion(basis, pot, coeffs, options);
  }

  const int m = basis.size();
  // L_n L_m has degree <= 2M - 2 and the shifted weight absorbs y^N.
  const int nodes = resolve_nodes(basis, pot, m, options);
  const QuadratureRule rule = gauss_laguerre_rule(pot.N() + BasisSpec::nu, nodes);
  const auto table = laguerre_table(rule, m - 1, BasisSpec::nu);
  const auto s = unit_scales(m);
  const std::complex<double> prefactor =
      -pot.phase() * std::pow(basis.lambda(), -2.0 * pot.N());

  ComplexSymmetricMatrix out = empty_matrix(basis, pot, nodes);
  const auto& w = rule.weights();
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      double integral = 0.0;
      for (std::size_t q = 0; q < w.size(); ++q) integral += w[q] * table[q][i] * table[q][j];
      const std::complex<double> v = prefactor * (s[i] * s[j] * integral);
      out.entries(i, j) = v;
      out.entries(j, i) = v;
    }
  }
  return out;
}

ComplexSymmetricMatrix potential_matrix_from_expansion(const BasisSpec& basis,
                                                       const PotentialSpec& pot,
                                                       const ExpansionCoefficients& coeffs,
                                                       const AssemblyOptions& options) {
  if (coeffs.coeffs.empty()) throw ParameterError("empty expansion coefficients");
  if (coeffs.nu != BasisSpec::nu) throw ParameterError("expansion order must be 1/2");
  const int m = basis.size();
  const int top = static_cast<int>(coeffs.coeffs.size()) - 1;
  // Triple products of degree top + 2(M-1).
  const int minimum = (top + 2 * (m - 1)) / 2 + 1;
  const int nodes = resolve_nodes(basis, pot, minimum, options);
  const QuadratureRule rule = gauss_laguerre_rule(BasisSpec::nu, nodes);
  const auto table = laguerre_table(rule, std::max(top, m - 1), BasisSpec::nu);
  const auto s = unit_scales(m);
  const std::complex<double> prefactor =
      -pot.phase() * std::pow(basis.lambda(), -2.0 * pot.N());

  ComplexSymmetricMatrix out = empty_matrix(basis, pot, nodes);
  const auto& w = rule.weights();
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      double integral = 0.0;
      for (int k = 0; k <= top; ++k) {
        double triple = 0.0;
        for (std::size_t q = 0; q < w.size(); ++q) {
          triple += w[q] * table[q][k] * table[q][i] * table[q][j];
        }
        integral += coeffs.coeffs[k] * triple;
      }
      const std::complex<double> v = prefactor * (s[i] * s[j] * integral);
      out.entries(i, j) = v;
      out.entries(j, i) = v;
    }
  }
  return out;
}

Eigen::MatrixXd kinetic_harmonic_matrix(const BasisSpec& basis) {
  const int m = basis.size();
  const double scale = 2.0 * basis.lambda() * basis.lambda();
  const double d = basis.d();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int n = 0; n < m; ++n) {
    t(n, n) = scale * (0.75 + n - d * (2.0 * n + 1.5));
    if (n + 1 < m) {
      const double off = scale * d * std::sqrt((n + 1.0) * (n + 1.5));
      t(n, n + 1) = off;
      t(n + 1, n) = off;
    }
  }
  return t;
}

ComplexSymmetricMatrix assemble(const BasisSpec& basis, const PotentialSpec& pot,
                                const AssemblyOptions& options) {
  ComplexSymmetricMatrix h = potential_matrix(basis, pot, options);
  h.entries += kinetic_harmonic_matrix(basis).cast<std::complex<double>>();
  return h;
}

const char* to_string(ExpansionMode mode) {
  return mode == ExpansionMode::corrected ? "corrected" : "paper_faithful";
}

ExpansionMode parse_mode(const std::string& text) {
  if (text == "corrected") return ExpansionMode::corrected;
  if (text == "paper" || text == "paper_faithful" || text == "paper-faithful") {
    return ExpansionMode::paper_faithful;
  }
  throw ParameterError("unknown expansion mode '" + text + "'");
}

}  // namespace tra
