#pragma once

// Matrix of H = -1/2 d^2/dx^2 + x^2 - (ix)^{2N} (mass fixed at 1) in the
// half-line oscillator basis
//
//   phi_n(x) = A_n y^{1/2} e^{-y/2} L_n^{1/2}(y),   y = lambda^2 x^2,
//
// with A_n = sqrt(2 lambda Gamma(n+1) / Gamma(n+3/2)). The basis is
// orthonormal on x >= 0, so H is complex symmetric and its eigenvalues
// approximate the spectrum directly.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tra/laguerre.hpp"

namespace tra {

/// Oscillator-Laguerre basis: scale lambda > 0 and truncation M >= 1.
/// The exponents are fixed at nu = 1/2, alpha = nu/2 + 1/4, beta = 1/2.
class BasisSpec {
 public:
  static constexpr double nu = 0.5;
  static constexpr double alpha = nu / 2.0 + 0.25;
  static constexpr double beta = 0.5;

  BasisSpec(double lambda, int size);

  double lambda() const noexcept { return lambda_; }
  int size() const noexcept { return size_; }

  /// d = 1/4 - 1/(2 lambda^4), the coupling of the tridiagonal kinetic part.
  double d() const noexcept;

 private:
  double lambda_;
  int size_;
};

/// Exponent N of the potential, the expansion mode and the cached phase
/// a = e^{i pi N}. Mass is fixed at 1.
class PotentialSpec {
 public:
  static constexpr double mass = 1.0;

  explicit PotentialSpec(double N, ExpansionMode mode = ExpansionMode::corrected);

  double N() const noexcept { return N_; }
  ExpansionMode mode() const noexcept { return mode_; }
  std::complex<double> phase() const noexcept { return phase_; }

 private:
  double N_;
  ExpansionMode mode_;
  std::complex<double> phase_;
};

struct AssemblyOptions {
  std::optional<int> quad_nodes;  // default: M + ceil(N) + 2
};

struct ComplexSymmetricMatrix {
  Eigen::MatrixXcd entries;
  BasisSpec basis;
  PotentialSpec potential;
  double d = 0;
  int quad_nodes = 0;
  std::vector<std::string> warnings;

  int size() const { return static_cast<int>(entries.rows()); }

  /// max |Im| <= tol * max |entry|.
  bool is_real(double tol = 1e-12) const;
};

/// e^{i pi N}; integer N (within 1e-9) returns exactly +-1.
std::complex<double> phase_factor(double N);

/// True iff e^{2 i pi N} = 1, i.e. N is an integer within 1e-9.
bool is_hermitian(double N);

double normalization_constant(int n, double lambda);

/// Node count that integrates every polynomial entry exactly.
int default_quadrature_nodes(const BasisSpec& basis, double N);

/// -e^{i pi N} lambda^{-2N} (A_n A_m / 2 lambda) int y^{1/2} e^{-y} y^N L_n L_m dy.
///
/// Corrected mode integrates directly with the shifted weight
/// y^{N+1/2} e^{-y}; paper-faithful mode expands y^N with the printed
/// coefficients and sums triple products.
ComplexSymmetricMatrix potential_matrix(const BasisSpec& basis, const PotentialSpec& pot,
                                        const AssemblyOptions& options = {});

/// Expansion path with explicit coefficients: the integrand's y^N is replaced
/// by sum_k c_k L_k^{1/2}(y). With corrected coefficients this reproduces the
/// direct quadrature route.
ComplexSymmetricMatrix potential_matrix_from_expansion(const BasisSpec& basis,
                                                       const PotentialSpec& pot,
                                                       const ExpansionCoefficients& coeffs,
                                                       const AssemblyOptions& options = {});

/// Tridiagonal matrix of -1/2 d^2/dx^2 + x^2.
Eigen::MatrixXd kinetic_harmonic_matrix(const BasisSpec& basis);

/// potential_matrix + kinetic_harmonic_matrix.
ComplexSymmetricMatrix assemble(const BasisSpec& basis, const PotentialSpec& pot,
                                const AssemblyOptions& options = {});

const char* to_string(ExpansionMode mode);
ExpansionMode parse_mode(const std::string& text);

}  // namespace tra
