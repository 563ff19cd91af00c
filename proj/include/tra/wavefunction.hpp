#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tra/eigensolver.hpp"
#include "tra/errors.hpp"
#include "tra/hamiltonian.hpp"

namespace tra {

/// P_0(E)..P_{M-1}(E) of the three-term recursion
///   E P_n = a_n P_n + b_{n-1} P_{n-1} + b_n P_{n+1},   P_0 = 1,
/// plus `continuation`, the next step taken with a synthetic b_{M-1} = 1.
/// The continuation equals det(E - T) / prod(b) and vanishes exactly at
/// eigenvalues of T.
template <typename Value>
struct RecursionPolynomials {
  Value energy{};
  VectorX<Value> values;
  Value continuation{};
};

/// Works for real and complex coefficients and energies alike; the complex
/// case is the analytic continuation of the real recursion.
template <typename Coeff, typename Value>
RecursionPolynomials<Value> recursion_eval(const VectorX<Coeff>& diag,
                                           const VectorX<Coeff>& offdiag, Value energy) {
  const Eigen::Index m = diag.size();
  if (m < 1) throw ParameterError("recursion_eval: empty recursion");
  if (offdiag.size() != m - 1) throw ParameterError("recursion_eval: off-diagonal must be M-1 long");
  const double scale = std::sqrt(diag.squaredNorm() + 2.0 * offdiag.squaredNorm());
  for (Eigen::Index n = 0; n + 1 < m; ++n) {
    if (std::abs(offdiag(n)) <= 1e-13 * scale) {
      throw DegenerateRecursionError(
          "recursion_eval: vanishing coupling b_" + std::to_string(n) +
              "; the matrix decouples into blocks",
          static_cast<long>(n));
    }
  }
  RecursionPolynomials<Value> out;
  out.energy = energy;
  out.values.resize(m);
  out.values(0) = Value(1);
  Value prev(0);
  for (Eigen::Index n = 0; n < m; ++n) {
    const Value lower = n > 0 ? Value(offdiag(n - 1)) * prev : Value(0);
    const Value next = (energy - Value(diag(n))) * out.values(n) - lower;
    if (n + 1 < m) {
      prev = out.values(n);
      out.values(n + 1) = next / Value(offdiag(n));
    } else {
      out.continuation = next;
    }
  }
  return out;
}

template <typename Real, typename Value>
RecursionPolynomials<Value> recursion_eval(const TridiagonalSymmetric<Real>& t, Value energy) {
  return recursion_eval<Real, Value>(t.diag, t.offdiag, energy);
}

/// Solve the assembled matrix: symmetric Householder/QL path when it is real,
/// complex Hessenberg/QR otherwise.
Spectrum<double> solve_spectrum(const ComplexSymmetricMatrix& h, bool want_vectors = true,
                                double tol_real = kDefaultTolReal);

/// Unit 2-norm, first non-negligible entry rotated to positive real.
Eigen::VectorXcd gauge_fixed(const Eigen::VectorXcd& v);

/// Expansion coefficients f_0..f_{M-1} of eigenstate `which` (spectral order).
Eigen::VectorXcd expansion_coefficients(const ComplexSymmetricMatrix& h, int which);
Eigen::VectorXcd expansion_coefficients(const Spectrum<double>& spectrum, int which);

/// phi_n(x) = A_n y^{1/2} e^{-y/2} L_n^{1/2}(y), y = lambda^2 x^2.
double basis_eval(int n, const BasisSpec& basis, double x);

struct WavefunctionMeta {
  double N = 0;
  double lambda = 0;
  int size = 0;
  int level = 0;
  std::complex<double> energy;
  std::string normalization = "half-line L2, phi_n orthonormal on x >= 0";
};

struct WavefunctionSamples {
  std::vector<double> x;
  std::vector<std::complex<double>> psi;
  WavefunctionMeta meta;
};

/// psi(x_j) = sum_n f_n phi_n(x_j) after scaling f to unit norm, which makes
/// psi unit-normalized on the half-line (the phi_n are orthonormal there).
/// Negative x is evaluated through y = lambda^2 x^2, i.e. mirrored.
WavefunctionSamples reconstruct(const Eigen::VectorXcd& coeffs, const BasisSpec& basis,
                                const std::vector<double>& grid, WavefunctionMeta meta = {});

/// 401 uniform points on [-x_max, x_max], x_max = max(4, 6 / lambda).
std::vector<double> default_grid(double lambda, int points = 401, double x_max = 0.0);

/// Trapezoidal sum of |psi|^2 over the x >= 0 samples.
double half_line_norm(const WavefunctionSamples& samples);

/// max |psi| on |x| >= x_tail divided by the global max |psi|.
double decay_metric(const WavefunctionSamples& samples, double x_tail);

struct OrthogonalityReport {
  Eigen::MatrixXd gram;
  Eigen::VectorXd weights;
  double max_offdiag = 0;
  double max_diag_dev = 0;
};

/// Gram matrix sum_k w_k P_n(E_k) P_m(E_k) with E_k the eigenvalues of T
/// and w_k the squared first components of its orthonormal eigenvectors.
OrthogonalityReport discrete_orthogonality(const TridiagonalSymmetric<double>& t);

}  // namespace tra
