#include "tra/wavefunction.hpp"

#include <algorithm>
#include <cmath>

namespace tra {

Spectrum<double> solve_spectrum(const ComplexSymmetricMatrix& h, bool want_vectors,
                                double tol_real) {
  if (h.is_real(0.0)) {
    return symmetric_eigen<double>(h.entries.real(), want_vectors, tol_real);
  }
  return complex_eigen<double>(h.entries, want_vectors, tol_real);
}

Eigen::VectorXcd gauge_fixed(const Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw ParameterError("cannot normalize a zero coefficient vector");
  Eigen::VectorXcd out = v / norm;
  const double biggest = out.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double mag = std::abs(out(i));
    if (mag > 1e-12 * biggest) {
      out *= std::conj(out(i)) / mag;
      out(i) = mag;
      break;
    }
  }
  return out;
}

Eigen::VectorXcd expansion_coefficients(const Spectrum<double>& spectrum, int which) {
  if (!spectrum.has_vectors()) throw ParameterError("spectrum has no eigenvectors");
  if (which < 0 || which >= spectrum.size()) {
    throw ParameterError("eigenvalue index " + std::to_string(which) + " out of range");
  }
  return gauge_fixed(spectrum.vectors.col(which));
}

Eigen::VectorXcd expansion_coefficients(const ComplexSymmetricMatrix& h, int which) {
  if (which < 0 || which >= h.size()) {
    throw ParameterError("eigenvalue index " + std::to_string(which) + " out of range");
  }
  return expansion_coefficients(solve_spectrum(h, true), which);
}

double basis_eval(int n, const BasisSpec& basis, double x) {
  const double root_y = basis.lambda() * std::abs(x);
  const double y = root_y * root_y;
  return normalization_constant(n, basis.lambda()) * root_y * std::exp(-0.5 * y) *
         laguerre_eval(n, BasisSpec::nu, y);
}

WavefunctionSamples reconstruct(const Eigen::VectorXcd& coeffs, const BasisSpec& basis,
                                const std::vector<double>& grid, WavefunctionMeta meta) {
  if (coeffs.size() == 0) throw ParameterError("reconstruct: no coefficients");
  const double norm = coeffs.norm();
  if (!(norm > 0.0)) throw ParameterError("reconstruct: all-zero coefficients cannot be normalized");
  const Eigen::VectorXcd f = coeffs / norm;
  const int m = static_cast<int>(f.size());

  std::vector<double> amplitude(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) amplitude[n] = normalization_constant(n, basis.lambda());

  WavefunctionSamples out;
  out.x = grid;
  out.psi.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!std::isfinite(grid[j])) throw ParameterError("reconstruct: grid must be finite");
    const double root_y = basis.lambda() * std::abs(grid[j]);
    const double y = root_y * root_y;
    const auto lag = laguerre_sequence(m - 1, BasisSpec::nu, y);
    const double envelope = root_y * std::exp(-0.5 * y);
    std::complex<double> acc(0.0);
    for (int n = 0; n < m; ++n) acc += f(n) * (amplitude[n] * envelope * lag[n]);
    out.psi[j] = acc;
  }
  meta.lambda = basis.lambda();
  meta.size = m;
  out.meta = std::move(meta);
  return out;
}

std::vector<double> default_grid(double lambda, int points, double x_max) {
  if (!(lambda > 0.0)) throw ParameterError("grid: lambda must be positive");
  if (points < 2) throw ParameterError("grid: need at least two points");
  if (x_max <= 0.0) x_max = std::max(4.0, 6.0 / lambda);
  std::vector<double> x(static_cast<std::size_t>(points));
  const double last = points - 1.0;
  for (int j = 0; j < points; ++j) x[j] = x_max * (2.0 * j / last - 1.0);
  return x;
}

double half_line_norm(const WavefunctionSamples& samples) {
  double acc = 0.0;
  for (std::size_t j = 1; j < samples.x.size(); ++j) {
    const double x0 = samples.x[j - 1];
    const double x1 = samples.x[j];
    if (x0 < 0.0) continue;
    acc += 0.5 * (x1 - x0) * (std::norm(samples.psi[j - 1]) + std::norm(samples.psi[j]));
  }
  return acc;
}

double decay_metric(const WavefunctionSamples& samples, double x_tail) {
  double reach = 0.0;
  for (double x : samples.x) reach = std::max(reach, std::abs(x));
  if (samples.x.empty() || !(x_tail >= 0.0) || x_tail > reach) {
    throw ParameterError("decay_metric: x_tail lies outside the sampled grid");
  }
  double peak = 0.0;
  double tail = 0.0;
  for (std::size_t j = 0; j < samples.x.size(); ++j) {
    const double mag = std::abs(samples.psi[j]);
    peak = std::max(peak, mag);
    if (std::abs(samples.x[j]) >= x_tail) tail = std::max(tail, mag);
  }
  if (!(peak > 0.0)) throw ParameterError("decay_metric: samples vanish identically");
  return tail / peak;
}

OrthogonalityReport discrete_orthogonality(const TridiagonalSymmetric<double>& t) {
  using Wide = long double;
  const Eigen::Index m = t.size();
  OrthogonalityReport report;
  report.weights.resize(m);
  if (m == 1) {
    report.weights(0) = 1.0;
    report.gram = Eigen::MatrixXd::Ones(1, 1);
    return report;
  }
  // Upward recursion amplifies eigenvalue rounding wherever the weight is
  // tiny, so the whole check runs in extended precision.
  TridiagonalSymmetric<Wide> wide;
  wide.diag = t.diag.cast<Wide>();
  wide.offdiag = t.offdiag.cast<Wide>();
  const auto spectrum = tridiag_eigen<Wide>(wide, true);
  MatrixX<Wide> p(m, m);  // p(n, k) = P_n(E_k)
  VectorX<Wide> w(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Wide v0 = spectrum.vectors(0, k).real();
    w(k) = v0 * v0;
    p.col(k) = recursion_eval(wide, spectrum.values(k).real()).values;
  }
  const MatrixX<Wide> gram = p * w.asDiagonal() * p.transpose();
  report.gram = gram.cast<double>();
  report.weights = w.cast<double>();
  for (Eigen::Index i = 0; i < m; ++i) {
    report.max_diag_dev = std::max(report.max_diag_dev, std::abs(report.gram(i, i) - 1.0));
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j) report.max_offdiag = std::max(report.max_offdiag, std::abs(report.gram(i, j)));
    }
  }
  return report;
}

}  // namespace tra
