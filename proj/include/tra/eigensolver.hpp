#pragma once

// Dense eigenvalue machinery used throughout the toolkit.
//
// Two independent routes are provided:
//   * real symmetric: Householder reduction to tridiagonal form followed by
//     implicit-shift QL iteration (Wilkinson shifts);
//   * general complex: Householder reduction to upper Hessenberg form
//     followed by shifted QR iteration to a complex Schur form.
// The routes share no numerical code so they can cross-check each other.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tra/errors.hpp"

namespace tra {

template <typename Real>
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using MatrixX = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

enum class EigenTag { real, complex };

inline constexpr double kDefaultTolReal = 1e-8;

/// Symmetric tridiagonal matrix (a_0..a_{M-1} on the diagonal,
/// b_0..b_{M-2} beside it). When produced by a Householder reduction of A,
/// `transform` holds the orthogonal Q with Q^T A Q equal to this matrix.
template <typename Real>
struct TridiagonalSymmetric {
  VectorX<Real> diag;
  VectorX<Real> offdiag;
  std::optional<MatrixX<Real>> transform;

  Eigen::Index size() const { return diag.size(); }

  MatrixX<Real> dense() const {
    const Eigen::Index n = diag.size();
    MatrixX<Real> t = MatrixX<Real>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      t(i, i) = diag(i);
      if (i + 1 < n) {
        t(i, i + 1) = offdiag(i);
        t(i + 1, i) = offdiag(i);
      }
    }
    return t;
  }
};

/// Eigenvalues sorted by (Re asc, Im asc), optional eigenvectors in matching
/// columns, the worst scaled residual and a real/complex tag per value.
template <typename Real>
struct Spectrum {
  VectorX<std::complex<Real>> values;
  MatrixX<std::complex<Real>> vectors;  // 0x0 when not requested
  Real residual = 0;
  Real tol_real = static_cast<Real>(kDefaultTolReal);
  std::vector<EigenTag> tags;

  bool has_vectors() const { return vectors.size() > 0; }
  Eigen::Index size() const { return values.size(); }
};

struct SpectrumSummary {
  int n_real = 0;
  int n_complex = 0;
};

template <typename Real>
bool is_real_eigenvalue(const std::complex<Real>& e, Real tol_real) {
  return std::abs(e.imag()) <= tol_real * (Real(1) + std::abs(e));
}

template <typename Real>
std::vector<EigenTag> tag_eigenvalues(const VectorX<std::complex<Real>>& values,
                                      Real tol_real) {
  std::vector<EigenTag> tags;
  tags.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    tags.push_back(is_real_eigenvalue(values(i), tol_real) ? EigenTag::real
                                                           : EigenTag::complex);
  }
  return tags;
}

/// Counts real and complex eigenvalues under the |Im E| <= tol (1 + |E|) rule.
template <typename Real>
SpectrumSummary classify(const Spectrum<Real>& spectrum, Real tol_real) {
  SpectrumSummary s;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    if (is_real_eigenvalue(spectrum.values(i), tol_real)) {
      ++s.n_real;
    } else {
      ++s.n_complex;
    }
  }
  return s;
}

namespace detail {

// Stable ordering by (Re, Im); returns the permutation.
template <typename Real>
std::vector<Eigen::Index> spectral_order(
    const VectorX<std::complex<Real>>& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     const auto& x = values(a);
                     const auto& y = values(b);
                     if (x.real() != y.real()) return x.real() < y.real();
                     return x.imag() < y.imag();
                   });
  return order;
}

template <typename Real, typename Derived>
Spectrum<Real> finish_spectrum(const VectorX<std::complex<Real>>& raw_values,
                               const MatrixX<std::complex<Real>>& raw_vectors,
                               const Eigen::MatrixBase<Derived>& source,
                               Real tol_real) {
  const auto order = spectral_order<Real>(raw_values);
  const Eigen::Index n = raw_values.size();
  Spectrum<Real> out;
  out.tol_real = tol_real;
  out.values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.values(i) = raw_values(order[i]);
  if (raw_vectors.size() > 0) {
    out.vectors.resize(raw_vectors.rows(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.vectors.col(i) = raw_vectors.col(order[i]);
    }
    const MatrixX<std::complex<Real>> a =
        source.template cast<std::complex<Real>>();
    const Real scale = std::max(a.norm(), std::numeric_limits<Real>::min());
    Real worst = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto v = out.vectors.col(i);
      worst = std::max(worst, (a * v - out.values(i) * v).norm() /
                                  (scale * std::max(v.norm(), Real(1e-300))));
    }
    out.residual = worst;
  }
  out.tags = tag_eigenvalues<Real>(out.values, tol_real);
  return out;
}

}  // namespace detail

/// Orthogonal similarity reduction of a real symmetric matrix to tridiagonal
/// form. The accumulated Q satisfies Q^T A Q = T.
template <typename Real>
TridiagonalSymmetric<Real> householder_tridiagonalize(const MatrixX<Real>& a) {
  if (a.rows() != a.cols()) {
    throw ContractError("householder_tridiagonalize: matrix is not square");
  }
  const Eigen::Index n = a.rows();
  const Real scale = a.norm();
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Real(1e-12) * scale) {
    throw ContractError("householder_tridiagonalize: matrix is not symmetric");
  }

  MatrixX<Real> w = a;
  MatrixX<Real> q = MatrixX<Real>::Identity(n, n);
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    VectorX<Real> x = w.block(k + 1, k, m, 1);
    if (x.tail(m - 1).squaredNorm() == Real(0)) continue;
    const Real sigma = x.norm();
    const Real beta = x(0) >= Real(0) ? -sigma : sigma;
    VectorX<Real> v = x;
    v(0) -= beta;
    v /= v.norm();
    // W <- P W P and Q <- Q P with P = I - 2 v v^T acting on rows/cols k+1..
    const Eigen::Index cols = n - k;
    w.block(k + 1, k, m, cols).noalias() -=
        Real(2) * v * (v.transpose() * w.block(k + 1, k, m, cols));
    w.block(0, k + 1, n, m).noalias() -=
        Real(2) * (w.block(0, k + 1, n, m) * v) * v.transpose();
    q.block(0, k + 1, n, m).noalias() -=
        Real(2) * (q.block(0, k + 1, n, m) * v) * v.transpose();
  }

  TridiagonalSymmetric<Real> t;
  t.diag = w.diagonal();
  t.offdiag.resize(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i + 1 < n; ++i) t.offdiag(i) = w(i + 1, i);
  t.transform = std::move(q);
  return t;
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
///
/// Eigenvectors are returned in the basis of `start` (identity when absent),
/// so passing the Householder Q yields eigenvectors of the original matrix.
/// Throws NumericError after 50*M sweeps without convergence.
template <typename Real>
Spectrum<Real> tridiag_eigen(const TridiagonalSymmetric<Real>& t,
                             bool want_vectors = true,
                             const MatrixX<Real>* start = nullptr,
                             Real tol_real = static_cast<Real>(kDefaultTolReal)) {
  const Eigen::Index n = t.size();
  if (t.offdiag.size() != std::max<Eigen::Index>(n - 1, 0)) {
    throw ContractError("tridiag_eigen: off-diagonal length must be M-1");
  }
  VectorX<Real> d = t.diag;
  VectorX<Real> e = VectorX<Real>::Zero(n);
  if (n > 1) e.head(n - 1) = t.offdiag;

  MatrixX<Real> z;
  if (want_vectors) {
    z = start ? *start : MatrixX<Real>::Identity(n, n);
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  const long max_sweeps = 50L * std::max<long>(n, 1);
  long sweeps = 0;

  for (Eigen::Index l = 0; l < n; ++l) {
    Eigen::Index m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Real dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) <= eps * dd) break;
      }
      if (m != l) {
        if (++sweeps > max_sweeps) {
          std::vector<double> partial(d.data(), d.data() + n);
          throw NumericError("tridiag_eigen: no convergence after " +
                                 std::to_string(max_sweeps) + " sweeps",
                             sweeps, std::move(partial));
        }
        Real g = (d(l + 1) - d(l)) / (Real(2) * e(l));
        Real r = std::hypot(g, Real(1));
        g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
        Real s = 1, c = 1, p = 0;
        Eigen::Index i = m - 1;
        bool underflow = false;
        for (;; --i) {
          const Real f = s * e(i);
          const Real b = c * e(i);
          r = std::hypot(f, g);
          e(i + 1) = r;
          if (r == Real(0)) {
            d(i + 1) -= p;
            e(m) = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d(i + 1) - p;
          r = (d(i) - g) * s + Real(2) * c * b;
          p = s * r;
          d(i + 1) = g + p;
          g = c * r - b;
          if (want_vectors) {
            for (Eigen::Index k = 0; k < z.rows(); ++k) {
              const Real fz = z(k, i + 1);
              z(k, i + 1) = s * z(k, i) + c * fz;
              z(k, i) = c * z(k, i) - s * fz;
            }
          }
          if (i == l) break;
        }
        if (underflow) continue;
        d(l) -= p;
        e(l) = g;
        e(m) = 0;
      }
    } while (m != l);
  }

  VectorX<std::complex<Real>> values = d.template cast<std::complex<Real>>();
  MatrixX<std::complex<Real>> vectors;
  if (want_vectors) vectors = z.template cast<std::complex<Real>>();
  if (want_vectors && start) {
    // Residual is measured against the matrix the vectors belong to.
    const MatrixX<Real> source = (*start) * t.dense() * start->transpose();
    return detail::finish_spectrum<Real>(values, vectors, source, tol_real);
  }
  return detail::finish_spectrum<Real>(values, vectors, t.dense(), tol_real);
}

/// Householder + QL for a real symmetric matrix; eigenvectors (if requested)
/// are expressed in the original basis.
template <typename Real>
Spectrum<Real> symmetric_eigen(const MatrixX<Real>& a, bool want_vectors = true,
                               Real tol_real = static_cast<Real>(kDefaultTolReal)) {
  const auto t = householder_tridiagonalize<Real>(a);
  if (!want_vectors) return tridiag_eigen<Real>(t, false, nullptr, tol_real);
  auto spectrum = tridiag_eigen<Real>(t, true, &*t.transform, tol_real);
  // Recompute the residual against A itself rather than Q T Q^T.
  return detail::finish_spectrum<Real>(spectrum.values, spectrum.vectors, a,
                                       tol_real);
}

/// Eigenvalues (and optionally eigenvectors) of a general complex square
/// matrix: Householder Hessenberg reduction, then explicit single-shift QR
/// sweeps with Wilkinson shifts and periodic exceptional shifts.
template <typename Real>
Spectrum<Real> complex_eigen(const MatrixX<std::complex<Real>>& a,
                             bool want_vectors = true,
                             Real tol_real = static_cast<Real>(kDefaultTolReal)) {
  using Complex = std::complex<Real>;
  if (a.rows() != a.cols()) {
    throw ContractError("complex_eigen: matrix is not square");
  }
  const Eigen::Index n = a.rows();
  if (n > 128) throw ContractError("complex_eigen: size exceeds 128");
  const Real eps = std::numeric_limits<Real>::epsilon();

  MatrixX<Complex> h = a;
  MatrixX<Complex> z = MatrixX<Complex>::Identity(n, n);

  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    VectorX<Complex> x = h.block(k + 1, k, m, 1);
    if (x.tail(m - 1).squaredNorm() == Real(0)) continue;
    const Real sigma = x.norm();
    const Complex phase =
        std::abs(x(0)) == Real(0) ? Complex(1) : x(0) / std::abs(x(0));
    VectorX<Complex> v = x;
    v(0) += phase * sigma;
    v /= v.norm();
    h.block(k + 1, 0, m, n).noalias() -=
        Real(2) * v * (v.adjoint() * h.block(k + 1, 0, m, n));
    h.block(0, k + 1, n, m).noalias() -=
        Real(2) * (h.block(0, k + 1, n, m) * v) * v.adjoint();
    z.block(0, k + 1, n, m).noalias() -=
        Real(2) * (z.block(0, k + 1, n, m) * v) * v.adjoint();
    for (Eigen::Index i = k + 2; i < n; ++i) h(i, k) = Complex(0);
  }

  const Real anorm = std::max(h.norm(), std::numeric_limits<Real>::min());
  const long max_sweeps = 50L * std::max<long>(n, 1);
  long sweeps = 0;
  int local_iter = 0;
  Eigen::Index hi = n - 1;
  while (hi > 0) {
    Eigen::Index lo = hi;
    for (; lo > 0; --lo) {
      Real tst = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (tst == Real(0)) tst = anorm;
      if (std::abs(h(lo, lo - 1)) <= eps * tst) {
        h(lo, lo - 1) = Complex(0);
        break;
      }
    }
    if (lo == hi) {
      --hi;
      local_iter = 0;
      continue;
    }
    if (++sweeps > max_sweeps) {
      std::vector<double> partial;
      for (Eigen::Index i = 0; i < n; ++i) {
        partial.push_back(static_cast<double>(h(i, i).real()));
      }
      throw NumericError("complex_eigen: no convergence after " +
                             std::to_string(max_sweeps) + " QR sweeps (active block " +
                             std::to_string(lo) + ".." + std::to_string(hi) + ")",
                         sweeps, std::move(partial));
    }
    ++local_iter;

    Complex shift;
    if (local_iter % 10 == 0) {
      Real ex = std::abs(h(hi, hi - 1).real());
      if (hi >= 2) ex += std::abs(h(hi - 1, hi - 2).real());
      shift = Complex(ex) + h(hi, hi);
    } else {
      const Complex p = h(hi - 1, hi - 1);
      const Complex q = h(hi - 1, hi);
      const Complex r = h(hi, hi - 1);
      const Complex s = h(hi, hi);
      const Complex half = (p - s) / Real(2);
      const Complex disc = std::sqrt(half * half + q * r);
      const Complex mid = (p + s) / Real(2);
      const Complex e1 = mid + disc;
      const Complex e2 = mid - disc;
      shift = std::abs(e1 - s) <= std::abs(e2 - s) ? e1 : e2;
    }

    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) -= shift;
    std::vector<Complex> gam(static_cast<std::size_t>(hi - lo));
    std::vector<Complex> sig(static_cast<std::size_t>(hi - lo));
    for (Eigen::Index k = lo; k < hi; ++k) {
      const Complex f = h(k, k);
      const Complex g = h(k + 1, k);
      const Real nrm = std::hypot(std::abs(f), std::abs(g));
      Complex gk(1), sk(0);
      if (nrm != Real(0)) {
        gk = f / nrm;
        sk = g / nrm;
      }
      gam[k - lo] = gk;
      sig[k - lo] = sk;
      for (Eigen::Index j = k; j < n; ++j) {
        const Complex top = h(k, j);
        const Complex bot = h(k + 1, j);
        h(k, j) = std::conj(gk) * top + std::conj(sk) * bot;
        h(k + 1, j) = -sk * top + gk * bot;
      }
      h(k + 1, k) = Complex(0);
    }
    for (Eigen::Index k = lo; k < hi; ++k) {
      const Complex gk = gam[k - lo];
      const Complex sk = sig[k - lo];
      for (Eigen::Index i = 0; i <= k + 1; ++i) {
        const Complex left = h(i, k);
        const Complex right = h(i, k + 1);
        h(i, k) = gk * left + sk * right;
        h(i, k + 1) = -std::conj(sk) * left + std::conj(gk) * right;
      }
      if (want_vectors) {
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex left = z(i, k);
          const Complex right = z(i, k + 1);
          z(i, k) = gk * left + sk * right;
          z(i, k + 1) = -std::conj(sk) * left + std::conj(gk) * right;
        }
      }
    }
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) += shift;
  }

  VectorX<Complex> values = h.diagonal();
  MatrixX<Complex> vectors;
  if (want_vectors) {
    // Eigenvectors of the triangular Schur factor, mapped back through Z.
    MatrixX<Complex> y = MatrixX<Complex>::Zero(n, n);
    const Real small = eps * anorm;
    for (Eigen::Index k = 0; k < n; ++k) {
      y(k, k) = Complex(1);
      for (Eigen::Index i = k - 1; i >= 0; --i) {
        Complex acc(0);
        for (Eigen::Index j = i + 1; j <= k; ++j) acc += h(i, j) * y(j, k);
        Complex denom = h(i, i) - h(k, k);
        if (std::abs(denom) < small) denom = Complex(small);
        y(i, k) = -acc / denom;
      }
    }
    vectors = z * y;
    for (Eigen::Index k = 0; k < n; ++k) vectors.col(k).normalize();
  }
  return detail::finish_spectrum<Real>(values, vectors, a, tol_real);
}

}  // namespace tra
