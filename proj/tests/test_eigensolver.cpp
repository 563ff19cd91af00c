#include <doctest.h>

#include <complex>
#include <random>

#include "oracle.hpp"
#include "tra/eigensolver.hpp"
#include "tra/errors.hpp"
#include "tra/hamiltonian.hpp"
#include "tra/laguerre.hpp"
#include "tra/wavefunction.hpp"

using doctest::Approx;
using cd = std::complex<double>;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = dist(rng);
  }
  return a;
}

tra::TridiagonalSymmetric<double> tridiagonal(std::vector<double> d, std::vector<double> e) {
  tra::TridiagonalSymmetric<double> t;
  t.diag = Eigen::Map<Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
  t.offdiag = Eigen::Map<Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
  return t;
}

}  // namespace

TEST_CASE("householder leaves a 2x2 unchanged") {
  Eigen::MatrixXd a(2, 2);
  a << 4, 1, 1, 3;
  const auto t = tra::householder_tridiagonalize<double>(a);
  CHECK(t.diag(0) == 4.0);
  CHECK(t.diag(1) == 3.0);
  CHECK(t.offdiag(0) == 1.0);
  CHECK(t.transform->isIdentity(0.0));
}

TEST_CASE("householder on an already tridiagonal matrix") {
  const auto src = tridiagonal({1, 2, 3, 4, 5}, {0.5, -0.7, 0.9, 1.1});
  const auto t = tra::householder_tridiagonalize<double>(src.dense());
  for (int i = 0; i < 5; ++i) CHECK(t.diag(i) == Approx(src.diag(i)).epsilon(1e-14));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(t.offdiag(i)) == Approx(std::abs(src.offdiag(i))).epsilon(1e-14));
}

TEST_CASE("householder preserves the spectrum and reproduces Q^T A Q") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_symmetric(6, rng);
    const auto t = tra::householder_tridiagonalize<double>(a);
    const Eigen::MatrixXd& q = *t.transform;
    CHECK((q.transpose() * a * q - t.dense()).norm() <= 1e-10 * a.norm());
    CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(6, 6)).norm() <= 1e-13);
    const auto ref = oracle::eigen_reference(a.cast<cd>());
    const auto got = tra::tridiag_eigen<double>(t, false);
    CHECK((got.values - ref).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("householder rejects asymmetric input") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3);
  a(0, 2) = 1e-3;
  CHECK_THROWS_AS(tra::householder_tridiagonalize<double>(a), tra::ContractError);
}

TEST_CASE("tridiag_eigen small cases") {
  const auto s1 = tra::tridiag_eigen<double>(tridiagonal({3, 1, 2}, {0, 0}));
  CHECK(s1.values(0).real() == 1.0);
  CHECK(s1.values(1).real() == 2.0);
  CHECK(s1.values(2).real() == 3.0);
  const auto s2 = tra::tridiag_eigen<double>(tridiagonal({2, 2}, {1}));
  CHECK(s2.values(0).real() == Approx(1.0).epsilon(1e-15));
  CHECK(s2.values(1).real() == Approx(3.0).epsilon(1e-15));
}

TEST_CASE("Laguerre Jacobi matrix eigenvalues are roots of L_3") {
  const auto t = tridiagonal({1.5, 3.5, 5.5}, {std::sqrt(1.5), std::sqrt(5.0)});
  const auto s = tra::tridiag_eigen<double>(t, false);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(oracle::laguerre(3, 0.5, s.values(k).real())) <= 1e-10);
}

TEST_CASE("symmetric path eigenvectors are orthonormal with small residual") {
  std::mt19937_64 rng(11);
  for (int n : {4, 8, 12, 30}) {
    const auto a = random_symmetric(n, rng);
    const auto s = tra::symmetric_eigen<double>(a);
    const Eigen::MatrixXd v = s.vectors.real();
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(s.residual <= 1e-8);
    CHECK(std::abs(s.values.sum() - a.trace()) <= 1e-8 * (1.0 + std::abs(a.trace())));
  }
}

TEST_CASE("complex_eigen small cases") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = cd(2, 1);
  d(1, 1) = cd(-1, 0);
  d(2, 2) = cd(2, -1);
  const auto s = tra::complex_eigen<double>(d);
  CHECK(s.values(0) == cd(-1, 0));
  CHECK(s.values(1) == cd(2, -1));
  CHECK(s.values(2) == cd(2, 1));

  Eigen::MatrixXcd a(2, 2);
  a << cd(1, 0), cd(0, 1), cd(0, 1), cd(1, 0);
  const auto t = tra::complex_eigen<double>(a);
  CHECK(std::abs(t.values(0) - cd(1, -1)) <= 1e-14);
  CHECK(std::abs(t.values(1) - cd(1, 1)) <= 1e-14);
}

TEST_CASE("complex_eigen agrees with the reference solver and invariants") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n : {3, 8, 16}) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = cd(dist(rng), dist(rng));
    }
    const auto s = tra::complex_eigen<double>(a);
    const auto ref = oracle::eigen_reference(a);
    CHECK((s.values - ref).cwiseAbs().maxCoeff() <= 1e-10 * a.norm());
    CHECK(std::abs(s.values.sum() - a.trace()) <= 1e-8 * (1.0 + std::abs(a.trace())));
    const cd det = a.fullPivLu().determinant();
    CHECK(std::abs(s.values.prod() - det) <= 1e-6 * std::abs(det));
    CHECK(s.residual <= 1e-8);
  }
}

TEST_CASE("symmetric and complex paths agree on random symmetric matrices") {
  std::mt19937_64 rng(20240611);
  for (int n : {4, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_symmetric(n, rng);
      const auto sym = tra::symmetric_eigen<double>(a, false);
      const auto gen = tra::complex_eigen<double>(a.cast<cd>(), false);
      CHECK((sym.values - gen.values).cwiseAbs().maxCoeff() <= 1e-9 * a.norm());
    }
  }
}

TEST_CASE("trace identity on complex symmetric assemblies") {
  for (double N : {0.5, 1.1, 1.5, 2.5}) {
    const auto h = tra::assemble(tra::BasisSpec(1.0, 10), tra::PotentialSpec(N));
    const auto s = tra::complex_eigen<double>(h.entries);
    const cd tr = h.entries.trace();
    CHECK(std::abs(s.values.sum() - tr) <= 1e-8 * (1.0 + std::abs(tr)));
    CHECK(s.residual <= 1e-8);
  }
}

TEST_CASE("classify") {
  tra::Spectrum<double> a;
  a.values.resize(2);
  a.values << cd(3.0, 0.0), cd(7.0, 1e-12);
  auto c = tra::classify(a, 1e-8);
  CHECK(c.n_real == 2);
  CHECK(c.n_complex == 0);

  tra::Spectrum<double> b;
  b.values.resize(3);
  b.values << cd(1, -2), cd(1, 2), cd(5, 0);
  c = tra::classify(b, 1e-8);
  CHECK(c.n_real == 1);
  CHECK(c.n_complex == 2);

  const auto h = tra::assemble(tra::BasisSpec(1.0, 5), tra::PotentialSpec(2.0));
  const auto s = tra::solve_spectrum(h, false);
  c = tra::classify(s, 1e-8);
  CHECK(c.n_real == 5);
  CHECK(c.n_complex == 0);
}

TEST_CASE("ordering and determinism") {
  const auto h = tra::assemble(tra::BasisSpec(2.5, 8), tra::PotentialSpec(0.7));
  const auto a = tra::complex_eigen<double>(h.entries);
  const auto b = tra::complex_eigen<double>(h.entries);
  CHECK(a.values == b.values);
  for (Eigen::Index i = 1; i < a.size(); ++i) {
    const bool ordered = a.values(i - 1).real() < a.values(i).real() ||
                         (a.values(i - 1).real() == a.values(i).real() &&
                          a.values(i - 1).imag() <= a.values(i).imag());
    CHECK(ordered);
  }
}

TEST_CASE("complex_eigen size contract") {
  CHECK_THROWS_AS(tra::complex_eigen<double>(Eigen::MatrixXcd::Identity(129, 129)), tra::ContractError);
}

TEST_CASE("float instantiation") {
  Eigen::MatrixXf a(3, 3);
  a << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  const auto s = tra::symmetric_eigen<float>(a, false, 1e-5f);
  CHECK(s.values(0).real() == Approx(2.0 - std::sqrt(2.0)).epsilon(1e-5));
  CHECK(s.values(2).real() == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-5));
}
