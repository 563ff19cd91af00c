#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracle.hpp"
#include "tra/errors.hpp"
#include "tra/hamiltonian.hpp"

using doctest::Approx;
using tra::BasisSpec;
using tra::ExpansionMode;
using tra::PotentialSpec;

TEST_CASE("phase_factor and is_hermitian") {
  CHECK(tra::phase_factor(1.0) == std::complex<double>(-1.0, 0.0));
  CHECK(tra::phase_factor(2.0) == std::complex<double>(1.0, 0.0));
  const auto p = tra::phase_factor(1.1);
  CHECK(p.real() == Approx(-0.951057).epsilon(1e-6));
  CHECK(p.imag() == Approx(-0.309017).epsilon(1e-6));
  CHECK(tra::is_hermitian(3.0));
  CHECK_FALSE(tra::is_hermitian(0.5));
  CHECK(tra::is_hermitian(2.0 + 1e-12));
}

TEST_CASE("normalization_constant") {
  CHECK(tra::normalization_constant(0, 1.0) == Approx(1.502252).epsilon(1e-6));
  CHECK(tra::normalization_constant(1, 1.0) == Approx(1.226583).epsilon(1e-6));
  CHECK(tra::normalization_constant(0, 4.0) == Approx(3.004505).epsilon(1e-6));
  for (int n = 0; n < 10; ++n) {
    CHECK(tra::normalization_constant(n, 2.9) ==
          Approx(std::sqrt(2.9) * tra::normalization_constant(n, 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("potential entries in closed form") {
  const auto v1 = tra::potential_matrix(BasisSpec(1.0, 3), PotentialSpec(1.0));
  CHECK(v1.entries(0, 0).real() == Approx(1.5).epsilon(1e-14));
  const auto v2 = tra::potential_matrix(BasisSpec(std::sqrt(2.0), 3), PotentialSpec(1.0));
  CHECK(v2.entries(0, 1).real() == Approx(-std::sqrt(3.0 / 8.0)).epsilon(1e-13));
  const auto v3 = tra::potential_matrix(BasisSpec(1.0, 3), PotentialSpec(2.0));
  CHECK(v3.entries(0, 0).real() == Approx(-3.75).epsilon(1e-14));
  const auto vp = tra::potential_matrix(BasisSpec(1.0, 3), PotentialSpec(1.0, ExpansionMode::paper_faithful));
  CHECK(vp.entries(0, 0).real() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("kinetic entries in closed form") {
  const auto t = tra::kinetic_harmonic_matrix(BasisSpec(1.0, 4));
  CHECK(t(0, 0) == Approx(2.25));
  CHECK(t(0, 1) == Approx(-0.612372).epsilon(1e-6));
  CHECK(t(0, 2) == 0.0);
  const double lambda = std::pow(2.0, 0.25);
  const auto d = tra::kinetic_harmonic_matrix(BasisSpec(lambda, 6));
  for (int n = 0; n < 6; ++n) {
    CHECK(d(n, n) == Approx(2.0 * std::sqrt(2.0) * (0.75 + n)).epsilon(1e-13));
    if (n + 1 < 6) CHECK(std::abs(d(n, n + 1)) <= 1e-15);
  }
}

TEST_CASE("assembled entries") {
  const auto h = tra::assemble(BasisSpec(1.0, 5), PotentialSpec(1.0));
  CHECK(h.entries(0, 0).real() == Approx(3.75).epsilon(1e-14));
  CHECK(h.entries(0, 1).real() == Approx(-1.837117).epsilon(1e-6));
  CHECK(h.warnings.empty());

  const auto d = tra::assemble(BasisSpec(std::sqrt(2.0), 4), PotentialSpec(1.0));
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) {
      if (n == m) {
        CHECK(std::abs(d.entries(n, n) - double(4 * n + 3)) <= 1e-10);
      } else {
        CHECK(std::abs(d.entries(n, m)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("assembly agrees with the x-space oracle") {
  for (double N : {0.5, 1.0, 1.1, 2.0, 3.0}) {
    for (double lambda : {1.0, 2.9}) {
      const auto h = tra::assemble(BasisSpec(lambda, 6), PotentialSpec(N));
      const double scale = h.entries.cwiseAbs().maxCoeff();
      for (int n = 0; n < 6; ++n) {
        for (int m = n; m < 6; ++m) {
          const auto ref = oracle::hamiltonian_entry(n, m, lambda, N);
          CAPTURE(N);
          CAPTURE(lambda);
          CHECK(std::abs(h.entries(n, m) - ref) <= 1e-9 * scale);
        }
      }
    }
  }
}

TEST_CASE("basis is orthonormal on the half-line") {
  for (double lambda : {1.0, 2.9}) {
    for (int n = 0; n < 5; ++n) {
      for (int m = 0; m < 5; ++m) {
        CHECK(std::abs(oracle::overlap(n, m, lambda) - (n == m ? 1.0 : 0.0)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("exact symmetry and reality") {
  for (double N : {0.5, 1.0, 1.1, 2.5, 4.0}) {
    const auto h = tra::assemble(BasisSpec(1.3, 9), PotentialSpec(N));
    CHECK((h.entries - h.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
  for (int N = 1; N <= 4; ++N) {
    for (double lambda : {1.0, 2.9}) {
      for (int M : {1, 5, 16}) {
        const auto h = tra::assemble(BasisSpec(lambda, M), PotentialSpec(N));
        CHECK(h.entries.imag().cwiseAbs().maxCoeff() <= 1e-12 * h.entries.cwiseAbs().maxCoeff());
        CHECK(h.is_real());
      }
    }
  }
  CHECK_FALSE(tra::assemble(BasisSpec(1.0, 4), PotentialSpec(1.1)).is_real());
}

TEST_CASE("lambda scaling of the potential") {
  for (double N : {1.0, 1.1, 2.0, 3.0}) {
    const auto ref = tra::potential_matrix(BasisSpec(1.0, 8), PotentialSpec(N));
    for (double lambda : {0.5, 2.9}) {
      const auto v = tra::potential_matrix(BasisSpec(lambda, 8), PotentialSpec(N));
      const Eigen::MatrixXcd scaled = v.entries * std::pow(lambda, 2.0 * N);
      CHECK((scaled - ref.entries).cwiseAbs().maxCoeff() <= 1e-12 * ref.entries.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("expansion path with corrected coefficients matches direct quadrature") {
  for (int N = 1; N <= 4; ++N) {
    for (double lambda : {1.0, 2.9}) {
      const BasisSpec basis(lambda, 12);
      const PotentialSpec pot(N);
      const auto direct = tra::potential_matrix(basis, pot);
      const auto expanded = tra::potential_matrix_from_expansion(
          basis, pot, tra::monomial_expansion(N, 0.5, ExpansionMode::corrected));
      CHECK((direct.entries - expanded.entries).cwiseAbs().maxCoeff() <=
            1e-10 * direct.entries.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("paper-faithful mode shifts the N = 1 potential by half the identity") {
  // y - 1/2 in place of y: V_paper = V - 1/2 * (-phase) * I
  const auto c = tra::potential_matrix(BasisSpec(1.0, 6), PotentialSpec(1.0));
  const auto p = tra::potential_matrix(BasisSpec(1.0, 6), PotentialSpec(1.0, ExpansionMode::paper_faithful));
  const Eigen::MatrixXcd diff = c.entries - p.entries;
  CHECK((diff - 0.5 * Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(BasisSpec(0.0, 5), tra::ParameterError);
  CHECK_THROWS_AS(BasisSpec(1.0, 0), tra::ParameterError);
  CHECK_THROWS_AS(PotentialSpec(0.0), tra::ParameterError);
  CHECK_THROWS_AS(PotentialSpec(1.1, ExpansionMode::paper_faithful), tra::ModeError);
  tra::AssemblyOptions few;
  few.quad_nodes = 1;
  CHECK_THROWS_AS(tra::assemble(BasisSpec(1.0, 8), PotentialSpec(2.0), few), tra::ParameterError);
  CHECK_THROWS_AS(tra::parse_mode("exact"), tra::ParameterError);
  CHECK(tra::parse_mode("paper") == ExpansionMode::paper_faithful);
}

TEST_CASE("N below one carries a warning") {
  const auto h = tra::assemble(BasisSpec(2.5, 5), PotentialSpec(0.5));
  REQUIRE(h.warnings.size() == 1);
  CHECK(h.warnings[0].find("N < 1") != std::string::npos);
}

TEST_CASE("default node count and override give identical entries") {
  const BasisSpec basis(1.7, 7);
  const PotentialSpec pot(3.0);
  tra::AssemblyOptions more;
  more.quad_nodes = tra::default_quadrature_nodes(basis, 3.0) + 6;
  const auto a = tra::assemble(basis, pot);
  const auto b = tra::assemble(basis, pot, more);
  CHECK(a.quad_nodes == 7 + 3 + 2);
  CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() <= 1e-12 * a.entries.cwiseAbs().maxCoeff());
}
