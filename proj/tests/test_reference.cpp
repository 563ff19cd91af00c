#include <doctest.h>

#include <algorithm>
#include <complex>

#include "oracle.hpp"
#include "tra/io.hpp"
#include "tra/reference.hpp"
#include "tra/wavefunction.hpp"

using doctest::Approx;
using cd = std::complex<double>;

namespace {

// Spectra of the lambda = 2.9, N = 2, M = 5 (corrected) and lambda = 2.5,
// N = 0.5, M = 5 assemblies. Frozen after agreeing with the x-space oracle
// below.
const double kTableGolden[] = {1.7340307233741219, 7.0850176882577545, 17.014478642035709,
                               32.451263231060061, 56.540090685495002};
const cd kHalfGolden[] = {{2.2986183353040293, -0.8530042417384075},
                          {6.6143744764900072, -0.9574902405950303},
                          {13.836090677858182, -0.89320456962893369},
                          {25.024594560177171, -0.79580399936575086},
                          {42.563821950170635, -0.57324050490724165}};

Eigen::MatrixXcd oracle_matrix(double lambda, double N, int M) {
  Eigen::MatrixXcd h(M, M);
  for (int n = 0; n < M; ++n) {
    for (int m = n; m < M; ++m) h(n, m) = h(m, n) = oracle::hamiltonian_entry(n, m, lambda, N);
  }
  return h;
}

}  // namespace

TEST_CASE("frozen spectra agree with the oracle") {
  const auto table = oracle::eigen_reference(oracle_matrix(2.9, 2.0, 5));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(table(k) - kTableGolden[k]) <= 1e-7 * std::abs(table(k)));
  const auto half = oracle::eigen_reference(oracle_matrix(2.5, 0.5, 5));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(half(k) - kHalfGolden[k]) <= 1e-7 * std::abs(half(k)));
}

TEST_CASE("library spectra match the frozen values") {
  const auto t = tra::solve_spectrum(tra::assemble(tra::BasisSpec(2.9, 5), tra::PotentialSpec(2.0)));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(t.values(k) - kTableGolden[k]) <= 1e-10 * kTableGolden[k]);
  const auto h = tra::solve_spectrum(tra::assemble(tra::BasisSpec(2.5, 5), tra::PotentialSpec(0.5)));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(h.values(k) - kHalfGolden[k]) <= 1e-10 * std::abs(kHalfGolden[k]));
  CHECK(tra::classify(h, h.tol_real).n_complex == 5);
}

TEST_CASE("reference dataset transcription") {
  const auto& ref = tra::reference_dataset();
  CHECK(ref.digest() == 0x5ed1eb34351b7672ULL);
  CHECK(ref.matrix_eq22(0, 0) == 3.096);
  CHECK(ref.matrix_eq22(0, 1) == -1.879);
  CHECK(ref.matrix_eq23(0, 0) == cd(3.08, 0.27));
  CHECK(ref.table1_lambda == 2.9);
  CHECK(ref.table1_N == 2);
  CHECK(ref.table1_label == "N = 4");
  REQUIRE(ref.table1.size() == 4);
  const double ours[] = {1.4868, 6.6219, 16.6386, 32.1948};
  const double theirs[] = {1.4771, 6.0333, 11.8023, 18.4590};
  for (int k = 0; k < 4; ++k) {
    CHECK(ref.table1[k].n == k);
    CHECK(ref.table1[k].our_case == ours[k]);
    CHECK(ref.table1[k].reference1 == theirs[k]);
  }
}

TEST_CASE("printed asymmetries are kept") {
  const auto& ref = tra::reference_dataset();
  const auto a = tra::printed_asymmetries(ref.matrix_eq22.cast<cd>());
  REQUIRE(a.size() == 1);
  CHECK(a[0] == std::pair{3, 1});
  CHECK(ref.matrix_eq22(3, 1) == 0.676);
  CHECK(ref.matrix_eq22(1, 3) == 0.677);
  CHECK(tra::printed_asymmetries(ref.matrix_eq23).size() == 2);
}

TEST_CASE("matrix deltas") {
  const auto& ref = tra::reference_dataset();
  const auto self = tra::compare_values("self", ref.matrix_eq23, ref.matrix_eq23);
  CHECK(self.max_abs_delta == 0.0);
  CHECK(self.frobenius_delta == 0.0);

  const auto c = tra::compare_matrix(tra::assemble(tra::BasisSpec(1.0, 5), tra::PotentialSpec(1.0)),
                                     ref.matrix_eq22.cast<cd>(), "corrected");
  CHECK(c.abs_delta(0, 0) == Approx(0.654).epsilon(1e-12));
  const auto p = tra::compare_matrix(
      tra::assemble(tra::BasisSpec(1.0, 5), tra::PotentialSpec(1.0, tra::ExpansionMode::paper_faithful)),
      ref.matrix_eq22.cast<cd>(), "paper");
  CHECK(p.abs_delta(0, 0) == Approx(0.154).epsilon(1e-12));
  CHECK(c.abs_delta.minCoeff() >= 0.0);
  CHECK(c.rel_delta.minCoeff() >= 0.0);
}

TEST_CASE("eigenvalue table comparison") {
  const auto t = tra::compare_table1(tra::ExpansionMode::corrected);
  REQUIRE(t.lowest.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(t.lowest(k).real() == Approx(kTableGolden[k]).epsilon(1e-12));
  CHECK(t.vs_our_case.abs_delta(0, 0) == Approx(kTableGolden[0] - 1.4868).epsilon(1e-10));
  CHECK(t.vs_reference1.abs_delta(0, 0) == Approx(kTableGolden[0] - 1.4771).epsilon(1e-10));
}

TEST_CASE("compare_all is byte-stable") {
  const auto a = tra::io::dump(tra::io::bundle_to_json(tra::compare_all()));
  const auto b = tra::io::dump(tra::io::bundle_to_json(tra::compare_all()));
  CHECK(a == b);
  const auto bundle = tra::compare_all();
  CHECK(bundle.matrices.size() == 3);
  CHECK(bundle.tables.size() == 2);
  CHECK(bundle.dataset_digest == tra::reference_dataset().digest());
}

TEST_CASE("sweep rows") {
  const std::vector<double> ns = {3.0, 0.5, 1.0, 2.0, 1.1};
  const auto rows = tra::sweep_reality(ns, tra::BasisSpec(1.0, 6), tra::ExpansionMode::corrected);
  REQUIRE(rows.size() == ns.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].N == ns[i]);
    CHECK(rows[i].ok);
    CHECK(rows[i].n_real + rows[i].n_complex == 6);
    if (ns[i] == std::round(ns[i])) CHECK(rows[i].n_complex == 0);
  }

  const auto paper = tra::sweep_reality(ns, tra::BasisSpec(1.0, 6), tra::ExpansionMode::paper_faithful);
  CHECK_FALSE(paper[1].ok);
  CHECK(paper[1].note.rfind("skipped", 0) == 0);
  CHECK(paper[0].ok);

  const auto converge = tra::sweep_reality({1.0}, tra::BasisSpec(1.0, 32), tra::ExpansionMode::corrected);
  CHECK(std::abs(converge[0].ground_re - 3.0) <= 1e-6);

  const auto again = tra::sweep_reality(ns, tra::BasisSpec(1.0, 6), tra::ExpansionMode::corrected);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].ground_re == rows[i].ground_re);
}
