#include "tra/selftest.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "tra/eigensolver.hpp"
#include "tra/hamiltonian.hpp"
#include "tra/io.hpp"
#include "tra/laguerre.hpp"
#include "tra/reference.hpp"
#include "tra/wavefunction.hpp"

namespace tra::selftest {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Body>
SuiteResult timed(const std::string& name, Body&& body) {
  SuiteResult result;
  result.name = name;
  const auto start = Clock::now();
  Checker checker(result);
  try {
    body(checker);
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::string tag(const std::string& what, double a, double b = NAN) {
  std::string s = what + " (" + io::format_double(a);
  if (!std::isnan(b)) s += ", " + io::format_double(b);
  return s + ")";
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  }
  return a;
}

TridiagonalSymmetric<double> laguerre_jacobi(double alpha, int K) {
  TridiagonalSymmetric<double> t;
  t.diag.resize(K);
  t.offdiag.resize(K - 1);
  for (int j = 0; j < K; ++j) {
    t.diag(j) = 2.0 * j + alpha + 1.0;
    if (j + 1 < K) t.offdiag(j) = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
  }
  return t;
}

}  // namespace

SuiteResult laguerre_suite() {
  return timed("laguerre_basis", [](Checker& c) {
    for (double nu : {0.5, 0.0, 2.0}) {
      const auto rule = gauss_laguerre_rule(nu, 12);
      for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= 10; ++m) {
          const double got = integrate(rule, [&](double y) {
            return laguerre_eval(n, nu, y) * laguerre_eval(m, nu, y);
          });
          const double norm = laguerre_norm(n, nu);
          const double want = n == m ? norm : 0.0;
          c.check(std::abs(got - want) <= 1e-9 * norm, tag("orthogonality n,m", n, m));
        }
      }
    }
    for (int n = 0; n <= 10; ++n) {
      for (double y : {0.1, 1.0, 10.0}) {
        const double nu = 0.5;
        const double lower = n > 0 ? laguerre_eval(n - 1, nu, y) : 0.0;
        const double cur = laguerre_eval(n, nu, y);
        const double upper = laguerre_eval(n + 1, nu, y);
        const double lhs = y * cur;
        const double rhs = (2 * n + nu + 1) * cur - (n + nu) * lower - (n + 1) * upper;
        c.check(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(lhs)), tag("recurrence n,y", n, y));
      }
    }
    for (int n = 0; n <= 8; ++n) {
      for (double y : {0.5, 2.0, 8.0}) {
        c.check(std::abs(laguerre_ode_residual(n, 0.5, y)) <= 1e-9, tag("ode residual n,y", n, y));
        if (n >= 1) {
          const auto sides = laguerre_derivative_identity(n, 0.5, y);
          c.check(std::abs(sides.lhs - sides.rhs) <= 1e-10 * (1 + std::abs(sides.lhs)),
                  tag("derivative identity n,y", n, y));
        }
      }
    }
    for (double alpha : {0.5, 1.5, 2.6}) {
      for (int K = 1; K <= 20; ++K) {
        const auto rule = gauss_laguerre_rule(alpha, K);
        for (int j = 0; j <= 2 * K - 1; ++j) {
          const double got = integrate(rule, [&](double y) { return std::pow(y, j); });
          const double want = std::tgamma(alpha + j + 1.0);
          c.check(std::abs(got - want) <= 1e-10 * want, tag("quadrature moment K,j", K, j));
        }
      }
    }
    const double probes[] = {0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 7.5, 10.0};
    for (int N = 1; N <= 6; ++N) {
      const auto e = monomial_expansion(N, 0.5, ExpansionMode::corrected);
      for (double y : probes) {
        const double want = std::pow(y, N);
        c.check(std::abs(e.evaluate(y) - want) <= 1e-10 * want, tag("expansion round trip N,y", N, y));
      }
      const auto projected = monomial_projection(N, 0.5);
      for (int k = 0; k <= N; ++k) {
        c.check(std::abs(projected[k] - e.coeffs[k]) <= 1e-10 * std::abs(e.coeffs[k]),
                tag("expansion vs projection N,k", N, k));
      }
    }
    const auto printed = monomial_expansion(1, 0.5, ExpansionMode::paper_faithful);
    for (double y : probes) {
      c.check(printed.evaluate(y) - y == -0.5, tag("printed expansion offset at y", y));
    }
  });
}

SuiteResult eigensolver_suite() {
  return timed("eigensolver", [](Checker& c) {
    std::mt19937_64 rng(20240611);
    for (int m : {4, 8, 12}) {
      for (int trial = 0; trial < 7; ++trial) {
        const Eigen::MatrixXd a = random_symmetric(rng, m);
        const double scale = a.norm();
        const auto sym = symmetric_eigen<double>(a, true);
        const auto gen = complex_eigen<double>(a.cast<std::complex<double>>(), true);
        double worst = 0;
        for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(sym.values(i) - gen.values(i)));
        c.check(worst <= 1e-9 * scale, tag("symmetric vs complex path, M", m, worst));
        const Eigen::MatrixXd v = sym.vectors.real();
        const double ortho = (v.transpose() * v - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
        c.check(ortho <= 1e-9, tag("eigenvector orthogonality, M", m, ortho));
        c.check(sym.residual <= 1e-8 && gen.residual <= 1e-8, tag("residuals, M", m));
        const double trace = a.trace();
        c.check(std::abs(sym.values.sum().real() - trace) <= 1e-8 * (1 + std::abs(trace)),
                tag("trace identity symmetric, M", m));
        c.check(std::abs(gen.values.sum() - std::complex<double>(trace)) <= 1e-8 * (1 + std::abs(trace)),
                tag("trace identity complex, M", m));
        const auto again = complex_eigen<double>(a.cast<std::complex<double>>(), true);
        c.check(again.values == gen.values, tag("determinism, M", m));
      }
    }
    for (double N : {0.5, 1.1, 1.5, 2.3}) {
      for (double lambda : {1.0, 2.5}) {
        const auto h = assemble(BasisSpec(lambda, 10), PotentialSpec(N));
        const auto s = complex_eigen<double>(h.entries, true);
        const auto trace = h.entries.trace();
        c.check(std::abs(s.values.sum() - trace) <= 1e-8 * (1 + std::abs(trace)),
                tag("trace identity assembly N,lambda", N, lambda));
        c.check(s.residual <= 1e-8, tag("complex residual N,lambda", N, lambda));
        const auto summary = classify(s, 1e-8);
        c.check(summary.n_real + summary.n_complex == 10, tag("every eigenvalue tagged N", N));
      }
    }
    const auto t = laguerre_jacobi(0.5, 3);
    const auto roots = tridiag_eigen<double>(t, false);
    for (int i = 0; i < 3; ++i) {
      c.check(std::abs(laguerre_eval(3, 0.5, roots.values(i).real())) <= 1e-10,
              tag("Jacobi eigenvalue is a Laguerre root", i));
    }
  });
}

SuiteResult hamiltonian_suite() {
  return timed("hamiltonian_assembly", [](Checker& c) {
    for (double N : {1.0, 2.0, 3.0, 4.0}) {
      for (double lambda : {1.0, 2.9}) {
        for (int m : {1, 5, 10, 16}) {
          const auto h = assemble(BasisSpec(lambda, m), PotentialSpec(N));
          c.check((h.entries - h.entries.transpose()).isZero(0.0), tag("exact symmetry N,M", N, m));
          c.check(h.is_real(1e-12), tag("integer N gives a real matrix N,lambda", N, lambda));
        }
      }
    }
    for (double N : {0.5, 1.1, 2.7}) {
      const auto h = assemble(BasisSpec(1.3, 9), PotentialSpec(N));
      c.check((h.entries - h.entries.transpose()).isZero(0.0), tag("exact symmetry N", N));
    }
    for (int N = 1; N <= 4; ++N) {
      for (double lambda : {1.0, 2.9}) {
        const BasisSpec basis(lambda, 12);
        const PotentialSpec pot(N);
        const auto direct = potential_matrix(basis, pot);
        const auto expanded = potential_matrix_from_expansion(
            basis, pot, monomial_expansion(N, BasisSpec::nu, ExpansionMode::corrected));
        const double scale = direct.entries.cwiseAbs().maxCoeff();
        const double diff = (direct.entries - expanded.entries).cwiseAbs().maxCoeff();
        c.check(diff <= 1e-10 * scale, tag("expansion path vs direct quadrature N,lambda", N, lambda));
      }
    }
    for (double N : {1.0, 2.0, 1.1}) {
      const auto ref = potential_matrix(BasisSpec(1.0, 8), PotentialSpec(N)).entries;
      for (double lambda : {0.5, 2.9}) {
        const Eigen::MatrixXcd scaled =
            potential_matrix(BasisSpec(lambda, 8), PotentialSpec(N)).entries *
            std::pow(lambda, 2.0 * N);
        const double rel = (scaled - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff();
        c.check(rel <= 1e-12, tag("lambda scaling N,lambda", N, lambda));
      }
    }
    for (int m : {1, 4, 16}) {
      const auto h = assemble(BasisSpec(std::sqrt(2.0), m), PotentialSpec(1.0));
      const double scale = h.entries.cwiseAbs().maxCoeff();
      for (int i = 0; i < m; ++i) {
        c.check(std::abs(h.entries(i, i) - double(4 * i + 3)) <= 1e-8, tag("harmonic diagonal M,n", m, i));
        for (int j = 0; j < m; ++j) {
          if (i != j) c.check(std::abs(h.entries(i, j)) <= 1e-8 * scale, tag("harmonic off-diagonal", i, j));
        }
      }
    }
  });
}

SuiteResult wavefunction_suite() {
  return timed("tra_wavefunction", [](Checker& c) {
    std::vector<TridiagonalSymmetric<double>> forms;
    for (double N : {1.0, 2.0}) {
      for (double lambda : {1.0, 2.9}) {
        for (int m : {2, 4, 8, 10}) {
          forms.push_back(householder_tridiagonalize<double>(
              assemble(BasisSpec(lambda, m), PotentialSpec(N)).entries.real()));
        }
      }
    }
    for (int K : {2, 6, 12}) forms.push_back(laguerre_jacobi(0.5, K));

    for (const auto& t : forms) {
      const auto m = t.size();
      const auto s = tridiag_eigen<double>(t, true);
      const double scale = t.dense().norm();
      for (Eigen::Index k = 0; k < m; ++k) {
        const Eigen::VectorXd v = s.vectors.col(k).real();
        const double e = s.values(k).real();
        const auto p = recursion_eval(t, e);
        const Eigen::VectorXd ratio = v / v(0);
        const double dev = (p.values - ratio).cwiseAbs().maxCoeff();
        c.check(dev <= 1e-8 * ratio.cwiseAbs().maxCoeff(), tag("recursion vs eigenvector M,k", m, k));
        c.check(std::abs(p.continuation) / p.values.norm() <= 1e-7 * std::max(1.0, scale),
                tag("characteristic root at eigenvalue M,k", m, k));
        if (k + 1 < m) {
          const double next = s.values(k + 1).real();
          const auto mid = recursion_eval(t, 0.5 * (e + next));
          c.check(std::abs(mid.continuation) / mid.values.norm() >= 1e-3 * 0.5 * (next - e),
                  tag("characteristic value away from eigenvalues M,k", m, k));
        }
      }
      const auto report = discrete_orthogonality(t);
      c.check(report.max_offdiag <= 1e-8 && report.max_diag_dev <= 1e-8,
              tag("discrete orthogonality M", m));
    }

    struct Case {
      double N, lambda;
      int m;
    };
    for (const Case& cs : {Case{2.0, 3.0, 10}, Case{1.0, 1.0, 8}, Case{1.1, 1.0, 5}, Case{0.5, 2.5, 5}}) {
      const auto h = assemble(BasisSpec(cs.lambda, cs.m), PotentialSpec(cs.N));
      const auto s = solve_spectrum(h, true);
      for (int k = 0; k < cs.m; ++k) {
        const Eigen::VectorXcd f = expansion_coefficients(s, k);
        const double res = (h.entries * f - s.values(k) * f).norm() / f.norm();
        c.check(res <= 1e-8 * std::max(1.0, h.entries.norm()), tag("coefficient residual N,k", cs.N, k));
      }
      const auto samples = reconstruct(expansion_coefficients(s, 0), h.basis, default_grid(cs.lambda));
      c.check(std::abs(half_line_norm(samples) - 1.0) <= 0.02, tag("half-line norm N", cs.N));
      c.check(samples.psi[samples.x.size() / 2] == std::complex<double>(0.0),
              tag("psi(0) = 0 for N", cs.N));
    }
  });
}

SuiteResult reference_suite() {
  return timed("reference_comparison", [](Checker& c) {
    const auto& data = reference_dataset();
    c.check(data.digest() == 0x5ed1eb34351b7672ULL, "reference dataset digest");
    const auto first = io::dump(io::bundle_to_json(compare_all()));
    const auto second = io::dump(io::bundle_to_json(compare_all()));
    c.check(first == second, "comparison report is byte-identical across runs");
    const auto rows = sweep_reality({0.5, 1.0, 1.5, 2.0, 3.0}, BasisSpec(1.0, 8), ExpansionMode::corrected);
    c.check(rows.size() == 5, "sweep keeps one row per N");
    for (const auto& r : rows) {
      c.check(r.ok && r.n_real + r.n_complex == 8, tag("sweep bookkeeping N", r.N));
      if (std::abs(r.N - std::round(r.N)) < 1e-9) c.check(r.n_complex == 0, tag("integer N all real", r.N));
    }
  });
}

std::vector<SuiteResult> run_all() {
  return {laguerre_suite(), eigensolver_suite(), hamiltonian_suite(), wavefunction_suite(),
          reference_suite()};
}

}  // namespace tra::selftest
