#pragma once

#include <functional>
#include <vector>

#include "tra/quadrature.hpp"

namespace tra {

enum class ExpansionMode { corrected, paper_faithful };

/// Value of L_n^nu(y) with its first two derivatives in y.
struct LaguerreJet {
  double value = 0;
  double d1 = 0;
  double d2 = 0;
};

/// L_n^nu(y) by upward three-term recurrence from L_0 = 1, L_1 = nu + 1 - y.
double laguerre_eval(int n, double nu, double y);

/// Recurrence for the value together with the recurrence differentiated
/// once and twice (no closed-form derivative identities involved).
LaguerreJet laguerre_jet(int n, double nu, double y);

/// All of L_0^nu(y) .. L_{n_max}^nu(y).
std::vector<double> laguerre_sequence(int n_max, double nu, double y);

/// Gamma(n + nu + 1) / Gamma(n + 1), the squared norm under y^nu e^{-y}.
double laguerre_norm(int n, double nu);

struct IdentitySides {
  double lhs = 0;
  double rhs = 0;
};

/// Both sides of y dL_n/dy = n L_n - (n + nu) L_{n-1}.
IdentitySides laguerre_derivative_identity(int n, double nu, double y);

/// [y d^2/dy^2 + (nu + 1 - y) d/dy + n] L_n^nu(y); zero up to rounding.
double laguerre_ode_residual(int n, double nu, double y);

struct ExpansionCoefficients {
  int N = 0;
  double nu = 0;
  ExpansionMode mode = ExpansionMode::corrected;
  std::vector<double> coeffs;  // c_0..c_N

  /// Sum_k c_k L_k^nu(y).
  double evaluate(double y) const;
};

/// Coefficients of y^N in the L_k^nu basis.
///
/// `corrected`: y^N = N! sum_k (-1)^k Gamma(N+nu+1) /
///              (Gamma(N-k+1) Gamma(nu+k+1)) L_k^nu(y), an exact identity.
/// `paper_faithful`: c_k = N! (-1)^k / (N-k)!, which is what the printed
///              derivation uses. It does not reproduce y^N (at N = 1 it
///              gives y - 1/2) and is kept only to replay that pipeline.
///
/// N is taken as a real so non-integers can be rejected with ModeError.
ExpansionCoefficients monomial_expansion(double N, double nu, ExpansionMode mode);

/// c_k = [int y^{nu+N} e^{-y} L_k^nu dy] / laguerre_norm(k, nu), by
/// quadrature. Used to cross-check the closed form above.
std::vector<double> monomial_projection(int N, double nu);

/// int_0^inf y^nu e^{-y} L_k^nu L_n^nu L_m^nu dy, exact via Gauss-Laguerre.
double triple_product(int k, int n, int m, double nu);

/// Same integral on a caller-supplied rule (must have alpha == nu and
/// enough nodes for degree k + n + m).
double triple_product(const QuadratureRule& rule, int k, int n, int m);

}  // namespace tra
