#pragma once
// Assembly of the explicit-formula constant M from the K constant and the
// Perron error pieces, the lambda optimizer, the critical-line variant, and
// the desk-scale empirical residual check against the sieve.

#include <vector>

#include "epc/arith.hpp"
#include "epc/common.hpp"
#include "epc/zeros.hpp"

namespace epc::explicit_formula {

struct TRange {
  double lo = 0.0, hi = 0.0;
  bool empty = true;
};

// The admissible T interval max(51, log x) < T < (x^alpha - 2)/2, from log x.
// hi saturates to +inf when x^alpha overflows double range.
TRange t_range_log(double log_x, double alpha);
TRange t_range(double x, double alpha);  // pre: x > 1

// M = sup over x >= x_M of
//   K (log x)^{-omega} + e/(lambda pi)
//   + e^{kappa lambda} c0 E1(x, T) log(lambda T / theta') / (pi log x)
//   + e^{kappa lambda} E2(x) T / (pi theta' x log x)
// with every T-dependent factor majorized at T = x^alpha and kappa = 1 + 1/log x.
// pre: 0 < alpha <= 1/2; lambda >= 2 theta' / (x_M^alpha - 2); K >= 0.
double M_constant(double log_xM, double alpha, double lambda, double K,
                  double omega);

struct OptimizeLambdaResult {
  double lambda;
  double M;
};

// Grid minimizer of M_constant; ties (1e-12 relative) toward smaller lambda.
OptimizeLambdaResult optimize_lambda(double log_xM, double alpha, double K,
                                     double omega,
                                     const std::vector<double>& lambda_grid);

// Default grid: 0.01 steps on [2 theta'/(x_M^alpha - 2), 3].
std::vector<double> default_lambda_grid(double log_xM, double alpha);

// Critical-line M: lambda = 0.52 and the critical-line K (omega = 1).
// pre: log_xM >= 1000.
double M_constant_rh(double log_xM);

// Appendix configurations: lambda per row, the matching K-table printed value
// and its omega, in print order.
struct TableFourRow {
  double log_xM, alpha, lambda;
  double K_printed, omega;
  double M_printed;
};
const std::vector<TableFourRow>& table4_rows();

struct ResidualReport {
  double residual;     // |psi(x) - x + zerosum + log 2pi + (1/2) log(1 - x^-2)|
  double rvm_bound;    // M x log x / T from the best applicable M row
  bool rvm_applicable; // false at desk scale (every row needs x >= e^40)
  double dudek_shape;  // 2 x log^2 x / T, reported for scale
};

// pre: x <= sieve limit; T <= dataset height; x should be half an odd integer.
ResidualReport empirical_residual(const zeros::ZeroDataset& ds,
                                  const arith::SieveTable& sieve, double x,
                                  double T, int threads = 1);

}  // namespace epc::explicit_formula
