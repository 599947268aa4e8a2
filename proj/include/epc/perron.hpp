#pragma once
// Truncated-Perron machinery: the kernel constants theta' and c, the split
// kernel bound, and the psi-specialized window/tail error pieces E1, E2 with
// their combined error. Heavy arguments are taken in log space (log x, log T)
// so x far beyond double range stays evaluable.

#include <utility>

#include "epc/common.hpp"

namespace epc::perron {

double theta_prime();         // 2 / (sqrt(pi^2 + 4) + pi)
double c_const();             // sqrt(pi^2 + 4) / (2 pi) + 1/2; c * pi * theta' = 1
double c0_of(double lambda);  // (e^lambda - 1)/lambda + 1; pre: lambda > 0

struct PerronParams {
  double kappa;        // vertical abscissa, 1 + 1/log x in the psi case
  double lambda;       // split point, >= theta'/T
  double theta_prime;  // kernel constant
  double c_const;      // kernel constant, c * pi * theta' = 1
  double c0;           // (e^lambda - 1)/lambda + 1
  double a1, a2;       // psi - theta bound constants

  static PerronParams for_psi(double log_x, double lambda);
};

// Kernel bound of the split integral: min(e^{y k'}/(pi |y|),
// |v(y) - (e^{y k'}/pi) arctan(1/k')| + |y| e^{y k'}/pi), v = step at 0.
// pre: kappa_p > 0.
double lemma22_bound(double y, double kappa_p);

// E1(x, T) = 2 log(x + (c0-1) lambda x) / log(c0 theta' x / T).
// pre: denominator log > 0 (i.e. c0 theta' x / T > 1); lambda >= theta'/T.
double brun_titchmarsh_factor_log(double log_x, double log_T, double lambda);

// E2(x) = a1 sqrt(x+) + a2 (x+)^(1/3) + log x with x+ = x (1 + (c0-1) lambda).
// pre: log_x >= 40. Overflows to +inf for log_x beyond ~1417 (documented);
// the normalized assembly path in the explicit module never exponentiates it.
double e2_tail_log(double log_x, double lambda);

// E2(x) * T / x evaluated stably in log space (the normalized tail factor).
double e2_tail_over_x_times_T(double log_x, double log_T, double lambda);

struct PerronError {
  double first;        // e x log x / (lambda pi T)
  double second;       // e^{kappa lambda}/pi (c0 x E1/T log(lambda T/theta') + E2/theta')
  double first_norm;   // first / (x log x / T)  = e/(lambda pi) exactly
  double second_norm;  // second / (x log x / T)
};

// pre: log_x >= 40; max(51, log x) < T; lambda >= theta'/T.
PerronError perron_error_total_log(double log_x, double log_T, double lambda);

}  // namespace epc::perron
