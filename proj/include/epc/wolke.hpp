#pragma once
// Truncated-explicit-formula error machinery: pointwise evaluation of every
// displayed error term at (x, T), and the K constant as the summed per-term
// supremum over the region { x >= x_K, max(51, log x) < T < (x^alpha - 2)/2 }.

#include <string>
#include <vector>

#include "epc/common.hpp"
#include "epc/zerofree.hpp"

namespace epc::wolke {

inline constexpr double kDefaultInvSq = 0.04621;  // sum of 1/gamma^2 over all zeros
inline constexpr double kNu23Crossover = 54599.0;  // log t where nu3 >= nu2

struct WolkeParams {
  double log_xK = 0.0;    // ln of the lower x bound
  double alpha = 0.5;     // in (0, 1]
  double omega_bar = 0.0;  // >= 0
  double D = 0.0;         // in (0, 1), required iff omega_bar > 0
  bool rh = false;        // width 1/2 at every height

  double omega() const { return omega_bar < 1.0 ? omega_bar : 1.0; }
  ZeroFreeRegion region() const { return ZeroFreeRegion{rh}; }
  void validate() const;  // throws domain_error
};

// Majorant of |zeta'/zeta| on the shifted horizontal segments:
// (log x)^{omega_bar} (log^2 T + log T) + 20 log T.
// pre: T > 51, log_x > 1.
double logderiv_window_bound(double log_x, double T, double omega_bar);

struct TermValue {
  std::string name;
  double raw;      // value of the displayed term at (x, T); may overflow to inf
  double norm;     // raw / (x (log x)^{1 - omega} / T)
  bool doubled;    // counted twice in the total
};

struct BoundBreakdown {
  std::vector<TermValue> terms;
  double total_raw = 0.0;   // doubled terms counted twice
  double total_norm = 0.0;
};

// Every displayed term of the active branch evaluated at (x, T).
// Branch omega_bar = 0 carries no interval-doubling, so its T-domain is
// max(51, log x) < T <= x^alpha - 1; the omega_bar > 0 branch requires the
// doubling constraint T < x^alpha / 2 - 1. pre additionally: log_x >= log_xK,
// 0 < inv_sq <= 0.04621.
BoundBreakdown bigerror_terms(double log_x, double T, const WolkeParams& p,
                              double inv_sq = kDefaultInvSq);

// K = sum over terms of sup over the admissible region of the normalized
// term, each factor majorized at its worst admissible value (log T <= alpha
// log x, nu(T+1) >= nu(x^alpha), T/(T-1) <= T0/(T0-1) at T0 = max(51, log_xK)).
// Supremum over x: candidate points {x_K, exp(log_plateau/alpha),
// exp(46.3/alpha), exp(54599/alpha)} plus a geometric safety grid
// (~128 points/decade); if the grid max exceeds the candidate max by more
// than 0.1% the grid max is taken and *warning is set.
double K_constant(const WolkeParams& p, double inv_sq = kDefaultInvSq,
                  std::string* warning = nullptr);

struct OptimizeKResult {
  WolkeParams params;
  double K;
};

// Grid minimizer of K_constant subject to min(omega_bar, 1) = omega_target;
// ties (1e-12 relative) break toward smaller D, then smaller omega_bar.
OptimizeKResult optimize_K(double log_xK, double alpha, double omega_target,
                           const std::vector<double>& D_grid,
                           const std::vector<double>& omega_bar_grid);

// K with the width 1/2 at every height (critical-line variant).
double K_constant_rh(WolkeParams p);

// Appendix configurations: the 8 unconditional rows, in print order.
struct TableThreeRow {
  double log_xK, alpha, omega_bar, D;  // D ignored when omega_bar = 0
  double K_printed;
};
const std::vector<TableThreeRow>& table3_rows();

namespace detail {
// Per-term normalized majorant at a single grid abscissa L = log x.
// crossover_da swaps the d_alpha denominator from nu (x^alpha) log x to
// nu(x^alpha) alpha log x (the treatment applied beyond the nu2/nu3
// crossover). Term indices: names via k_term_name.
int k_term_count(const WolkeParams& p);
std::string k_term_name(const WolkeParams& p, int idx);
double k_term(const WolkeParams& p, int idx, double L, double inv_sq,
              bool crossover_da);
std::vector<double> k_grid(double log_xK, double alpha);
std::vector<double> k_candidates(double log_xK, double alpha);
}  // namespace detail

}  // namespace epc::wolke
