#pragma once
// Zero-free region width nu(t): ZETA(sigma + it) != 0 for sigma > 1 - nu(t).
// Three analytic branches plus the verified-height plateau nu = 1/2 for
// t <= 3e12; the composite takes the best (largest) applicable width.
// All evaluation is in log t so heights far beyond double range stay exact.

#include "epc/common.hpp"

namespace epc::zerofree {

inline constexpr double kR0 = 5.5666305;       // classical branch constant
inline constexpr double kNu3Coeff = 57.54;     // smooth-branch constant
inline constexpr double kVerifiedHeight = 3e12;

// Branch domains (lower bounds on t, stored as log t).
double log_plateau();   // log 3e12
double log_nu2_min();   // log 5.45e8
double log_nu3_min();   // log 3

// nu1(t) = 1/(R0 log t), for t > e.
double nu1_log(double log_t);

// The decay factor R(t) of nu2: with J = (log t)/6 + log log t + log 0.63,
// R = (J + 0.685 + 0.155 log log t) / (log t (0.04962 - 0.0196/(J + 1.15))).
double r2_log(double log_t);

// nu2(t) = 1/(R(t) log t), for t >= 5.45e8.
double nu2_log(double log_t);

// nu3(t) = 1/(57.54 (log t)^{2/3} (log log t)^{1/3}), for t >= 3.
double nu3_log(double log_t);

// Composite width: 1/2 for t <= 3e12, else the max of the defined branches.
double nu_log(double log_t);
double nu(double t);  // convenience wrapper, pre: t > 0

struct NuBreakdown {
  bool has1 = false, has2 = false, has3 = false;
  double nu1 = 0, nu2 = 0, nu3 = 0;
  double composite = 0;
  bool plateau = false;
};
NuBreakdown breakdown_log(double log_t);

}  // namespace epc::zerofree

namespace epc {

// Width provider used by the K/M machinery; rh swaps in the critical-line
// width 1/2 at every height.
struct ZeroFreeRegion {
  bool rh = false;
  double nu_log(double log_t) const { return rh ? 0.5 : zerofree::nu_log(log_t); }
};

}  // namespace epc
