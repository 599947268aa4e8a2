#include "epc/zerofree.hpp"

#include <algorithm>
#include <cmath>

namespace epc::zerofree {

double log_plateau() {
  static const double v = std::log(kVerifiedHeight);
  return v;
}

double log_nu2_min() {
  static const double v = std::log(5.45e8);
  return v;
}

double log_nu3_min() {
  static const double v = std::log(3.0);
  return v;
}

double nu1_log(double log_t) {
  if (log_t <= 1.0) throw domain_error("nu1 requires t > e (log t > 1)");
  return 1.0 / (kR0 * log_t);
}

double r2_log(double log_t) {
  if (log_t < log_nu2_min())
    throw domain_error("r2 requires t >= 5.45e8");
  const double llt = std::log(log_t);
  const double J = log_t / 6.0 + llt + std::log(0.63);
  const double num = J + 0.685 + 0.155 * llt;
  const double den = log_t * (0.04962 - 0.0196 / (J + 1.15));
  return num / den;
}

double nu2_log(double log_t) { return 1.0 / (r2_log(log_t) * log_t); }

double nu3_log(double log_t) {
  if (log_t < log_nu3_min())
    throw domain_error("nu3 requires t >= 3");
  const double llt = std::log(log_t);
  return 1.0 / (kNu3Coeff * std::cbrt(log_t * log_t) * std::cbrt(llt));
}

NuBreakdown breakdown_log(double log_t) {
  NuBreakdown b;
  b.plateau = log_t <= log_plateau();
  if (b.plateau) {
    b.composite = 0.5;
    return b;
  }
  // Past the verified height every classical branch is live (the plateau
  // bound sits far above each branch's domain threshold).
  b.has1 = log_t > 1.0;
  b.has2 = log_t >= log_nu2_min();
  b.has3 = log_t >= log_nu3_min();
  double best = 0.0;
  if (b.has1) best = std::max(best, b.nu1 = nu1_log(log_t));
  if (b.has2) best = std::max(best, b.nu2 = nu2_log(log_t));
  if (b.has3) best = std::max(best, b.nu3 = nu3_log(log_t));
  if (best == 0.0)
    throw domain_error("no zero-free-region branch applies at this height");
  b.composite = best;
  return b;
}

double nu_log(double log_t) { return breakdown_log(log_t).composite; }

double nu(double t) {
  if (!(t > 0)) throw domain_error("nu requires t > 0");
  return nu_log(std::log(t));
}

}  // namespace epc::zerofree
