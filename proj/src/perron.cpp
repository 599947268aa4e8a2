#include "epc/perron.hpp"

#include <algorithm>
#include <cmath>

#include "epc/arith.hpp"

namespace epc::perron {

double theta_prime() {
  static const double v = 2.0 / (std::sqrt(kPi * kPi + 4.0) + kPi);
  return v;
}

double c_const() {
  static const double v = std::sqrt(kPi * kPi + 4.0) / (2.0 * kPi) + 0.5;
  return v;
}

double c0_of(double lambda) {
  if (!(lambda > 0)) throw domain_error("c0 requires lambda > 0");
  return std::expm1(lambda) / lambda + 1.0;
}

PerronParams PerronParams::for_psi(double log_x, double lambda) {
  if (!(log_x > 0)) throw domain_error("for_psi requires log x > 0");
  PerronParams p;
  p.kappa = 1.0 + 1.0 / log_x;
  p.lambda = lambda;
  p.theta_prime = perron::theta_prime();
  p.c_const = perron::c_const();
  p.c0 = c0_of(lambda);
  p.a1 = arith::kA1;
  p.a2 = arith::kA2;
  return p;
}

double lemma22_bound(double y, double kappa_p) {
  if (!(kappa_p > 0)) throw domain_error("lemma22 requires kappa' > 0");
  const double e_yk = std::exp(y * kappa_p);
  const double first =
      y == 0.0 ? kInf : e_yk / (kPi * std::fabs(y));
  const double v = y >= 0.0 ? 1.0 : 0.0;
  const double second = std::fabs(v - (e_yk / kPi) * std::atan(1.0 / kappa_p)) +
                        std::fabs(y) * e_yk / kPi;
  return std::min(first, second);
}

double brun_titchmarsh_factor_log(double log_x, double log_T, double lambda) {
  const double tp = theta_prime();
  if (!(lambda > 0)) throw domain_error("E1 requires lambda > 0");
  // lambda >= theta'/T, in logs: log lambda >= log theta' - log T.
  if (std::log(lambda) < std::log(tp) - log_T - 1e-12)
    throw domain_error("E1 requires lambda >= theta'/T");
  const double c0 = c0_of(lambda);
  // log(x + (c0-1) lambda x) = log x + log1p((c0-1) lambda)
  const double num = 2.0 * (log_x + std::log1p((c0 - 1.0) * lambda));
  const double den = std::log(c0 * tp) + log_x - log_T;
  if (!(den > 0))
    throw domain_error("E1 requires c0 theta' x / T > 1");
  return num / den;
}

double e2_tail_log(double log_x, double lambda) {
  if (!(log_x >= 40.0)) throw domain_error("E2 requires log x >= 40");
  const double c0 = c0_of(lambda);
  const double lplus = log_x + std::log1p((c0 - 1.0) * lambda);
  // a1 sqrt(x+) + a2 (x+)^(1/3) + log x; the last addend is log x, not
  // log x+ (the tail statement's trailing term tracks x itself).
  return arith::kA1 * std::exp(0.5 * lplus) +
         arith::kA2 * std::exp(lplus / 3.0) + log_x;
}

double e2_tail_over_x_times_T(double log_x, double log_T, double lambda) {
  if (!(log_x >= 40.0)) throw domain_error("E2 requires log x >= 40");
  const double c0 = c0_of(lambda);
  const double lp1 = std::log1p((c0 - 1.0) * lambda);
  // Each addend of E2 * T / x, exponentiated separately so the total never
  // overflows: a1 (x+)^{1/2} T/x + a2 (x+)^{1/3} T/x + T log x / x.
  const double t1 =
      arith::kA1 * std::exp(0.5 * lp1 + log_T - 0.5 * log_x);
  const double t2 =
      arith::kA2 * std::exp(lp1 / 3.0 + log_T - 2.0 * log_x / 3.0);
  const double t3 = log_x * std::exp(log_T - log_x);
  return t1 + t2 + t3;
}

PerronError perron_error_total_log(double log_x, double log_T,
                                   double lambda) {
  if (!(log_x >= 40.0))
    throw domain_error("perron error assembly requires log x >= 40");
  if (!(log_T > std::log(std::max(51.0, log_x))))
    throw domain_error("perron error assembly requires T > max(51, log x)");
  const double tp = theta_prime();
  PerronError e;
  // first = e x log x / (lambda pi T): normalized by x log x / T it is
  // exactly e / (lambda pi).
  e.first_norm = kE / (lambda * kPi);
  e.first = e.first_norm * std::exp(log_x + std::log(log_x) - log_T);
  const double kappa = 1.0 + 1.0 / log_x;
  const double ekl = std::exp(kappa * lambda);
  const double c0 = c0_of(lambda);
  const double E1 = brun_titchmarsh_factor_log(log_x, log_T, lambda);
  // second = e^{kappa lambda}/pi [ c0 E1 (log(lambda/theta') + log T) x/T
  //          + E2(x)/theta' ]; normalized by x log x / T.
  const double window_norm =
      c0 * E1 * (std::log(lambda / tp) + log_T) / log_x;
  const double tail_norm =
      e2_tail_over_x_times_T(log_x, log_T, lambda) / (tp * log_x);
  e.second_norm = ekl * (window_norm + tail_norm) / kPi;
  e.second = e.second_norm * std::exp(log_x + std::log(log_x) - log_T);
  return e;
}

}  // namespace epc::perron
