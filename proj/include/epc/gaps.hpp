#pragma once
// Short-interval machinery: the weighted length G(x, h), the zero-sum lower
// bound for psi(x+h) - psi(x), the positivity condition with plug-in F and E,
// and desk-scale prime-between-powers checks.

#include <functional>

#include "epc/common.hpp"
#include "epc/zeros.hpp"

namespace epc::gaps {

struct GapParams {
  u64 m = 0;       // power exponent; h = m x^(1 - 1/m)
  double mu = 0.0;  // T = x^mu exponent, in (0, 1)
  double M = 0.0;   // explicit-formula constant
  void validate() const;
  // h/x = m x^(-1/m), evaluable at any log x.
  double h_over_x_log(double log_x) const;
};

// G(x, h) = (x + h) log(x + h) + x log x. pre: x > 1, h >= 0.
double g_weight(double x, double h);

// h - sum over |gamma| <= T of |((x+h)^rho - x^rho)/rho| - M G(x,h)/T, the
// conjugate-pair modulus computed once and doubled. pre: T <= ds.max_height.
double psi_interval_lower_bound(const zeros::ZeroDataset& ds, double x,
                                double h, double T, double M,
                                int threads = 1);

// Plug-ins receive log x (their sources are defined at scales where x itself
// overflows); the bundled choices are the null plug-in (identically zero) and
// a constant plug-in.
using PlugIn = std::function<double(double)>;
PlugIn null_plugin();
PlugIn constant_plugin(double value);

struct ConditionResult {
  double value;  // 1 - F - M G(x,h)/(x^mu h) + E/h
  bool pass;     // value > 0
};

// Evaluated in log space: with r = h/x = m e^(-L/m),
// G/(x^mu h) = ((1+r)(L + log1p(r)) + L) e^(L(1/m - mu)) / m.
ConditionResult condition_check_log(double log_x, const GapParams& p,
                                    const PlugIn& F, const PlugIn& E);

// True iff a prime lies strictly between n^m and (n+1)^m.
// pre: (n+1)^m <= limit (sieve range guard). witness receives the smallest
// such prime when found.
bool power_interval_has_prime(u64 n, u64 m, u64 limit, u64* witness = nullptr);

}  // namespace epc::gaps
