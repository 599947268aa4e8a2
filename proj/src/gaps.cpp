#include "epc/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "epc/arith.hpp"

namespace epc::gaps {

void GapParams::validate() const {
  if (m < 1) throw domain_error("gap parameters require m >= 1");
  if (!(mu > 0.0) || !(mu < 1.0))
    throw domain_error("gap parameters require mu in (0, 1)");
  if (!(M > 0.0)) throw domain_error("gap parameters require M > 0");
}

double GapParams::h_over_x_log(double log_x) const {
  return static_cast<double>(m) * std::exp(-log_x / static_cast<double>(m));
}

double g_weight(double x, double h) {
  if (!(x > 1.0) || !(h >= 0.0))
    throw domain_error("g_weight requires x > 1, h >= 0");
  return (x + h) * std::log(x + h) + x * std::log(x);
}

double psi_interval_lower_bound(const zeros::ZeroDataset& ds, double x,
                                double h, double T, double M, int threads) {
  if (!(x > 1.0) || !(h > 0.0))
    throw domain_error("interval bound requires x > 1, h > 0");
  if (T > ds.max_height)
    throw domain_error("interval bound beyond the ingested height");
  const double lx = std::log(x), lxh = std::log(x + h);
  if (std::min(T, ds.max_height) * lxh > 1e10)
    throw domain_error("interval bound phase gamma*log(x+h) too large");
  const u64 n = zeros::count_up_to(ds, T);
  const double sx = std::sqrt(x), sxh = std::sqrt(x + h);
  const double cap1 = h * (1.0 + h / x) / sx;
  auto term = [&](u64 i) {
    const double g = ds.ordinates[i];
    const std::complex<double> rho(0.5, g);
    const std::complex<double> zh =
        sxh * std::complex<double>(std::cos(g * lxh), std::sin(g * lxh));
    const std::complex<double> zx =
        sx * std::complex<double>(std::cos(g * lx), std::sin(g * lx));
    double mod = std::abs((zh - zx) / rho);
    mod = std::min(mod, std::min(cap1, 2.0 * sxh / std::abs(rho)));
    return 2.0 * mod;
  };
  const double zsum = ordered_total(chunked_sums(n, 64, threads, term));
  return h - zsum - M * g_weight(x, h) / T;
}

PlugIn null_plugin() {
  return [](double) { return 0.0; };
}

PlugIn constant_plugin(double value) {
  return [value](double) { return value; };
}

ConditionResult condition_check_log(double log_x, const GapParams& p,
                                    const PlugIn& F, const PlugIn& E) {
  p.validate();
  if (!(log_x > 1.0)) throw domain_error("condition requires log x > 1");
  const double m = static_cast<double>(p.m);
  const double r = p.h_over_x_log(log_x);
  // G(x, h) / (x^mu h) = ((1+r)(L + log1p r) + L) e^{L(1/m - mu)} / m.
  const double g_over =
      ((1.0 + r) * (log_x + std::log1p(r)) + log_x) *
      std::exp(log_x * (1.0 / m - p.mu)) / m;
  // E/h = E e^{-L(1 - 1/m)} / m.
  const double e_over_h =
      E(log_x) * std::exp(-(log_x - log_x / m)) / m;
  ConditionResult res;
  res.value = 1.0 - F(log_x) - p.M * g_over + e_over_h;
  res.pass = res.value > 0.0;
  return res;
}

bool power_interval_has_prime(u64 n, u64 m, u64 limit, u64* witness) {
  if (m < 1) throw domain_error("power interval requires m >= 1");
  // Checked (n+1)^m against the sieve guard.
  auto checked_pow = [&](u64 base) {
    u64 v = 1;
    for (u64 i = 0; i < m; ++i) {
      if (base != 0 && v > limit / base)
        throw domain_error("power interval endpoint exceeds the sieve limit");
      v *= base;
    }
    return v;
  };
  const u64 hi = checked_pow(n + 1);
  const u64 lo = checked_pow(n);
  const u64 p = arith::first_prime_between(lo, hi);
  if (witness) *witness = p;
  return p != 0;
}

}  // namespace epc::gaps
