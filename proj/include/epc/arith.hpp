#pragma once
// Sieve-backed exact arithmetic oracles: von Mangoldt Lambda(n), Chebyshev
// psi/theta, prime counting at desk scale, and a segmented sieve for prime
// counts to ~4e10 (used by the slow Ramanujan check).

#include <vector>

#include "epc/common.hpp"

namespace epc::arith {

inline constexpr double kA1 = 1.0 + 1.93378e-8;  // psi-theta bound constants
inline constexpr double kA2 = 1.0432;

class SieveTable {
 public:
  explicit SieveTable(u64 limit);

  u64 limit() const { return limit_; }

  // log p when n = p^k, else 0. pre: 2 <= n <= limit.
  double lambda(u64 n) const;

  bool is_prime(u64 n) const;

  // Exact partial sums (compensated); pre: x <= limit.
  double psi(double x) const;
  double theta(double x) const;
  u64 pi_count(double x) const;

  // psi(x) recomputed as sum over k of theta(x^(1/k)) with exact integer
  // k-th roots; agrees with psi() to ~1e-12 relative.
  double psi_via_theta(double x) const;

  struct PsiThetaCheck {
    double actual;  // psi - theta
    double bound;   // a1 sqrt(x) + a2 x^(1/3)
    bool pass;      // 0 < actual < bound
  };
  PsiThetaCheck psi_minus_theta_bound_check(double x) const;

 private:
  u64 limit_;
  std::vector<u32> spf_;  // smallest prime factor for [0, limit]
};

// floor(x^(1/k)) via exact integer correction.
u64 integer_kth_root(u64 x, unsigned k);

// Counts primes <= each checkpoint (ascending) in one segmented pass.
// Checkpoints may reach ~4.3e10; memory stays bounded (2^20-byte segments).
std::vector<u64> pi_checkpoints(const std::vector<u64>& points);

// First prime strictly inside (lo, hi), or 0 when none. Segmented, early-exit.
u64 first_prime_between(u64 lo, u64 hi);

}  // namespace epc::arith
