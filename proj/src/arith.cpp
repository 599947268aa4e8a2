#include "epc/arith.hpp"

#include <algorithm>
#include <cmath>

namespace epc::arith {

SieveTable::SieveTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw domain_error("sieve limit must be >= 2");
  if (limit > 200'000'000ULL)
    throw domain_error("sieve limit too large for the dense table");
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (u64 j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
    }
  }
}

double SieveTable::lambda(u64 n) const {
  if (n < 2 || n > limit_) throw domain_error("lambda argument out of range");
  const u64 p = spf_[n];
  // n is a prime power iff stripping p repeatedly reaches 1.
  u64 m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

bool SieveTable::is_prime(u64 n) const {
  if (n < 2 || n > limit_) return false;
  return spf_[n] == n;
}

double SieveTable::psi(double x) const {
  if (!(x >= 0) || x > static_cast<double>(limit_))
    throw domain_error("psi argument out of sieve range");
  const u64 xi = static_cast<u64>(x);
  KahanSum s;
  for (u64 n = 2; n <= xi; ++n) {
    const u64 p = spf_[n];
    u64 m = n;
    while (m % p == 0) m /= p;
    if (m == 1) s.add(std::log(static_cast<double>(p)));
  }
  return s.value();
}

double SieveTable::theta(double x) const {
  if (!(x >= 0) || x > static_cast<double>(limit_))
    throw domain_error("theta argument out of sieve range");
  const u64 xi = static_cast<u64>(x);
  KahanSum s;
  for (u64 n = 2; n <= xi; ++n)
    if (spf_[n] == n) s.add(std::log(static_cast<double>(n)));
  return s.value();
}

u64 SieveTable::pi_count(double x) const {
  if (!(x >= 0) || x > static_cast<double>(limit_))
    throw domain_error("pi argument out of sieve range");
  const u64 xi = static_cast<u64>(x);
  u64 c = 0;
  for (u64 n = 2; n <= xi; ++n)
    if (spf_[n] == n) ++c;
  return c;
}

double SieveTable::psi_via_theta(double x) const {
  if (!(x >= 2) || x > static_cast<double>(limit_))
    throw domain_error("psi_via_theta argument out of sieve range");
  const u64 xi = static_cast<u64>(x);
  KahanSum s;
  for (unsigned k = 1;; ++k) {
    const u64 r = integer_kth_root(xi, k);
    if (r < 2) break;
    s.add(theta(static_cast<double>(r)));
  }
  return s.value();
}

SieveTable::PsiThetaCheck SieveTable::psi_minus_theta_bound_check(
    double x) const {
  PsiThetaCheck c;
  c.actual = psi(x) - theta(x);
  c.bound = kA1 * std::sqrt(x) + kA2 * std::cbrt(x);
  c.pass = c.actual > 0.0 && c.actual < c.bound;
  return c;
}

u64 integer_kth_root(u64 x, unsigned k) {
  if (k == 0) throw domain_error("k-th root needs k >= 1");
  if (x == 0) return 0;
  if (k == 1) return x;
  if (k >= 64) return 1;
  u64 r = static_cast<u64>(
      std::pow(static_cast<double>(x), 1.0 / static_cast<double>(k)));
  // Correct the floating guess exactly: grow while (r+1)^k <= x, shrink
  // while r^k > x.  pow_le caps at overflow.
  auto pow_le = [&](u64 base, u64 cap) {
    u64 v = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (base != 0 && v > cap / base) return cap + 1;
      v *= base;
    }
    return v;
  };
  while (pow_le(r + 1, x) <= x) ++r;
  while (r > 0 && pow_le(r, x) > x) --r;
  return r;
}

namespace {

// Odd-only segmented sieve over (lo, hi]; calls visit(p) for each prime.
// base must contain all primes <= sqrt(hi).
template <class Visit>
void sieve_segment(u64 lo, u64 hi, const std::vector<u32>& base,
                   std::vector<u8>& composite, Visit visit) {
  // Segment covers odd numbers in [start, hi], start odd.
  u64 start = lo + 1;
  if (start < 3) {
    if (2 > lo && 2 <= hi) visit(2);
    start = 3;
  }
  if (start % 2 == 0) ++start;
  if (start > hi) return;
  const u64 n_odd = (hi - start) / 2 + 1;
  composite.assign(n_odd, 0);
  for (const u32 p : base) {
    const u64 pp = static_cast<u64>(p) * p;
    if (pp > hi) break;
    if (p == 2) continue;
    u64 first = std::max(pp, ((start + p - 1) / p) * p);
    if (first % 2 == 0) first += p;
    for (u64 m = first; m <= hi; m += 2 * static_cast<u64>(p))
      composite[(m - start) / 2] = 1;
  }
  for (u64 i = 0; i < n_odd; ++i)
    if (!composite[i]) visit(start + 2 * i);
}

std::vector<u32> base_primes_to(u64 n) {
  std::vector<u8> comp(n + 1, 0);
  std::vector<u32> primes;
  for (u64 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(static_cast<u32>(i));
      for (u64 j = i * i; j <= n; j += i) comp[j] = 1;
    }
  }
  return primes;
}

constexpr u64 kSegmentSpan = 1ULL << 21;  // odd-only bitmap ~1 MiB per segment

}  // namespace

std::vector<u64> pi_checkpoints(const std::vector<u64>& points) {
  if (points.empty()) return {};
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i] < points[i - 1])
      throw domain_error("pi_checkpoints needs ascending checkpoints");
  const u64 hi = points.back();
  const std::vector<u32> base =
      base_primes_to(integer_kth_root(hi, 2) + 1);
  std::vector<u64> counts(points.size(), 0);
  std::vector<u8> composite;
  u64 count = 0;
  size_t next = 0;
  for (u64 lo = 1; lo < hi; lo += kSegmentSpan) {
    const u64 seg_hi = std::min(hi, lo + kSegmentSpan);
    sieve_segment(lo, seg_hi, base, composite, [&](u64 p) {
      while (next < points.size() && points[next] < p) counts[next++] = count;
      ++count;
    });
  }
  while (next < points.size()) counts[next++] = count;
  return counts;
}

u64 first_prime_between(u64 lo, u64 hi) {
  if (hi <= lo + 1) return 0;
  const std::vector<u32> base = base_primes_to(integer_kth_root(hi, 2) + 1);
  std::vector<u8> composite;
  u64 found = 0;
  for (u64 s = lo; s + 1 < hi && !found; s += kSegmentSpan) {
    const u64 seg_hi = std::min(hi - 1, s + kSegmentSpan);
    sieve_segment(s, seg_hi, base, composite, [&](u64 p) {
      if (!found && p > lo && p < hi) found = p;
    });
  }
  return found;
}

}  // namespace epc::arith
