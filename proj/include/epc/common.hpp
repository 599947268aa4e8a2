#pragma once
// Shared numeric utilities: error classes mapped to CLI exit codes, compensated
// summation, deterministic chunked reduction, and table-output formatting.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace epc {

using u8 = uint8_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exit-code classes: domain_error -> 1 (precondition failure),
// io_error -> 2 (file/parse failure).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Kahan–Neumaier compensated accumulator. Saturates cleanly at +-inf (the
// compensation algebra would otherwise turn an overflowed total into NaN).
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::isinf(t)) {
      sum = t;
      return;
    }
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Evaluates f(i) for i in [0, n) in fixed-size chunks and returns the ordered
// per-chunk compensated sums. The chunk layout is a function of n alone, so the
// combined total (ordered_total) is bit-identical for any thread count.
std::vector<double> chunked_sums(u64 n, u64 chunk, int threads,
                                 const std::function<double(u64)>& f);

// Sequential compensated combination of ordered chunk sums.
double ordered_total(const std::vector<double>& chunk_sums);

// Deterministic parallel map over [0, n): out[i] = f(i) with out preallocated.
void parallel_fill(u64 n, int threads, const std::function<double(u64)>& f,
                   std::vector<double>& out);

// Table/value formatting: 4 significant digits, scientific below 1e-3 in
// magnitude, "%.17g" when full precision is requested.
std::string fmt_value(double v, bool full_precision = false);

// Parses a decimal floating-point string; the whole token must be consumed.
double parse_decimal(const std::string& s, const std::string& flag_name);

// Log-sum-exp of two log-space magnitudes: log(e^a + e^b).
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = a > b ? a : b, lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace epc
