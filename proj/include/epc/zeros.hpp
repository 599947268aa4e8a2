#pragma once
// Ingestion of nontrivial-zero ordinate tables and the zero-indexed queries:
// counting N(T), short-window counts, the explicit-formula zero sum, and the
// inverse-square partial sum.

#include <string>
#include <vector>

#include "epc/common.hpp"

namespace epc::zeros {

struct ZeroDataset {
  std::vector<double> ordinates;  // strictly ascending gamma > 14
  double max_height = 0.0;
  int source_digits = 0;  // minimum fractional digits seen in the source
};

// Parses a whitespace/newline-separated ordinate table ('#' lines ignored).
// Enforces: numeric tokens, strictly ascending, every entry in (14, 3e12],
// first entry 14.134725 within 1e-3, at least 6 fractional digits throughout.
// All violations throw io_error with the offending line number.
ZeroDataset load_zeros(const std::string& path);

// N(T): number of ordinates <= T. pre: T <= max_height.
u64 count_up_to(const ZeroDataset& ds, double T);

struct WindowRow {
  double t;
  u64 count;     // N(t+1) - N(t-1)
  double bound;  // log t
  bool pass;     // count < bound
};

// Window counts over the grid t = t_lo, t_lo + step, ..., <= t_hi.
// pre: 1 < t_lo < t_hi <= max_height - 1, step > 0.
std::vector<WindowRow> window_count_check(const ZeroDataset& ds, double t_lo,
                                          double t_hi, double step);

// 2 * sum over 0 < gamma <= T of Re(x^(1/2 + i gamma) / (1/2 + i gamma)),
// compensated, ascending, deterministic for any thread count.
// pre: x > 1, T <= max_height, min(T, max_height) * log x <= 1e10.
double zero_sum(const ZeroDataset& ds, double x, double T, int threads = 1);

// 2 * sum of 1/gamma^2 over the ingested ordinates (both half-planes).
double inverse_square_sum(const ZeroDataset& ds);

}  // namespace epc::zeros
