#include "epc/common.hpp"

#include <atomic>
#include <cstdio>
#include <limits>
#include <thread>

namespace epc {

std::vector<double> chunked_sums(u64 n, u64 chunk, int threads,
                                 const std::function<double(u64)>& f) {
  if (chunk == 0) chunk = 1;
  u64 n_chunks = (n + chunk - 1) / chunk;
  std::vector<double> sums(n_chunks, 0.0);
  auto run_chunk = [&](u64 c) {
    u64 lo = c * chunk;
    u64 hi = lo + chunk < n ? lo + chunk : n;
    KahanSum ks;
    for (u64 i = lo; i < hi; ++i) ks.add(f(i));
    sums[c] = ks.value();
  };
  if (threads <= 1 || n_chunks <= 1) {
    for (u64 c = 0; c < n_chunks; ++c) run_chunk(c);
    return sums;
  }
  std::atomic<u64> next{0};
  auto worker = [&]() {
    for (;;) {
      u64 c = next.fetch_add(1);
      if (c >= n_chunks) return;
      run_chunk(c);
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  unsigned nt = static_cast<unsigned>(threads);
  if (hw > 0 && nt > 4 * hw) nt = 4 * hw;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return sums;
}

double ordered_total(const std::vector<double>& chunk_sums) {
  KahanSum ks;
  for (double v : chunk_sums) ks.add(v);
  return ks.value();
}

void parallel_fill(u64 n, int threads, const std::function<double(u64)>& f,
                   std::vector<double>& out) {
  out.assign(n, 0.0);
  if (threads <= 1 || n <= 1) {
    for (u64 i = 0; i < n; ++i) out[i] = f(i);
    return;
  }
  std::atomic<u64> next{0};
  constexpr u64 kBlock = 16;
  auto worker = [&]() {
    for (;;) {
      u64 b = next.fetch_add(1);
      u64 lo = b * kBlock;
      if (lo >= n) return;
      u64 hi = lo + kBlock < n ? lo + kBlock : n;
      for (u64 i = lo; i < hi; ++i) out[i] = f(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

std::string fmt_value(double v, bool full_precision) {
  char buf[64];
  if (full_precision) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::abs(v) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.3e", v);
  else
    std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double parse_decimal(const std::string& s, const std::string& flag_name) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size())
      throw domain_error("trailing characters in value for " + flag_name + ": '" + s + "'");
    return v;
  } catch (const domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw domain_error("cannot parse decimal value for " + flag_name + ": '" + s + "'");
  }
}

}  // namespace epc
