#include "epc/zeros.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace epc::zeros {

namespace {

// Counts fractional digits of a numeric token (0 when no '.'; exponent forms
// are rejected upstream of this by strtod acceptance, we just scan the text).
int fractional_digits(const std::string& tok) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) return 0;
  int n = 0;
  for (size_t i = dot + 1; i < tok.size(); ++i) {
    if (tok[i] == 'e' || tok[i] == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(tok[i]))) ++n;
  }
  return n;
}

}  // namespace

ZeroDataset load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open zero table: " + path);
  ZeroDataset ds;
  std::string line;
  u64 lineno = 0;
  double prev = 0.0;
  int min_digits = 1 << 30;
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << path << ":" << lineno << ": " << what;
    throw io_error(os.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    // Strip a trailing CR from CRLF sources.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size() || !std::isfinite(v))
        fail("non-numeric token '" + tok + "'");
      if (!(v > 14.0) || v > 3e12)
        fail("ordinate out of range (14, 3e12]: " + tok);
      if (!(v > prev)) fail("ordinates not strictly ascending at " + tok);
      if (ds.ordinates.empty() && std::fabs(v - 14.134725) > 1e-3)
        fail("first ordinate is not the initial zero height: " + tok);
      min_digits = std::min(min_digits, fractional_digits(tok));
      ds.ordinates.push_back(v);
      prev = v;
    }
  }
  if (ds.ordinates.empty()) throw io_error("zero table is empty: " + path);
  if (min_digits < 6) {
    std::ostringstream os;
    os << path << ": ordinates carry only " << min_digits
       << " fractional digits (need >= 6)";
    throw io_error(os.str());
  }
  ds.max_height = ds.ordinates.back();
  ds.source_digits = min_digits;
  return ds;
}

u64 count_up_to(const ZeroDataset& ds, double T) {
  if (T > ds.max_height)
    throw domain_error("count_up_to beyond the ingested height");
  return static_cast<u64>(std::upper_bound(ds.ordinates.begin(),
                                           ds.ordinates.end(), T) -
                          ds.ordinates.begin());
}

std::vector<WindowRow> window_count_check(const ZeroDataset& ds, double t_lo,
                                          double t_hi, double step) {
  if (!(t_lo > 1.0) || !(t_hi > t_lo) || !(step > 0.0))
    throw domain_error("window_count_check requires 1 < t_lo < t_hi, step > 0");
  if (t_hi + 1.0 > ds.max_height)
    throw domain_error("window_count_check needs zeros up to t_hi + 1");
  std::vector<WindowRow> rows;
  const u64 n = static_cast<u64>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
  rows.reserve(n);
  for (u64 i = 0; i < n; ++i) {
    const double t = t_lo + static_cast<double>(i) * step;
    if (t > t_hi + 1e-12) break;
    WindowRow r;
    r.t = t;
    r.count = count_up_to(ds, t + 1.0) - count_up_to(ds, t - 1.0);
    r.bound = std::log(t);
    r.pass = static_cast<double>(r.count) < r.bound;
    rows.push_back(r);
  }
  return rows;
}

double zero_sum(const ZeroDataset& ds, double x, double T, int threads) {
  if (!(x > 1.0)) throw domain_error("zero_sum requires x > 1");
  if (T > ds.max_height)
    throw domain_error("zero_sum beyond the ingested height");
  const double lx = std::log(x);
  if (std::min(T, ds.max_height) * lx > 1e10)
    throw domain_error("zero_sum phase gamma*log(x) too large for doubles");
  const double sx = std::sqrt(x);
  const u64 n = count_up_to(ds, T);
  // Re(x^rho / rho) for rho = 1/2 + i gamma equals
  // sqrt(x) (cos(g lx)/2 + g sin(g lx)) / (1/4 + g^2); the sum doubles it to
  // cover the conjugate zero.
  auto term = [&](u64 i) {
    const double g = ds.ordinates[i];
    return 2.0 * sx * (0.5 * std::cos(g * lx) + g * std::sin(g * lx)) /
           (0.25 + g * g);
  };
  return ordered_total(chunked_sums(n, 64, threads, term));
}

double inverse_square_sum(const ZeroDataset& ds) {
  KahanSum s;
  for (auto it = ds.ordinates.rbegin(); it != ds.ordinates.rend(); ++it)
    s.add(2.0 / (*it * *it));
  return s.value();
}

}  // namespace epc::zeros
