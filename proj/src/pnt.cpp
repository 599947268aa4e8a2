#include "epc/pnt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "epc/arith.hpp"

namespace epc::pnt {

const std::vector<DensityConstants>& density_table() {
  static const std::vector<DensityConstants> rows = {
      {0.980, 0.063, 0.336, 15.743, 2.214},
      {0.982, 0.063, 0.336, 15.878, 2.204},
      {0.984, 0.061, 0.336, 16.013, 2.187},
      {0.986, 0.061, 0.336, 16.148, 2.171},
      {0.988, 0.060, 0.337, 16.284, 2.148},
      {0.990, 0.060, 0.337, 16.421, 2.132},
      {0.992, 0.058, 0.337, 16.558, 2.115},
  };
  return rows;
}

std::vector<DensityConstants> load_density_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open density table: " + path);
  std::vector<DensityConstants> rows;
  std::string line;
  u64 lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    double v[5];
    for (int i = 0; i < 5; ++i) {
      if (!std::getline(ls, cell, ',')) {
        std::ostringstream os;
        os << path << ":" << lineno << ": expected 5 comma-separated fields";
        throw io_error(os.str());
      }
      char* end = nullptr;
      v[i] = std::strtod(cell.c_str(), &end);
      while (end && *end == ' ') ++end;
      if (!end || *end != '\0' || !std::isfinite(v[i])) {
        std::ostringstream os;
        os << path << ":" << lineno << ": non-numeric field '" << cell << "'";
        throw io_error(os.str());
      }
    }
    rows.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  if (rows.empty()) throw io_error("density table has no data rows: " + path);
  return rows;
}

const DensityConstants& density_row(double sigma) {
  for (const DensityConstants& dc : density_table())
    if (std::fabs(dc.sigma - sigma) < 1e-9) return dc;
  throw domain_error("sigma is not a bundled density-table value");
}

double density_bound(const DensityConstants& dc, double T) {
  if (!(T >= 3.0)) throw domain_error("density bound requires T >= 3");
  const double lt = std::log(T);
  return dc.C1 * std::pow(T, 8.0 * (1.0 - dc.sigma) / 3.0) *
             std::pow(lt, 5.0 - 2.0 * dc.sigma) +
         dc.C2 * lt * lt;
}

double log_k_factor(double sigma, double log_x0) {
  if (!(log_x0 > 0.0)) throw domain_error("k factor requires log x0 > 0");
  const double q = log_x0 / kR;
  const double sq = std::sqrt(q);
  const double B = (5.0 - 2.0 * sigma) / 2.0;
  const double C = (16.0 * sigma - 10.0) / 3.0;
  return C * sq - B * std::log(q);
}

double k_factor(double sigma, double log_x0) {
  return std::exp(log_k_factor(sigma, log_x0));
}

AParts A_of(double sigma, double log_x0, double M,
            const DensityConstants& dc) {
  if (!(M > 0.0)) throw domain_error("A assembly requires M > 0");
  const double q = log_x0 / kR;
  const double sq = std::sqrt(q);
  const double logk = log_k_factor(sigma, log_x0);
  AParts p;
  const double first =
      2.0025 * std::pow(2.0, 5.0 - 2.0 * sigma) * dc.C1;
  p.c3 = std::exp(std::log(M * log_x0) - 2.0 * sq + logk);
  p.c4 = std::exp((sigma - 1.0) * log_x0 +
                  std::log((2.0 / kPi) * q + 1.8642) + logk);
  p.c5 = std::exp(std::log(8.01 * dc.C2) - 2.0 * sq + std::log(q) + logk);
  p.A = first + p.c3 + p.c4 + p.c5;
  return p;
}

std::pair<double, double> bc_of(double sigma) {
  return {(5.0 - 2.0 * sigma) / 2.0, (16.0 * sigma - 10.0) / 3.0};
}

double eps0_of(double X, double A, double B, double C) {
  if (!(X > 0.0)) throw domain_error("eps0 requires X > 0");
  const double q = X / kR;
  return A * std::exp(B * std::log(q) - C * std::sqrt(q));
}

namespace {

double round_4sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return std::strtod(buf, nullptr);
}

double round_3dp(double v) { return std::round(v * 1000.0) / 1000.0; }

// Truncation toward zero at 3 decimals with an epsilon guard so exact
// decimal values represented just below (5.808/3 = 1.9359999...) land on
// their decimal truncation.
double trunc_3dp(double v) {
  return std::floor(v * 1000.0 + 1e-9) / 1000.0;
}

}  // namespace

PNTRow make_row(double X, double sigma, double M, bool project) {
  const DensityConstants& dc = density_row(sigma);
  const AParts parts = A_of(sigma, X, M, dc);
  const auto [B, C] = bc_of(sigma);
  // The threshold argument must sit where A is already decreasing; sample a
  // short logarithmic grid beyond X.
  {
    double prev = parts.A;
    for (int i = 1; i <= 64; ++i) {
      const double Xi =
          std::exp(std::log(X) +
                   (std::log(X + 1000.0) - std::log(X)) * i / 64.0);
      const double Ai = A_of(sigma, Xi, M, dc).A;
      if (Ai > prev * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "A is not decreasing at log x0 = " << Xi
           << " (threshold " << X << ", sigma " << sigma << ")";
        throw domain_error(os.str());
      }
      prev = Ai;
    }
  }
  PNTRow row;
  row.X = X;
  row.sigma = sigma;
  if (project) {
    row.A = round_4sig(parts.A);
    row.B = round_3dp(B);
    row.C = trunc_3dp(C);
  } else {
    row.A = parts.A;
    row.B = B;
    row.C = C;
  }
  row.eps0 = eps0_of(X, row.A, row.B, row.C);
  // The emitted bound must itself be decreasing beyond the threshold.
  {
    double prev = row.eps0;
    for (int i = 1; i <= 64; ++i) {
      const double Xi =
          std::exp(std::log(X) +
                   (std::log(X + 2000.0) - std::log(X)) * i / 64.0);
      const double ei = eps0_of(Xi, row.A, row.B, row.C);
      if (ei > prev * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "bound is not decreasing at log x0 = " << Xi
           << " (threshold " << X << ", sigma " << sigma << ")";
        throw domain_error(os.str());
      }
      prev = ei;
    }
  }
  return row;
}

PNTRow theta_row(PNTRow row) {
  row.A += 0.1;
  row.eps0 = eps0_of(row.X, row.A, row.B, row.C);
  return row;
}

const std::vector<TableOneConfig>& table1_configs() {
  static const std::vector<TableOneConfig> rows = {
      {1000, 0.980, 269.1, 1.520, 1.893, 6.89e-6},
      {2000, 0.984, 264.8, 1.516, 1.914, 3.48e-10},
      {3000, 0.986, 264.3, 1.514, 1.925, 1.42e-13},
      {3600, 0.988, 275.2, 1.512, 1.936, 2.04e-15},
      {4000, 0.988, 266.5, 1.5212, 1.936, 1.61e-16},
      {5000, 0.990, 350.4, 1.510, 1.946, 4.74e-19},
      {6000, 0.990, 267.8, 1.510, 1.946, 1.83e-21},
      {7000, 0.990, 266.9, 1.510, 1.946, 1.38e-23},
      {8000, 0.990, 266.9, 1.510, 1.946, 1.44e-25},
      {9000, 0.992, 280.5, 1.508, 1.957, 1.30e-27},
      {10000, 0.992, 268.6, 1.508, 1.957, 2.06e-29},
  };
  return rows;
}

double optimal_sigma(double X, double M) {
  double best_sigma = 0.0, best_eps = kInf;
  for (const DensityConstants& dc : density_table()) {
    const AParts parts = A_of(dc.sigma, X, M, dc);
    const auto [B, C] = bc_of(dc.sigma);
    const double eps = eps0_of(X, parts.A, B, C);
    if (eps < best_eps) {
      best_eps = eps;
      best_sigma = dc.sigma;
    }
  }
  return best_sigma;
}

RamanujanResult ramanujan_check(double x) {
  if (!(x >= 2.0)) throw domain_error("ramanujan check requires x >= 2");
  if (x > 4.3e10)
    throw domain_error("ramanujan check limited to x <= 4.3e10");
  const u64 xi = static_cast<u64>(x);
  const u64 xe = static_cast<u64>(x / kE);
  std::vector<u64> pts;
  if (xe >= 2) pts.push_back(xe);
  pts.push_back(xi);
  const std::vector<u64> counts = arith::pi_checkpoints(pts);
  const u64 pi_x = counts.back();
  const u64 pi_xe = xe >= 2 ? counts.front() : 0;
  RamanujanResult r;
  // pi(x)^2 reaches ~3e18 here: form it exactly in 64-bit, compare in long
  // double so the ~1e8 flip margin is never lost to rounding.
  const u64 lhs_u = pi_x * pi_x;
  const long double rhs_l = static_cast<long double>(kE) *
                            static_cast<long double>(x) /
                            std::log(static_cast<long double>(x)) *
                            static_cast<long double>(pi_xe);
  r.lhs = static_cast<double>(lhs_u);
  r.rhs = static_cast<double>(rhs_l);
  r.pass = static_cast<long double>(lhs_u) < rhs_l;
  return r;
}

}  // namespace epc::pnt
