#pragma once
// Prime-number-theorem error pipeline: zero-density bound evaluation from the
// bundled density constants, the A/B/C/eps0 computation behind the threshold
// table, the theta-version variant, and a desk-scale Ramanujan-inequality
// checker.

#include <string>
#include <utility>
#include <vector>

#include "epc/common.hpp"

namespace epc::pnt {

inline constexpr double kR = 5.5666305;
inline constexpr double kDefaultM = 2.045;  // explicit-formula M fed into C3

struct DensityConstants {
  double sigma;       // in [0.75, 1)
  double alpha, d;    // derivation parameters, recorded as printed
  double C1, C2;      // N(sigma, T) <= C1 T^{8(1-sigma)/3} (log T)^{5-2sigma} + C2 log^2 T
};

// Bundled constants (the data/table2.csv rows, embedded).
const std::vector<DensityConstants>& density_table();
// Parses a CSV copy (columns sigma, alpha, d, C1, C2; '#' comments allowed).
std::vector<DensityConstants> load_density_table(const std::string& path);
// Row lookup by sigma (1e-9 tolerance); throws domain_error when absent.
const DensityConstants& density_row(double sigma);

// C1 T^{8(1-sigma)/3} (log T)^{5-2sigma} + C2 log^2 T. pre: T >= 3.
double density_bound(const DensityConstants& dc, double T);

// k(sigma, x0) = [exp((10-16 sigma)/3 sqrt(log x0 / R)) (sqrt(log x0 / R))^{5-2 sigma}]^{-1}
double k_factor(double sigma, double log_x0);
double log_k_factor(double sigma, double log_x0);

struct AParts {
  double A;                // 2.0025 2^{5-2 sigma} C1 + c3 + c4 + c5
  double c3, c4, c5;
};
// c3 = M log x0 exp(-2 sqrt(log x0/R)) k; c4 = x0^{sigma-1} ((2/pi) log x0/R
// + 1.8642) k; c5 = 8.01 C2 exp(-2 sqrt(log x0/R)) (log x0/R) k.
AParts A_of(double sigma, double log_x0, double M, const DensityConstants& dc);

// B = (5 - 2 sigma)/2, C = (16 sigma - 10)/3.
std::pair<double, double> bc_of(double sigma);

// A (X/R)^B exp(-C sqrt(X/R)).
double eps0_of(double X, double A, double B, double C);

struct PNTRow {
  double X, sigma, A, B, C, eps0;
};

// Builds a row at threshold X. With project = true the emitted fields carry
// table precision (A to 4 significant digits, B rounded to 3 decimals, C
// truncated to 3 decimals) and eps0 is computed from those projected values;
// with project = false everything is full precision. Before emission the
// monotone requirements are verified numerically (A decreasing on
// [X, X + 1000], the bound decreasing on [X, X + 2000]); violation throws
// domain_error naming the failing abscissa.
PNTRow make_row(double X, double sigma, double M = kDefaultM,
                bool project = true);

// The theta-version of a row: A raised by 0.1, everything else unchanged.
PNTRow theta_row(PNTRow row);

// The 11 printed threshold rows: (X, sigma) pairs in print order.
struct TableOneConfig {
  double X, sigma;
  double A_printed, B_printed, C_printed, eps0_printed;
};
const std::vector<TableOneConfig>& table1_configs();

// eps0-minimizing sigma over the bundled density grid at threshold X.
double optimal_sigma(double X, double M = kDefaultM);

struct RamanujanResult {
  double lhs;  // pi(x)^2
  double rhs;  // (e x / log x) pi(x/e)
  bool pass;   // lhs < rhs
};
// pre: 2 <= x <= ~4.2e10 (segmented-sieve range).
RamanujanResult ramanujan_check(double x);

}  // namespace epc::pnt
