#include "epc/explicit_formula.hpp"

#include <algorithm>
#include <cmath>

#include "epc/perron.hpp"
#include "epc/wolke.hpp"
#include "epc/zerofree.hpp"

namespace epc::explicit_formula {

TRange t_range_log(double log_x, double alpha) {
  if (!(log_x > 0.0)) throw domain_error("t_range requires log x > 0");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw domain_error("t_range requires alpha in (0, 1]");
  TRange r;
  r.lo = std::max(51.0, log_x);
  const double al = alpha * log_x;
  // hi = (x^alpha - 2) / 2; saturates once x^alpha leaves double range.
  r.hi = al > 709.0 ? kInf : (std::exp(al) - 2.0) / 2.0;
  r.empty = !(r.hi > r.lo);
  return r;
}

TRange t_range(double x, double alpha) {
  if (!(x > 1.0)) throw domain_error("t_range requires x > 1");
  return t_range_log(std::log(x), alpha);
}

namespace {

// Minimal admissible lambda: 2 theta' / (x_M^alpha - 2), 0 once x_M^alpha
// leaves double range.
double lambda_floor(double log_xM, double alpha) {
  const double al = alpha * log_xM;
  if (al > 709.0) return 0.0;
  const double xa = std::exp(al);
  if (!(xa > 2.0)) throw domain_error("x_M^alpha must exceed 2");
  return 2.0 * perron::theta_prime() / (xa - 2.0);
}

// Normalized explicit-formula error at log x = L, every T-dependent factor
// majorized at T = x^alpha (the error grows in T over the admissible window).
double m_norm(double L, double lambda, double alpha, double K, double omega) {
  const double theta = perron::theta_prime();
  const double c0 = perron::c0_of(lambda);
  const double kappa = 1.0 + 1.0 / L;
  const double logT = alpha * L;
  const double xplus_log1p = std::log1p((c0 - 1.0) * lambda);
  const double E1 = 2.0 * (L + xplus_log1p) /
                    (std::log(c0 * theta) + L - logT);
  // E2 * T / x with T = x^alpha, addend by addend in log space.
  const double e2T_over_x =
      arith::kA1 * std::sqrt(1.0 + (c0 - 1.0) * lambda) *
          std::exp(logT - 0.5 * L) +
      arith::kA2 * std::cbrt(1.0 + (c0 - 1.0) * lambda) *
          std::exp(logT - 2.0 * L / 3.0) +
      L * std::exp(logT - L);
  const double term_K = K * std::pow(L, -omega);
  const double term_kernel = kE / (lambda * kPi);
  const double term_window = std::exp(kappa * lambda) * c0 * E1 *
                             (std::log(lambda / theta) + logT) / (kPi * L);
  const double term_tail =
      std::exp(kappa * lambda) * e2T_over_x / (kPi * theta * L);
  return term_K + term_kernel + term_window + term_tail;
}

}  // namespace

double M_constant(double log_xM, double alpha, double lambda, double K,
                  double omega) {
  if (!(log_xM >= 40.0))
    throw domain_error("M assembly requires log x_M >= 40");
  if (!(alpha > 0.0) || alpha > 0.5)
    throw domain_error("M assembly requires alpha in (0, 1/2]");
  if (!(K >= 0.0)) throw domain_error("M assembly requires K >= 0");
  if (!(omega >= 0.0) || omega > 1.0)
    throw domain_error("M assembly requires omega in [0, 1]");
  if (!(lambda >= lambda_floor(log_xM, alpha)))
    throw domain_error("lambda below the admissible floor 2 theta'/(x^a - 2)");
  // Supremum over L >= log_xM: geometric grid over four decades plus the
  // width-branch edges, then ternary refinement around the grid argmax.
  const double hi = log_xM * 1e4;
  std::vector<double> grid;
  const int n = std::min(
      static_cast<int>(128.0 * std::log10(hi / log_xM)) + 2, 4000);
  const double llo = std::log(log_xM), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    grid.push_back(i == 0 ? log_xM
                   : i == n - 1
                       ? hi
                       : std::exp(llo + (lhi - llo) * i / (n - 1)));
  for (const double edge :
       {zerofree::log_plateau() / alpha, 46.3 / alpha,
        wolke::kNu23Crossover / alpha})
    if (edge >= log_xM && edge <= hi) grid.push_back(edge);
  double best = -kInf, bestL = log_xM;
  for (const double L : grid) {
    const double v = m_norm(L, lambda, alpha, K, omega);
    if (v > best) {
      best = v;
      bestL = L;
    }
  }
  double lo = bestL * 0.99, up = bestL * 1.01;
  for (int i = 0; i < 80; ++i) {
    const double m1 = lo + (up - lo) / 3.0, m2 = up - (up - lo) / 3.0;
    if (m_norm(std::max(m1, log_xM), lambda, alpha, K, omega) <
        m_norm(std::max(m2, log_xM), lambda, alpha, K, omega))
      lo = m1;
    else
      up = m2;
  }
  const double Lref = std::max(0.5 * (lo + up), log_xM);
  return std::max(best, m_norm(Lref, lambda, alpha, K, omega));
}

std::vector<double> default_lambda_grid(double log_xM, double alpha) {
  const double floor_v = lambda_floor(log_xM, alpha);
  std::vector<double> grid;
  const double start = std::max(floor_v, 0.01);
  // Multiples of 0.01 from the floor up to 3, floor itself included.
  if (floor_v > 0.0) grid.push_back(floor_v);
  for (int i = static_cast<int>(std::ceil(start * 100.0 - 1e-9)); i <= 300;
       ++i) {
    const double v = i / 100.0;
    if (v > floor_v) grid.push_back(v);
  }
  return grid;
}

OptimizeLambdaResult optimize_lambda(double log_xM, double alpha, double K,
                                     double omega,
                                     const std::vector<double>& lambda_grid) {
  if (lambda_grid.empty())
    throw domain_error("optimize_lambda needs a nonempty grid");
  OptimizeLambdaResult best{0.0, kInf};
  for (const double lam : lambda_grid) {
    const double M = M_constant(log_xM, alpha, lam, K, omega);
    if (best.M == kInf || M < best.M * (1.0 - 1e-12) ||
        (M <= best.M * (1.0 + 1e-12) && lam < best.lambda)) {
      best.M = M;
      best.lambda = lam;
    }
  }
  return best;
}

double M_constant_rh(double log_xM) {
  if (!(log_xM >= 1000.0))
    throw domain_error("critical-line M requires log x_M >= 1000");
  wolke::WolkeParams p;
  p.log_xK = log_xM;
  p.alpha = 0.5;
  p.omega_bar = 3.0;
  p.D = 0.4;
  const double K = wolke::K_constant_rh(p);
  return M_constant(log_xM, 0.5, 0.52, K, 1.0);
}

const std::vector<TableFourRow>& table4_rows() {
  static const std::vector<TableFourRow> rows = {
      {40.0, 0.5, 0.48, 2.053, 0.0, 6.431},
      {1e3, 0.5, 0.52, 1.673, 0.0, 5.823},
      {1e10, 0.5, 0.52, 3.191, 0.3, 4.143},
      {1e13, 0.5, 0.52, 0.6367, 1.0, 4.140},
      {1e3, 0.1, 1.05, 2.596, 0.2, 2.045},
      {1e10, 0.1, 1.06, 11.77, 0.9, 1.384},
      {1e3, 0.01, 1.80, 2.186, 0.8, 0.6651},
      {1e10, 0.01, 1.88, 0.6367, 1.0, 0.6269},
  };
  return rows;
}

ResidualReport empirical_residual(const zeros::ZeroDataset& ds,
                                  const arith::SieveTable& sieve, double x,
                                  double T, int threads) {
  if (!(x > 2.0)) throw domain_error("empirical residual requires x > 2");
  const double psi = sieve.psi(x);
  const double zsum = zeros::zero_sum(ds, x, T, threads);
  const double lx = std::log(x);
  ResidualReport r;
  r.residual = std::fabs(psi - x + zsum + std::log(2.0 * kPi) +
                         0.5 * std::log1p(-1.0 / (x * x)));
  r.dudek_shape = 2.0 * x * lx * lx / T;
  // The tabulated M rows all require x >= e^40; report the best applicable
  // bound M x log x / T when one exists.
  r.rvm_applicable = false;
  r.rvm_bound = 0.0;
  for (const TableFourRow& row : table4_rows()) {
    if (lx < row.log_xM) continue;
    const TRange tr = t_range_log(lx, row.alpha);
    if (tr.empty || !(T > tr.lo) || !(T < tr.hi)) continue;
    const double b =
        row.M_printed * x * std::pow(lx, 1.0 - row.omega) / T;
    if (!r.rvm_applicable || b < r.rvm_bound) {
      r.rvm_bound = b;
      r.rvm_applicable = true;
    }
  }
  return r;
}

}  // namespace epc::explicit_formula
