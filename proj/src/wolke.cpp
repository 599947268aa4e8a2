#include "epc/wolke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace epc::wolke {

namespace {

double clamped_exp(double v) { return std::exp(std::min(v, 700.0)); }
double clamped_exp_neg(double v) { return std::exp(-std::min(v, 700.0)); }

constexpr double kZ2Coeff = 2.0 / 3.0;  // weights of the trivial-zero tail

}  // namespace

void WolkeParams::validate() const {
  if (!(log_xK > 1.0))
    throw domain_error("K region requires log x_K > 1");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw domain_error("K region requires alpha in (0, 1]");
  if (!(omega_bar >= 0.0))
    throw domain_error("K region requires omega_bar >= 0");
  if (omega_bar > 0.0 && (!(D > 0.0) || !(D < 1.0)))
    throw domain_error("omega_bar > 0 requires D in (0, 1)");
  // The T-window max(51, log x) < T < (x^alpha - 2)/2 must be nonempty at
  // x = x_K for the omega_bar > 0 branch; the undoubled branch only needs
  // T <= x^alpha - 1. Both hold whenever alpha log x_K comfortably exceeds
  // log of the left endpoint; reject clearly-empty regions.
  const double t_lo = std::max(51.0, log_xK);
  const double log_hi =
      omega_bar > 0.0 ? alpha * log_xK - std::log(2.0) : alpha * log_xK;
  if (std::log(t_lo) >= log_hi)
    throw domain_error("empty T-window: alpha log x_K too small");
}

double logderiv_window_bound(double log_x, double T, double omega_bar) {
  if (!(T > 51.0)) throw domain_error("window bound requires T > 51");
  if (!(log_x > 1.0)) throw domain_error("window bound requires log x > 1");
  const double lt = std::log(T);
  return std::pow(log_x, omega_bar) * (lt * lt + lt) + 20.0 * lt;
}

namespace detail {

int k_term_count(const WolkeParams& p) { return p.omega_bar == 0.0 ? 5 : 10; }

std::string k_term_name(const WolkeParams& p, int idx) {
  static const char* branch1[] = {"delta", "log2pi", "horizontal",
                                  "window_zero", "logderiv_main"};
  static const char* branch2[] = {"delta",      "log2pi", "horizontal",
                                  "window_zero", "tough",  "z1",
                                  "z2",          "z3",     "f2",
                                  "f1"};
  if (idx < 0 || idx >= k_term_count(p))
    throw domain_error("term index out of range");
  return p.omega_bar == 0.0 ? branch1[idx] : branch2[idx];
}

// Normalized majorant of one displayed term at abscissa L = log x, every
// T-dependent factor taken at its admissible worst case: log T <= alpha L,
// x^{-nu(T+1)} <= x^{-nu(x^alpha)}, T/(T-1) <= T0/(T0-1) at T0 = max(51,
// log x_K), (T-1)^{-2} <= (max(51, L) - 1)^{-2}.
double k_term(const WolkeParams& p, int idx, double L, double inv_sq,
              bool crossover_da) {
  const double a = p.alpha;
  const double wb = p.omega_bar;
  const double w = p.omega();
  const double T0 = std::max(51.0, p.log_xK);
  const double tf = T0 / (T0 - 1.0);
  const double lt = a * L;
  const ZeroFreeRegion region = p.region();
  switch (idx) {
    case 0:  // delta: e x (log x)^{1 - omega_bar} / (pi (T-1)), normalized
      return (kE / kPi) * tf * std::pow(L, w - wb);
    case 1:  // log 2 pi, normalized with T <= x^alpha / 2
      return std::log(2.0 * kPi) * std::exp(a * L - L) /
             (2.0 * std::pow(L, 1.0 - w));
    case 2:  // horizontal-segment contribution (T+1)(9 + log(T+1))/(pi x)
      return std::exp(2.0 * (a * L - std::log(2.0)) - 2.0 * L) *
             (9.0 + a * L) / (kPi * std::pow(L, 1.0 - w));
    case 3: {  // window_zero: 2 x log(T+1) / (x^{nu(T+1)} (T-1))
      const double nu = region.nu_log(a * L);
      return 2.0 * tf * lt * std::pow(L, w - 1.0) * clamped_exp_neg(nu * L);
    }
  }
  if (wb == 0.0) {
    // idx == 4: e x (log^2 T + 21 log T) / (pi log x (T-1))
    return (kE / kPi) * tf * (lt * lt + 21.0 * lt) * std::pow(L, w - 2.0);
  }
  const double nu = region.nu_log(a * L);
  switch (idx) {
    case 4: {  // tough: doubled shifted-contour sum over the window zeros
      const double body =
          std::pow(L, wb - 1.0) * (lt * lt + lt) + 20.0 * lt / L;
      return tf / kPi * body * std::pow(L, w - 1.0) *
             clamped_exp_neg(p.D * nu * L);
    }
    case 5:  // z1: doubled x/(pi (T-1))
      return 2.0 / kPi * tf * std::pow(L, w - 1.0);
    case 6: {  // z2: doubled trivial-zero block, constant part
      const double t0l = std::max(51.0, L);
      return 8.0 * (kZ2Coeff * std::exp(0.75) + std::exp(0.5)) / kPi * tf *
             std::pow(L, w - 3.0) / ((t0l - 1.0) * (t0l - 1.0));
    }
    case 7: {  // z3: doubled trivial-zero block, x-decaying part
      const double t0l = std::max(51.0, L);
      const double xdec =
          (4.0 / 3.0) * std::exp(0.75) * std::exp(-0.75 * L) /
              (-std::expm1(-0.5 * L)) +
          2.0 * std::exp(0.5) * std::exp(-1.5 * L) / (-std::expm1(-L));
      return 4.0 / kPi * tf * std::pow(L, w - 3.0) /
             ((t0l - 1.0) * (t0l - 1.0)) * xdec;
    }
    case 8:  // f2: doubled inverse-square zero sum block
      return 16.0 * ((4.0 / 3.0) * std::exp(0.75) + 2.0 * std::exp(0.5)) *
             inv_sq / kPi * tf * std::pow(L, w - 2.0);
    case 9: {  // f1: doubled near-1 pole block
      const double na = (1.0 - p.D) * nu;
      const double naL = na * L;
      const double den = crossover_da ? nu * a * L : nu * L;
      const double da = p.D + 1.0 / den;
      const double S = clamped_exp(0.25 * naL) + clamped_exp(0.5 * naL);
      const double bracket =
          1.0 / ((da + 1.0 - p.D) * na) + nu * kPi * kPi / 24.0;
      return 8.0 * a * kE / kPi * tf * da * std::pow(L, w - 1.0) * bracket /
             S;
    }
  }
  throw domain_error("term index out of range");
}

std::vector<double> k_candidates(double log_xK, double alpha) {
  std::vector<double> cands{log_xK};
  const double edges[] = {zerofree::log_plateau() / alpha, 46.3 / alpha,
                          kNu23Crossover / alpha};
  for (const double edge : edges)
    for (const double c : {edge * (1.0 - 1e-9), edge, edge * (1.0 + 1e-9)})
      if (c >= log_xK) cands.push_back(c);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

std::vector<double> k_grid(double log_xK, double alpha) {
  std::vector<double> grid = k_candidates(log_xK, alpha);
  const double hi = std::max(20.0 * kNu23Crossover / alpha, 100.0 * log_xK);
  const int n = std::min(
      static_cast<int>(128.0 * std::log10(hi / log_xK)) + 2, 4000);
  const double llo = std::log(log_xK), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    double v = i == 0 ? log_xK
               : i == n - 1
                   ? hi
                   : std::exp(llo + (lhi - llo) * i / (n - 1));
    grid.push_back(v);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace detail

namespace {

// Per-term suprema over the candidate set and the full grid; K is the sum of
// full-grid suprema, the warning compares the two.
double K_sum(const WolkeParams& p, double inv_sq, bool crossover_da,
             const std::vector<double>& cands, const std::vector<double>& grid,
             std::string* warning) {
  KahanSum total;
  for (int idx = 0; idx < detail::k_term_count(p); ++idx) {
    double cand_max = 0.0, grid_max = 0.0;
    for (const double L : cands)
      cand_max = std::max(cand_max, detail::k_term(p, idx, L, inv_sq,
                                                   crossover_da));
    for (const double L : grid)
      grid_max = std::max(grid_max, detail::k_term(p, idx, L, inv_sq,
                                                   crossover_da));
    total.add(std::max(cand_max, grid_max));
    if (warning && grid_max > cand_max * 1.001) {
      std::ostringstream os;
      os << "term " << detail::k_term_name(p, idx)
         << " peaks between candidate abscissae (grid " << grid_max
         << " vs candidates " << cand_max << ")";
      if (!warning->empty()) *warning += "; ";
      *warning += os.str();
    }
  }
  return total.value();
}

}  // namespace

double K_constant(const WolkeParams& p, double inv_sq, std::string* warning) {
  p.validate();
  if (!(inv_sq > 0.0) || inv_sq > kDefaultInvSq + 1e-15)
    throw domain_error("inverse-square sum must lie in (0, 0.04621]");
  const std::vector<double> cands = detail::k_candidates(p.log_xK, p.alpha);
  const std::vector<double> grid = detail::k_grid(p.log_xK, p.alpha);
  std::string warn_base, warn_cross;
  const double K_base = K_sum(p, inv_sq, false, cands, grid, &warn_base);
  double K = K_base;
  std::string* winner = &warn_base;
  // Below the width-branch crossover the near-1 pole block admits the
  // alternative d_alpha built from nu(x^alpha) alpha log x; the bound takes
  // whichever variant is larger (both are valid majorants over the region).
  if (p.omega_bar > 0.0 && !p.rh &&
      p.log_xK < kNu23Crossover / p.alpha) {
    const double K_cross = K_sum(p, inv_sq, true, cands, grid, &warn_cross);
    if (K_cross > K) {
      K = K_cross;
      winner = &warn_cross;
    }
  }
  if (warning) *warning = *winner;
  return K;
}

OptimizeKResult optimize_K(double log_xK, double alpha, double omega_target,
                           const std::vector<double>& D_grid,
                           const std::vector<double>& omega_bar_grid) {
  if (omega_bar_grid.empty())
    throw domain_error("optimize_K needs a nonempty omega_bar grid");
  OptimizeKResult best;
  best.K = kInf;
  for (const double wb : omega_bar_grid) {
    if (std::fabs(std::min(wb, 1.0) - omega_target) > 1e-12) continue;
    // omega_bar = 0 has no D; iterate a single placeholder then.
    const std::vector<double> ds =
        wb == 0.0 ? std::vector<double>{0.0} : D_grid;
    for (const double D : ds) {
      WolkeParams p;
      p.log_xK = log_xK;
      p.alpha = alpha;
      p.omega_bar = wb;
      p.D = D;
      const double K = K_constant(p);
      const bool better =
          K < best.K * (1.0 - 1e-12) ||
          (K <= best.K * (1.0 + 1e-12) &&
           (D < best.params.D ||
            (D == best.params.D && wb < best.params.omega_bar)));
      if (best.K == kInf || better) {
        best.K = K;
        best.params = p;
      }
    }
  }
  if (best.K == kInf)
    throw domain_error("no omega_bar grid entry matches the omega target");
  return best;
}

double K_constant_rh(WolkeParams p) {
  p.rh = true;
  return K_constant(p);
}

const std::vector<TableThreeRow>& table3_rows() {
  static const std::vector<TableThreeRow> rows = {
      {40.0, 0.5, 0.0, 0.0, 2.053},   {1e3, 0.5, 0.0, 0.0, 1.673},
      {1e10, 0.5, 0.3, 0.54, 3.191},  {1e13, 0.5, 1.4, 0.50, 0.6367},
      {1e3, 0.1, 0.2, 0.45, 2.596},   {1e10, 0.1, 0.9, 0.54, 11.77},
      {1e3, 0.01, 0.8, 0.52, 2.186},  {1e10, 0.01, 1.5, 0.50, 0.6367},
  };
  return rows;
}

BoundBreakdown bigerror_terms(double log_x, double T, const WolkeParams& p,
                              double inv_sq) {
  p.validate();
  if (!(log_x >= p.log_xK))
    throw domain_error("bigerror_terms requires log x >= log x_K");
  if (!(inv_sq > 0.0) || inv_sq > kDefaultInvSq + 1e-15)
    throw domain_error("inverse-square sum must lie in (0, 0.04621]");
  const double t_lo = std::max(51.0, log_x);
  if (!(T > t_lo))
    throw domain_error("bigerror_terms requires T > max(51, log x)");
  // Upper T limit in logs: undoubled branch T <= x^alpha - 1, doubled branch
  // T < x^alpha / 2 - 1.
  const double log_T = std::log(T);
  const double a = p.alpha;
  if (p.omega_bar == 0.0) {
    if (log_T > a * log_x + std::log1p(-std::exp(-a * log_x)))
      throw domain_error("bigerror_terms requires T <= x^alpha - 1");
  } else {
    // T < x^alpha/2 - 1  <=>  log(T + 1) < alpha log x - log 2.
    if (std::log(T + 1.0) >= a * log_x - std::log(2.0))
      throw domain_error("bigerror_terms requires T < x^alpha / 2 - 1");
  }
  const double L = log_x;
  const double w = p.omega();
  const ZeroFreeRegion region = p.region();
  // All raw magnitudes are assembled in log space; raw = exp(log raw) may
  // round to inf, the normalized column stays finite.
  const double log_norm = log_T - L - (1.0 - w) * std::log(L);
  BoundBreakdown out;
  auto push = [&](const std::string& name, double log_raw, bool doubled) {
    TermValue tv;
    tv.name = name;
    tv.raw = std::exp(log_raw);
    tv.norm = std::exp(log_raw + log_norm);
    tv.doubled = doubled;
    out.terms.push_back(tv);
  };
  const double lT = log_T;
  const double log_Tm1 = std::log(T - 1.0);
  // log 2 pi term.
  push("log2pi", std::log(std::log(2.0 * kPi)), false);
  // delta: e x (log x)^{1 - omega_bar} / (pi (T - 1)).
  push("delta",
       1.0 + L + (1.0 - p.omega_bar) * std::log(L) - std::log(kPi) - log_Tm1,
       false);
  // window_zero: 2 x log(T+1) / (x^{nu(T+1)} (T - 1)).
  const double nu_T1 = region.nu_log(std::log(T + 1.0));
  push("window_zero",
       std::log(2.0) + L + std::log(std::log(T + 1.0)) - nu_T1 * L - log_Tm1,
       false);
  // horizontal: (T+1)(9 + log sqrt((T+1)^2 + 1)) / (pi x).
  // log sqrt((T+1)^2 + 1) = log(T+1) + (1/2) log1p(1/(T+1)^2); the squared
  // reciprocal underflows harmlessly where (T+1)^2 itself would overflow.
  const double log_T1 = std::log(T + 1.0);
  const double half_log =
      log_T1 + 0.5 * std::log1p(1.0 / ((T + 1.0) * (T + 1.0)));
  push("horizontal",
       log_T1 + std::log(9.0 + half_log) - std::log(kPi) - L, false);
  if (p.omega_bar == 0.0) {
    // logderiv_main: e x (log^2 T + 21 log T) / (pi log x (T - 1)).
    push("logderiv_main",
         1.0 + L + std::log(lT * lT + 21.0 * lT) - std::log(kPi) -
             std::log(L) - log_Tm1,
         false);
  } else {
    const double nu_xa = region.nu_log(a * L);
    // tough: x ((log x)^{omega_bar - 1}(log^2 T + log T) + 20 log T / log x)
    //        / (2 pi x^{D nu(x^alpha)} (T - 1)), doubled.
    const double body = std::log(
        std::pow(L, p.omega_bar - 1.0) * (lT * lT + lT) + 20.0 * lT / L);
    push("tough",
         L + body - std::log(2.0 * kPi) - p.D * nu_xa * L - log_Tm1, true);
    // z1: x / (pi (T - 1)), doubled.
    push("z1", L - std::log(kPi) - log_Tm1, true);
    // z2: 4 x (2/3 e^{3/4} + e^{1/2}) / (pi (T-1)^3 log^2 x), doubled.
    push("z2",
         std::log(4.0 * (kZ2Coeff * std::exp(0.75) + std::exp(0.5))) + L -
             std::log(kPi) - 3.0 * log_Tm1 - 2.0 * std::log(L),
         true);
    // z3: 2 x / (pi (T-1)^3 log^2 x) * [ (4/3) e^{3/4} / (x^{3/4} - x^{1/4})
    //     + 2 e^{1/2} / (x^{3/2} - x^{1/2}) ], doubled.
    const double xdec =
        (4.0 / 3.0) * std::exp(0.75) * std::exp(-0.75 * L) /
            (-std::expm1(-0.5 * L)) +
        2.0 * std::exp(0.5) * std::exp(-1.5 * L) / (-std::expm1(-L));
    push("z3",
         std::log(2.0) + L - std::log(kPi) - 3.0 * log_Tm1 -
             2.0 * std::log(L) + std::log(xdec),
         true);
    // f1: 4 alpha e x d_alpha / (pi (T-1) (x^{na/4} + x^{na/2})) *
    //     [ 1/((d_alpha + 1 - D) na) + nu(x^alpha) pi^2 / 24 ], doubled.
    const double na = (1.0 - p.D) * nu_xa;
    const double da = p.D + 1.0 / (nu_xa * L);
    const double logS = log_add(0.25 * na * L, 0.5 * na * L);
    const double bracket =
        1.0 / ((da + 1.0 - p.D) * na) + nu_xa * kPi * kPi / 24.0;
    push("f1",
         std::log(4.0 * a * da * bracket / kPi) + 1.0 + L - log_Tm1 - logS,
         true);
    // f2: 8 x ((4/3) e^{3/4} + 2 e^{1/2}) inv_sq / (pi (T-1) log^2 x),
    // doubled.
    push("f2",
         std::log(8.0 * ((4.0 / 3.0) * std::exp(0.75) +
                         2.0 * std::exp(0.5)) *
                  inv_sq) +
             L - std::log(kPi) - log_Tm1 - 2.0 * std::log(L),
         true);
  }
  KahanSum raw, norm;
  for (const TermValue& tv : out.terms) {
    const double mult = tv.doubled ? 2.0 : 1.0;
    raw.add(mult * tv.raw);
    norm.add(mult * tv.norm);
  }
  out.total_raw = raw.value();
  out.total_norm = norm.value();
  return out;
}

}  // namespace epc::wolke
