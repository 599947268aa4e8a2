// Command-line front door: wires the library modules into reproducible
// table and verification runs. Exit codes: 0 success, 1 precondition or
// usage failure (one-line diagnostic on stderr), 2 I/O failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "epc/arith.hpp"
#include "epc/common.hpp"
#include "epc/explicit_formula.hpp"
#include "epc/gaps.hpp"
#include "epc/perron.hpp"
#include "epc/pnt.hpp"
#include "epc/wolke.hpp"
#include "epc/zerofree.hpp"
#include "epc/zeros.hpp"

namespace {

using namespace epc;

struct Globals {
  std::string output;
  int threads = 1;
  bool full = false;
  std::ostringstream out;

  std::string fmt(double v) const { return fmt_value(v, full); }
};

constexpr double kUnset = -1.7976931348623157e308;  // sentinel for "not given"

bool given(double v) { return v != kUnset; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

void cmd_nu(Globals& g, double t, double logt) {
  require(given(t) != given(logt), "pass exactly one of --t / --logt");
  double lt;
  if (given(t)) {
    require(t > 0.0, "--t must be positive");
    lt = std::log(t);
  } else {
    lt = logt;
  }
  const zerofree::NuBreakdown b = zerofree::breakdown_log(lt);
  if (!b.plateau) {
    if (b.has1) g.out << "nu1=" << g.fmt(b.nu1) << "\n";
    if (b.has2) g.out << "nu2=" << g.fmt(b.nu2) << "\n";
    if (b.has3) g.out << "nu3=" << g.fmt(b.nu3) << "\n";
  }
  g.out << "nu=" << g.fmt(b.composite) << "\n";
}

void cmd_verify_lemma41(Globals& g, const std::string& zeros_path,
                        double tmax, double step) {
  const zeros::ZeroDataset ds = zeros::load_zeros(zeros_path);
  const auto rows = zeros::window_count_check(ds, 1.0 + step, tmax, step);
  g.out << "t,count,bound,pass\n";
  for (const auto& r : rows)
    g.out << g.fmt(r.t) << "," << r.count << "," << g.fmt(r.bound) << ","
          << (r.pass ? "true" : "false") << "\n";
}

void cmd_arith_psi(Globals& g, double x) {
  require(x >= 2.0, "--x must be at least 2");
  const arith::SieveTable sieve(static_cast<u64>(std::ceil(x)));
  g.out << "value=" << g.fmt(sieve.psi(x)) << "\n";
}

void cmd_arith_pi(Globals& g, double x) {
  require(x >= 2.0, "--x must be at least 2");
  const auto counts =
      arith::pi_checkpoints({static_cast<u64>(std::floor(x))});
  g.out << "value=" << counts.front() << "\n";
}

void cmd_wolke_table3(Globals& g) {
  g.out << "log_xK,alpha,omega,omega_bar,D,K\n";
  for (const auto& row : wolke::table3_rows()) {
    wolke::WolkeParams p;
    p.log_xK = row.log_xK;
    p.alpha = row.alpha;
    p.omega_bar = row.omega_bar;
    p.D = row.D;
    std::string warn;
    const double K = wolke::K_constant(p, wolke::kDefaultInvSq, &warn);
    if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
    g.out << g.fmt(row.log_xK) << "," << g.fmt(row.alpha) << ","
          << g.fmt(p.omega()) << "," << g.fmt(row.omega_bar) << ",";
    if (row.omega_bar > 0.0) g.out << g.fmt(row.D);
    g.out << "," << g.fmt(K) << "\n";
  }
}

void cmd_wolke_k(Globals& g, double log_xk, double alpha, double omega_bar,
                 double dd, bool rh) {
  require(given(log_xk), "--log-xk is required");
  require(given(alpha), "--alpha is required");
  wolke::WolkeParams p;
  p.log_xK = log_xk;
  p.alpha = alpha;
  p.omega_bar = given(omega_bar) ? omega_bar : 0.0;
  p.D = given(dd) ? dd : 0.0;
  double K;
  std::string warn;
  if (rh) {
    K = wolke::K_constant_rh(p);
  } else {
    K = wolke::K_constant(p, wolke::kDefaultInvSq, &warn);
  }
  if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
  g.out << "K=" << g.fmt(K) << "\n";
}

void cmd_explicit_table4(Globals& g) {
  g.out << "log_xM,alpha,lambda,M\n";
  for (const auto& row : explicit_formula::table4_rows()) {
    const double M = explicit_formula::M_constant(
        row.log_xM, row.alpha, row.lambda, row.K_printed, row.omega);
    g.out << g.fmt(row.log_xM) << "," << g.fmt(row.alpha) << ","
          << g.fmt(row.lambda) << "," << g.fmt(M) << "\n";
  }
}

void cmd_explicit_m(Globals& g, double log_xm, double alpha, double lambda,
                    double k, double omega, bool rh) {
  require(given(log_xm), "--log-xm is required");
  double M;
  if (rh) {
    M = explicit_formula::M_constant_rh(log_xm);
  } else {
    require(given(alpha), "--alpha is required (or pass --rh)");
    require(given(lambda), "--lambda is required (or pass --rh)");
    require(given(k), "--k is required (or pass --rh)");
    M = explicit_formula::M_constant(log_xm, alpha, lambda, k,
                                     given(omega) ? omega : 0.0);
  }
  g.out << "M=" << g.fmt(M) << "\n";
}

void cmd_explicit_verify(Globals& g, double x, double T,
                         const std::string& zeros_path) {
  require(x >= 2.0, "--x must be at least 2");
  require(T > 0.0, "--t must be positive");
  const zeros::ZeroDataset ds = zeros::load_zeros(zeros_path);
  const arith::SieveTable sieve(static_cast<u64>(std::ceil(x)));
  const auto rep =
      explicit_formula::empirical_residual(ds, sieve, x, T, g.threads);
  g.out << "x,T,residual,rvm_bound,dudek_shape\n";
  g.out << g.fmt(x) << "," << g.fmt(T) << "," << g.fmt(rep.residual) << ",";
  if (rep.rvm_applicable)
    g.out << g.fmt(rep.rvm_bound);
  else
    g.out << "na";
  g.out << "," << g.fmt(rep.dudek_shape) << "\n";
}

void cmd_gaps_check(Globals& g, u64 m, double mu, double M, double logx,
                    bool null_plugins) {
  require(given(mu), "--mu is required");
  require(given(M), "--M is required");
  require(given(logx), "--logx is required");
  if (!null_plugins)
    std::cerr << "note: no plug-in bounds are bundled; F and E evaluate as "
                 "null plug-ins (pass --null-plugins to silence)\n";
  gaps::GapParams p;
  p.m = m;
  p.mu = mu;
  p.M = M;
  const auto res = gaps::condition_check_log(logx, p, gaps::null_plugin(),
                                             gaps::null_plugin());
  g.out << "value=" << g.fmt(res.value) << "\n";
  g.out << "pass=" << (res.pass ? "true" : "false") << "\n";
}

void cmd_gaps_power(Globals& g, u64 n, u64 m, u64 limit) {
  u64 witness = 0;
  const bool has = gaps::power_interval_has_prime(n, m, limit, &witness);
  g.out << "has_prime=" << (has ? "true" : "false") << "\n";
  if (has) g.out << "witness=" << witness << "\n";
}

void emit_pnt_header(Globals& g) { g.out << "X,sigma,A,B,C,eps0\n"; }

void emit_pnt_row(Globals& g, const pnt::PNTRow& row) {
  g.out << g.fmt(row.X) << "," << g.fmt(row.sigma) << "," << g.fmt(row.A)
        << "," << g.fmt(row.B) << "," << g.fmt(row.C) << ","
        << g.fmt(row.eps0) << "\n";
}

void cmd_pnt_table1(Globals& g) {
  emit_pnt_header(g);
  for (const auto& cfg : pnt::table1_configs())
    emit_pnt_row(g, pnt::make_row(cfg.X, cfg.sigma, pnt::kDefaultM, !g.full));
}

void cmd_pnt_row(Globals& g, double X, double sigma, double M) {
  require(given(X), "--X is required");
  const double Mv = given(M) ? M : pnt::kDefaultM;
  double sg = sigma;
  if (!given(sigma)) {
    sg = pnt::optimal_sigma(X, Mv);
    std::cerr << "note: --sigma not given; using the eps0-optimal sigma="
              << fmt_value(sg) << " from the bundled density grid\n";
  }
  emit_pnt_header(g);
  emit_pnt_row(g, pnt::make_row(X, sg, Mv, !g.full));
}

void cmd_pnt_ramanujan(Globals& g, double x) {
  const auto r = pnt::ramanujan_check(x);
  g.out << "lhs=" << g.fmt(r.lhs) << "\n";
  g.out << "rhs=" << g.fmt(r.rhs) << "\n";
  g.out << "pass=" << (r.pass ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit prime-counting error-constant workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--output", g.output, "write the command's output to a file");
  app.add_option("--threads", g.threads, "worker thread count (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--full-precision", g.full,
               "print full double precision instead of 4 significant digits");

  // nu
  double nu_t = kUnset, nu_logt = kUnset;
  CLI::App* nu = app.add_subcommand("nu", "zero-free-region width at height t");
  nu->fallthrough();
  nu->add_option("--t", nu_t, "height t");
  nu->add_option("--logt", nu_logt, "log of the height, for huge t");
  nu->callback([&] { cmd_nu(g, nu_t, nu_logt); });

  // zeros verify-lemma41
  CLI::App* zeros_cmd = app.add_subcommand("zeros", "zero-table checks");
  zeros_cmd->require_subcommand(1);
  zeros_cmd->fallthrough();
  std::string vl_zeros;
  double vl_tmax = 50.0, vl_step = 0.01;
  CLI::App* vl = zeros_cmd->add_subcommand(
      "verify-lemma41", "short-window zero-count bound over a t grid");
  vl->fallthrough();
  vl->add_option("--zeros", vl_zeros, "zero-ordinate table path")->required();
  vl->add_option("--tmax", vl_tmax, "top of the t grid (default 50)");
  vl->add_option("--step", vl_step, "grid step (default 0.01)");
  vl->callback([&] { cmd_verify_lemma41(g, vl_zeros, vl_tmax, vl_step); });

  // arith psi | pi
  CLI::App* arith_cmd = app.add_subcommand("arith", "sieve-backed arithmetic");
  arith_cmd->require_subcommand(1);
  arith_cmd->fallthrough();
  double psi_x = kUnset, pi_x = kUnset;
  CLI::App* psi_cmd = arith_cmd->add_subcommand("psi", "Chebyshev psi(x)");
  psi_cmd->fallthrough();
  psi_cmd->add_option("--x", psi_x, "argument")->required();
  psi_cmd->callback([&] { cmd_arith_psi(g, psi_x); });
  CLI::App* pi_cmd = arith_cmd->add_subcommand("pi", "prime count pi(x)");
  pi_cmd->fallthrough();
  pi_cmd->add_option("--x", pi_x, "argument")->required();
  pi_cmd->callback([&] { cmd_arith_pi(g, pi_x); });

  // wolke table3 | k
  CLI::App* wolke_cmd =
      app.add_subcommand("wolke", "truncation error constant K");
  wolke_cmd->require_subcommand(1);
  wolke_cmd->fallthrough();
  CLI::App* t3 = wolke_cmd->add_subcommand(
      "table3", "K for the 8 appendix configurations (CSV)");
  t3->fallthrough();
  t3->callback([&] { cmd_wolke_table3(g); });
  double k_logxk = kUnset, k_alpha = kUnset, k_wb = kUnset, k_dd = kUnset;
  bool k_rh = false;
  CLI::App* kk = wolke_cmd->add_subcommand("k", "K for one configuration");
  kk->fallthrough();
  kk->add_option("--log-xk", k_logxk, "log of the lower x bound");
  kk->add_option("--alpha", k_alpha, "T-window exponent, in (0, 1]");
  kk->add_option("--omega-bar", k_wb, "omega-bar parameter (default 0)");
  kk->add_option("--dd", k_dd, "D parameter, required when omega-bar > 0");
  kk->add_flag("--rh", k_rh, "use the critical-line width 1/2");
  kk->callback([&] { cmd_wolke_k(g, k_logxk, k_alpha, k_wb, k_dd, k_rh); });

  // explicit table4 | m | verify
  CLI::App* exp_cmd =
      app.add_subcommand("explicit", "explicit-formula constant M");
  exp_cmd->require_subcommand(1);
  exp_cmd->fallthrough();
  CLI::App* t4 = exp_cmd->add_subcommand(
      "table4", "M for the 8 appendix configurations (CSV)");
  t4->fallthrough();
  t4->callback([&] { cmd_explicit_table4(g); });
  double m_logxm = kUnset, m_alpha = kUnset, m_lambda = kUnset, m_k = kUnset,
         m_omega = kUnset;
  bool m_rh = false;
  CLI::App* mm = exp_cmd->add_subcommand("m", "M for one configuration");
  mm->fallthrough();
  mm->add_option("--log-xm", m_logxm, "log of the lower x bound");
  mm->add_option("--alpha", m_alpha, "T-window exponent, in (0, 1/2]");
  mm->add_option("--lambda", m_lambda, "kernel split parameter");
  mm->add_option("--k", m_k, "K constant feeding the assembly");
  mm->add_option("--omega", m_omega, "log-power omega (default 0)");
  mm->add_flag("--rh", m_rh,
               "critical-line variant: lambda = 0.52, K computed internally");
  mm->callback(
      [&] { cmd_explicit_m(g, m_logxm, m_alpha, m_lambda, m_k, m_omega, m_rh); });
  double v_x = kUnset, v_t = kUnset;
  std::string v_zeros;
  CLI::App* vv = exp_cmd->add_subcommand(
      "verify", "empirical residual of the explicit formula at (x, T)");
  vv->fallthrough();
  vv->add_option("--x", v_x, "evaluation point (half an odd integer)")
      ->required();
  vv->add_option("--t", v_t, "zero-sum truncation height")->required();
  vv->add_option("--zeros", v_zeros, "zero-ordinate table path")->required();
  vv->callback([&] { cmd_explicit_verify(g, v_x, v_t, v_zeros); });

  // gaps check | power
  CLI::App* gaps_cmd =
      app.add_subcommand("gaps", "short-interval prime machinery");
  gaps_cmd->require_subcommand(1);
  gaps_cmd->fallthrough();
  u64 gc_m = 0;
  double gc_mu = kUnset, gc_M = kUnset, gc_logx = kUnset;
  bool gc_null = false;
  CLI::App* gc = gaps_cmd->add_subcommand(
      "check", "positivity condition for an interval (x, x + m x^(1-1/m)]");
  gc->fallthrough();
  gc->add_option("--m", gc_m, "power exponent m")->required();
  gc->add_option("--mu", gc_mu, "T = x^mu exponent");
  gc->add_option("--M", gc_M, "explicit-formula constant");
  gc->add_option("--logx", gc_logx, "log x evaluation point");
  gc->add_flag("--null-plugins", gc_null,
               "acknowledge the null plug-ins (silences the note)");
  gc->callback([&] { cmd_gaps_check(g, gc_m, gc_mu, gc_M, gc_logx, gc_null); });
  u64 gp_n = 0, gp_m = 0, gp_limit = 42000000000ULL;
  CLI::App* gp = gaps_cmd->add_subcommand(
      "power", "is there a prime strictly between n^m and (n+1)^m");
  gp->fallthrough();
  gp->add_option("--n", gp_n, "base n")->required();
  gp->add_option("--m", gp_m, "exponent m")->required();
  gp->add_option("--limit", gp_limit,
                 "sieve range guard (default 4.2e10)");
  gp->callback([&] { cmd_gaps_power(g, gp_n, gp_m, gp_limit); });

  // pnt table1 | row | ramanujan
  CLI::App* pnt_cmd =
      app.add_subcommand("pnt", "prime-number-theorem error thresholds");
  pnt_cmd->require_subcommand(1);
  pnt_cmd->fallthrough();
  CLI::App* t1 = pnt_cmd->add_subcommand(
      "table1", "the 11 threshold rows (CSV)");
  t1->fallthrough();
  t1->callback([&] { cmd_pnt_table1(g); });
  double r_X = kUnset, r_sigma = kUnset, r_M = kUnset;
  CLI::App* rr = pnt_cmd->add_subcommand("row", "one threshold row");
  rr->fallthrough();
  rr->add_option("--X", r_X, "threshold X = log x0");
  rr->add_option("--sigma", r_sigma,
                 "density-table sigma (default: eps0-optimal)");
  rr->add_option("--M", r_M, "explicit-formula constant (default 2.045)");
  rr->callback([&] { cmd_pnt_row(g, r_X, r_sigma, r_M); });
  double ram_x = kUnset;
  CLI::App* ram = pnt_cmd->add_subcommand(
      "ramanujan", "pi(x)^2 < (e x / log x) pi(x/e) checker");
  ram->fallthrough();
  ram->add_option("--x", ram_x, "evaluation point")->required();
  ram->callback([&] { cmd_pnt_ramanujan(g, ram_x); });

  try {
    app.parse(argc, argv);
    if (!g.output.empty()) {
      std::ofstream f(g.output);
      if (!f) throw io_error("cannot open output file: " + g.output);
      f << g.out.str();
      f.flush();
      if (!f) throw io_error("failed writing output file: " + g.output);
    } else {
      std::cout << g.out.str();
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
