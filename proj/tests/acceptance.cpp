// Acceptance harness: exercises every shipped-contract criterion end to end
// and prints one line per criterion (PASS or FAIL, with wall-clock seconds).
// The exit status is the number of failed criteria.
//
// Usage: acceptance [--zeros <ordinate table>] [--data <data dir>] [--slow]
//
// Criteria 1-3 drive the installed command-line binary through a shell so the
// full parse -> compute -> format path is covered; the rest call the library
// directly. The slow criterion (9) walks a segmented sieve to 3.8e10 and only
// runs when --slow is given.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "epc/arith.hpp"
#include "epc/common.hpp"
#include "epc/explicit_formula.hpp"
#include "epc/perron.hpp"
#include "epc/pnt.hpp"
#include "epc/wolke.hpp"
#include "epc/zeros.hpp"

namespace {

using namespace epc;

struct Outcome {
  bool pass = true;
  std::string reason;
};

// Record the first failure; later ones on the same criterion add no signal.
void fail(Outcome& o, const std::string& why) {
  if (o.pass) {
    o.pass = false;
    o.reason = why;
  }
}

int run_criterion(int n, double limit_s,
                  const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.reason = std::string("exception: ") + e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (o.pass && limit_s > 0.0 && dt > limit_s) {
    std::ostringstream ss;
    ss << "runtime " << dt << " s exceeds the " << limit_s << " s budget";
    o.pass = false;
    o.reason = ss.str();
  }
  if (o.pass) {
    std::printf("C%d PASS (%.2f s)\n", n, dt);
  } else {
    std::printf("C%d FAIL (%.2f s): %s\n", n, dt, o.reason.c_str());
  }
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

struct ShellResult {
  int status = -1;
  std::string out;
};

ShellResult shell(const std::string& cmd) {
  ShellResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  if (rc >= 0 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Extract "<key>=<number>" from a line of CLI output.
bool parse_key(const std::string& out, const std::string& key, double* v) {
  const std::string tag = key + "=";
  std::size_t pos = out.find(tag);
  while (pos != std::string::npos && pos != 0 && out[pos - 1] != '\n')
    pos = out.find(tag, pos + 1);
  if (pos == std::string::npos) return false;
  *v = std::strtod(out.c_str() + pos + tag.size(), nullptr);
  return true;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

double median9(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  std::string zeros_path = std::string(EPC_DATA_DIR) + "/zeros_10k.txt";
  std::string data_dir = EPC_DATA_DIR;
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--zeros" && i + 1 < argc) {
      zeros_path = argv[++i];
    } else if (a == "--data" && i + 1 < argc) {
      data_dir = argv[++i];
    } else if (a == "--slow") {
      slow = true;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", a.c_str());
      return 64;
    }
  }
  const std::string cli = EPC_CLI_PATH;

  int failures = 0;

  // C1: every bundled K configuration, via the CLI, within 2% of the
  // published value.
  failures += run_criterion(1, 60.0, [&]() {
    Outcome o;
    const auto rows = wolke::table3_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::string cmd = cli + " wolke k --log-xk " + fmt17(r.log_xK) +
                        " --alpha " + fmt17(r.alpha);
      if (r.omega_bar > 0.0)
        cmd += " --omega-bar " + fmt17(r.omega_bar) + " --dd " + fmt17(r.D);
      cmd += " --full-precision 2>/dev/null";
      const ShellResult res = shell(cmd);
      double K = 0.0;
      if (res.status != 0 || !parse_key(res.out, "K", &K)) {
        fail(o, "row " + std::to_string(i + 1) + ": CLI run failed");
        continue;
      }
      if (rel_err(K, r.K_printed) > 0.02)
        fail(o, "row " + std::to_string(i + 1) + ": K=" + fmt17(K) +
                    " not within 2% of " + fmt17(r.K_printed));
    }
    return o;
  });

  // C2: every bundled M configuration, via the CLI, feeding in the published
  // K for that row, within 2% of the published M.
  failures += run_criterion(2, 60.0, [&]() {
    Outcome o;
    const auto rows = explicit_formula::table4_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const std::string cmd = cli + " explicit m --log-xm " +
                              fmt17(r.log_xM) + " --alpha " + fmt17(r.alpha) +
                              " --lambda " + fmt17(r.lambda) + " --k " +
                              fmt17(r.K_printed) + " --omega " +
                              fmt17(r.omega) + " --full-precision 2>/dev/null";
      const ShellResult res = shell(cmd);
      double M = 0.0;
      if (res.status != 0 || !parse_key(res.out, "M", &M)) {
        fail(o, "row " + std::to_string(i + 1) + ": CLI run failed");
        continue;
      }
      if (rel_err(M, r.M_printed) > 0.02)
        fail(o, "row " + std::to_string(i + 1) + ": M=" + fmt17(M) +
                    " not within 2% of " + fmt17(r.M_printed));
    }
    return o;
  });

  // C3: critical-line variants of both constants.
  failures += run_criterion(3, 10.0, [&]() {
    Outcome o;
    const ShellResult kres =
        shell(cli +
              " wolke k --rh --log-xk 1000 --alpha 0.5 --omega-bar 3 "
              "--dd 0.4 --full-precision 2>/dev/null");
    double K = 0.0;
    if (kres.status != 0 || !parse_key(kres.out, "K", &K))
      fail(o, "critical-line K run failed");
    else if (rel_err(K, 0.6373) > 0.01)
      fail(o, "K=" + fmt17(K) + " not within 1% of 0.6373");

    const ShellResult mres = shell(
        cli + " explicit m --rh --log-xm 1000 --full-precision 2>/dev/null");
    double M = 0.0;
    if (mres.status != 0 || !parse_key(mres.out, "M", &M))
      fail(o, "critical-line M run failed");
    else if (rel_err(M, 4.150) > 0.01)
      fail(o, "M=" + fmt17(M) + " not within 1% of 4.150");
    return o;
  });

  // C4: every threshold row: A loosely, B and C to printed precision (with
  // the one documented discrepancy), eps0 within 2%. The bundled density
  // grid must also match the shipped CSV it was transcribed from.
  failures += run_criterion(4, 5.0, [&]() {
    Outcome o;
    const auto shipped = pnt::load_density_table(data_dir + "/table2.csv");
    const auto bundled = pnt::density_table();
    if (shipped.size() != bundled.size()) {
      fail(o, "density CSV row count mismatch");
      return o;
    }
    for (std::size_t i = 0; i < shipped.size(); ++i) {
      if (shipped[i].sigma != bundled[i].sigma ||
          shipped[i].alpha != bundled[i].alpha ||
          shipped[i].d != bundled[i].d || shipped[i].C1 != bundled[i].C1 ||
          shipped[i].C2 != bundled[i].C2)
        fail(o, "density CSV row " + std::to_string(i + 1) +
                    " differs from the bundled grid");
    }

    for (const auto& cfg : pnt::table1_configs()) {
      const pnt::PNTRow row = pnt::make_row(cfg.X, cfg.sigma);
      const std::string label = "X=" + fmt17(cfg.X);
      const double tol_A = std::max(0.5, 0.02 * cfg.A_printed);
      if (std::abs(row.A - cfg.A_printed) > tol_A)
        fail(o, label + ": A=" + fmt17(row.A) + " vs printed " +
                    fmt17(cfg.A_printed));
      // The X=4000 published B is a typo; the computed value is 1.512.
      const double expect_B = cfg.X == 4000.0 ? 1.512 : cfg.B_printed;
      if (std::abs(row.B - expect_B) > 5e-13)
        fail(o, label + ": B=" + fmt17(row.B) + " vs " + fmt17(expect_B));
      if (std::abs(row.C - cfg.C_printed) > 5e-13)
        fail(o, label + ": C=" + fmt17(row.C) + " vs printed " +
                    fmt17(cfg.C_printed));
      if (rel_err(row.eps0, cfg.eps0_printed) > 0.02)
        fail(o, label + ": eps0=" + fmt17(row.eps0) + " vs printed " +
                    fmt17(cfg.eps0_printed));
    }
    return o;
  });

  // C5: windowed zero counts over t in (1, 50] step 0.01, all passing.
  failures += run_criterion(5, 1.0, [&]() {
    Outcome o;
    const zeros::ZeroDataset ds = zeros::load_zeros(zeros_path);
    if (!(ds.max_height >= 52.0))
      fail(o, "zero table tops out below 52: " + fmt17(ds.max_height));
    const auto rows = zeros::window_count_check(ds, 1.01, 50.0, 0.01);
    if (rows.size() != 4900)
      fail(o, "expected 4900 grid rows, got " + std::to_string(rows.size()));
    for (const auto& r : rows)
      if (!r.pass) {
        fail(o, "window count exceeds the bound at t=" + fmt17(r.t));
        break;
      }
    return o;
  });

  // C6: empirical residuals: dominated by the 2x log^2 x / T envelope at
  // every (x, T) point, and the pooled median residual roughly halves
  // (within factor 1.5) when T increases fourfold.
  failures += run_criterion(6, 60.0, [&]() {
    Outcome o;
    const zeros::ZeroDataset ds = zeros::load_zeros(zeros_path);
    const arith::SieveTable sieve(10000002);
    const double xs[] = {100000.5, 1000000.5, 10000000.5};
    const double T_envelope[] = {100.0, 500.0, 1000.0, 5000.0};
    const double T_small[] = {100.0, 500.0, 1000.0};
    const double T_big[] = {400.0, 2000.0, 4000.0};

    for (double x : xs)
      for (double T : T_envelope) {
        const auto rep = explicit_formula::empirical_residual(ds, sieve, x, T);
        const double lx = std::log(x);
        const double envelope = 2.0 * x * lx * lx / T;
        if (rep.residual > envelope)
          fail(o, "residual " + fmt17(rep.residual) + " exceeds " +
                      fmt17(envelope) + " at x=" + fmt17(x) +
                      ", T=" + fmt17(T));
      }

    std::vector<double> small_res, big_res;
    for (double x : xs) {
      for (double T : T_small)
        small_res.push_back(
            explicit_formula::empirical_residual(ds, sieve, x, T).residual);
      for (double T : T_big)
        big_res.push_back(
            explicit_formula::empirical_residual(ds, sieve, x, T).residual);
    }
    const double ratio = median9(big_res) / median9(small_res);
    if (!(ratio >= 1.0 / 3.0 && ratio <= 0.75))
      fail(o, "median residual ratio at 4T is " + fmt17(ratio) +
                  ", outside [1/3, 3/4]");
    return o;
  });

  // C7: closed-form identities and internal consistency.
  failures += run_criterion(7, 0.0, [&]() {
    Outcome o;
    if (std::abs(perron::c_const() * kPi * perron::theta_prime() - 1.0) >
        1e-12)
      fail(o, "c * pi * theta' deviates from 1");
    if (std::abs(perron::theta_prime() - 0.29130) > 1e-5)
      fail(o, "theta' deviates from 0.29130: " + fmt17(perron::theta_prime()));

    const arith::SieveTable sieve(1000000);
    const double xs[] = {2.0,     10.0,     100.5,    1000.0,
                         54321.0, 999999.0, 1000000.0};
    for (double x : xs) {
      const double direct = sieve.psi(x);
      const double via = sieve.psi_via_theta(x);
      if (std::abs(direct - via) > 1e-6 * std::max(1.0, std::abs(direct)))
        fail(o, "psi mismatch at x=" + fmt17(x) + ": " + fmt17(direct) +
                    " vs " + fmt17(via));
    }

    for (const auto& cfg : pnt::table1_configs()) {
      const pnt::PNTRow row = pnt::make_row(cfg.X, cfg.sigma);
      const double recon = pnt::eps0_of(row.X, row.A, row.B, row.C);
      if (rel_err(row.eps0, recon) > 0.02)
        fail(o, "eps0 self-consistency breaks at X=" + fmt17(cfg.X));
      const double printed_B = cfg.X == 4000.0 ? 1.512 : cfg.B_printed;
      const double recon_printed =
          pnt::eps0_of(cfg.X, cfg.A_printed, printed_B, cfg.C_printed);
      if (rel_err(recon_printed, cfg.eps0_printed) > 0.02)
        fail(o, "printed-row eps0 reconstruction breaks at X=" +
                    fmt17(cfg.X));
    }
    return o;
  });

  // C8: the K floor 2/pi holds for every full-log-power configuration.
  failures += run_criterion(8, 0.0, [&]() {
    Outcome o;
    const double floor_v = 2.0 / kPi - 1e-9;
    for (const auto& r : wolke::table3_rows()) {
      wolke::WolkeParams p;
      p.log_xK = r.log_xK;
      p.alpha = r.alpha;
      p.omega_bar = r.omega_bar;
      p.D = r.D;
      if (p.omega() != 1.0) continue;
      const double K = wolke::K_constant(p);
      if (!(K >= floor_v))
        fail(o, "K=" + fmt17(K) + " below 2/pi at log_xK=" + fmt17(r.log_xK));
    }
    wolke::WolkeParams synth;
    synth.log_xK = 1e13;
    synth.alpha = 0.5;
    synth.omega_bar = 2.0;
    synth.D = 0.54;
    if (!(wolke::K_constant(synth) >= floor_v))
      fail(o, "synthetic full-power K dips below 2/pi");
    wolke::WolkeParams rh;
    rh.log_xK = 1000.0;
    rh.alpha = 0.5;
    rh.omega_bar = 3.0;
    rh.D = 0.4;
    if (!(wolke::K_constant_rh(rh) >= floor_v))
      fail(o, "critical-line K dips below 2/pi");
    return o;
  });

  // C9 (only with --slow): the squared-count inequality flips exactly at the
  // last known counterexample. One merged segmented-sieve pass covers both
  // evaluation points and both x/e points.
  if (slow) {
    failures += run_criterion(9, 600.0, [&]() {
      Outcome o;
      if (!pnt::ramanujan_check(100000.0).pass)
        fail(o, "inequality unexpectedly fails at x=100000");

      const double x_last = 38358837682.0;
      const double x_past = 38358837683.0;
      std::vector<u64> pts = {
          static_cast<u64>(x_last / kE), static_cast<u64>(x_past / kE),
          static_cast<u64>(x_last), static_cast<u64>(x_past)};
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      const std::vector<u64> counts = arith::pi_checkpoints(pts);
      const auto count_at = [&](u64 v) -> u64 {
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (pts[i] == v) return counts[i];
        throw std::runtime_error("checkpoint lookup failed");
      };
      // Same arithmetic as the library check, fed from the merged counts.
      const auto holds = [&](double x) {
        const u64 pi_x = count_at(static_cast<u64>(x));
        const u64 pi_xe = count_at(static_cast<u64>(x / kE));
        const u64 lhs = pi_x * pi_x;
        const long double rhs = static_cast<long double>(kE) *
                                static_cast<long double>(x) /
                                std::log(static_cast<long double>(x)) *
                                static_cast<long double>(pi_xe);
        return static_cast<long double>(lhs) < rhs;
      };
      if (holds(x_last))
        fail(o, "inequality unexpectedly holds at x=38358837682");
      if (!holds(x_past)) fail(o, "inequality fails at x=38358837683");
      return o;
    });
  } else {
    std::printf("C9 SKIP (pass --slow to run the sieve boundary check)\n");
  }

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
