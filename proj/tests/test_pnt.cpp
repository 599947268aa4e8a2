#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "epc/common.hpp"
#include "epc/pnt.hpp"

using namespace epc;
using doctest::Approx;

namespace {
std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/epc_test_" + name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}
}  // namespace

TEST_CASE("bundled density constants match the data file") {
  const auto& embedded = pnt::density_table();
  REQUIRE(embedded.size() == 7);
  auto loaded =
      pnt::load_density_table(std::string(EPC_DATA_DIR) + "/table2.csv");
  REQUIRE(loaded.size() == embedded.size());
  for (size_t i = 0; i < embedded.size(); ++i) {
    CAPTURE(i);
    CHECK(loaded[i].sigma == embedded[i].sigma);
    CHECK(loaded[i].alpha == embedded[i].alpha);
    CHECK(loaded[i].d == embedded[i].d);
    CHECK(loaded[i].C1 == embedded[i].C1);
    CHECK(loaded[i].C2 == embedded[i].C2);
  }
  CHECK(embedded.front().sigma == 0.980);
  CHECK(embedded.front().C1 == 15.743);
  CHECK(embedded.back().sigma == 0.992);
  CHECK(embedded.back().C2 == 2.115);
}

TEST_CASE("density row lookup") {
  CHECK(pnt::density_row(0.984).C1 == 16.013);
  CHECK(pnt::density_row(0.988).C2 == 2.148);
  CHECK(pnt::density_row(0.99).alpha == 0.060);
  CHECK_THROWS_AS(pnt::density_row(0.985), domain_error);
  CHECK_THROWS_AS(pnt::density_row(0.9), domain_error);
}

TEST_CASE("density bound evaluation") {
  const auto& dc = pnt::density_row(0.980);
  CHECK(pnt::density_bound(dc, 1e6) == Approx(96761.77242644284).epsilon(1e-12));
  const double lT = std::log(1e6);
  CHECK(pnt::density_bound(dc, 1e6) ==
        Approx(dc.C1 * std::pow(1e6, 8.0 * 0.02 / 3.0) *
                   std::pow(lT, 5.0 - 1.96) +
               dc.C2 * lT * lT)
            .epsilon(1e-13));
  CHECK_THROWS_AS(pnt::density_bound(dc, 2.0), domain_error);
}

TEST_CASE("k factor") {
  CHECK(pnt::k_factor(0.980, 1000.0) == Approx(39278334.592821836).epsilon(1e-12));
  CHECK(pnt::log_k_factor(0.980, 1000.0) ==
        Approx(17.486183642201954).epsilon(1e-13));
  CHECK(std::fabs(pnt::k_factor(0.980, 1000.0) / 3.95e7 - 1.0) < 0.01);
  CHECK(pnt::k_factor(0.980, 1000.0) ==
        Approx(std::exp(pnt::log_k_factor(0.980, 1000.0))).epsilon(1e-14));
  CHECK_THROWS_AS(pnt::k_factor(0.980, 0.0), domain_error);
}

TEST_CASE("A assembly and its split") {
  const auto& dc = pnt::density_row(0.980);
  auto parts = pnt::A_of(0.980, 1000.0, pnt::kDefaultM, dc);
  CHECK(parts.A == Approx(269.17168140745702).epsilon(1e-12));
  CHECK(parts.c3 == Approx(0.18327391064495699).epsilon(1e-12));
  CHECK(parts.c4 == Approx(9.4096475444585437).epsilon(1e-12));
  CHECK(parts.c5 == Approx(0.28551246414930004).epsilon(1e-12));
  const double first = parts.A - parts.c3 - parts.c4 - parts.c5;
  CHECK(first == Approx(259.2932474882042).epsilon(1e-12));
  // loose documented split of the same assembly
  CHECK(first == Approx(259.3).epsilon(0.02));
  CHECK(parts.c3 == Approx(0.18).epsilon(0.02));
  CHECK(parts.c4 == Approx(9.5).epsilon(0.02));
  CHECK(parts.c5 == Approx(0.29).epsilon(0.02));
  // the 2.0025 2^{5-2 sigma} C1 leading term
  CHECK(first ==
        Approx(2.0025 * std::pow(2.0, 5.0 - 1.96) * dc.C1).epsilon(1e-12));
  CHECK_THROWS_AS(pnt::A_of(0.980, 1000.0, 0.0, dc), domain_error);
}

TEST_CASE("window and tail terms trade places as X grows") {
  const auto& dc = pnt::density_row(0.990);
  auto low = pnt::A_of(0.990, 1000.0, pnt::kDefaultM, dc);
  auto high = pnt::A_of(0.990, 10000.0, pnt::kDefaultM, dc);
  CHECK(low.c3 < low.c4);
  CHECK(high.c3 > high.c4);
}

TEST_CASE("exponents B and C") {
  auto [B, C] = pnt::bc_of(0.980);
  CHECK(B == Approx(1.52).epsilon(1e-15));
  CHECK(C == Approx(1.8933333333333333).epsilon(1e-15));
  auto [B2, C2] = pnt::bc_of(0.992);
  CHECK(B2 == Approx(1.508).epsilon(1e-15));
  CHECK(C2 == Approx(1.9573333333333334).epsilon(1e-15));
}

TEST_CASE("eps0 closed form") {
  const double q = 1000.0 / pnt::kR;
  const double expected =
      269.1 * std::pow(q, 1.52) * std::exp(-1.893 * std::sqrt(q));
  CHECK(pnt::eps0_of(1000.0, 269.1, 1.52, 1.893) == Approx(expected).epsilon(1e-13));
  CHECK_THROWS_AS(pnt::eps0_of(0.0, 269.1, 1.52, 1.893), domain_error);
}

TEST_CASE("threshold rows match the printed table") {
  const auto& cfgs = pnt::table1_configs();
  REQUIRE(cfgs.size() == 11);
  const double A4[11] = {269.2, 264.8, 264.3, 275.2, 266.5, 350.5,
                         267.8, 266.9, 266.8, 280.5, 268.6};
  for (size_t i = 0; i < cfgs.size(); ++i) {
    CAPTURE(cfgs[i].X);
    auto row = pnt::make_row(cfgs[i].X, cfgs[i].sigma);
    CHECK(row.A == Approx(A4[i]).epsilon(1e-12));
    // B and C carry table precision exactly
    if (cfgs[i].X == 4000.0) {
      CHECK(row.B == 1.512);  // the printed 1.5212 is a typographic slip
      CHECK(cfgs[i].B_printed == 1.5212);
    } else {
      CHECK(row.B == cfgs[i].B_printed);
    }
    CHECK(row.C == cfgs[i].C_printed);
    // the emitted eps0 is exactly the closed form of the emitted fields
    CHECK(row.eps0 == pnt::eps0_of(row.X, row.A, row.B, row.C));
    // and within 2 percent of the printed bound
    CHECK(row.eps0 == Approx(cfgs[i].eps0_printed).epsilon(0.02));
    // printed A column agreement: |dA| <= 0.5 absolute
    CHECK(std::fabs(row.A - cfgs[i].A_printed) <= 0.5);
  }
}

TEST_CASE("full-precision rows bypass the projection") {
  auto row = pnt::make_row(1000.0, 0.980, pnt::kDefaultM, false);
  CHECK(row.A == Approx(269.17168140745702).epsilon(1e-13));
  CHECK(row.B == Approx(1.52).epsilon(1e-15));
  CHECK(row.C == Approx(1.8933333333333333).epsilon(1e-15));
  CHECK(row.eps0 == Approx(6.852930099960206e-06).epsilon(1e-12));
  CHECK(row.eps0 == pnt::eps0_of(row.X, row.A, row.B, row.C));
}

TEST_CASE("a larger explicit-formula constant can only raise A") {
  auto base = pnt::make_row(1000.0, 0.980, 2.045, false);
  auto fat = pnt::make_row(1000.0, 0.980, 3.0, false);
  CHECK(fat.A > base.A);
  CHECK(fat.eps0 > base.eps0);
}

TEST_CASE("theta-version row") {
  auto base = pnt::make_row(1000.0, 0.980);
  auto th = pnt::theta_row(base);
  CHECK(th.A == Approx(base.A + 0.1).epsilon(1e-14));
  CHECK(th.B == base.B);
  CHECK(th.C == base.C);
  CHECK(th.eps0 == pnt::eps0_of(th.X, th.A, th.B, th.C));
  CHECK(th.eps0 > base.eps0);
}

TEST_CASE("sigma choice minimizes the bound at every printed threshold") {
  for (const auto& cfg : pnt::table1_configs()) {
    CAPTURE(cfg.X);
    CHECK(pnt::optimal_sigma(cfg.X) == Approx(cfg.sigma).epsilon(1e-12));
  }
}

TEST_CASE("ramanujan inequality check") {
  auto r = pnt::ramanujan_check(100000.0);
  CHECK(r.lhs == 92006464.0);  // pi(1e5)^2 = 9592^2, exact
  CHECK(r.rhs == Approx(92105324.96786347).epsilon(1e-12));
  CHECK(r.pass);
  auto tiny = pnt::ramanujan_check(5.0);
  CHECK(tiny.lhs == 9.0);
  CHECK(tiny.rhs == 0.0);  // x/e < 2 contributes no primes
  CHECK(!tiny.pass);
  auto two = pnt::ramanujan_check(2.0);
  CHECK(two.lhs == 1.0);
  CHECK(!two.pass);
  CHECK_THROWS_AS(pnt::ramanujan_check(1.9), domain_error);
  CHECK_THROWS_AS(pnt::ramanujan_check(5e10), domain_error);
}

TEST_CASE("density table parser failures") {
  auto missing = write_temp("density_missing.csv",
                            "sigma,alpha,d,C1,C2\n0.980,0.063,0.336\n");
  CHECK_THROWS_AS(pnt::load_density_table(missing), io_error);
  std::remove(missing.c_str());

  auto garbage = write_temp("density_garbage.csv",
                            "sigma,alpha,d,C1,C2\n0.980,x,0.336,15.743,2.214\n");
  CHECK_THROWS_AS(pnt::load_density_table(garbage), io_error);
  std::remove(garbage.c_str());

  auto headeronly = write_temp("density_header.csv", "sigma,alpha,d,C1,C2\n");
  CHECK_THROWS_AS(pnt::load_density_table(headeronly), io_error);
  std::remove(headeronly.c_str());

  CHECK_THROWS_AS(pnt::load_density_table("/nonexistent/table2.csv"), io_error);
}
