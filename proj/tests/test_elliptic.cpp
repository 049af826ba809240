#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "pf/elliptic.hpp"
#include "pf/pseudofact.hpp"

using C = std::complex<double>;

TEST_CASE("derived constants") {
  pf::EllipticConstants k = pf::constants();
  CHECK_EQ(k.gamma_third, doctest::Approx(2.678938534707748).epsilon(1e-14));
  CHECK_EQ(k.pi3, doctest::Approx(5.299916250856349).epsilon(1e-13));
  CHECK_EQ(k.r, doctest::Approx(0.7010910526627271).epsilon(1e-13));
  CHECK_EQ(k.rho, doctest::Approx(2.4286506478875816).epsilon(1e-13));

  // the advertised relations between them
  CHECK_EQ(k.r, doctest::Approx(k.pi3 / (6.0 * std::cbrt(2.0))).epsilon(1e-15));
  CHECK_EQ(k.rho, doctest::Approx(2.0 * std::sqrt(3.0) * k.r).epsilon(1e-15));

  CHECK_LE(std::abs(std::pow(k.zeta12, 12) - C(1.0)), 1e-12);
  CHECK_LE(std::abs(std::pow(k.zeta12, 6) + C(1.0)), 1e-12);
}

TEST_CASE("Dixonian functions by integration") {
  auto [s0, c0] = pf::dixon_sm_cm(0.0);
  CHECK_EQ(s0, 0.0);
  CHECK_EQ(c0, 1.0);

  // sm^3 + cm^3 = 1 along the pole-free stretch of the real axis (the last
  // half unit before either pole is excluded: fixed-step RK4 loses the
  // invariant past 1e-10 there)
  for (double x = -1.25; x <= 3.0; x += 0.25) {
    auto [s, c] = pf::dixon_sm_cm(x);
    CHECK_LE(std::abs(s * s * s + c * c * c - 1.0), 1e-10);
  }

  // the symmetry point: sm = cm = 2^(-1/3)
  pf::EllipticConstants k = pf::constants();
  auto [sh, ch] = pf::dixon_sm_cm(k.pi3 / 6.0);
  CHECK_LE(std::abs(sh - std::pow(2.0, -1.0 / 3.0)), 1e-9);
  CHECK_LE(std::abs(ch - std::pow(2.0, -1.0 / 3.0)), 1e-9);

  // the poles sit at -pi3/3 and +2*pi3/3
  CHECK_THROWS_AS(pf::dixon_sm_cm(-k.pi3 / 3.0 + 0.1), std::domain_error);
  CHECK_THROWS_AS(pf::dixon_sm_cm(2.0 * k.pi3 / 3.0 - 0.1), std::domain_error);
  CHECK_THROWS_AS(pf::dixon_sm_cm(-2.0), std::domain_error);
}

TEST_CASE("series matches the integrated Dixonian") {
  std::vector<double> grid;
  for (int i = -4; i <= 4; ++i) grid.push_back(0.1 * i);
  pf::NumericReport rep = pf::verify_dixon(grid, 40, 1e-8);
  REQUIRE_EQ(rep.size(), grid.size());
  for (const auto& line : rep) {
    CAPTURE(line.name);
    CAPTURE(line.deviation);
    CHECK(line.pass);
  }
  CHECK_THROWS_AS(pf::verify_dixon({0.6}, 40, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(pf::verify_dixon({0.1}, 30, 1e-8), std::invalid_argument);
}

TEST_CASE("special values on the real axis") {
  pf::EllipticConstants k = pf::constants();
  auto [p2, pp2] = pf::wp_eval(C(2.0 * k.r, 0.0));
  CHECK_LE(std::abs(p2), 1e-9);
  CHECK_LE(std::abs(pp2 - C(-2.0)), 1e-9);
  auto [p3, pp3] = pf::wp_eval(C(3.0 * k.r, 0.0));
  CHECK_LE(std::abs(p3 - C(-1.0)), 1e-9);
  CHECK_LE(std::abs(pp3), 1e-9);
}

TEST_CASE("differential equation on and beyond the direct disc") {
  // P'^2 = 4 P^3 + 4; the last four points force argument splitting
  const std::vector<C> pts{{0.5, 0.2},  {1.2, 0.0}, {0.0, 1.4},
                           {1.3, 0.9},  {2.0, -1.1}, {0.3, 2.1},
                           {-1.9, 0.4}};
  for (C z : pts) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    auto [p, pp] = pf::wp_eval(z);
    C res = pp * pp - 4.0 * p * p * p - 4.0;
    double scale = std::max(1.0, std::abs(pp * pp));
    CHECK_LE(std::abs(res) / scale, 1e-9);
  }
}

TEST_CASE("periodicity") {
  pf::EllipticConstants k = pf::constants();
  const double pi = 3.14159265358979323846;
  C w1 = std::polar(k.rho, pi / 6.0);
  C w2 = std::polar(k.rho, -pi / 6.0);
  C z(0.4, 0.3);
  auto [p, pp] = pf::wp_eval(z);
  for (C w : {w1, w2, w1 + w2}) {
    auto [ps, pps] = pf::wp_eval(z + w);
    CHECK_LE(std::abs(ps - p) / std::abs(p), 1e-8);
    CHECK_LE(std::abs(pps - pp) / std::abs(pp), 1e-8);
  }
}

TEST_CASE("lattice points are rejected") {
  pf::EllipticConstants k = pf::constants();
  const double pi = 3.14159265358979323846;
  C w1 = std::polar(k.rho, pi / 6.0);
  CHECK_THROWS_AS(pf::wp_eval(C(0.0)), std::domain_error);
  CHECK_THROWS_AS(pf::wp_eval(w1), std::domain_error);
  CHECK_THROWS_AS(pf::wp_eval(w1 + C(1e-8, 0.0)), std::domain_error);
  CHECK_THROWS_AS(pf::wp_eval(2.0 * w1), std::domain_error);
}

TEST_CASE("EGF against the P-quotient") {
  std::vector<C> grid{{-0.3, 0.0}, {-0.15, 0.0}, {0.0, 0.0},
                      {0.15, 0.0}, {0.3, 0.0}};
  pf::NumericReport rep = pf::verify_weierstrass(grid, 40, 1e-8);
  // four special-value lines come first
  REQUIRE_EQ(rep.size(), 4 + grid.size());
  for (const auto& line : rep) {
    CAPTURE(line.name);
    CAPTURE(line.deviation);
    CHECK(line.pass);
  }
  CHECK_THROWS_AS(pf::verify_weierstrass({C(0.4, 0.0)}, 40, 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(pf::verify_weierstrass({C(0.1, 0.0)}, 20, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("lattice sum reproduces the exact terms") {
  std::vector<pf::Int> exact = pf::alpha_seq(13);
  for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4),
                        std::size_t(8), std::size_t(11), std::size_t(12)}) {
    CAPTURE(n);
    pf::LatticeSum ls = pf::lattice_sum_alpha(n, 200);
    double want = exact[n].get_d();
    double rel = std::abs(ls.value - want) / std::abs(want);
    CHECK_LE(rel, n <= 10 ? 1e-6 : 1e-8);
    CHECK_FALSE(ls.imag_warning);
    CHECK_LE(ls.imag_residual, 1e-9);
  }
  CHECK_THROWS_AS(pf::lattice_sum_alpha(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(pf::lattice_sum_alpha(5, 0), std::invalid_argument);
}

TEST_CASE("asymptotic estimate") {
  std::vector<pf::Int> exact = pf::alpha_seq(41);
  for (std::size_t n = 2; n <= 40; ++n) {
    CAPTURE(n);
    double est = pf::asymptotic_alpha(n);
    CHECK_EQ(est > 0, exact[n] > 0);
  }
  auto rel = [&](std::size_t n) {
    double want = exact[n].get_d();
    return std::abs(pf::asymptotic_alpha(n) - want) / std::abs(want);
  };
  CHECK_LE(rel(4), 0.25);
  CHECK_LE(rel(10), 1e-6);
  CHECK_LE(rel(30), 0.01);
  CHECK_THROWS_AS(pf::asymptotic_alpha(1), std::invalid_argument);
}

TEST_CASE("a corrupted constant is caught by the second route") {
  setenv("PF_PERTURB_GAMMA", "1e-3", 1);
  CHECK_THROWS_AS(pf::constants(), std::runtime_error);
  unsetenv("PF_PERTURB_GAMMA");
  CHECK_NOTHROW(pf::constants());
}
