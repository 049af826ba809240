// Acceptance gate: one line per criterion, exit 0 only if every one passes.
// Each criterion is self-contained and timed; budgets (where given) are part
// of the pass condition.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pf/cf.hpp"
#include "pf/congruence.hpp"
#include "pf/elliptic.hpp"
#include "pf/orthopoly.hpp"
#include "pf/pseudofact.hpp"
#include "pf/rational.hpp"
#include "pf/report.hpp"
#include "pf/series.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& label, double budget_ms,
               const std::function<bool()>& body) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [threw: ") + e.what() + "]";
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  bool in_budget = budget_ms <= 0.0 || ms <= budget_ms;
  if (ok && !in_budget) note += " [over budget]";
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  if (budget_ms > 0.0) {
    std::printf("%s criterion %2d: %s (%.1f ms, budget %.0f ms)%s\n",
                pass ? "PASS" : "FAIL", id, label.c_str(), ms, budget_ms,
                note.c_str());
  } else {
    std::printf("%s criterion %2d: %s (%.1f ms)%s\n", pass ? "PASS" : "FAIL",
                id, label.c_str(), ms, note.c_str());
  }
  std::fflush(stdout);
}

bool same_fraction(const pf::JFraction& x, const pf::JFraction& y) {
  return x.c == y.c && x.a == y.a;
}

}  // namespace

int main() {
  criterion(1, "pseudo-factorial terms 0..10 are exact", 1.0, [] {
    std::vector<pf::Int> a = pf::alpha_seq(11);
    const long want[11] = {1,    -1,    -2,    2,      16,    -40,
                           -320, 1040, 12160, -52480, -742400};
    if (a.size() != 11) return false;
    for (int i = 0; i < 11; ++i) {
      if (a[i] != want[i]) return false;
    }
    return true;
  });

  criterion(2, "continued-fraction coefficients agree across three routes to depth 30",
            5000.0, [] {
    pf::JFraction closed = pf::closed_form_jfraction(30);
    pf::JFraction sr =
        pf::jfraction_from_sr(pf::sr_decompose(pf::egf_f(70), 30));
    pf::JFraction ogf = pf::jfraction_from_ogf(pf::alpha_moments(70), 30);
    return same_fraction(closed, sr) && same_fraction(closed, ogf) &&
           closed.c.size() == 31 && closed.a.size() == 30;
  });

  criterion(3, "two-variable addition decomposition holds exactly to total order 20",
            10000.0, [] { return pf::verify_addition_formula(20); });

  criterion(4, "Upsilon t-expansion reproduces q_0..q_25; frozen eta/chi/J coefficients",
            30000.0, [] {
    pf::Report rep = pf::verify_qpoly_gf(25, 30);
    if (!pf::all_pass(rep) || rep.size() != 26) return false;

    pf::Series<pf::Rat> eta = pf::eta_series(10);
    pf::Series<pf::Rat> chi = pf::chi_series(10);
    pf::Series<pf::Rat> j = pf::bigJ_series(10);
    const long eta_scaled[8] = {1, 1, 2, 10, 24, 280, 400, 12880};
    const long chi_scaled[8] = {1, 0, 1, -2, 1, -100, -575, -7350};
    const long j_scaled[10] = {0, 1, 0, 3, 0, 45, 0, 1215, 0, 8505};
    for (std::size_t k = 0; k < 8; ++k) {
      if (pf::factorial(k) * eta[k] != eta_scaled[k]) return false;
      if (pf::factorial(k) * chi[k] != chi_scaled[k]) return false;
    }
    for (std::size_t k = 0; k < 10; ++k) {
      if (pf::factorial(k) * j[k] != j_scaled[k]) return false;
    }
    return true;
  });

  criterion(5, "Hankel determinants match product and closed forms for m <= 12",
            1000.0, [] {
    std::vector<pf::Int> moments = pf::alpha_seq(23);
    const char* first_six[6] = {"1", "-3", "-36", "11664", "60466176",
                                "-23509249228800"};
    for (std::size_t m = 1; m <= 12; ++m) {
      pf::Int d = pf::hankel(moments, m);
      if (d != pf::hankel_product_form(m)) return false;
      if (d != pf::hankel_closed_form(m)) return false;
      if (m <= 6 && d != pf::Int(first_six[m - 1])) return false;
    }
    return true;
  });

  criterion(6, "residue table, certified periods, divisibility by 11, modular recurrences",
            1000.0, [] {
    // residue grid against direct reduction of the exact terms
    std::vector<pf::Int> a = pf::alpha_seq(26);
    auto table = pf::residue_table(20, 26);
    if (table.size() != 19) return false;
    for (std::size_t m = 2; m <= 20; ++m) {
      for (std::size_t n = 0; n < 26; ++n) {
        pf::Int r = ((a[n] % m) + m) % m;
        if (table[m - 2][n] != r) return false;
      }
    }
    const long row7[10] = {1, 6, 5, 2, 2, 2, 2, 4, 1, 6};
    for (std::size_t n = 0; n < 10; ++n) {
      if (table[5][n] != row7[n]) return false;
    }

    auto p3 = pf::detect_period(pf::alpha_mod(pf::Int(3), 200));
    if (!p3 || p3->preperiod != 0 || p3->period != 2) return false;
    auto p7 = pf::detect_period(pf::alpha_mod(pf::Int(7), 200));
    if (!p7 || p7->preperiod != 1 || p7->period != 36) return false;

    auto mod11 = pf::alpha_mod(pf::Int(11), 200);
    for (std::size_t n = 11; n < 200; ++n) {
      if (mod11[n] != 0) return false;
    }

    for (std::size_t m = 1; m <= 7; ++m) {
      if (!pf::check_modular_recurrence(m, pf::canonical_modulus(m), 60)) {
        return false;
      }
      if (!pf::check_series_congruence(m, 60)) return false;
    }
    return true;
  });

  criterion(7, "the four defining identities hold coefficientwise to order 60",
            2000.0, [] {
    pf::Report rep = pf::check_identities(60);
    return pf::all_pass(rep) && rep.size() == 4;
  });

  criterion(8, "sm/cm match the EGF within 1e-8 on [-0.4,0.4]; pi3 starts 5.2999162508",
            0.0, [] {
    std::vector<double> grid;
    for (int i = -4; i <= 4; ++i) grid.push_back(0.1 * i);
    pf::NumericReport rep = pf::verify_dixon(grid, 40, 1e-8);
    if (!pf::all_pass(rep) || rep.size() != 9) return false;

    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", pf::constants().pi3);
    return std::string(buf).substr(0, 12) == "5.2999162508";
  });

  criterion(9, "Weierstrass quotient matches the EGF within 1e-8; special values within 1e-9",
            0.0, [] {
    std::vector<std::complex<double>> grid = {
        {-0.3, 0.0}, {-0.15, 0.0}, {0.0, 0.0}, {0.15, 0.0}, {0.3, 0.0}};
    pf::NumericReport rep = pf::verify_weierstrass(grid, 40, 1e-8);
    return pf::all_pass(rep) && rep.size() == 9;
  });

  criterion(10, "lattice sums reach alpha_2..alpha_20 at cutoff 200; asymptotic signs to n = 40",
            0.0, [] {
    std::vector<pf::Int> a = pf::alpha_seq(41);
    for (std::size_t n = 2; n <= 20; ++n) {
      pf::LatticeSum ls = pf::lattice_sum_alpha(n, 200);
      double exact = a[n].get_d();
      double rel = std::abs(ls.value - exact) / std::abs(exact);
      double tol = n <= 10 ? 1e-6 : 1e-8;
      if (rel > tol || ls.imag_warning) return false;
    }
    for (std::size_t n = 2; n <= 40; ++n) {
      if ((pf::asymptotic_alpha(n) > 0) != (a[n] > 0)) return false;
    }
    return true;
  });

  criterion(11, "secant corpus: weights (k!)^2, c_j = 0, a_j = j^2, phi_k = sec tan^k / k!",
            0.0, [] {
    const std::size_t order = 20;
    std::vector<pf::Rat> cos_c(order, pf::Rat(0));
    for (std::size_t k = 0; k < order; k += 2) {
      cos_c[k] = pf::Rat(k % 4 == 0 ? 1 : -1) / pf::Rat(pf::factorial(k));
    }
    pf::Series<pf::Rat> sec = pf::reciprocal(pf::Series<pf::Rat>(std::move(cos_c)));

    const long euler[5] = {1, 1, 5, 61, 1385};
    std::vector<pf::Rat> moments(order);
    for (std::size_t k = 0; k < order; ++k) {
      moments[k] = pf::Rat(pf::factorial(k)) * sec[k];
      if (k % 2 == 1 && moments[k] != 0) return false;
      if (k % 2 == 0 && k < 10 && moments[k] != euler[k / 2]) return false;
    }

    pf::SRDecomposition d = pf::sr_decompose(sec, 8);
    std::vector<pf::Rat> sin_c(order, pf::Rat(0));
    for (std::size_t k = 1; k < order; k += 2) {
      sin_c[k] = pf::Rat(k % 4 == 1 ? 1 : -1) / pf::Rat(pf::factorial(k));
    }
    pf::Series<pf::Rat> tan_s = pf::mul(pf::Series<pf::Rat>(std::move(sin_c)), sec);
    pf::Series<pf::Rat> power = pf::Series<pf::Rat>::zero(order, pf::Rat(0));
    power.at(0) = 1;
    for (std::size_t k = 0; k <= 8; ++k) {
      pf::Rat w = pf::Rat(pf::factorial(k)) * pf::Rat(pf::factorial(k));
      if (d.omega[k] != w) return false;
      pf::Series<pf::Rat> expect =
          pf::div_scalar(pf::mul(sec, power), pf::factorial(k).get_ui());
      if (!pf::agree(d.phi[k], expect)) return false;
      power = pf::mul(power, tan_s);
    }

    pf::JFraction from_sr = pf::jfraction_from_sr(d);
    pf::JFraction from_ogf = pf::jfraction_from_ogf(moments, 8);
    if (!same_fraction(from_sr, from_ogf)) return false;
    for (std::size_t j = 0; j <= 8; ++j) {
      if (from_sr.c[j] != 0) return false;
      if (j >= 1 && from_sr.a[j - 1] != pf::Rat(static_cast<long>(j * j))) {
        return false;
      }
    }
    return true;
  });

  if (failures == 0) {
    std::printf("ACCEPTANCE: all 11 criteria pass\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
  return 1;
}
