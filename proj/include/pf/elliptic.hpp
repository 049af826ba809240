#pragma once
// Floating-point territory: the Dixonian pair sm/cm integrated by Runge-
// Kutta, the Weierstrass function for invariants (g2, g3) = (0, -4) via its
// Laurent series plus addition-theorem reduction, the lattice-sum formula
// for alpha_n, and the leading-order asymptotics.  Everything exact lives in
// the other modules; these routines exist to check the numeric connections.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "pf/report.hpp"

namespace pf {

struct EllipticConstants {
  double gamma_third;           // Gamma(1/3)
  double pi3;                   // B(1/3,1/3) = sqrt(3) Gamma(1/3)^3 / (2 pi)
  double r;                     // pi3 / (6 cbrt(2))
  double rho;                   // 2 sqrt(3) r
  std::complex<double> zeta12;  // exp(i pi/6), a primitive 12th root of unity
};

// pi3 is computed two independent ways (the Gamma(1/3) literal and a
// quadrature with the endpoint singularity removed by substitution); a
// disagreement beyond 1e-11 throws.  The env var PF_PERTURB_GAMMA adds its
// value to the literal first - the hook tests use to prove that a corrupted
// constant propagates to a failing exit.
EllipticConstants constants();

// (sm x, cm x) where sm' = cm^2, cm' = -sm^2, sm(0) = 0, cm(0) = 1, by
// fixed-step fourth-order Runge-Kutta.  The nearest real poles sit at
// -pi3/3 and +2*pi3/3; x must stay 0.2 clear of both, else domain_error.
// A blow-up mid-integration throws runtime_error as a backstop.
std::pair<double, double> dixon_sm_cm(double x);

// f(z) against cbrt(2) * sm(pi3/6 - cbrt(2) z) on real samples, |z| <= 0.5.
// The truncated EGF (order >= 40) is the series side.
NumericReport verify_dixon(const std::vector<double>& zs, std::size_t order,
                           double tol);

// (P(z), P'(z)) for the lattice with invariants (0, -4).  Inside |z| <= 1.45
// the Laurent series is used directly; beyond, the argument is split
// asymmetrically and recombined with the addition theorem.  Inputs within
// 1e-6 of a lattice point are rejected.
std::pair<std::complex<double>, std::complex<double>> wp_eval(
    std::complex<double> z);

// f(i sqrt(3) z) = (-P'(z + 3r) - 2 i sqrt(3)) / (2 i sqrt(3) P(z + 3r)) on
// samples with |z| <= 0.3, plus the special values P(3r) = -1, P'(3r) = 0,
// P(2r) = 0, P'(2r) = -2 (tolerance 1e-9 for those).
NumericReport verify_weierstrass(const std::vector<std::complex<double>>& zs,
                                 std::size_t order, double tol);

struct LatticeSum {
  double value;          // the alpha_n estimate (real part of the sum)
  double imag_residual;  // |imag part| / |value|, ideally ~0
  bool imag_warning;     // set when the residual exceeds 1e-9
};

// alpha_n = -(n!/rho^(n+1)) * sum over the half-integer-shifted lattice of
// a 12th-root-of-unity phase over ((l-1/2) zeta + (m-1/2) zeta^-1)^(n+1),
// truncated to max(|l|,|m|) <= cutoff and Kahan-compensated.  n >= 2.
LatticeSum lattice_sum_alpha(std::size_t n, long cutoff);

// Leading-order pole estimate of alpha_n; n >= 2.
double asymptotic_alpha(std::size_t n);

}  // namespace pf
