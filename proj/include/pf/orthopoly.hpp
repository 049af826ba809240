#pragma once
// The monic family q_k orthogonal for the moment functional L[z^n] = alpha_n,
// and its closed generating function: eta(t) cut out by a cubic, chi(t) a
// series square root, J(t) an integral, and
//   Upsilon(z,t) = eta(t) cosh(z J(t)) + chi(t) sinh(z J(t)),
// whose t-expansion has k-th coefficient q_k(z)/k!.

#include <cstddef>
#include <vector>

#include "pf/polynomial.hpp"
#include "pf/rational.hpp"
#include "pf/report.hpp"
#include "pf/series.hpp"

namespace pf {

// q_0..q_max_k via q_k = (z - c_{k-1}) q_{k-1} - a_{k-1} q_{k-2} with the
// closed-form fraction coefficients.
std::vector<Poly> q_family(std::size_t max_k);

// L[p*q] where L[z^n] = moments[n]; needs deg p + deg q < moments.size().
Rat inner_product(const Poly& p, const Poly& q,
                  const std::vector<Rat>& moments);

// The branch with eta(0) = 1 of
//   2 + 3t + 3t(1+t) eta - 2(1 - 3t^2 + 3t^4) eta^3 = 0,
// solved coefficient by coefficient.
Series<Rat> eta_series(std::size_t order);

// Exact spot-check of the rational parametrization of that cubic,
//   t = w(w^2+3) / (3(w^2+1)),  eta = 3(w+1)(w^2+1) / (w^4+3),
// at w = 1..count.
bool curve_param_check(std::size_t count);

// chi = sqrt(eta^2 - 2t(1+t)/(1 - 3t^2 + 3t^4)); constant term 1.
Series<Rat> chi_series(std::size_t order);

// J = integral_0^t du / sqrt(1 - 3u^2 + 3u^4).
Series<Rat> bigJ_series(std::size_t order);

// Upsilon as a t-series whose coefficients are polynomials in z.
Series<Poly> upsilon_series(std::size_t order);

// Checks k! [t^k] Upsilon == q_k and deg q_k == k for every k <= max_k,
// expanding to t-order `order` (must exceed max_k).  One line per k.
Report verify_qpoly_gf(std::size_t max_k, std::size_t order);

}  // namespace pf
