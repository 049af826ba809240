#pragma once
// The pseudo-factorial sequence: a_{n+1} = (-1)^(n+1) * sum C(n,k) a_k a_{n-k}
// with a_0 = 1, its exponential generating function f, the auxiliary series
// built from f, and the symbolic identities they satisfy.

#include <cstddef>
#include <utility>
#include <vector>

#include "pf/rational.hpp"
#include "pf/report.hpp"
#include "pf/series.hpp"

namespace pf {

// a_0 .. a_{n-1}, exact integers via a cached Pascal table.
std::vector<Int> alpha_seq(std::size_t n);

// Same values as rationals, for use as a moment sequence.
std::vector<Rat> alpha_moments(std::size_t n);

// f(z) = sum a_n z^n / n! to the given order.
Series<Rat> egf_f(std::size_t order);

// h = f + f', sigma = 1 - f(z) f(-z), g = -f(z) f(-z).
Series<Rat> h_series(std::size_t order);
Series<Rat> sigma_series(std::size_t order);
Series<Rat> g_series(std::size_t order);

// The Dixonian pair: sm' = cm^2, cm' = -sm^2, sm(0) = 0, cm(0) = 1.
std::pair<Series<Rat>, Series<Rat>> sm_cm_series(std::size_t order);

// Coefficientwise checks of the four defining identities:
//   f'(z) = -f(-z)^2,  f(z)^3 + f(-z)^3 = 2,
//   g'(z)^2 = 4 g(z)^3 + 4,  sm^3 + cm^3 = 1.
Report check_identities(std::size_t order);

// The two-variable decomposition of f(x+y):
//   f(x+y) * (1 - sigma(x) sigma(y)/3) = f(x) f(y) - h(x) h(y)/3,
// checked exactly in cross-multiplied form to the given total order.
bool verify_addition_formula(std::size_t order);

// Same check against a caller-supplied EGF (order >= total_order + 1); lets
// tests confirm that perturbing any coefficient breaks the identity.
bool verify_addition_formula_for(const Series<Rat>& f, std::size_t total_order);

}  // namespace pf
