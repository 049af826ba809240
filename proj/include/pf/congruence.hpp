#pragma once
// The pseudo-factorial sequence reduced mod M: residue tables, eventual
// periodicity (detected, with certification), and the approximation of the
// whole sequence by convergent quotients P_m/Q_m modulo |a_1 ... a_m|.

#include <cstddef>
#include <optional>
#include <vector>

#include "pf/rational.hpp"

namespace pf {

// alpha_n mod M for n < count; the recurrence evaluated entirely in Z/M
// (Pascal rows reduced as they are built).  M >= 2.
std::vector<Int> alpha_mod(const Int& modulus, std::size_t count);

struct PeriodInfo {
  std::size_t preperiod;
  std::size_t period;
};

// Smallest certified (period, then preperiod) of an eventually periodic
// sequence: the repeating tail must cover at least two full periods within
// the given values, otherwise nullopt (not certifiable at this horizon).
std::optional<PeriodInfo> detect_period(const std::vector<Int>& values);

// Rows M = 2..max_mod of alpha_n mod M, n < max_n.
std::vector<std::vector<Int>> residue_table(std::size_t max_mod,
                                            std::size_t max_n);

// |a_1 * ... * a_m| = 3^ceil(m/2) * (m!)^2.
Int canonical_modulus(std::size_t m);

struct ModularConvergent {
  std::vector<Int> p, q;  // ascending coefficients of P_m, Q_m reduced
  Int modulus;
};

// Convergent numerator/denominator at depth m, reduced mod the canonical
// modulus (first form) or a caller-chosen one (second form).
ModularConvergent modular_convergent(std::size_t m);
ModularConvergent modular_convergent(std::size_t m, const Int& modulus);

// sum_i Q_m[i] alpha_{n-i} == 0 (mod modulus) for all m <= n < count.
bool check_modular_recurrence(std::size_t m, const Int& modulus,
                              std::size_t count);

// First `count` series coefficients of P_m/Q_m over Z/modulus (Q_m(0) = 1).
std::vector<Int> convergent_series_mod(std::size_t m, const Int& modulus,
                                       std::size_t count);

// alpha_n == [z^n] P_m/Q_m (mod |a_1...a_m|) for all n < count.
bool check_series_congruence(std::size_t m, std::size_t count);

}  // namespace pf
