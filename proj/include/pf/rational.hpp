#pragma once
// Exact scalar layer: arbitrary-precision integers and rationals on top of
// gmpxx, plus the factorial/binomial caches everything downstream leans on.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace pf {

using Int = mpz_class;
using Rat = mpq_class;

// n! through a process-wide memo table.
const Int& factorial(std::size_t n);

// Row n of Pascal's triangle, cached per row.
const std::vector<Int>& binomial_row(std::size_t n);

Int binomial(std::size_t n, std::size_t k);

// base^e for e >= 0.
Int pow_int(const Int& base, unsigned long e);

// a/b; throws std::domain_error on b = 0 instead of letting GMP abort.
Rat checked_div(const Rat& a, const Rat& b);

// Exact value when x has denominator 1; throws std::domain_error otherwise.
Int rat_to_int(const Rat& x);

// "p" or "p/q" in lowest terms; the format used for JSON payloads.
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Inverse of to_string; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

double to_double(const Rat& x);

}  // namespace pf
