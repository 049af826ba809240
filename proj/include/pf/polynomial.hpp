#pragma once
// Dense univariate polynomials over the exact rationals, coefficients stored
// in ascending order with no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree() == nullopt.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pf/rational.hpp"

namespace pf {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(std::size_t k, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const;

  // Coefficient of z^k; zero beyond the stored degree.
  const Rat& coeff(std::size_t k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rat& s);
  friend Poly operator/(const Poly& a, const Rat& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

// z^k * p(1/z): the reversal of p padded to length k+1.  Requires deg p <= k.
Poly reversed(const Poly& p, std::size_t k);

// Scalar division hook used by the generic series code.
inline Poly div_exact(const Poly& x, unsigned long k) {
  return x / Rat(static_cast<long>(k));
}

// "c0 + c1*z + c2*z^2" with zero terms skipped; "0" for the zero polynomial.
std::string to_string(const Poly& p, const std::string& var = "z");

}  // namespace pf
