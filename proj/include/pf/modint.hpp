#pragma once
// Integers modulo an arbitrary (not necessarily prime) modulus.  Each value
// carries its modulus so series code can stay generic; mixing moduli throws.
// Division exists only for invertible elements and reports the offender.

#include <string>

#include "pf/rational.hpp"

namespace pf {

class ModInt {
 public:
  ModInt(Int value, Int modulus);

  const Int& value() const { return v_; }
  const Int& modulus() const { return m_; }

  bool invertible() const;
  // Throws std::domain_error when gcd(value, modulus) > 1.
  ModInt inverse() const;

  ModInt& operator+=(const ModInt& o);
  ModInt& operator-=(const ModInt& o);
  ModInt& operator*=(const ModInt& o);

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(const ModInt& a, const ModInt& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }

 private:
  void check_same_modulus(const ModInt& o) const;
  Int v_, m_;
};

// Ring-constant hooks used by the generic series code (the default template
// versions construct R(0)/R(1), which ModInt cannot without a modulus).
inline ModInt ring_zero(const ModInt& like) { return ModInt(0, like.modulus()); }
inline ModInt ring_one(const ModInt& like) { return ModInt(1, like.modulus()); }
ModInt div_exact(const ModInt& x, unsigned long k);
inline ModInt mul_exact(const ModInt& x, unsigned long k) {
  return x * ModInt(Int(k), x.modulus());
}
inline ModInt ring_inverse(const ModInt& x) { return x.inverse(); }

std::string to_string(const ModInt& x);

}  // namespace pf
