#include "pf/rational.hpp"

#include <stdexcept>

#include "pf/matrix.hpp"
#include "pf/modint.hpp"
#include "pf/polynomial.hpp"

namespace pf {

const Int& factorial(std::size_t n) {
  static std::vector<Int> cache{Int(1)};
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

const std::vector<Int>& binomial_row(std::size_t n) {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t k = 1; k + 1 < row.size(); ++k) {
      row[k] = prev[k - 1] + prev[k];
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return Int(0);
  return binomial_row(n)[k];
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat checked_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("division by zero rational");
  return a / b;
}

Int rat_to_int(const Rat& x) {
  Rat r = x;
  r.canonicalize();  // two-argument Rat construction does not reduce
  if (r.get_den() != 1) {
    throw std::domain_error("rational " + to_string(r) + " is not an integer");
  }
  return r.get_num();
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat x;
  if (s.empty() || mpq_set_str(x.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("cannot parse rational from \"" + s + "\"");
  }
  if (x.get_den() == 0) {
    throw std::invalid_argument("zero denominator in \"" + s + "\"");
  }
  x.canonicalize();
  return x;
}

double to_double(const Rat& x) { return x.get_d(); }

// ---- Poly ----------------------------------------------------------------

Poly::Poly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(std::size_t k, const Rat& coeff) {
  if (coeff == 0) return Poly();
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

const Rat& Poly::coeff(std::size_t k) const {
  static const Rat zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rat& s) {
  if (s == 0) return Poly();
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly operator/(const Poly& a, const Rat& s) {
  if (s == 0) throw std::domain_error("polynomial division by zero scalar");
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x /= s;
  return Poly(std::move(c));
}

Poly reversed(const Poly& p, std::size_t k) {
  auto d = p.degree();
  if (d && *d > k) {
    throw std::invalid_argument("reversed: polynomial degree exceeds k");
  }
  std::vector<Rat> c(k + 1, Rat(0));
  if (d) {
    for (std::size_t i = 0; i <= *d; ++i) c[k - i] = p.coeff(i);
  }
  return Poly(std::move(c));
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k <= *p.degree(); ++k) {
    const Rat& c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == 1 && k > 0);
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// ---- ModInt ---------------------------------------------------------------

ModInt::ModInt(Int value, Int modulus) : v_(std::move(value)), m_(std::move(modulus)) {
  if (m_ < 2) throw std::invalid_argument("modulus must be at least 2");
  v_ %= m_;
  if (v_ < 0) v_ += m_;
}

void ModInt::check_same_modulus(const ModInt& o) const {
  if (m_ != o.m_) {
    throw std::invalid_argument("mixed moduli " + m_.get_str() + " and " +
                                o.m_.get_str());
  }
}

bool ModInt::invertible() const {
  Int g;
  mpz_gcd(g.get_mpz_t(), v_.get_mpz_t(), m_.get_mpz_t());
  return g == 1;
}

ModInt ModInt::inverse() const {
  Int r;
  if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), m_.get_mpz_t()) == 0) {
    throw std::domain_error(v_.get_str() + " is not invertible mod " +
                            m_.get_str());
  }
  return ModInt(std::move(r), m_);
}

ModInt& ModInt::operator+=(const ModInt& o) {
  check_same_modulus(o);
  v_ += o.v_;
  if (v_ >= m_) v_ -= m_;
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
  check_same_modulus(o);
  v_ -= o.v_;
  if (v_ < 0) v_ += m_;
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
  check_same_modulus(o);
  v_ = (v_ * o.v_) % m_;
  return *this;
}

ModInt div_exact(const ModInt& x, unsigned long k) {
  return x * ModInt(Int(k), x.modulus()).inverse();
}

std::string to_string(const ModInt& x) { return x.value().get_str(); }

// ---- determinants ----------------------------------------------------------

namespace {

void check_square(std::size_t n, const IntMatrix& a) {
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
}

}  // namespace

Int bareiss_det(IntMatrix a) {
  const std::size_t n = a.size();
  check_square(n, a);
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return Int(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Exact by the Bareiss identity: prev divides t.
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rat det(const RatMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix scaled(n);
  Int total_scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (const auto& x : a[i]) {
      Int d = x.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    scaled[i].reserve(a[i].size());
    for (const auto& x : a[i]) {
      Rat y = x * Rat(l);
      scaled[i].push_back(rat_to_int(y));
    }
    total_scale *= l;
  }
  return Rat(bareiss_det(std::move(scaled))) / Rat(total_scale);
}

}  // namespace pf
