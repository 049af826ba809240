#pragma once
// Truncated power series over an exact coefficient ring R (rationals,
// polynomials over rationals, integers mod M).  A series carries its own
// truncation order = number of known coefficients; mixed-order arithmetic
// truncates to the shorter operand and nothing ever claims a coefficient at
// or beyond its order.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pf/polynomial.hpp"
#include "pf/rational.hpp"

namespace pf {

// Ring hooks.  The defaults construct from small integers / divide directly;
// rings that cannot (ModInt needs a modulus, Poly has no poly/poly division)
// supply their own overloads next to their class.
template <class R>
R ring_zero(const R&) {
  return R(0);
}
template <class R>
R ring_one(const R&) {
  return R(1);
}
template <class R>
R div_exact(const R& x, unsigned long k) {
  return x / R(static_cast<long>(k));
}
template <class R>
R mul_exact(const R& x, unsigned long k) {
  return x * R(static_cast<long>(k));
}
template <class R>
R ring_inverse(const R& x) {
  if (x == ring_zero(x)) throw std::domain_error("inverse of zero");
  return ring_one(x) / x;
}

template <class R>
class Series {
 public:
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs order >= 1");
  }

  static Series zero(std::size_t order, const R& like) {
    if (order == 0) throw std::invalid_argument("series needs order >= 1");
    return Series(std::vector<R>(order, ring_zero(like)));
  }

  std::size_t order() const { return c_.size(); }
  const R& operator[](std::size_t k) const { return c_.at(k); }
  R& at(std::size_t k) { return c_.at(k); }
  const std::vector<R>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!(x == ring_zero(x))) return false;
    }
    return true;
  }

  // Index of the first nonzero coefficient, if any.
  std::optional<std::size_t> valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!(c_[k] == ring_zero(c_[k]))) return k;
    }
    return std::nullopt;
  }

 private:
  std::vector<R> c_;
};

template <class R>
Series<R> truncated(const Series<R>& a, std::size_t order) {
  if (order == 0 || order > a.order()) {
    throw std::invalid_argument("truncated: bad order");
  }
  return Series<R>(
      std::vector<R>(a.coeffs().begin(), a.coeffs().begin() + order));
}

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c;
  c.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.push_back(a[k] + b[k]);
  return Series<R>(std::move(c));
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c;
  c.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.push_back(a[k] - b[k]);
  return Series<R>(std::move(c));
}

template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c(n, ring_zero(a[0]));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == ring_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series<R>(std::move(c));
}

template <class R>
Series<R> scale(const Series<R>& a, const R& s) {
  std::vector<R> c;
  c.reserve(a.order());
  for (const auto& x : a.coeffs()) c.push_back(x * s);
  return Series<R>(std::move(c));
}

template <class R>
Series<R> div_scalar(const Series<R>& a, unsigned long k) {
  std::vector<R> c;
  c.reserve(a.order());
  for (const auto& x : a.coeffs()) c.push_back(div_exact(x, k));
  return Series<R>(std::move(c));
}

// a(-z)
template <class R>
Series<R> negate_arg(const Series<R>& a) {
  std::vector<R> c = a.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = ring_zero(c[k]) - c[k];
  return Series<R>(std::move(c));
}

template <class R>
Series<R> derivative(const Series<R>& a) {
  if (a.order() < 2) throw std::invalid_argument("derivative: order < 2");
  std::vector<R> c;
  c.reserve(a.order() - 1);
  for (std::size_t k = 1; k < a.order(); ++k) {
    c.push_back(mul_exact(a[k], static_cast<unsigned long>(k)));
  }
  return Series<R>(std::move(c));
}

// Termwise integral with constant 0; gains one order.  Reports the exact
// coefficient at which a non-invertible division occurs (e.g. mod 4 at z^2).
template <class R>
Series<R> antiderivative(const Series<R>& a) {
  std::vector<R> c;
  c.reserve(a.order() + 1);
  c.push_back(ring_zero(a[0]));
  for (std::size_t k = 0; k < a.order(); ++k) {
    try {
      c.push_back(div_exact(a[k], static_cast<unsigned long>(k + 1)));
    } catch (const std::domain_error& e) {
      throw std::domain_error("antiderivative: coefficient of z^" +
                              std::to_string(k + 1) + ": " + e.what());
    }
  }
  return Series<R>(std::move(c));
}

template <class R>
Series<R> reciprocal(const Series<R>& a) {
  R inv0 = [&] {
    try {
      return ring_inverse(a[0]);
    } catch (const std::domain_error& e) {
      throw std::domain_error(std::string("reciprocal: constant term: ") +
                              e.what());
    }
  }();
  std::vector<R> b(a.order(), ring_zero(a[0]));
  b[0] = inv0;
  for (std::size_t n = 1; n < a.order(); ++n) {
    R s = ring_zero(a[0]);
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * b[n - k];
    b[n] = ring_zero(s) - inv0 * s;
  }
  return Series<R>(std::move(b));
}

// Coefficientwise equality over the common order.
template <class R>
bool agree(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k < n; ++k) {
    if (!(a[k] == b[k])) return false;
  }
  return true;
}

// sqrt with constant term 1, computed two independent ways (coefficient
// recurrence and Newton iteration); the results must match exactly.
template <class R>
Series<R> series_sqrt_recurrence(const Series<R>& a) {
  const R one = ring_one(a[0]);
  if (!(a[0] == one)) throw std::domain_error("sqrt: constant term is not 1");
  std::vector<R> r(a.order(), ring_zero(a[0]));
  r[0] = one;
  for (std::size_t n = 1; n < a.order(); ++n) {
    R inner = ring_zero(a[0]);
    for (std::size_t i = 1; i < n; ++i) inner += r[i] * r[n - i];
    const R rem = a[n] - inner;
    r[n] = div_exact(rem, 2);
  }
  return Series<R>(std::move(r));
}

template <class R>
Series<R> series_sqrt_newton(const Series<R>& a) {
  const R one = ring_one(a[0]);
  if (!(a[0] == one)) throw std::domain_error("sqrt: constant term is not 1");
  Series<R> x = Series<R>::zero(a.order(), a[0]);
  x.at(0) = one;
  // Each step doubles the valuation of the error, so ceil(log2 order) rounds.
  for (std::size_t reach = 1; reach < a.order(); reach *= 2) {
    x = div_scalar(add(x, mul(a, reciprocal(x))), 2);
  }
  return x;
}

template <class R>
Series<R> series_sqrt(const Series<R>& a) {
  Series<R> r = series_sqrt_recurrence(a);
  Series<R> n = series_sqrt_newton(a);
  if (!agree(r, n)) {
    throw std::logic_error("sqrt: recurrence and Newton routes disagree");
  }
  return r;
}

namespace detail {
template <class R>
Series<R> hyper_sum(const Series<R>& a, bool even, bool odd) {
  const R zero = ring_zero(a[0]);
  if (!(a[0] == zero)) {
    throw std::domain_error("series composition needs zero constant term");
  }
  const std::size_t n = a.order();
  std::vector<R> acc(n, zero);
  if (even) acc[0] = ring_one(a[0]);
  Series<R> term = Series<R>::zero(n, a[0]);
  term.at(0) = ring_one(a[0]);
  // term after m steps is a^m/m!, valuation >= m, so m < n suffices.
  for (std::size_t m = 1; m < n; ++m) {
    term = div_scalar(mul(term, a), static_cast<unsigned long>(m));
    if ((m % 2 == 0) ? even : odd) {
      for (std::size_t k = 0; k < n; ++k) acc[k] += term[k];
    }
  }
  return Series<R>(std::move(acc));
}
}  // namespace detail

template <class R>
Series<R> series_exp(const Series<R>& a) {
  return detail::hyper_sum(a, true, true);
}
template <class R>
Series<R> series_cosh(const Series<R>& a) {
  return detail::hyper_sum(a, true, false);
}
template <class R>
Series<R> series_sinh(const Series<R>& a) {
  return detail::hyper_sum(a, false, true);
}

// "c0 + c1*z + ... + O(z^N)"
std::string to_string(const Series<Rat>& s, const std::string& var = "z");

// Bivariate series over the rationals with total-degree truncation:
// coefficients c[i][j] of x^i y^j are stored for i + j < order.
class Series2 {
 public:
  explicit Series2(std::size_t order);

  std::size_t order() const { return order_; }
  const Rat& at(std::size_t i, std::size_t j) const;
  Rat& at(std::size_t i, std::size_t j);

  bool is_zero() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  // A(x)*B(y) from two univariate series of order >= this order.
  static Series2 outer(const Series<Rat>& a, const Series<Rat>& b,
                       std::size_t order);

  // Restriction y = 0, i.e. the row of coefficients of x^i y^0.
  Series<Rat> restrict_y0() const;

  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Series2& a, const Series2& b);
  Series2 operator*(const Rat& s) const;

 private:
  static void check_compatible(const Series2& a, const Series2& b);
  std::size_t order_;
  std::vector<std::vector<Rat>> c_;  // c_[i][j], i + j < order_
};

// f(x + y) for a univariate series f, to the given total order:
// the coefficient of x^i y^j is f[i+j] * C(i+j, i).
Series2 substitute_sum(const Series<Rat>& f, std::size_t order);

}  // namespace pf
