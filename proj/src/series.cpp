#include "pf/series.hpp"

namespace pf {

std::string to_string(const Series<Rat>& s, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < s.order(); ++k) {
    const Rat& c = s[k];
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
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(s.order()) + ")";
}

Series2::Series2(std::size_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("bivariate series needs order >= 1");
  c_.resize(order);
  for (std::size_t i = 0; i < order; ++i) c_[i].assign(order - i, Rat(0));
}

const Rat& Series2::at(std::size_t i, std::size_t j) const {
  if (i + j >= order_) throw std::out_of_range("bivariate index beyond order");
  return c_[i][j];
}

Rat& Series2::at(std::size_t i, std::size_t j) {
  if (i + j >= order_) throw std::out_of_range("bivariate index beyond order");
  return c_[i][j];
}

bool Series2::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> Series2::first_nonzero()
    const {
  for (std::size_t d = 0; d < order_; ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      if (c_[i][d - i] != 0) return std::make_pair(i, d - i);
    }
  }
  return std::nullopt;
}

Series2 Series2::outer(const Series<Rat>& a, const Series<Rat>& b,
                       std::size_t order) {
  if (a.order() < order || b.order() < order) {
    throw std::invalid_argument("outer: univariate factors too short");
  }
  Series2 r(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) r.c_[i][j] = a[i] * b[j];
  }
  return r;
}

Series<Rat> Series2::restrict_y0() const {
  std::vector<Rat> c(order_);
  for (std::size_t i = 0; i < order_; ++i) c[i] = c_[i][0];
  return Series<Rat>(std::move(c));
}

void Series2::check_compatible(const Series2& a, const Series2& b) {
  if (a.order_ != b.order_) {
    throw std::invalid_argument("bivariate order mismatch");
  }
}

Series2 operator+(const Series2& a, const Series2& b) {
  Series2::check_compatible(a, b);
  Series2 r(a.order_);
  for (std::size_t i = 0; i < a.order_; ++i) {
    for (std::size_t j = 0; i + j < a.order_; ++j) {
      r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
    }
  }
  return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
  Series2::check_compatible(a, b);
  Series2 r(a.order_);
  for (std::size_t i = 0; i < a.order_; ++i) {
    for (std::size_t j = 0; i + j < a.order_; ++j) {
      r.c_[i][j] = a.c_[i][j] - b.c_[i][j];
    }
  }
  return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
  Series2::check_compatible(a, b);
  Series2 r(a.order_);
  for (std::size_t p = 0; p < a.order_; ++p) {
    for (std::size_t q = 0; p + q < a.order_; ++q) {
      if (a.c_[p][q] == 0) continue;
      for (std::size_t i = 0; p + q + i < a.order_; ++i) {
        for (std::size_t j = 0; p + q + i + j < a.order_; ++j) {
          r.c_[p + i][q + j] += a.c_[p][q] * b.c_[i][j];
        }
      }
    }
  }
  return r;
}

Series2 Series2::operator*(const Rat& s) const {
  Series2 r(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; i + j < order_; ++j) r.c_[i][j] = c_[i][j] * s;
  }
  return r;
}

Series2 substitute_sum(const Series<Rat>& f, std::size_t order) {
  if (f.order() < order) {
    throw std::invalid_argument("substitute_sum: series too short");
  }
  Series2 r(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) {
      r.at(i, j) = f[i + j] * Rat(binomial(i + j, i));
    }
  }
  return r;
}

}  // namespace pf
