#include "pf/congruence.hpp"

#include <stdexcept>

#include "pf/cf.hpp"
#include "pf/modint.hpp"
#include "pf/series.hpp"

namespace pf {

std::vector<Int> alpha_mod(const Int& modulus, std::size_t count) {
  if (modulus < 2) throw std::invalid_argument("alpha_mod: modulus >= 2");
  std::vector<Int> a;
  a.reserve(count);
  if (count == 0) return a;
  a.push_back(Int(1) % modulus);
  std::vector<Int> row{Int(1)};  // Pascal row mod modulus
  for (std::size_t m = 0; m + 1 < count; ++m) {
    Int s(0);
    for (std::size_t k = 0; k <= m; ++k) s += row[k] * a[k] % modulus * a[m - k];
    s %= modulus;
    if (m % 2 == 0) s = -s;
    if (s < 0) s += modulus;
    a.push_back(s);
    std::vector<Int> next(m + 2, Int(1));
    for (std::size_t k = 1; k <= m; ++k) next[k] = (row[k - 1] + row[k]) % modulus;
    row = std::move(next);
  }
  return a;
}

std::optional<PeriodInfo> detect_period(const std::vector<Int>& values) {
  const std::size_t h = values.size();
  for (std::size_t p = 1; 2 * p <= h; ++p) {
    // Smallest s with values[i] == values[i+p] for all i in [s, h-p).
    std::size_t s = h - p;
    while (s > 0 && values[s - 1] == values[s - 1 + p]) --s;
    if (s + 2 * p <= h) return PeriodInfo{s, p};
  }
  return std::nullopt;
}

std::vector<std::vector<Int>> residue_table(std::size_t max_mod,
                                            std::size_t max_n) {
  if (max_mod < 2) throw std::invalid_argument("residue_table: max_mod >= 2");
  std::vector<std::vector<Int>> rows;
  rows.reserve(max_mod - 1);
  for (std::size_t m = 2; m <= max_mod; ++m) {
    rows.push_back(alpha_mod(Int(static_cast<unsigned long>(m)), max_n));
  }
  return rows;
}

Int canonical_modulus(std::size_t m) {
  if (m == 0) throw std::invalid_argument("canonical_modulus: m >= 1");
  Int f = factorial(m);
  return pow_int(Int(3), (m + 1) / 2) * f * f;
}

ModularConvergent modular_convergent(std::size_t m, const Int& modulus) {
  if (m == 0) throw std::invalid_argument("modular_convergent: m >= 1");
  if (modulus < 2) throw std::invalid_argument("modular_convergent: modulus >= 2");
  auto conv = convergents(closed_form_jfraction(m), m);
  const Convergent& last = conv.back();

  auto reduce = [&](const Poly& poly) {
    std::vector<Int> out;
    std::size_t deg = poly.is_zero() ? 0 : *poly.degree();
    out.reserve(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) {
      Int v = rat_to_int(poly.coeff(i)) % modulus;
      if (v < 0) v += modulus;
      out.push_back(v);
    }
    return out;
  };
  return {reduce(last.p), reduce(last.q), modulus};
}

ModularConvergent modular_convergent(std::size_t m) {
  return modular_convergent(m, canonical_modulus(m));
}

bool check_modular_recurrence(std::size_t m, const Int& modulus,
                              std::size_t count) {
  auto conv = convergents(closed_form_jfraction(m), m);
  const Poly& q = conv.back().q;
  std::size_t deg = *q.degree();
  std::vector<Int> alpha = alpha_mod(modulus, count);
  for (std::size_t n = m; n < count; ++n) {
    Int s(0);
    for (std::size_t i = 0; i <= deg && i <= n; ++i) {
      s += rat_to_int(q.coeff(i)) * alpha[n - i];
    }
    if (s % modulus != 0) return false;
  }
  return true;
}

std::vector<Int> convergent_series_mod(std::size_t m, const Int& modulus,
                                       std::size_t count) {
  if (count == 0) return {};
  ModularConvergent mc = modular_convergent(m, modulus);
  auto pad = [&](const std::vector<Int>& coeffs) {
    std::vector<ModInt> c;
    c.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      c.emplace_back(i < coeffs.size() ? coeffs[i] : Int(0), modulus);
    }
    return Series<ModInt>(std::move(c));
  };
  Series<ModInt> quotient = mul(pad(mc.p), reciprocal(pad(mc.q)));
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(quotient[i].value());
  return out;
}

bool check_series_congruence(std::size_t m, std::size_t count) {
  Int modulus = canonical_modulus(m);
  return alpha_mod(modulus, count) ==
         convergent_series_mod(m, modulus, count);
}

}  // namespace pf
