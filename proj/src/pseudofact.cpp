#include "pf/pseudofact.hpp"

#include <stdexcept>

namespace pf {

std::vector<Int> alpha_seq(std::size_t n) {
  std::vector<Int> a;
  a.reserve(n);
  if (n == 0) return a;
  a.push_back(Int(1));
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const auto& row = binomial_row(m);
    Int s(0);
    for (std::size_t k = 0; k <= m; ++k) s += row[k] * a[k] * a[m - k];
    a.push_back(m % 2 == 0 ? Int(-s) : s);
  }
  return a;
}

std::vector<Rat> alpha_moments(std::size_t n) {
  std::vector<Int> a = alpha_seq(n);
  std::vector<Rat> m;
  m.reserve(n);
  for (const auto& x : a) m.emplace_back(x);
  return m;
}

Series<Rat> egf_f(std::size_t order) {
  std::vector<Int> a = alpha_seq(order);
  std::vector<Rat> c;
  c.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    c.push_back(Rat(a[n]) / Rat(factorial(n)));
  }
  return Series<Rat>(std::move(c));
}

Series<Rat> h_series(std::size_t order) {
  Series<Rat> f = egf_f(order + 1);
  return add(truncated(f, order), derivative(f));
}

Series<Rat> sigma_series(std::size_t order) {
  Series<Rat> f = egf_f(order);
  Series<Rat> one = Series<Rat>::zero(order, Rat(0));
  one.at(0) = 1;
  return sub(one, mul(f, negate_arg(f)));
}

Series<Rat> g_series(std::size_t order) {
  Series<Rat> f = egf_f(order);
  return scale(mul(f, negate_arg(f)), Rat(-1));
}

std::pair<Series<Rat>, Series<Rat>> sm_cm_series(std::size_t order) {
  if (order == 0) throw std::invalid_argument("series needs order >= 1");
  std::vector<Rat> s(order, Rat(0)), c(order, Rat(0));
  c[0] = 1;
  for (std::size_t n = 0; n + 1 < order; ++n) {
    Rat cc(0), ss(0);
    for (std::size_t i = 0; i <= n; ++i) {
      cc += c[i] * c[n - i];
      ss += s[i] * s[n - i];
    }
    s[n + 1] = cc / Rat(static_cast<long>(n + 1));
    c[n + 1] = -ss / Rat(static_cast<long>(n + 1));
  }
  return {Series<Rat>(std::move(s)), Series<Rat>(std::move(c))};
}

namespace {

std::string first_bad(const Series<Rat>& residual) {
  auto v = residual.valuation();
  if (!v) return "";
  return "first failing coefficient at z^" + std::to_string(*v);
}

CheckResult check_zero(std::string name, const Series<Rat>& residual) {
  std::string detail = first_bad(residual);
  return {std::move(name), detail.empty(), std::move(detail)};
}

}  // namespace

Report check_identities(std::size_t order) {
  if (order < 4) throw std::invalid_argument("check_identities: order < 4");
  Report rep;

  Series<Rat> f = egf_f(order + 1);
  Series<Rat> fm = negate_arg(f);
  rep.push_back(
      check_zero("f'(z) = -f(-z)^2", add(derivative(f), mul(fm, fm))));

  Series<Rat> cubes = add(mul(mul(f, f), f), mul(mul(fm, fm), fm));
  cubes.at(0) -= 2;
  rep.push_back(check_zero("f(z)^3 + f(-z)^3 = 2", cubes));

  Series<Rat> g = g_series(order + 1);
  Series<Rat> gp = derivative(g);
  Series<Rat> res =
      sub(mul(gp, gp), scale(mul(mul(g, g), g), Rat(4)));
  res.at(0) -= 4;
  rep.push_back(check_zero("g'(z)^2 = 4*g(z)^3 + 4", res));

  auto [sm, cm] = sm_cm_series(order);
  Series<Rat> fermat =
      add(mul(mul(sm, sm), sm), mul(mul(cm, cm), cm));
  fermat.at(0) -= 1;
  rep.push_back(check_zero("sm^3 + cm^3 = 1", fermat));

  return rep;
}

bool verify_addition_formula_for(const Series<Rat>& f,
                                 std::size_t total_order) {
  const std::size_t n = total_order;
  if (n < 4) throw std::invalid_argument("addition formula: order < 4");
  if (f.order() < n + 1) {
    throw std::invalid_argument("addition formula: EGF too short");
  }

  Series<Rat> ft = truncated(f, n);
  Series<Rat> h = add(ft, truncated(derivative(f), n));
  Series<Rat> one = Series<Rat>::zero(n, Rat(0));
  one.at(0) = 1;
  Series<Rat> sigma = sub(one, mul(ft, negate_arg(ft)));

  const Rat third(1, 3);
  Series2 lhs = substitute_sum(ft, n);
  Series2 one2(n);
  one2.at(0, 0) = 1;
  Series2 denom = one2 - Series2::outer(sigma, sigma, n) * third;
  Series2 numer =
      Series2::outer(ft, ft, n) - Series2::outer(h, h, n) * third;
  return (lhs * denom - numer).is_zero();
}

bool verify_addition_formula(std::size_t order) {
  return verify_addition_formula_for(egf_f(order + 1), order);
}

}  // namespace pf
