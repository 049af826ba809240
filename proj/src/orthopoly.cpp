#include "pf/orthopoly.hpp"

#include <stdexcept>

#include "pf/cf.hpp"

namespace pf {

std::vector<Poly> q_family(std::size_t max_k) {
  std::vector<Poly> q;
  q.reserve(max_k + 1);
  q.push_back(Poly(Rat(1)));
  if (max_k == 0) return q;
  Poly z = Poly::monomial(1);
  q.push_back(z - Poly(closed_form_c(0)));
  for (std::size_t k = 2; k <= max_k; ++k) {
    Poly lin = z - Poly(closed_form_c(k - 1));
    q.push_back(lin * q[k - 1] - q[k - 2] * closed_form_a(k - 1));
  }
  return q;
}

Rat inner_product(const Poly& p, const Poly& q,
                  const std::vector<Rat>& moments) {
  std::size_t dp = p.is_zero() ? 0 : *p.degree();
  std::size_t dq = q.is_zero() ? 0 : *q.degree();
  if (dp + dq >= moments.size()) {
    throw std::invalid_argument("inner_product: not enough moments");
  }
  Rat s(0);
  for (std::size_t i = 0; i <= dp; ++i) {
    if (p.coeff(i) == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) {
      s += p.coeff(i) * q.coeff(j) * moments[i + j];
    }
  }
  return s;
}

namespace {

// 1 - 3t^2 + 3t^4 as a series of the given order.
Series<Rat> quartic_series(std::size_t order) {
  Series<Rat> b = Series<Rat>::zero(order, Rat(0));
  b.at(0) = 1;
  if (order > 2) b.at(2) = -3;
  if (order > 4) b.at(4) = 3;
  return b;
}

// 2 + 3t + 3t(1+t) eta - 2(1 - 3t^2 + 3t^4) eta^3
Series<Rat> cubic_residual(const Series<Rat>& eta) {
  const std::size_t n = eta.order();
  Series<Rat> lin = Series<Rat>::zero(n, Rat(0));
  lin.at(0) = 2;
  if (n > 1) lin.at(1) = 3;
  Series<Rat> coef1 = Series<Rat>::zero(n, Rat(0));
  if (n > 1) coef1.at(1) = 3;
  if (n > 2) coef1.at(2) = 3;
  Series<Rat> cube = mul(mul(eta, eta), eta);
  return add(lin,
             sub(mul(coef1, eta), scale(mul(quartic_series(n), cube), Rat(2))));
}

}  // namespace

Series<Rat> eta_series(std::size_t order) {
  Series<Rat> eta = Series<Rat>::zero(order, Rat(0));
  eta.at(0) = 1;
  // Newton-style term fixing: the cubic's eta-derivative at (t, eta) = (0, 1)
  // is -6, so a residual of r t^n is cancelled by adding (r/6) t^n.
  for (std::size_t n = 1; n < order; ++n) {
    Series<Rat> res = cubic_residual(eta);
    eta.at(n) += res[n] / 6;
  }
  if (!cubic_residual(eta).is_zero()) {
    throw std::logic_error("eta_series: cubic residual did not vanish");
  }
  return eta;
}

bool curve_param_check(std::size_t count) {
  for (std::size_t w = 1; w <= count; ++w) {
    Rat ww(static_cast<long>(w));
    Rat w2 = ww * ww;
    Rat t = ww * (w2 + 3) / (Rat(3) * (w2 + 1));
    Rat eta = Rat(3) * (ww + 1) * (w2 + 1) / (w2 * w2 + 3);
    Rat t2 = t * t;
    Rat res = Rat(2) + Rat(3) * t + Rat(3) * t * (1 + t) * eta -
              Rat(2) * (Rat(1) - Rat(3) * t2 + Rat(3) * t2 * t2) * eta * eta *
                  eta;
    if (res != 0) return false;
  }
  return true;
}

Series<Rat> chi_series(std::size_t order) {
  Series<Rat> eta = eta_series(order);
  Series<Rat> num = Series<Rat>::zero(order, Rat(0));  // 2t(1+t)
  if (order > 1) num.at(1) = 2;
  if (order > 2) num.at(2) = 2;
  Series<Rat> inner =
      sub(mul(eta, eta), mul(num, reciprocal(quartic_series(order))));
  return series_sqrt(inner);
}

Series<Rat> bigJ_series(std::size_t order) {
  Series<Rat> root = series_sqrt(quartic_series(order));
  return truncated(antiderivative(reciprocal(root)), order);
}

Series<Poly> upsilon_series(std::size_t order) {
  Series<Rat> eta = eta_series(order);
  Series<Rat> chi = chi_series(order);
  Series<Rat> j = bigJ_series(order);

  auto lift = [](const Series<Rat>& s) {
    std::vector<Poly> c;
    c.reserve(s.order());
    for (std::size_t k = 0; k < s.order(); ++k) c.push_back(Poly(s[k]));
    return Series<Poly>(std::move(c));
  };

  // z * J(t): degree-one polynomial coefficients, zero constant term.
  std::vector<Poly> arg_c;
  arg_c.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    arg_c.push_back(Poly::monomial(1, j[k]));
  }
  Series<Poly> arg(std::move(arg_c));

  return add(mul(lift(eta), series_cosh(arg)),
             mul(lift(chi), series_sinh(arg)));
}

Report verify_qpoly_gf(std::size_t max_k, std::size_t order) {
  if (order <= max_k) {
    throw std::invalid_argument("verify_qpoly_gf: order must exceed max_k");
  }
  std::vector<Poly> q = q_family(max_k);
  Series<Poly> ups = upsilon_series(order);
  Report rep;
  for (std::size_t k = 0; k <= max_k; ++k) {
    Poly from_gf = ups[k] * Rat(factorial(k));
    bool match = from_gf == q[k];
    bool deg_ok = q[k].degree() && *q[k].degree() == k;
    std::string detail;
    if (!match) {
      detail = "generating function gives " + to_string(from_gf);
    } else if (!deg_ok) {
      detail = "degree is not " + std::to_string(k);
    } else {
      detail = "degree " + std::to_string(k);
    }
    rep.push_back({"k! [t^" + std::to_string(k) + "] Upsilon = q_" +
                       std::to_string(k),
                   match && deg_ok, detail});
  }
  return rep;
}

}  // namespace pf
