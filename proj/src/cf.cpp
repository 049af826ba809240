#include "pf/cf.hpp"

namespace pf {

SRDecomposition sr_decompose(const Series<Rat>& phi, std::size_t depth) {
  if (!(phi[0] == Rat(1))) {
    throw std::domain_error("sr_decompose: phi(0) must be 1");
  }
  if (phi.order() < 2 * depth + 2) {
    throw std::invalid_argument("sr_decompose: need order >= 2*depth + 2");
  }

  SRDecomposition d;
  d.omega.push_back(Rat(1));
  d.phi.push_back(phi);

  Series<Rat> der = phi;  // phi^(l) as l advances
  for (std::size_t l = 1; l <= depth; ++l) {
    der = derivative(der);
    Series<Rat> residual = der;
    for (std::size_t j = 0; j < l; ++j) {
      // d^l/dy^l phi_j at y = 0 is l! [z^l] phi_j.
      Rat taylor = d.phi[j][l] * Rat(factorial(l));
      Rat weight = d.omega[j] * taylor;
      residual = sub(residual, scale(d.phi[j], weight));
    }
    auto v = residual.valuation();
    if (!v || *v > l) {
      throw DegenerateFraction(
          "addition decomposition terminates: omega_" + std::to_string(l) +
              " = 0",
          l);
    }
    if (*v < l) {
      throw std::logic_error("sr_decompose: residual valuation " +
                             std::to_string(*v) + " below level " +
                             std::to_string(l));
    }
    Rat omega = residual[l] * Rat(factorial(l));
    d.omega.push_back(omega);
    Rat inv_omega = Rat(1) / omega;
    d.phi.push_back(scale(residual, inv_omega));
  }
  return d;
}

JFraction jfraction_from_sr(const SRDecomposition& d) {
  const std::size_t L = d.omega.size() - 1;
  JFraction jf;
  for (std::size_t j = 0; j <= L; ++j) {
    Rat cj = d.phi[j][j + 1] * Rat(factorial(j + 1));
    if (j > 0) cj -= d.phi[j - 1][j] * Rat(factorial(j));
    jf.c.push_back(cj);
    if (j > 0) jf.a.push_back(d.omega[j] / d.omega[j - 1]);
  }
  return jf;
}

JFraction jfraction_from_ogf(const std::vector<Rat>& moments,
                             std::size_t depth) {
  if (moments.size() < 2 * depth + 2) {
    throw std::invalid_argument("jfraction_from_ogf: need 2*depth + 2 moments");
  }
  if (moments[0] != 1) {
    throw std::invalid_argument("jfraction_from_ogf: moments[0] must be 1");
  }

  JFraction jf;
  Series<Rat> g(moments);
  for (std::size_t k = 0;; ++k) {
    jf.c.push_back(g[1]);
    if (k == depth) break;
    // 1/g = 1 - c_k z - a_{k+1} z^2 g_next, so peel and shift down by two.
    Series<Rat> s = scale(reciprocal(g), Rat(-1));
    s.at(0) += 1;
    s.at(1) -= g[1];
    if (!(s[0] == 0) || !(s[1] == 0)) {
      throw std::logic_error("jfraction_from_ogf: peel residual not O(z^2)");
    }
    Rat a = s[2];
    if (a == 0) {
      throw DegenerateFraction(
          "continued fraction degenerates: a_" + std::to_string(k + 1) +
              " = 0",
          k + 1);
    }
    jf.a.push_back(a);
    std::vector<Rat> next(g.order() - 2);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = s[i + 2] / a;
    g = Series<Rat>(std::move(next));
  }
  return jf;
}

Rat closed_form_c(std::size_t j) {
  long v = static_cast<long>(j);
  if (j % 2 == 0) return Rat(-(v + 1));
  return Rat(v);
}

Rat closed_form_a(std::size_t j) {
  if (j == 0) throw std::invalid_argument("closed_form_a: j >= 1");
  long v = static_cast<long>(j);
  long factor = (j % 2 == 0) ? 1 : 3;
  return Rat(-v * v * factor);
}

JFraction closed_form_jfraction(std::size_t depth) {
  JFraction jf;
  for (std::size_t j = 0; j <= depth; ++j) {
    jf.c.push_back(closed_form_c(j));
    if (j > 0) jf.a.push_back(closed_form_a(j));
  }
  return jf;
}

std::vector<Convergent> convergents(const JFraction& jf, std::size_t max_k) {
  if (max_k >= 1 && jf.c.empty()) {
    throw std::invalid_argument("convergents: fraction too shallow");
  }
  if (max_k >= 2 && (jf.c.size() < max_k || jf.a.size() < max_k - 1)) {
    throw std::invalid_argument("convergents: fraction too shallow");
  }

  std::vector<Convergent> out;
  Poly p_prev, q_prev(Rat(1));  // P_0 = 0, Q_0 = 1
  out.push_back({p_prev, q_prev, 0});
  if (max_k == 0) return out;

  Poly p_cur(Rat(1));  // P_1 = 1
  Poly q_cur(std::vector<Rat>{Rat(1), -jf.c[0]});
  out.push_back({p_cur, q_cur, 1});

  for (std::size_t k = 2; k <= max_k; ++k) {
    Poly lin(std::vector<Rat>{Rat(1), -jf.c[k - 1]});
    Poly quad = Poly::monomial(2, jf.a[k - 2]);
    Poly p_next = lin * p_cur - quad * p_prev;
    Poly q_next = lin * q_cur - quad * q_prev;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
    out.push_back({p_cur, q_cur, k});
  }
  return out;
}

Int hankel(const std::vector<Int>& moments, std::size_t m) {
  if (m == 0 || moments.size() < 2 * m - 1) {
    throw std::invalid_argument("hankel: need 2m - 1 moments");
  }
  IntMatrix mat(m, std::vector<Int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) mat[i][j] = moments[i + j];
  }
  return bareiss_det(std::move(mat));
}

Int hankel_product_form(std::size_t m) {
  if (m == 0) throw std::invalid_argument("hankel_product_form: m >= 1");
  Rat prod(1);
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t e = 0; e < m - j; ++e) prod *= closed_form_a(j);
  }
  return rat_to_int(prod);
}

Int hankel_closed_form(std::size_t m) {
  if (m == 0) throw std::invalid_argument("hankel_closed_form: m >= 1");
  unsigned long e3 = (m % 2 == 0) ? m * m / 4 : (m * m - 1) / 4;
  std::size_t half = m / 2;
  Int sign = (half % 2 == 0) ? 1 : -1;
  Int super(1);
  for (std::size_t k = 1; k < m; ++k) super *= factorial(k);
  return sign * pow_int(Int(3), e3) * super * super;
}

}  // namespace pf
