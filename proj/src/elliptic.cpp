#include "pf/elliptic.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pf/pseudofact.hpp"
#include "pf/rational.hpp"
#include "pf/series.hpp"

namespace pf {

namespace {

using C = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// 9 * integral_0^1 (3 - 3u^3 + u^6)^(-2/3) du by composite Simpson.  This is
// B(1/3,1/3) after the substitution y = 1 - u^3, which removes the endpoint
// singularity of the Beta integrand, so plain Simpson converges fast.
double pi3_by_quadrature() {
  auto f = [](double u) {
    double t = 3.0 + u * u * u * (u * u * u - 3.0);
    double c = std::cbrt(t);
    return 1.0 / (c * c);
  };
  const int n = 4096;  // subintervals, even
  const double h = 1.0 / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(i * h);
  for (int i = 2; i < n; i += 2) even += f(i * h);
  return 9.0 * (f(0.0) + f(1.0) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

double fact_double(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string fmt_complex(C z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         fmt_double(std::abs(z.imag())) + "i";
}

// EGF coefficients a_n/n! as doubles, for truncated evaluation.
std::vector<double> egf_coeffs(std::size_t order) {
  Series<Rat> f = egf_f(order);
  std::vector<double> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = to_double(f[k]);
  return c;
}

template <class T>
T horner(const std::vector<double>& coeffs, T x) {
  T acc(0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

C cpow_int(C base, unsigned long e) {
  C r(1.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

struct KahanC {
  C sum{0.0}, comp{0.0};
  void add(C x) {
    C y = x - comp;
    C t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Laurent data for P(z) = z^-2 + sum_{k>=2} c_k z^(2k-2) with invariants
// (0, -4): c_2 = g2/20 = 0, c_3 = g3/28 = -1/7, then
// c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.  Computed exactly,
// used as doubles; 90 terms keep the tail below 1e-38 at |z| <= 1.45.
const std::vector<double>& laurent_coeffs() {
  static const std::vector<double> table = [] {
    const std::size_t kTerms = 90;
    std::vector<Rat> c(kTerms + 1, Rat(0));
    c[3] = Rat(-1, 7);
    for (std::size_t k = 4; k <= kTerms; ++k) {
      Rat s(0);
      for (std::size_t m = 2; m + 2 <= k; ++m) s += c[m] * c[k - m];
      long denom = static_cast<long>(2 * k + 1) * static_cast<long>(k - 3);
      c[k] = s * Rat(3) / Rat(denom);
    }
    std::vector<double> out(kTerms + 1, 0.0);
    for (std::size_t k = 0; k <= kTerms; ++k) out[k] = to_double(c[k]);
    return out;
  }();
  return table;
}

std::pair<C, C> wp_direct(C z) {
  const auto& c = laurent_coeffs();
  C w = z * z;
  C s(0.0), t(0.0);  // sum c_k w^(k-2) and sum (2k-2) c_k w^(k-2)
  for (std::size_t k = c.size() - 1; k >= 2; --k) {
    s = s * w + c[k];
    t = t * w + static_cast<double>(2 * k - 2) * c[k];
  }
  C p = 1.0 / w + s * w;
  C pp = -2.0 / (w * z) + t * z;
  return {p, pp};
}

std::pair<C, C> wp_reduce(C z, int depth) {
  if (std::abs(z) <= 1.45) return wp_direct(z);
  if (depth > 12) {
    throw std::logic_error("wp_eval: argument reduction did not converge");
  }
  // Asymmetric split: u = ratio*z, v = (1-ratio)*z.  A symmetric half/half
  // split would hit the P(u) = P(v) degeneracy identically; if a ratio still
  // lands on a degenerate pair, try a perturbed one.
  static constexpr double kRatios[] = {0.45, 0.41, 0.37, 0.53};
  for (double ratio : kRatios) {
    auto [a, ap] = wp_reduce(ratio * z, depth + 1);
    auto [b, bp] = wp_reduce((1.0 - ratio) * z, depth + 1);
    C d = a - b;
    if (std::abs(d) < 1e-9 * (std::abs(a) + std::abs(b) + 1.0)) continue;
    C slope = (ap - bp) / d;
    C p = slope * slope / 4.0 - a - b;
    C app = 6.0 * a * a;  // P'' = 6 P^2 - g2/2 with g2 = 0
    C pp = slope * (app - slope * ap) / (2.0 * d) - ap;
    return {p, pp};
  }
  throw std::logic_error("wp_eval: every split ratio was degenerate");
}

}  // namespace

EllipticConstants constants() {
  double g = 2.678938534707747633655692940975;  // Gamma(1/3)
  if (const char* p = std::getenv("PF_PERTURB_GAMMA")) g += std::atof(p);
  double by_gamma = std::sqrt(3.0) * g * g * g / (2.0 * kPi);
  double by_quadrature = pi3_by_quadrature();
  if (std::abs(by_gamma - by_quadrature) > 1e-11) {
    throw std::runtime_error(
        "internal consistency: pi3 routes disagree (" + fmt_double(by_gamma) +
        " vs " + fmt_double(by_quadrature) + ")");
  }
  EllipticConstants k;
  k.gamma_third = g;
  k.pi3 = by_gamma;
  k.r = by_gamma / (6.0 * std::cbrt(2.0));
  k.rho = 2.0 * std::sqrt(3.0) * k.r;
  k.zeta12 = std::polar(1.0, kPi / 6.0);
  return k;
}

std::pair<double, double> dixon_sm_cm(double x) {
  // On the real axis the pair blows up at -pi3/3 and +2*pi3/3 (and their
  // pi3-translates); fixed-step RK4 needs some clearance from either pole.
  static const double lo = -constants().pi3 / 3.0;
  static const double hi = 2.0 * constants().pi3 / 3.0;
  const double margin = 0.2;
  if (x < lo + margin || x > hi - margin) {
    throw std::domain_error(
        "dixon_sm_cm: x must stay clear of the poles at -pi3/3 and 2*pi3/3");
  }
  const double base_step = 1.0 / 512.0;
  long steps = std::max(1L, std::lround(std::ceil(std::abs(x) / base_step)));
  double h = x / static_cast<double>(steps);
  double s = 0.0, c = 1.0;
  for (long i = 0; i < steps; ++i) {
    auto ds = [](double, double cv) { return cv * cv; };
    auto dc = [](double sv, double) { return -sv * sv; };
    double k1s = ds(s, c), k1c = dc(s, c);
    double k2s = ds(s + h / 2 * k1s, c + h / 2 * k1c);
    double k2c = dc(s + h / 2 * k1s, c + h / 2 * k1c);
    double k3s = ds(s + h / 2 * k2s, c + h / 2 * k2c);
    double k3c = dc(s + h / 2 * k2s, c + h / 2 * k2c);
    double k4s = ds(s + h * k3s, c + h * k3c);
    double k4c = dc(s + h * k3s, c + h * k3c);
    s += h / 6 * (k1s + 2 * k2s + 2 * k3s + k4s);
    c += h / 6 * (k1c + 2 * k2c + 2 * k3c + k4c);
    if (std::abs(s) > 1e6 || std::abs(c) > 1e6) {
      throw std::runtime_error("dixon_sm_cm: blow-up near a pole");
    }
  }
  return {s, c};
}

NumericReport verify_dixon(const std::vector<double>& zs, std::size_t order,
                           double tol) {
  if (order < 40) {
    throw std::invalid_argument("verify_dixon: series order must be >= 40");
  }
  std::vector<double> fc = egf_coeffs(order);
  const EllipticConstants k = constants();
  const double c2 = std::cbrt(2.0);
  NumericReport rep;
  for (double z : zs) {
    if (std::abs(z) > 0.5) {
      throw std::invalid_argument("verify_dixon: samples need |z| <= 0.5");
    }
    double lhs = horner(fc, z);
    auto [sm, cm] = dixon_sm_cm(k.pi3 / 6.0 - c2 * z);
    (void)cm;
    double dev = std::abs(lhs - c2 * sm);
    rep.push_back({"f vs scaled sm at z = " + fmt_double(z), dev, tol,
                   dev <= tol});
  }
  return rep;
}

std::pair<C, C> wp_eval(C z) {
  static const EllipticConstants k = constants();
  const double len = k.rho;  // shortest lattice vectors have |.| = 2 sqrt(3) r
  const C w1 = std::polar(len, kPi / 6.0);
  const C w2 = std::polar(len, -kPi / 6.0);
  const double det = w1.real() * w2.imag() - w2.real() * w1.imag();
  double x = (z.real() * w2.imag() - z.imag() * w2.real()) / det;
  double y = (w1.real() * z.imag() - w1.imag() * z.real()) / det;
  C nearest = std::round(x) * w1 + std::round(y) * w2;
  if (std::abs(z - nearest) < 1e-6) {
    throw std::domain_error("wp_eval: argument within 1e-6 of a lattice point");
  }
  return wp_reduce(z, 0);
}

NumericReport verify_weierstrass(const std::vector<C>& zs, std::size_t order,
                                 double tol) {
  if (order < 40) {
    throw std::invalid_argument("verify_weierstrass: series order >= 40");
  }
  std::vector<double> fc = egf_coeffs(order);
  const EllipticConstants k = constants();
  const C two_i_s3(0.0, 2.0 * std::sqrt(3.0));

  NumericReport rep;
  auto special = [&rep](const std::string& name, C got, C want) {
    double dev = std::abs(got - want);
    rep.push_back({name, dev, 1e-9, dev <= 1e-9});
  };
  auto [p3, pp3] = wp_eval(C(3.0 * k.r, 0.0));
  special("P(3r) = -1", p3, C(-1.0, 0.0));
  special("P'(3r) = 0", pp3, C(0.0, 0.0));
  auto [p2, pp2] = wp_eval(C(2.0 * k.r, 0.0));
  special("P(2r) = 0", p2, C(0.0, 0.0));
  special("P'(2r) = -2", pp2, C(-2.0, 0.0));

  for (C z : zs) {
    if (std::abs(z) > 0.3) {
      throw std::invalid_argument("verify_weierstrass: samples need |z| <= 0.3");
    }
    C lhs = horner(fc, C(0.0, std::sqrt(3.0)) * z);
    auto [p, pp] = wp_eval(z + C(3.0 * k.r, 0.0));
    C rhs = (-pp - two_i_s3) / (two_i_s3 * p);
    double dev = std::abs(lhs - rhs);
    double tl = (z == C(0.0)) ? 1e-10 : tol;
    rep.push_back({"f(i sqrt(3) z) vs P-quotient at z = " + fmt_complex(z),
                   dev, tl, dev <= tl});
  }
  return rep;
}

LatticeSum lattice_sum_alpha(std::size_t n, long cutoff) {
  if (n < 2) throw std::invalid_argument("lattice_sum_alpha: n >= 2");
  if (cutoff < 1) throw std::invalid_argument("lattice_sum_alpha: cutoff >= 1");
  const EllipticConstants k = constants();
  const C zeta = k.zeta12;
  const C zeta_inv = std::conj(zeta);

  C phase[12];
  for (int j = 0; j < 12; ++j) phase[j] = std::polar(1.0, kPi * j / 6.0);

  KahanC acc;
  for (long l = -cutoff; l <= cutoff; ++l) {
    for (long m = -cutoff; m <= cutoff; ++m) {
      int idx = static_cast<int>(((8 * l + 4 * m) % 12 + 12) % 12);
      C den = (static_cast<double>(l) - 0.5) * zeta +
              (static_cast<double>(m) - 0.5) * zeta_inv;
      acc.add(phase[idx] / cpow_int(den, static_cast<unsigned long>(n + 1)));
    }
  }
  C total = acc.sum * (-fact_double(n) /
                       std::pow(k.rho, static_cast<double>(n + 1)));
  double value = total.real();
  double scale = std::max(std::abs(value), 1e-300);
  double residual = std::abs(total.imag()) / scale;
  return {value, residual, residual > 1e-9};
}

double asymptotic_alpha(std::size_t n) {
  if (n < 2) throw std::invalid_argument("asymptotic_alpha: n >= 2");
  const EllipticConstants k = constants();
  std::size_t nu = n / 2;
  double sign, three_exp;
  if (n % 2 == 0) {
    sign = (nu % 2 == 0) ? 1.0 : -1.0;
    three_exp = static_cast<double>(nu);
  } else {
    sign = (nu % 2 == 0) ? -1.0 : 1.0;
    three_exp = static_cast<double>(nu + 1);
  }
  return sign * fact_double(n) * std::pow(3.0, -three_exp) *
         std::pow(k.r, -static_cast<double>(n + 1));
}

}  // namespace pf
