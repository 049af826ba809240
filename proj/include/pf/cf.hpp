#pragma once
// Addition-formula decompositions phi(x+y) = sum_l w_l phi_l(x) phi_l(y),
// Jacobi continued fractions 1/(1 - c0 z - a1 z^2/(1 - c1 z - ...)) extracted
// from moment sequences, their convergents, and Hankel determinants.  The
// machinery is generic (it is exercised on the secant/Euler corpus) and is
// applied to the pseudo-factorial moments.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pf/matrix.hpp"
#include "pf/polynomial.hpp"
#include "pf/rational.hpp"
#include "pf/series.hpp"

namespace pf {

struct SRDecomposition {
  // omega[l] = w_l with w_0 = 1; phi[l] has valuation l, leading coeff 1/l!.
  std::vector<Rat> omega;
  std::vector<Series<Rat>> phi;
};

// Raised when a decomposition or continued fraction stops existing at some
// level (a vanishing w_l / a_l), e.g. for moments of 1/(1+z) at level 1.
class DegenerateFraction : public std::runtime_error {
 public:
  DegenerateFraction(const std::string& what, std::size_t level)
      : std::runtime_error(what), level(level) {}
  std::size_t level;
};

// Decompose an EGF phi with phi(0) = 1, to depth L: differentiate l times,
// subtract the contributions of phi_0..phi_{l-1}, read w_l off the z^l
// coefficient of the residual.  Needs phi.order() >= 2L + 2.
SRDecomposition sr_decompose(const Series<Rat>& phi, std::size_t depth);

struct JFraction {
  std::vector<Rat> c;  // c[j] = c_j, j = 0..L
  std::vector<Rat> a;  // a[j] = a_{j+1}, j = 0..L-1
};

// c_j = (j+1)![z^(j+1)] phi_j - j![z^j] phi_{j-1}  (phi_{-1} = 0);
// a_j = w_j / w_{j-1}.
JFraction jfraction_from_sr(const SRDecomposition& d);

// Quotient-difference peeling of the ordinary generating function
// sum moments[n] z^n (moments[0] must be 1); needs 2L + 2 moments.
JFraction jfraction_from_ogf(const std::vector<Rat>& moments,
                             std::size_t depth);

// Closed forms for the pseudo-factorial fraction: the c_j alternate as
// -1, 1, -3, 3, -5, 5, ... and a_j = -j^2 * (2 - (-1)^j).
Rat closed_form_c(std::size_t j);
Rat closed_form_a(std::size_t j);  // j >= 1
JFraction closed_form_jfraction(std::size_t depth);

struct Convergent {
  Poly p, q;
  std::size_t k;
};

// P_0/Q_0 .. P_K/Q_K via  Q_k = (1 - c_{k-1} z) Q_{k-1} - a_{k-1} z^2 Q_{k-2}
// (same recurrence for P, seeded P_0 = 0, P_1 = 1, Q_0 = Q_1(0) = 1).
// The defining property, checked in tests: Q_k * OGF - P_k = O(z^{2k}).
std::vector<Convergent> convergents(const JFraction& jf, std::size_t max_k);

// det(moments[i+j])_{0<=i,j<m} by fraction-free elimination.
Int hankel(const std::vector<Int>& moments, std::size_t m);

// prod_{j<m} a_j^{m-j} from the closed-form a_j.
Int hankel_product_form(std::size_t m);

// The fully explicit form: sign * 3^e * (superfactorial)^2 with
// e = m^2/4 (even m) or (m^2-1)/4 (odd m).
Int hankel_closed_form(std::size_t m);

}  // namespace pf
