#ifndef CRITLINE_PALBASIS_HPP
#define CRITLINE_PALBASIS_HPP

/* The binomial basis b_i^d(z) = (z+d-i)(z+d-i-1)...(z+1-i) = d! binom(z+d-i, d)
 * and the palindromic basis p_i^d = b_i^d + b_{d-i}^d (with the middle
 * element p_{d/2} = b_{d/2} for even d). CL-polynomials expand in the p_i
 * with coefficients proportional to their h*-entries; restricting to the
 * critical line turns each p_i into a real polynomial in the imaginary
 * part, whose largest root a_i^d drives the root bounds.
 */

#include <optional>
#include <vector>

#include "critline/poly.hpp"
#include "critline/realroots.hpp"

namespace critline {

Poly binom_basis(int i, int d);
Poly pal_basis(int i, int d);

struct PalindromicCoeffs {
    int degree;
    std::vector<Rat> coeffs; // index 0 .. floor(d/2)
};

/* Solves f = sum_i coeffs_i p_i^d exactly; nullopt when f is not in the
 * span (equivalently, its h*-vector is not palindromic).
 */
std::optional<PalindromicCoeffs> express_in_pal(Poly const& f);

/* f(-1/2 + t sqrt(-1)) = A(t) + B(t) sqrt(-1) with A even and B odd.
 * For polynomials in the pure-parity palindromic span exactly one part
 * vanishes identically.
 */
std::pair<Poly, Poly> restrict_to_cl_raw(Poly const& f);

struct CLRestriction {
    int parity_class; // deg f mod 4
    Poly q;           // the surviving part, sign-normalized to positive lc
};

/* nullopt = NotCLClass (neither part vanishes identically). */
std::optional<CLRestriction> restrict_to_cl(Poly const& f);

/* The surviving restriction of an even/odd CL-class polynomial written in
 * u = t^2: q(t) = e(t^2) for even degree and q(t) = t * e(t^2) for odd.
 */
Poly restriction_in_u(Poly const& q);

/* Largest nonnegative real root of the CL-restriction of p_i^d, refined to
 * `width`; nullopt when the restriction has no real root (the degenerate
 * middle index). The returned interval tracks t itself, not t^2.
 */
std::optional<IsolatingInterval> extremal_a(int i, int d, Rat const& width);

/* Same number as an exact algebraic quantity in u = t^2 (for comparisons);
 * the boolean marks "only root is t = 0".
 */
std::optional<AlgebraicReal> extremal_a_squared(int i, int d);

/* alpha~_d = extremal_a(0, d, width); always exists for d >= 1. */
IsolatingInterval alpha_tilde(int d, Rat const& width);
AlgebraicReal alpha_tilde_squared(int d);

} // namespace critline

#endif
