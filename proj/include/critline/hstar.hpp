#ifndef CRITLINE_HSTAR_HPP
#define CRITLINE_HSTAR_HPP

/* The h*-transform: for a degree-d polynomial p, the numerator coefficients
 * of sum_k p(k) t^k = h*(t) / (1-t)^(d+1). Defined for arbitrary rational
 * polynomials, not just Ehrhart polynomials. The vector always has length
 * d+1; trailing zeros are significant (they pin the nominal degree).
 */

#include <optional>
#include <vector>

#include "critline/poly.hpp"

namespace critline {

struct HStarVector {
    int degree = 0;          // d
    std::vector<Rat> h;      // h_0 .. h_d

    bool operator==(HStarVector const& o) const = default;
};

/* h_i = sum_{j=0..i} (-1)^j binom(d+1, j) p(i-j): finite-difference
 * inversion of the series identity.
 */
HStarVector hstar_from_poly(Poly const& p);

/* Same transform with the nominal degree pinned to d >= deg p; vectors of
 * different nominal degree encode different polynomials.
 */
HStarVector hstar_from_poly(Poly const& p, int d);

/* E(z) = sum_i h_i binom(z+d-i, d); exact inverse of hstar_from_poly. */
Poly poly_from_hstar(HStarVector const& h);

bool is_palindromic(HStarVector const& h);
bool is_nonnegative(HStarVector const& h);

struct DiamondReport {
    bool is_cl;
    bool palindromic;
    bool nonnegative;
    bool diamond; // palindromic && nonnegative
    HStarVector hstar;
};

DiamondReport diamond_check(Poly const& p);

/* h*-vector of (z^2+z+c) * p given the h*-vector of p. Index i contributes
 * (i^2+i+c) to slot i, 2(di-i^2+d+1-c) to slot i+1 and
 * (d^2-2di-i+i^2+d+c) to slot i+2; an algebraic identity for any h, c.
 */
HStarVector mult_quadratic_update(HStarVector const& h, Rat const& c);

/* h*-vector of (2z+1) * p: index n contributes (2n+1) to slot n and
 * (2(d-n)+1) to slot n+1.
 */
HStarVector mult_linear_update(HStarVector const& h);

/* Hibi's lower bound check: h_1 <= h_i for 1 <= i <= d-1. Not applicable
 * (nullopt) when h_d = 0.
 */
std::optional<bool> hibi_check(HStarVector const& h);

} // namespace critline

#endif
