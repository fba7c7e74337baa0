#ifndef CRITLINE_FAMILIES_HPP
#define CRITLINE_FAMILIES_HPP

/* Named polynomial families and the headline computations built on them:
 * the extremal element p_0^d, the standard reflexive simplex polynomials,
 * the root-bound comparison table, the low-degree ordering checks, the
 * degree-10 family, and the connectedness witnesses.
 */

#include <string>
#include <vector>

#include "critline/clform.hpp"
#include "critline/hstar.hpp"
#include "critline/palbasis.hpp"
#include "critline/realroots.hpp"

namespace critline {

/* p_0^d = b_0^d + b_d^d */
Poly p0_poly(int d);

/* Ehrhart polynomial of the standard reflexive d-simplex: the polynomial
 * with all-ones h*-vector.
 */
Poly simplex_sr_poly(int d);

/* Extremal imaginary part of the roots of simplex_sr_poly(d); CL-ness is
 * asserted first rather than assumed.
 */
IsolatingInterval a_sr(int d, Rat const& width);
AlgebraicReal a_sr_squared(int d);

struct BoundsRow {
    int d;
    IsolatingInterval alpha_tilde; // bound attained by p_0^d
    IsolatingInterval beta_sr;     // extremal root of the simplex
    Rat braun_develin;             // d^2/pi, display-quality approximation
    Rat braun_disc;                // d(d - 1/2), exact
};

std::vector<BoundsRow> bounds_table(std::vector<int> const& ds, Rat const& width);

/* d^2/pi with error far below any displayed digit (pi to 50 digits). */
Rat braun_develin_approx(int d);

struct Prop36Report {
    int d;
    bool pass;
    std::vector<std::string> chain; // refined decimals, outermost first
};

/* Exact interval comparison of the published ordering chains:
 * a_1 < a_sr < a_0 for d <= 5, a_2 < a_sr < a_1 < a_0 for 6 <= d <= 9.
 */
Prop36Report prop36_order_check(int d);

struct Degree10Report {
    long m;
    bool is_cl;
    DiamondReport diamond; // only meaningful when is_cl
    IsolatingInterval max_imag;
    int versus_sr; // sign of (max imaginary part - a_sr(10))
};

/* f = p_0 + p_1 + m p_2 + p_3 + p_4 + p_5 at degree 10. */
Degree10Report degree10_family(long m);

struct OmegaWitness {
    Rat c;
    Poly f; // p_0^d + c (2z+1) p_0^{d-1}
    bool is_cl;
    bool diamond;
    bool vanishes_at_target;
};

/* A (diamond)-satisfying CL-polynomial of degree d vanishing at
 * -1/2 + t0 sqrt(-1), for rational t0 strictly between alpha~_{d-1} and
 * alpha~_d. Throws OutOfRange when t0 is outside the open interval.
 */
OmegaWitness omega_witness(int d, Rat const& t0);

} // namespace critline

#endif
