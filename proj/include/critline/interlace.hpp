#ifndef CRITLINE_INTERLACE_HPP
#define CRITLINE_INTERLACE_HPP

/* Interlacing checks. On the critical line the roots of a CL-polynomial
 * are parametrized by their imaginary parts, which are exactly the real
 * roots of the CL-restriction; interlacing there is decided with exact
 * arithmetic. The unit-circle check is the one tolerance-based operation
 * in the library and is used only as a test oracle.
 */

#include <vector>

#include "critline/hstar.hpp"
#include "critline/poly.hpp"

namespace critline {

/* Def.-2.1-style weaving b_1 <= a_1 <= b_2 <= ... <= a_d <= b_{d+1} of the
 * critical-line roots (ordered by imaginary part, multiplicity slots).
 * Requires deg g = deg f + 1 and both CL; throws DegreeMismatch / NotCLError.
 */
bool cl_interlaces(Poly const& f, Poly const& g);

enum class CircleInterlace { yes, no, not_on_circle };

/* Roots of the two h*-polynomials on the unit circle, woven around the cut
 * farthest from every root. The family 1 + t^k is handled through its exact
 * root angles; everything else goes through numeric root finding with the
 * given tolerance.
 */
CircleInterlace circle_interlaces(HStarVector const& hf, HStarVector const& hg,
                                  double tol = 1e-9);

struct InterlaceRow {
    int d;
    bool chain;       // p_0^d interlaces p_0^{d+1}
    bool combination; // p_0^{d+1} + (2z+1) p_0^d stays CL, is interlaced by
                      // p_0^d, and its roots nest inside p_0^{d+1}'s
};

struct InterlaceSuiteReport {
    std::vector<InterlaceRow> rows;
    bool all_pass;
};

InterlaceSuiteReport interlace_suite(int d_max);

/* Exact weaving of the root angles of 1 + t^a against 1 + t^b (b = a+1),
 * used to cross-check the numeric circle path.
 */
bool unit_family_interlaces(int a, int b);

} // namespace critline

#endif
