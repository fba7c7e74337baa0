#ifndef CRITLINE_REALROOTS_HPP
#define CRITLINE_REALROOTS_HPP

/* Exact real-root counting, isolation and refinement for rational
 * polynomials. Counting uses Sturm chains of the square-free part,
 * computed as a primitive integer remainder sequence; refinement is plain
 * bisection with exact sign evaluation, so no decision ever depends on
 * floating point.
 */

#include <optional>
#include <vector>

#include "critline/poly.hpp"

namespace critline {

struct IsolatingInterval {
    Rat lo;
    Rat hi;
    int multiplicity = 1;

    bool is_exact() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

/* Number of distinct real roots of p in (lo, hi]; a disengaged bound means
 * -infinity (for lo) or +infinity (for hi).
 */
long count_real_roots(Poly const& p, std::optional<Rat> const& lo = std::nullopt,
                      std::optional<Rat> const& hi = std::nullopt);

/* Disjoint isolating intervals for all distinct real roots, sorted
 * ascending, with multiplicities from the square-free decomposition.
 * Rational roots of linear square-free factors are returned exact.
 */
std::vector<IsolatingInterval> isolate_real_roots(Poly const& p);

/* Bisect until hi - lo <= width. The interval must isolate a root of p. */
IsolatingInterval refine(Poly const& p, IsolatingInterval iv, Rat const& width);

/* Greatest real root refined to the requested width; nullopt if p has no
 * real root.
 */
std::optional<IsolatingInterval> max_real_root(Poly const& p, Rat const& width);

/* A real algebraic number: a square-free defining polynomial together with
 * an interval containing exactly this one of its roots.
 */
class AlgebraicReal {
public:
    AlgebraicReal(Poly defining, IsolatingInterval iv);
    static AlgebraicReal from_rational(Rat const& x);

    Poly const& defining() const { return defining_; }
    IsolatingInterval const& interval() const { return iv_; }

    void refine_below(Rat const& width);
    /* exact three-way comparison: -1, 0, +1 */
    static int compare(AlgebraicReal& a, AlgebraicReal& b);

    int compare_rational(Rat const& x) const;

private:
    Poly defining_; // square-free, primitive-normalized
    IsolatingInterval iv_;
};

/* A rational enclosure of sqrt(x) for x in [lo, hi], 0 <= lo <= hi. May
 * return a wider interval when [lo, hi] itself is too coarse; sqrt_of
 * drives it adaptively.
 */
IsolatingInterval sqrt_enclosure(Rat const& lo, Rat const& hi, Rat const& width);

/* sqrt of a nonnegative algebraic number, refined below `width`. */
IsolatingInterval sqrt_of(AlgebraicReal& u, Rat const& width);

/* Shrinks the interval until rounding lo and hi to `digits` decimal places
 * agree, then returns that decimal string. `owner` must have exactly one
 * root in the interval.
 */
std::string certified_decimal(Poly const& owner, IsolatingInterval iv, int digits);

} // namespace critline

#endif
