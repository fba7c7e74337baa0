#ifndef CRITLINE_CLFORM_HPP
#define CRITLINE_CLFORM_HPP

/* The factored form of a CL-polynomial
 *
 *     f(z) = scale * b(z) * prod_i (z^2 + z + c_i),   c_i real, >= 1/4,
 *
 * with b(z) = 1 for even parity and b(z) = 2z+1 for odd. The c_i enter
 * collectively as the monic rational polynomial C(u) = prod (u - c_i), so
 * irrational c_i (which arise already for p_0^4) stay exact; individual
 * values are materialized as isolating intervals on demand.
 */

#include <variant>
#include <vector>

#include "critline/errors.hpp"
#include "critline/poly.hpp"
#include "critline/realroots.hpp"

namespace critline {

enum class Parity { even, odd };

struct CLForm {
    Rat scale;
    Parity parity;
    Poly c_poly; // monic in u; roots are the c_i

    int degree() const { return 2 * c_poly.degree() + (parity == Parity::odd ? 1 : 0); }
};

/* Expansion of the factored form back to a dense polynomial. */
Poly expand(CLForm const& form);

/* Builds the form from explicit rational c's. Throws RejectScale /
 * RejectC on violated preconditions.
 */
std::pair<CLForm, Poly> cl_from_cs(Rat const& scale, Parity parity, std::vector<Rat> const& cs);

enum class NotCLReason { MixedParity, ComplexC, CSmall };

char const* to_string(NotCLReason r);

/* Exact CL-membership test: s-decompose, demand pure parity, then demand
 * that the s-polynomial has every root real and <= -1/4 (Sturm counts on
 * the square-free part). Input must be nonzero.
 */
std::variant<CLForm, NotCLReason> cl_detect(Poly const& p);

/* Roots of a CL-polynomial: -1/2 +- t_i * sqrt(-1). Only t >= 0 is listed;
 * every entry with t > 0 stands for a conjugate pair. The entry at t = 0
 * (present for odd parity or c = 1/4 factors) carries the full multiplicity
 * of the root -1/2.
 */
struct RootEntry {
    IsolatingInterval imag; // enclosure of t
    int multiplicity;
};

struct RootReport {
    std::vector<RootEntry> entries; // ascending in t
    bool conjugate_pairs = true;

    /* largest imaginary part; empty only for degree-0 forms */
    IsolatingInterval const& max_imag() const
    {
        if (entries.empty())
            throw std::logic_error("RootReport::max_imag: no roots");
        return entries.back().imag;
    }
};

RootReport cl_roots(CLForm const& form, Rat const& width);

/* Largest c_i minus 1/4 as an exact algebraic number (the square of the
 * extremal imaginary part); used for exact root-bound comparisons.
 */
AlgebraicReal max_imag_squared(CLForm const& form);

} // namespace critline

#endif
