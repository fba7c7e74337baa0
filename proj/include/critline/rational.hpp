#ifndef CRITLINE_RATIONAL_HPP
#define CRITLINE_RATIONAL_HPP

/* Exact scalar types used throughout: arbitrary-precision integers and
 * rationals, GMP-backed. Rationals are kept canonical (lowest terms,
 * positive denominator) by construction; the parsing helpers below never
 * bypass canonicalization.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace critline {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline int sign(Rat const& x) { return x.sign(); }
inline int sign(Int const& x) { return x.sign(); }

inline Rat make_rat(Int const& num, Int const& den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    // boost canonicalizes the two-argument constructor, but be explicit
    mpq_canonicalize(r.backend().data());
    return r;
}

inline bool is_integer(Rat const& x) { return denominator(x) == 1; }

/* Parses "p", "p/q", or a decimal string like "-12.375" into an exact
 * rational. Throws std::invalid_argument on malformed input.
 */
Rat parse_rat(std::string_view s);

/* Rounds x to `digits` fractional digits (half away from zero) and renders
 * the result with exactly `digits` digits after the point.
 */
std::string decimal_string(Rat const& x, int digits);

/* floor(x) as an integer. */
Int floor_int(Rat const& x);

/* Smallest power of two >= x (x > 0), as an exact rational. */
Rat pow2_at_least(Rat const& x);

} // namespace critline

#endif
