#ifndef CRITLINE_POLY_HPP
#define CRITLINE_POLY_HPP

/* Dense univariate polynomials with exact rational coefficients, the
 * universal carrier of the library. Coefficients are stored in ascending
 * degree with no trailing zeros; the zero polynomial has an empty
 * coefficient vector and degree -1.
 */

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "critline/rational.hpp"

namespace critline {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> ascending) : coeffs_(ascending) { trim(); }
    explicit Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Poly constant(Rat const& c) { return Poly{c}; }
    static Poly monomial(int degree, Rat const& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat const& leading() const;
    /* coefficient of z^i; zero beyond the degree */
    Rat coeff(int i) const;
    std::vector<Rat> const& coeffs() const { return coeffs_; }

    bool operator==(Poly const& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(Poly const& o) const { return coeffs_ != o.coeffs_; }

    Poly operator-() const;
    Poly operator+(Poly const& g) const;
    Poly operator-(Poly const& g) const;
    Poly operator*(Poly const& g) const;
    Poly operator*(Rat const& a) const;
    Poly operator/(Rat const& a) const;
    Poly& operator+=(Poly const& g) { return *this = *this + g; }
    Poly& operator-=(Poly const& g) { return *this = *this - g; }
    Poly& operator*=(Poly const& g) { return *this = *this * g; }
    Poly& operator*=(Rat const& a) { return *this = *this * a; }

    Rat operator()(Rat const& x) const { return eval(x); }
    Rat eval(Rat const& x) const;
    /* exact evaluation at re + im*sqrt(-1); returns (real, imaginary) */
    std::pair<Rat, Rat> eval_complex(Rat const& re, Rat const& im) const;

    Poly derivative() const;
    Poly pow(unsigned n) const;

    /* quotient and remainder over the rationals; divisor must be nonzero */
    std::pair<Poly, Poly> divmod(Poly const& divisor) const;
    /* division by a known factor; throws std::logic_error if not exact */
    Poly exact_div(Poly const& divisor) const;

    /* f(z) -> f(-z) */
    Poly mirror() const;
    /* substitute z -> z + a (exact Taylor shift) */
    Poly shift(Rat const& a) const;
    /* f / leading coefficient */
    Poly monic() const;

    std::string str(std::string const& var = "z") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

inline Poly operator*(Rat const& a, Poly const& p) { return p * a; }

/* gcd over Q, returned monic (gcd of anything with 0 is the other input,
 * made monic). Computed with a primitive integer remainder sequence to keep
 * coefficient growth polynomial.
 */
Poly poly_gcd(Poly const& a, Poly const& b);

/* Yun's square-free decomposition: p = lc * prod f_k^k with the f_k monic,
 * square-free and pairwise coprime. Returns the (f_k, k) pairs with
 * f_k != 1, ascending in k.
 */
std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly const& p);

/* The unique pair with p(z) = g(z^2+z) + (2z+1) h(z^2+z). */
struct SDecomposition {
    Poly g;
    Poly h;
    Poly recompose() const;
};

SDecomposition s_decompose(Poly const& p);

/* g(z^2+z) for g given in the variable s */
Poly compose_s(Poly const& g);

} // namespace critline

#endif
