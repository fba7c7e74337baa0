#include "critline/palbasis.hpp"

#include <stdexcept>

#include "critline/errors.hpp"

namespace critline {

Poly binom_basis(int i, int d)
{
    if (d < 1 || i < 0 || i > d)
        throw std::invalid_argument("binom_basis: need 0 <= i <= d, d >= 1");
    Poly b{Rat(1)};
    for (int j = 0; j < d; ++j)
        b *= Poly{Rat(d - i - j), Rat(1)};
    return b;
}

Poly pal_basis(int i, int d)
{
    if (d < 1 || i < 0 || 2 * i > d)
        throw std::invalid_argument("pal_basis: need 0 <= i <= d/2, d >= 1");
    if (2 * i == d)
        return binom_basis(i, d);
    return binom_basis(i, d) + binom_basis(d - i, d);
}

std::optional<PalindromicCoeffs> express_in_pal(Poly const& f)
{
    if (f.is_zero())
        throw std::invalid_argument("express_in_pal: zero polynomial");
    int d = f.degree();
    int m = d / 2;

    // coefficient-matching system: (d+1) equations, m+1 unknowns
    size_t rows = static_cast<size_t>(d) + 1;
    size_t cols = static_cast<size_t>(m) + 1;
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (int i = 0; i <= m; ++i) {
        Poly p = pal_basis(i, d);
        for (int k = 0; k <= d; ++k)
            a[static_cast<size_t>(k)][static_cast<size_t>(i)] = p.coeff(k);
    }
    for (int k = 0; k <= d; ++k)
        a[static_cast<size_t>(k)][cols] = f.coeff(k);

    // Gaussian elimination
    std::vector<size_t> pivot_row(cols, rows);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j <= cols; ++j)
            a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rat factor = a[i][c];
            for (size_t j = c; j <= cols; ++j)
                a[i][j] -= factor * a[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    // inconsistent row -> not in the span
    for (size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0)
            return std::nullopt;
    // the p_i are linearly independent, so every column must have a pivot
    PalindromicCoeffs out{d, std::vector<Rat>(cols)};
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] == rows)
            throw InternalInvariantViolation("express_in_pal: basis matrix lost rank");
        out.coeffs[c] = a[pivot_row[c]][cols];
    }
    return out;
}

std::pair<Poly, Poly> restrict_to_cl_raw(Poly const& f)
{
    // Horner at z = -1/2 + t x with x^2 = -1, carried as A(t) + B(t) x
    Poly A, B;
    Poly t = Poly::monomial(1);
    for (int k = f.degree(); k >= 0; --k) {
        Poly nA = A * Rat(-1, 2) - t * B + Poly{f.coeff(k)};
        Poly nB = t * A - B * Rat(1, 2);
        A = std::move(nA);
        B = std::move(nB);
    }
    return {A, B};
}

std::optional<CLRestriction> restrict_to_cl(Poly const& f)
{
    if (f.is_zero())
        throw std::invalid_argument("restrict_to_cl: zero polynomial");
    auto [A, B] = restrict_to_cl_raw(f);
    bool even = f.degree() % 2 == 0;
    Poly const& must_vanish = even ? B : A;
    Poly const& survives = even ? A : B;
    if (!must_vanish.is_zero())
        return std::nullopt;
    Poly q = survives.leading() > 0 ? survives : -survives;
    return CLRestriction{f.degree() % 4, q};
}

Poly restriction_in_u(Poly const& q)
{
    Poly body = q;
    if (q.degree() % 2 != 0) {
        // odd class: q = t * e(t^2)
        if (q.coeff(0) != 0)
            throw std::logic_error("restriction_in_u: odd polynomial with constant term");
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        body = Poly(std::move(shifted));
    }
    std::vector<Rat> e;
    e.reserve(static_cast<size_t>(body.degree()) / 2 + 1);
    for (int k = 0; k <= body.degree(); ++k) {
        if (k % 2 != 0) {
            if (body.coeff(k) != 0)
                throw std::logic_error("restriction_in_u: mixed parity restriction");
            continue;
        }
        e.push_back(body.coeff(k));
    }
    return Poly(std::move(e));
}

namespace {

struct ExtremalU {
    // largest root of the restriction in u, when positive; flags cover the
    // degenerate outcomes
    std::optional<AlgebraicReal> u_max; // present iff a positive u-root exists
    bool zero_root;                     // t = 0 is a root of q
    Poly e;                             // restriction in u
};

ExtremalU extremal_in_u(int i, int d)
{
    auto restriction = restrict_to_cl(pal_basis(i, d));
    if (!restriction)
        throw InternalInvariantViolation("palindromic basis element left the CL class");
    Poly q = restriction->q;
    bool odd = q.degree() % 2 != 0;
    Poly e = restriction_in_u(q);

    ExtremalU out{std::nullopt, odd, e};
    if (e.degree() < 1) {
        return out;
    }
    if (e(Rat(0)) == 0)
        out.zero_root = true;
    auto top = max_real_root(e, Rat(1, 1024));
    if (!top)
        return out;
    AlgebraicReal u(e, *top);
    int sgn = u.compare_rational(Rat(0));
    if (sgn > 0)
        out.u_max = std::move(u);
    return out;
}

} // namespace

std::optional<IsolatingInterval> extremal_a(int i, int d, Rat const& width)
{
    ExtremalU eu = extremal_in_u(i, d);
    if (!eu.u_max) {
        if (eu.zero_root)
            return IsolatingInterval{Rat(0), Rat(0), 1};
        return std::nullopt;
    }
    return sqrt_of(*eu.u_max, width);
}

std::optional<AlgebraicReal> extremal_a_squared(int i, int d)
{
    ExtremalU eu = extremal_in_u(i, d);
    if (eu.u_max)
        return std::move(*eu.u_max);
    if (eu.zero_root)
        return AlgebraicReal::from_rational(Rat(0));
    return std::nullopt;
}

IsolatingInterval alpha_tilde(int d, Rat const& width)
{
    if (d < 1)
        throw std::invalid_argument("alpha_tilde: need d >= 1");
    auto a = extremal_a(0, d, width);
    if (!a)
        throw InternalInvariantViolation("alpha_tilde: p_0 has no critical-line root");
    return *a;
}

AlgebraicReal alpha_tilde_squared(int d)
{
    if (d < 1)
        throw std::invalid_argument("alpha_tilde_squared: need d >= 1");
    auto a = extremal_a_squared(0, d);
    if (!a)
        throw InternalInvariantViolation("alpha_tilde_squared: p_0 has no critical-line root");
    return *a;
}

} // namespace critline
