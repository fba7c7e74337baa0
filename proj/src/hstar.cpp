#include "critline/hstar.hpp"

#include <stdexcept>

#include "critline/clform.hpp"

namespace critline {

HStarVector hstar_from_poly(Poly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("hstar_from_poly: zero polynomial");
    return hstar_from_poly(p, p.degree());
}

HStarVector hstar_from_poly(Poly const& p, int d)
{
    if (d < p.degree() || d < 0)
        throw std::invalid_argument("hstar_from_poly: nominal degree below deg p");

    std::vector<Rat> values(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        values[static_cast<size_t>(k)] = p(Rat(k));

    // alternating binomials (-1)^j binom(d+1, j)
    std::vector<Int> binom(static_cast<size_t>(d) + 1);
    Int b = 1;
    for (int j = 0; j <= d; ++j) {
        binom[static_cast<size_t>(j)] = (j % 2 == 0) ? b : -b;
        b = b * (d + 1 - j) / (j + 1);
    }

    HStarVector out{d, std::vector<Rat>(static_cast<size_t>(d) + 1)};
    for (int i = 0; i <= d; ++i) {
        Rat acc(0);
        for (int j = 0; j <= i; ++j)
            acc += Rat(binom[static_cast<size_t>(j)]) * values[static_cast<size_t>(i - j)];
        out.h[static_cast<size_t>(i)] = acc;
    }
    return out;
}

Poly poly_from_hstar(HStarVector const& hs)
{
    int d = hs.degree;
    if (d < 0 || hs.h.size() != static_cast<size_t>(d) + 1)
        throw std::invalid_argument("poly_from_hstar: vector length must be degree+1");

    // b_i = (z+d-i)(z+d-i-1)...(z+1-i) built incrementally:
    // b_0 = prod_{k=1..d}(z+k), then b_i = b_{i-1} * (z+1-i) / (z+d-i+1)
    Int dfact = 1;
    for (int k = 2; k <= d; ++k)
        dfact *= k;

    Poly acc;
    Poly b{Rat(1)};
    for (int k = 1; k <= d; ++k)
        b *= Poly{Rat(k), Rat(1)};
    for (int i = 0; i <= d; ++i) {
        if (i > 0)
            b = (b * Poly{Rat(1 - i), Rat(1)}).exact_div(Poly{Rat(d - i + 1), Rat(1)});
        if (hs.h[static_cast<size_t>(i)] != 0)
            acc += b * hs.h[static_cast<size_t>(i)];
    }
    return acc / Rat(dfact);
}

bool is_palindromic(HStarVector const& hs)
{
    int d = hs.degree;
    for (int i = 0; 2 * i <= d; ++i)
        if (hs.h[static_cast<size_t>(i)] != hs.h[static_cast<size_t>(d - i)])
            return false;
    return true;
}

bool is_nonnegative(HStarVector const& hs)
{
    for (auto const& x : hs.h)
        if (x < 0)
            return false;
    return true;
}

DiamondReport diamond_check(Poly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("diamond_check: zero polynomial");
    DiamondReport rep{};
    rep.hstar = hstar_from_poly(p);
    rep.palindromic = is_palindromic(rep.hstar);
    rep.nonnegative = is_nonnegative(rep.hstar);
    rep.diamond = rep.palindromic && rep.nonnegative;
    rep.is_cl = std::holds_alternative<CLForm>(cl_detect(p));
    return rep;
}

HStarVector mult_quadratic_update(HStarVector const& hs, Rat const& c)
{
    int d = hs.degree;
    HStarVector out{d + 2, std::vector<Rat>(static_cast<size_t>(d) + 3, Rat(0))};
    for (int i = 0; i <= d; ++i) {
        Rat const& hi = hs.h[static_cast<size_t>(i)];
        if (hi == 0)
            continue;
        Rat alpha = Rat(i) * i + i + c;
        Rat beta = 2 * (Rat(d) * i - Rat(i) * i + d + 1 - c);
        Rat gamma = Rat(d) * d - 2 * Rat(d) * i - i + Rat(i) * i + d + c;
        out.h[static_cast<size_t>(i)] += hi * alpha;
        out.h[static_cast<size_t>(i) + 1] += hi * beta;
        out.h[static_cast<size_t>(i) + 2] += hi * gamma;
    }
    return out;
}

HStarVector mult_linear_update(HStarVector const& hs)
{
    int d = hs.degree;
    HStarVector out{d + 1, std::vector<Rat>(static_cast<size_t>(d) + 2, Rat(0))};
    for (int n = 0; n <= d; ++n) {
        Rat const& hn = hs.h[static_cast<size_t>(n)];
        if (hn == 0)
            continue;
        out.h[static_cast<size_t>(n)] += hn * (2 * n + 1);
        out.h[static_cast<size_t>(n) + 1] += hn * (2 * (d - n) + 1);
    }
    return out;
}

std::optional<bool> hibi_check(HStarVector const& hs)
{
    int d = hs.degree;
    if (hs.h[static_cast<size_t>(d)] == 0)
        return std::nullopt;
    Rat const& h1 = d >= 1 ? hs.h[1] : hs.h[0];
    for (int i = 1; i <= d - 1; ++i)
        if (hs.h[static_cast<size_t>(i)] < h1)
            return false;
    return true;
}

} // namespace critline
