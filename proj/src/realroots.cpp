#include "critline/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace critline {

namespace {

using IntPoly = std::vector<Int>; // ascending, no trailing zeros

IntPoly to_int_poly(Poly const& p)
{
    IntPoly out;
    if (p.is_zero())
        return out;
    Int l = 1;
    for (auto const& c : p.coeffs())
        l = lcm(l, denominator(c));
    Int g = 0;
    for (auto const& c : p.coeffs()) {
        Int v = numerator(c) * (l / denominator(c));
        g = gcd(g, v);
        out.push_back(std::move(v));
    }
    for (auto& v : out)
        v /= g;
    return out;
}

int sign_at(IntPoly const& p, Rat const& x)
{
    // sign of sum c_i num^i den^(n-i)
    Int const& num = numerator(x);
    Int const& den = denominator(x);
    Int acc = p.back();
    Int dp = 1;
    for (size_t i = p.size() - 1; i-- > 0;) {
        dp *= den;
        acc = acc * num + p[i] * dp;
    }
    return acc.sign();
}

int sign_at_pos_inf(IntPoly const& p) { return p.back().sign(); }

int sign_at_neg_inf(IntPoly const& p)
{
    int s = p.back().sign();
    return (p.size() - 1) % 2 == 0 ? s : -s;
}

/* Sturm chain of a square-free polynomial. Remainders are computed as
 * pseudo-remainders with strictly positive multipliers and reduced to
 * primitive form, so the sign-variation property is preserved while
 * coefficients stay at subresultant size.
 */
std::vector<IntPoly> sturm_chain(IntPoly const& p)
{
    std::vector<IntPoly> chain;
    chain.push_back(p);
    if (p.size() <= 1)
        return chain;
    IntPoly d;
    d.reserve(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Int(static_cast<long>(i)));
    chain.push_back(std::move(d));
    while (chain.back().size() > 1) {
        IntPoly const& g = chain.back();
        IntPoly r = chain[chain.size() - 2];
        Int const lg_abs = abs(g.back());
        int const lg_sign = g.back().sign();
        while (r.size() >= g.size()) {
            Int top = r.back();
            if (top == 0) {
                r.pop_back();
                continue;
            }
            for (auto& c : r)
                c *= lg_abs;
            size_t k = r.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                r[k + i] -= top * lg_sign * g[i];
            while (!r.empty() && r.back() == 0)
                r.pop_back();
        }
        if (r.empty())
            break; // inputs were not coprime; callers pass square-free p
        Int content = 0;
        for (auto const& c : r)
            content = gcd(content, c);
        for (auto& c : r) {
            c /= content;
            c = -c;
        }
        chain.push_back(std::move(r));
    }
    return chain;
}

long variations(std::vector<int> const& signs)
{
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

long variations_at(std::vector<IntPoly> const& chain, Rat const& x)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (auto const& q : chain)
        signs.push_back(sign_at(q, x));
    return variations(signs);
}

long variations_at_inf(std::vector<IntPoly> const& chain, bool positive)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (auto const& q : chain)
        signs.push_back(positive ? sign_at_pos_inf(q) : sign_at_neg_inf(q));
    return variations(signs);
}

/* All real root magnitudes are below this power of two (Fujiwara-style
 * bound computed on bit lengths, so huge coefficients cost nothing).
 */
Rat root_bound(IntPoly const& p)
{
    long lead_bits = static_cast<long>(msb(abs(p.back())));
    long best = 1;
    size_t n = p.size() - 1;
    for (size_t i = 0; i < n; ++i) {
        if (p[i] == 0)
            continue;
        long bits = static_cast<long>(msb(abs(p[i]))) - lead_bits + 1;
        long k = static_cast<long>(n - i);
        long e = bits <= 0 ? 0 : (bits + k - 1) / k;
        best = std::max(best, e);
    }
    Rat b = 1;
    for (long i = 0; i < best + 2; ++i)
        b *= 2;
    return b;
}

/* A point in (lo, hi) that is not a root of f; dyadic inputs stay dyadic. */
Rat pick_split(IntPoly const& f, Rat const& lo, Rat const& hi)
{
    Rat shift = (hi - lo) / 2;
    for (;;) {
        Rat cand = lo + shift;
        if (sign_at(f, cand) != 0)
            return cand;
        shift /= 2;
    }
}

Poly squarefree_part(Poly const& p)
{
    if (p.degree() <= 0)
        return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

struct FactorRoots {
    IntPoly poly;
    int multiplicity;
    std::vector<IsolatingInterval> roots;
};

/* Isolating intervals for a square-free integer polynomial. Roots of
 * linear polynomials come out exact; otherwise interval endpoints are never
 * roots.
 */
std::vector<IsolatingInterval> isolate_squarefree(IntPoly const& f, int multiplicity)
{
    std::vector<IsolatingInterval> out;
    if (f.size() <= 1)
        return out;
    if (f.size() == 2) {
        Rat root = make_rat(-f[0], f[1]);
        out.push_back({root, root, multiplicity});
        return out;
    }
    auto chain = sturm_chain(f);
    Rat bound = root_bound(f);
    struct Seg {
        Rat lo, hi;
        long vlo, vhi;
    };
    // segment endpoints are never roots: the outer bound majorizes all
    // roots and pick_split avoids them
    std::vector<Seg> stack;
    stack.push_back({-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        long n = s.vlo - s.vhi;
        if (n <= 0)
            continue;
        if (n == 1) {
            out.push_back({s.lo, s.hi, multiplicity});
            continue;
        }
        Rat mid = pick_split(f, s.lo, s.hi);
        long vmid = variations_at(chain, mid);
        stack.push_back({s.lo, mid, s.vlo, vmid});
        stack.push_back({mid, s.hi, vmid, s.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](IsolatingInterval const& a, IsolatingInterval const& b) { return a.lo < b.lo; });
    return out;
}

void bisect_once(IntPoly const& f, IsolatingInterval& iv)
{
    if (iv.is_exact())
        return;
    int slo = sign_at(f, iv.lo);
    if (slo == 0) {
        iv.hi = iv.lo;
        return;
    }
    int shi = sign_at(f, iv.hi);
    if (shi == 0) {
        iv.lo = iv.hi;
        return;
    }
    Rat mid = iv.midpoint();
    int smid = sign_at(f, mid);
    if (smid == 0) {
        iv.lo = iv.hi = mid;
        return;
    }
    if (smid == slo)
        iv.lo = mid;
    else
        iv.hi = mid;
}

void refine_below_width(IntPoly const& f, IsolatingInterval& iv, Rat const& width)
{
    while (!iv.is_exact() && iv.width() > width)
        bisect_once(f, iv);
}

} // namespace

long count_real_roots(Poly const& p, std::optional<Rat> const& lo, std::optional<Rat> const& hi)
{
    if (p.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() == 0)
        return 0;
    if (lo && hi && *lo >= *hi)
        return 0;
    IntPoly f = to_int_poly(squarefree_part(p));
    if (f.size() == 2) {
        Rat root = make_rat(-f[0], f[1]);
        bool above = !lo || root > *lo;
        bool below = !hi || root <= *hi;
        return above && below ? 1 : 0;
    }
    auto chain = sturm_chain(f);
    long vlo = lo ? variations_at(chain, *lo) : variations_at_inf(chain, false);
    long vhi = hi ? variations_at(chain, *hi) : variations_at_inf(chain, true);
    return vlo - vhi;
}

std::vector<IsolatingInterval> isolate_real_roots(Poly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<FactorRoots> factors;
    for (auto const& [f, k] : squarefree_decomposition(p)) {
        FactorRoots fr;
        fr.poly = to_int_poly(f);
        fr.multiplicity = k;
        fr.roots = isolate_squarefree(fr.poly, k);
        factors.push_back(std::move(fr));
    }

    // roots of coprime factors are distinct; shrink intervals until the
    // whole collection is pairwise disjoint
    struct Tagged {
        size_t factor;
        IsolatingInterval iv;
    };
    std::vector<Tagged> all;
    for (size_t fi = 0; fi < factors.size(); ++fi)
        for (auto const& iv : factors[fi].roots)
            all.push_back({fi, iv});

    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = i + 1; j < all.size(); ++j) {
                auto& a = all[i];
                auto& b = all[j];
                bool disjoint = a.iv.hi < b.iv.lo || b.iv.hi < a.iv.lo ||
                                (a.iv.is_exact() && b.iv.is_exact());
                if (disjoint)
                    continue;
                bisect_once(factors[a.factor].poly, a.iv);
                bisect_once(factors[b.factor].poly, b.iv);
                changed = true;
            }
        }
        if (++guard > 512)
            throw std::runtime_error("isolate_real_roots: interval separation did not converge");
    }
    std::vector<IsolatingInterval> out;
    out.reserve(all.size());
    std::sort(all.begin(), all.end(),
              [](Tagged const& a, Tagged const& b) { return a.iv.lo < b.iv.lo || (a.iv.lo == b.iv.lo && a.iv.hi < b.iv.hi); });
    for (auto& t : all)
        out.push_back(std::move(t.iv));
    return out;
}

IsolatingInterval refine(Poly const& p, IsolatingInterval iv, Rat const& width)
{
    if (p.is_zero())
        throw std::invalid_argument("refine: zero polynomial");
    Poly sf = squarefree_part(p);
    IntPoly f = to_int_poly(sf);
    if (f.size() == 2) {
        Rat root = make_rat(-f[0], f[1]);
        if (root < iv.lo || root > iv.hi)
            throw std::invalid_argument("refine: interval does not bracket a root");
        return {root, root, iv.multiplicity};
    }
    refine_below_width(f, iv, width);
    return iv;
}

std::optional<IsolatingInterval> max_real_root(Poly const& p, Rat const& width)
{
    auto roots = isolate_real_roots(p);
    if (roots.empty())
        return std::nullopt;
    return refine(p, roots.back(), width);
}

AlgebraicReal::AlgebraicReal(Poly defining, IsolatingInterval iv)
    : defining_(squarefree_part(defining)), iv_(std::move(iv))
{
}

AlgebraicReal AlgebraicReal::from_rational(Rat const& x)
{
    return AlgebraicReal(Poly{-x, Rat(1)}, {x, x, 1});
}

void AlgebraicReal::refine_below(Rat const& width)
{
    IntPoly f = to_int_poly(defining_);
    refine_below_width(f, iv_, width);
}

int AlgebraicReal::compare(AlgebraicReal& a, AlgebraicReal& b)
{
    for (int round = 0; round < 256; ++round) {
        if (a.iv_.hi < b.iv_.lo)
            return -1;
        if (b.iv_.hi < a.iv_.lo)
            return 1;
        if (a.iv_.is_exact() && b.iv_.is_exact())
            return a.iv_.lo == b.iv_.lo ? 0 : (a.iv_.lo < b.iv_.lo ? -1 : 1);
        // overlapping: equal iff a common factor has a root in the overlap
        Poly g = poly_gcd(a.defining_, b.defining_);
        if (g.degree() > 0) {
            Rat lo = std::max(a.iv_.lo, b.iv_.lo);
            Rat hi = std::min(a.iv_.hi, b.iv_.hi);
            long inside = count_real_roots(g, lo, hi);
            if (g(lo) == 0)
                ++inside;
            if (inside > 0)
                return 0;
        }
        a.refine_below(a.iv_.width() / 2);
        b.refine_below(b.iv_.width() / 2);
    }
    throw std::runtime_error("AlgebraicReal::compare: refinement cap exceeded");
}

int AlgebraicReal::compare_rational(Rat const& x) const
{
    if (x < iv_.lo)
        return 1;
    if (x > iv_.hi)
        return -1;
    IntPoly f = to_int_poly(defining_);
    if (sign_at(f, x) == 0)
        return 0;
    // x is inside the interval but is not the root: locate by sign
    int slo = sign_at(f, iv_.lo);
    if (slo == 0)
        return iv_.lo < x ? -1 : 1;
    // root and lo are on the same side of every non-root point between them
    return slo == sign_at(f, x) ? 1 : -1;
}

IsolatingInterval sqrt_enclosure(Rat const& lo, Rat const& hi, Rat const& width)
{
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("sqrt_enclosure: bad interval");
    if (lo == hi) {
        // exact square?
        Int ns, nr, ds, dr;
        mpz_sqrtrem(ns.backend().data(), nr.backend().data(),
                    Int(numerator(lo)).backend().data());
        mpz_sqrtrem(ds.backend().data(), dr.backend().data(),
                    Int(denominator(lo)).backend().data());
        if (nr == 0 && dr == 0) {
            Rat r = make_rat(ns, ds);
            return {r, r, 1};
        }
    }
    Rat a = 0;
    Rat b = hi <= 1 ? Rat(1) : pow2_at_least(hi);
    while (b - a > width) {
        Rat m = (a + b) / 2;
        Rat m2 = m * m;
        if (m2 <= lo)
            a = m;
        else if (m2 >= hi)
            b = m;
        else
            break; // input interval too coarse for the requested width
    }
    return {a, b, 1};
}

IsolatingInterval sqrt_of(AlgebraicReal& u, Rat const& width)
{
    if (u.interval().hi < 0)
        throw std::invalid_argument("sqrt_of: negative algebraic number");
    for (int round = 0;; ++round) {
        auto const& iv = u.interval();
        Rat lo = std::max(Rat(0), iv.lo);
        IsolatingInterval t = sqrt_enclosure(lo, iv.hi, width);
        if (t.width() <= width)
            return t;
        if (round > 512)
            throw std::runtime_error("sqrt_of: refinement stalled");
        u.refine_below(iv.width() / 16);
    }
}

std::string certified_decimal(Poly const& owner, IsolatingInterval iv, int digits)
{
    if (iv.is_exact())
        return decimal_string(iv.lo, digits);
    IntPoly f = to_int_poly(squarefree_part(owner));
    for (int round = 0; round < 512; ++round) {
        std::string a = decimal_string(iv.lo, digits);
        std::string b = decimal_string(iv.hi, digits);
        if (a == b)
            return a;
        bisect_once(f, iv);
        if (iv.is_exact())
            return decimal_string(iv.lo, digits);
    }
    // value sits at a rounding boundary; report the midpoint rendering
    return decimal_string(iv.midpoint(), digits);
}

} // namespace critline
