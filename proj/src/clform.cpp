#include "critline/clform.hpp"

#include <algorithm>

namespace critline {

char const* to_string(NotCLReason r)
{
    switch (r) {
    case NotCLReason::MixedParity: return "MixedParity";
    case NotCLReason::ComplexC: return "ComplexC";
    case NotCLReason::CSmall: return "CSmall";
    }
    return "?";
}

Poly expand(CLForm const& form)
{
    // prod (s + c_i) = (-1)^m C(-u)|_{u=-s}
    int m = form.c_poly.degree();
    Poly g = form.c_poly.mirror();
    if (m % 2 != 0)
        g = -g;
    Poly f = compose_s(g) * form.scale;
    if (form.parity == Parity::odd)
        f *= Poly{Rat(1), Rat(2)};
    return f;
}

std::pair<CLForm, Poly> cl_from_cs(Rat const& scale, Parity parity, std::vector<Rat> const& cs)
{
    if (scale == 0)
        throw RejectScale();
    Rat quarter(1, 4);
    for (auto const& c : cs)
        if (c < quarter)
            throw RejectC(c.str());
    Poly c_poly{Rat(1)};
    for (auto const& c : cs)
        c_poly *= Poly{-c, Rat(1)};
    CLForm form{scale, parity, c_poly};
    return {form, expand(form)};
}

std::variant<CLForm, NotCLReason> cl_detect(Poly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("cl_detect: zero polynomial");
    auto [g, h] = s_decompose(p);
    bool even = p.degree() % 2 == 0;
    Poly const& active = even ? g : h;
    Poly const& other = even ? h : g;
    if (!other.is_zero())
        return NotCLReason::MixedParity;

    // active(s) = scale * prod (s + c_i); need all roots real and <= -1/4
    int m = active.degree();
    if (m > 0) {
        Poly sf = active.exact_div(poly_gcd(active, active.derivative()));
        long total = count_real_roots(sf);
        if (total < sf.degree())
            return NotCLReason::ComplexC;
        Rat cutoff(-1, 4);
        long low = count_real_roots(sf, std::nullopt, cutoff);
        if (low < sf.degree())
            return NotCLReason::CSmall;
    }

    Rat scale = active.leading();
    // active(-u) = scale * (-1)^m * prod(u - c_i); monic() absorbs the sign
    Poly c_poly = active.mirror().monic();
    return CLForm{scale, even ? Parity::even : Parity::odd, c_poly};
}

RootReport cl_roots(CLForm const& form, Rat const& width)
{
    RootReport report;
    int zero_mult = form.parity == Parity::odd ? 1 : 0;

    // strip c = 1/4 factors first: they contribute to the root at -1/2
    Poly cpoly = form.c_poly;
    Poly quarter_factor{Rat(-1, 4), Rat(1)};
    while (cpoly.degree() > 0 && cpoly(Rat(1, 4)) == 0) {
        cpoly = cpoly.exact_div(quarter_factor);
        zero_mult += 2;
    }

    if (cpoly.degree() > 0) {
        for (auto const& c_iv : isolate_real_roots(cpoly)) {
            // t = sqrt(c - 1/4); refine c until the sqrt enclosure is tight
            IsolatingInterval c = c_iv;
            IsolatingInterval t{};
            Rat cwidth = width;
            for (int round = 0;; ++round) {
                Rat lo = std::max(Rat(0), c.lo - Rat(1, 4));
                Rat hi = c.hi - Rat(1, 4);
                t = sqrt_enclosure(lo, hi, width);
                if (t.width() <= width)
                    break;
                if (round > 512)
                    throw InternalInvariantViolation("cl_roots: sqrt refinement stalled");
                cwidth /= 16;
                c = refine(cpoly, c, cwidth);
            }
            report.entries.push_back({t, c.multiplicity});
        }
    }
    if (zero_mult > 0)
        report.entries.insert(report.entries.begin(),
                              {IsolatingInterval{Rat(0), Rat(0), 1}, zero_mult});
    std::sort(report.entries.begin(), report.entries.end(),
              [](RootEntry const& a, RootEntry const& b) { return a.imag.lo < b.imag.lo; });
    return report;
}

AlgebraicReal max_imag_squared(CLForm const& form)
{
    if (form.c_poly.degree() == 0) {
        // only root is -1/2 (odd parity, empty c-list)
        return AlgebraicReal::from_rational(Rat(0));
    }
    Poly shifted = form.c_poly.shift(Rat(1, 4)); // roots are c_i - 1/4
    auto top = max_real_root(shifted, Rat(1, 1024));
    if (!top)
        throw InternalInvariantViolation("max_imag_squared: CLForm without real c roots");
    return AlgebraicReal(shifted, *top);
}

} // namespace critline
