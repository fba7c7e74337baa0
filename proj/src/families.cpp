#include "critline/families.hpp"

#include <stdexcept>

#include "critline/errors.hpp"

namespace critline {

Poly p0_poly(int d)
{
    return pal_basis(0, d);
}

Poly simplex_sr_poly(int d)
{
    if (d < 1)
        throw std::invalid_argument("simplex_sr_poly: need d >= 1");
    HStarVector ones{d, std::vector<Rat>(static_cast<size_t>(d) + 1, Rat(1))};
    return poly_from_hstar(ones);
}

namespace {

CLForm detect_or_fail(Poly const& p, std::string const& who)
{
    auto r = cl_detect(p);
    if (auto* form = std::get_if<CLForm>(&r))
        return *form;
    throw NotCLError(who + " failed CL detection (" + to_string(std::get<NotCLReason>(r)) + ")");
}

} // namespace

AlgebraicReal a_sr_squared(int d)
{
    CLForm form = detect_or_fail(simplex_sr_poly(d), "simplex_sr_poly(" + std::to_string(d) + ")");
    return max_imag_squared(form);
}

IsolatingInterval a_sr(int d, Rat const& width)
{
    AlgebraicReal u = a_sr_squared(d);
    return sqrt_of(u, width);
}

Rat braun_develin_approx(int d)
{
    static Rat const pi = [] {
        Int p("314159265358979323846264338327950288419716939937510");
        Int scale = 1;
        for (int i = 0; i < 50; ++i)
            scale *= 10;
        return make_rat(p, scale);
    }();
    return Rat(d) * d / pi;
}

std::vector<BoundsRow> bounds_table(std::vector<int> const& ds, Rat const& width)
{
    std::vector<BoundsRow> rows;
    rows.reserve(ds.size());
    for (int d : ds) {
        if (d < 1)
            throw std::invalid_argument("bounds_table: degrees must be >= 1");
        BoundsRow row;
        row.d = d;
        row.alpha_tilde = alpha_tilde(d, width);
        row.beta_sr = a_sr(d, width);
        row.braun_develin = braun_develin_approx(d);
        row.braun_disc = Rat(d) * d - Rat(d) / 2;
        // row sanity: the simplex root never exceeds the bound, and the
        // bound stays inside the disc radius from degree 2 on
        if (row.beta_sr.lo > row.alpha_tilde.hi)
            throw InternalInvariantViolation("bounds_table: simplex root above the bound");
        if (d >= 2 && row.alpha_tilde.hi >= row.braun_disc)
            throw InternalInvariantViolation("bounds_table: bound exceeds the disc radius");
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string describe(std::optional<IsolatingInterval> const& iv)
{
    if (!iv)
        return "(none)";
    return decimal_string(iv->midpoint(), 3);
}

/* left < right, treating a missing left-hand value as vacuously below */
bool ordered_below(std::optional<AlgebraicReal>& left, AlgebraicReal& right)
{
    if (!left)
        return true;
    return AlgebraicReal::compare(*left, right) < 0;
}

} // namespace

Prop36Report prop36_order_check(int d)
{
    if (d < 2 || d > 9)
        throw std::invalid_argument("prop36_order_check: published chains cover 2 <= d <= 9");
    AlgebraicReal a0 = *extremal_a_squared(0, d);
    auto a1 = extremal_a_squared(1, d);
    AlgebraicReal sr = a_sr_squared(d);

    Prop36Report rep{d, false, {}};
    Rat w(1, 100000);
    rep.chain.push_back("a_0 = " + describe(extremal_a(0, d, w)));
    rep.chain.push_back("a_sr = " + describe(a_sr(d, w)));
    rep.chain.push_back("a_1 = " + describe(extremal_a(1, d, w)));

    bool sr_below_a0 = AlgebraicReal::compare(sr, a0) < 0;
    if (d <= 5) {
        rep.pass = ordered_below(a1, sr) && sr_below_a0;
    } else {
        auto a2 = extremal_a_squared(2, d);
        rep.chain.push_back("a_2 = " + describe(extremal_a(2, d, w)));
        bool a1_below_sr = a1 && sr_below_a0 && AlgebraicReal::compare(sr, *a1) < 0;
        // chain is a_2 < a_sr < a_1 < a_0
        bool a1_below_a0 = a1 && AlgebraicReal::compare(*a1, a0) < 0;
        rep.pass = ordered_below(a2, sr) && a1_below_sr && a1_below_a0;
    }
    return rep;
}

Degree10Report degree10_family(long m)
{
    int const d = 10;
    Poly f = pal_basis(0, d) + pal_basis(1, d) + pal_basis(2, d) * Rat(m) + pal_basis(3, d) +
             pal_basis(4, d) + pal_basis(5, d);
    Degree10Report rep{m, false, {}, {}, 0};
    auto detected = cl_detect(f);
    auto* form = std::get_if<CLForm>(&detected);
    if (!form)
        return rep;
    rep.is_cl = true;
    rep.diamond = diamond_check(f);
    AlgebraicReal mine = max_imag_squared(*form);
    AlgebraicReal sr = a_sr_squared(d);
    rep.versus_sr = AlgebraicReal::compare(mine, sr);
    rep.max_imag = sqrt_of(mine, Rat(1, 1000000));
    return rep;
}

OmegaWitness omega_witness(int d, Rat const& t0)
{
    if (d < 1)
        throw std::invalid_argument("omega_witness: need d >= 1");
    Rat t0sq = t0 * t0;
    if (t0 <= 0)
        throw OutOfRange("target must be positive");
    if (d == 1)
        throw OutOfRange("degree 1 admits only the root -1/2");
    {
        AlgebraicReal lower = alpha_tilde_squared(d - 1);
        if (lower.compare_rational(t0sq) >= 0)
            throw OutOfRange("target not above alpha~_" + std::to_string(d - 1));
        AlgebraicReal upper = alpha_tilde_squared(d);
        if (upper.compare_rational(t0sq) <= 0)
            throw OutOfRange("target not below alpha~_" + std::to_string(d));
    }

    Poly p_top = p0_poly(d);
    Poly p_low = Poly{Rat(1), Rat(2)} * p0_poly(d - 1); // (2z+1) p_0^{d-1}
    bool even = d % 2 == 0;
    auto [At, Bt] = restrict_to_cl_raw(p_top);
    auto [Al, Bl] = restrict_to_cl_raw(p_low);
    Poly const& q_top = even ? At : Bt;
    Poly const& q_low = even ? Al : Bl;
    Rat denom = q_low(t0);
    if (denom == 0)
        throw InternalInvariantViolation("omega_witness: lower combination vanishes at target");
    Rat c = -q_top(t0) / denom;
    if (c <= 0)
        throw InternalInvariantViolation("omega_witness: combination coefficient not positive");

    OmegaWitness w;
    w.c = c;
    w.f = p_top + p_low * c;
    w.is_cl = std::holds_alternative<CLForm>(cl_detect(w.f));
    w.diamond = diamond_check(w.f).diamond;
    auto [re, im] = w.f.eval_complex(Rat(-1, 2), t0);
    w.vanishes_at_target = re == 0 && im == 0;
    return w;
}

} // namespace critline
