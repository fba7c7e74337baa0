#include "critline/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "critline/clform.hpp"
#include "critline/errors.hpp"
#include "critline/palbasis.hpp"

namespace critline {

namespace {

/* multiplicity of the root isolated by iv in p, via the square-free
 * factors; 0 when the root is not a root of p
 */
int multiplicity_in(std::vector<std::pair<Poly, int>> const& factors, IsolatingInterval const& iv)
{
    for (auto const& [f, k] : factors) {
        if (iv.is_exact()) {
            if (f(iv.lo) == 0)
                return k;
            continue;
        }
        if (count_real_roots(f, iv.lo, iv.hi) > 0)
            return k;
    }
    return 0;
}

} // namespace

bool cl_interlaces(Poly const& f, Poly const& g)
{
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("cl_interlaces: zero polynomial");
    if (g.degree() != f.degree() + 1)
        throw DegreeMismatch("cl_interlaces needs deg g = deg f + 1 (got " +
                             std::to_string(f.degree()) + " and " + std::to_string(g.degree()) + ")");
    if (!std::holds_alternative<CLForm>(cl_detect(f)))
        throw NotCLError("cl_interlaces: f is not a CL-polynomial");
    if (!std::holds_alternative<CLForm>(cl_detect(g)))
        throw NotCLError("cl_interlaces: g is not a CL-polynomial");

    // imaginary parts of the roots = real roots of the CL-restrictions
    Poly qf = restrict_to_cl(f)->q;
    Poly qg = restrict_to_cl(g)->q;

    auto ff = squarefree_decomposition(qf);
    auto fg = squarefree_decomposition(qg);

    // distinct values of the union, globally ordered
    auto positions = isolate_real_roots(qf * qg);

    // weaving with multiplicity slots: b_1 <= a_1 <= b_2 <= ... holds iff
    // the cumulative counts satisfy F <= G <= F+1 at every distinct root
    long cum_f = 0, cum_g = 0;
    for (auto const& iv : positions) {
        cum_f += multiplicity_in(ff, iv);
        cum_g += multiplicity_in(fg, iv);
        if (cum_g < cum_f || cum_g > cum_f + 1)
            return false;
    }
    return true;
}

namespace {

struct AngleList {
    // distinct angles as fractions of pi in [0, 2), with multiplicities
    std::vector<std::pair<Rat, int>> angles;
};

AngleList unit_family_angles(int k)
{
    AngleList out;
    for (int n = 0; n < k; ++n)
        out.angles.emplace_back(make_rat(1 + 2 * n, k), 1);
    return out;
}

bool weave_sorted(std::vector<std::pair<double, int>> const& fa,
                  std::vector<std::pair<double, int>> const& ga, double tol)
{
    // merge both angle lists, clustering values within tol
    struct Ev {
        double pos;
        long f, g;
    };
    std::vector<Ev> events;
    for (auto const& [p, m] : fa)
        events.push_back({p, m, 0});
    for (auto const& [p, m] : ga)
        events.push_back({p, 0, m});
    std::sort(events.begin(), events.end(), [](Ev const& a, Ev const& b) { return a.pos < b.pos; });
    std::vector<Ev> merged;
    for (auto const& e : events) {
        if (!merged.empty() && e.pos - merged.back().pos <= tol) {
            merged.back().f += e.f;
            merged.back().g += e.g;
        } else {
            merged.push_back(e);
        }
    }
    long cf = 0, cg = 0;
    for (auto const& e : merged) {
        cf += e.f;
        cg += e.g;
        if (cg < cf || cg > cf + 1)
            return false;
    }
    return true;
}

std::vector<std::complex<double>> durand_kerner(std::vector<double> const& coeffs)
{
    size_t n = coeffs.size() - 1;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;)
            acc = acc * z + coeffs[i];
        return acc;
    };
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (auto& zi : z) {
        w *= seed;
        zi = w;
    }
    double lead = coeffs.back();
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> denom = lead;
            for (size_t j = 0; j < n; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14)
            break;
    }
    return z;
}

} // namespace

bool unit_family_interlaces(int a, int b)
{
    if (b != a + 1)
        throw DegreeMismatch("unit_family_interlaces needs b = a + 1");
    auto fa = unit_family_angles(a);
    auto ga = unit_family_angles(b);
    // neither family has a root at angle 0, so cut there and weave exactly
    long cf = 0, cg = 0;
    size_t i = 0, j = 0;
    while (i < fa.angles.size() || j < ga.angles.size()) {
        bool take_f;
        if (i == fa.angles.size())
            take_f = false;
        else if (j == ga.angles.size())
            take_f = true;
        else
            take_f = fa.angles[i].first < ga.angles[j].first;
        if (take_f)
            cf += fa.angles[i++].second;
        else
            cg += ga.angles[j++].second;
        if (cg < cf || cg > cf + 1)
            return false;
    }
    return true;
}

CircleInterlace circle_interlaces(HStarVector const& hf, HStarVector const& hg, double tol)
{
    Poly pf(hf.h);
    Poly pg(hg.h);
    if (pf.is_zero() || pg.is_zero())
        throw std::invalid_argument("circle_interlaces: zero h*-polynomial");
    if (pg.degree() != pf.degree() + 1)
        throw DegreeMismatch("circle_interlaces needs deg h_g = deg h_f + 1 (got " +
                             std::to_string(pf.degree()) + " and " +
                             std::to_string(pg.degree()) + ")");

    auto is_unit_family = [](Poly const& p) {
        if (p.coeff(0) != 1 || p.leading() != 1)
            return false;
        for (int k = 1; k < p.degree(); ++k)
            if (p.coeff(k) != 0)
                return false;
        return true;
    };
    if (is_unit_family(pf) && is_unit_family(pg))
        return unit_family_interlaces(pf.degree(), pg.degree()) ? CircleInterlace::yes
                                                                : CircleInterlace::no;

    auto to_doubles = [](Poly const& p) {
        std::vector<double> v;
        v.reserve(static_cast<size_t>(p.degree()) + 1);
        for (int k = 0; k <= p.degree(); ++k)
            v.push_back(p.coeff(k).convert_to<double>());
        return v;
    };
    auto rf = durand_kerner(to_doubles(pf));
    auto rg = durand_kerner(to_doubles(pg));

    std::vector<double> all_angles;
    auto angles_of = [&](std::vector<std::complex<double>> const& roots)
        -> std::optional<std::vector<std::pair<double, int>>> {
        std::vector<std::pair<double, int>> out;
        for (auto const& z : roots) {
            if (std::abs(std::abs(z) - 1.0) > tol)
                return std::nullopt;
            double a = std::arg(z);
            if (a < 0)
                a += 2 * M_PI;
            out.emplace_back(a, 1);
            all_angles.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto fa = angles_of(rf);
    if (!fa)
        return CircleInterlace::not_on_circle;
    auto ga = angles_of(rg);
    if (!ga)
        return CircleInterlace::not_on_circle;

    // place the cut in the middle of the largest angular gap
    std::sort(all_angles.begin(), all_angles.end());
    double best_gap = 2 * M_PI - all_angles.back() + all_angles.front();
    double cut = std::fmod(all_angles.back() + best_gap / 2, 2 * M_PI);
    for (size_t i = 0; i + 1 < all_angles.size(); ++i) {
        double gap = all_angles[i + 1] - all_angles[i];
        if (gap > best_gap) {
            best_gap = gap;
            cut = all_angles[i] + gap / 2;
        }
    }
    auto rotate = [&](std::vector<std::pair<double, int>>& v) {
        for (auto& [p, m] : v) {
            p -= cut;
            if (p < 0)
                p += 2 * M_PI;
        }
        std::sort(v.begin(), v.end());
    };
    rotate(*fa);
    rotate(*ga);
    return weave_sorted(*fa, *ga, tol) ? CircleInterlace::yes : CircleInterlace::no;
}

InterlaceSuiteReport interlace_suite(int d_max)
{
    if (d_max < 1)
        throw std::invalid_argument("interlace_suite: need d_max >= 1");
    InterlaceSuiteReport report{{}, true};
    Poly two_z_plus_one{Rat(1), Rat(2)};
    for (int d = 1; d <= d_max; ++d) {
        Poly p0d = pal_basis(0, d);
        Poly p0d1 = pal_basis(0, d + 1);
        InterlaceRow row{d, false, false};
        row.chain = cl_interlaces(p0d, p0d1);

        // the combination from the connectedness argument: it must remain
        // CL, be interlaced by p_0^d, and keep its extremal root inside
        // p_0^{d+1}'s
        Poly h = p0d1 + two_z_plus_one * p0d;
        auto detected = cl_detect(h);
        if (auto* form = std::get_if<CLForm>(&detected)) {
            bool interlaced = cl_interlaces(p0d, h);
            auto hs = max_imag_squared(*form);
            auto gs = max_imag_squared(std::get<CLForm>(cl_detect(p0d1)));
            row.combination = interlaced && AlgebraicReal::compare(hs, gs) <= 0;
        }
        report.rows.push_back(row);
        report.all_pass = report.all_pass && row.chain && row.combination;
    }
    return report;
}

} // namespace critline
