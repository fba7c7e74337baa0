#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "critline/clform.hpp"
#include "critline/errors.hpp"
#include "critline/interlace.hpp"
#include "critline/palbasis.hpp"

using namespace critline;

namespace {

std::mt19937_64 rng(24601);

HStarVector hv(std::vector<Rat> h)
{
    HStarVector out;
    out.degree = static_cast<int>(h.size()) - 1;
    out.h = std::move(h);
    return out;
}

} // namespace

TEST_CASE("cl_interlaces examples")
{
    Poly two_z_plus_one{Rat(1), Rat(2)};
    Poly quad{Rat(1), Rat(1), Rat(1)}; // z^2+z+1

    CHECK(cl_interlaces(two_z_plus_one, quad));
    CHECK(cl_interlaces(pal_basis(0, 1), pal_basis(0, 2)));

    // f's roots +-sqrt(19)/2 lie outside g's span +-sqrt(3)/2
    Poly f{Rat(5), Rat(1), Rat(1)};
    Poly g = two_z_plus_one * quad;
    CHECK(!cl_interlaces(f, g));
}

TEST_CASE("cl_interlaces shared roots and multiplicities")
{
    Poly two_z_plus_one{Rat(1), Rat(2)};
    Poly quad{Rat(1), Rat(1), Rat(1)};
    // shared conjugate pair: ties in the weaving are allowed
    CHECK(cl_interlaces(quad, two_z_plus_one * quad));

    // double root at -1/2 against a pair strictly outside
    Poly sq{Rat(1, 4), Rat(1), Rat(1)}; // (z+1/2)^2
    CHECK(cl_interlaces(two_z_plus_one, sq));
    CHECK(cl_interlaces(sq, two_z_plus_one * quad));

    // but a triple root cannot weave into a single pair plus one slot
    Poly cube = sq * two_z_plus_one;
    Poly pair_outside = quad * quad; // roots +-sqrt(3)/2 twice
    CHECK(!cl_interlaces(cube, pair_outside));
}

TEST_CASE("cl_interlaces errors")
{
    Poly two_z_plus_one{Rat(1), Rat(2)};
    Poly quad{Rat(1), Rat(1), Rat(1)};
    CHECK_THROWS_AS(cl_interlaces(quad, quad), DegreeMismatch);
    CHECK_THROWS_AS(cl_interlaces(Poly{Rat(0), Rat(1)}, quad), NotCLError);
    CHECK_THROWS_AS(cl_interlaces(two_z_plus_one, Poly{Rat(0), Rat(0), Rat(1)}), NotCLError);
}

TEST_CASE("circle interlacing on the unit family")
{
    CHECK(circle_interlaces(hv({Rat(1), Rat(0), Rat(1)}), hv({Rat(1), Rat(0), Rat(0), Rat(1)})) ==
          CircleInterlace::yes);
    CHECK(circle_interlaces(hv({Rat(1), Rat(0), Rat(0), Rat(1)}),
                            hv({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})) == CircleInterlace::yes);
    for (int d = 2; d <= 50; ++d)
        CHECK(unit_family_interlaces(d, d + 1));
}

TEST_CASE("circle interlacing numeric path")
{
    // 1 + 2t + t^3 has a real root off the unit circle
    CHECK(circle_interlaces(hv({Rat(1), Rat(0), Rat(1)}), hv({Rat(1), Rat(2), Rat(0), Rat(1)})) ==
          CircleInterlace::not_on_circle);

    // f at angles +-99.8 deg, g at {180, +-80.2} deg: the widest gap spans
    // angle 0, and cutting there weaves g f g f g
    HStarVector f = hv({Rat(1), Rat(17, 50), Rat(1)});
    Poly g = Poly{Rat(1), Rat(1)} * Poly{Rat(1), Rat(-17, 50), Rat(1)};
    HStarVector gv = hv({g.coeff(0), g.coeff(1), g.coeff(2), g.coeff(3)});
    CHECK(circle_interlaces(f, gv) == CircleInterlace::yes);

    // clustered pair inside one gap: not interlaced
    Poly f2 = Poly{Rat(1), Rat(-3, 5), Rat(1)} * Poly{Rat(1), Rat(-7, 10), Rat(1)};
    Poly g2 = Poly{Rat(1), Rat(-31, 50), Rat(1)} * Poly{Rat(1), Rat(-16, 25), Rat(1)} *
              Poly{Rat(-1), Rat(1)};
    HStarVector f2v = hv({f2.coeff(0), f2.coeff(1), f2.coeff(2), f2.coeff(3), f2.coeff(4)});
    HStarVector g2v =
        hv({g2.coeff(0), g2.coeff(1), g2.coeff(2), g2.coeff(3), g2.coeff(4), g2.coeff(5)});
    CHECK(circle_interlaces(f2v, g2v) == CircleInterlace::no);

    // numeric path agrees with the exact family route when the fast path
    // is bypassed by scaling
    for (int d = 3; d <= 20; ++d) {
        std::vector<Rat> a(static_cast<size_t>(d) + 1, Rat(0));
        a.front() = a.back() = Rat(2);
        std::vector<Rat> b(static_cast<size_t>(d) + 2, Rat(0));
        b.front() = b.back() = Rat(2);
        CHECK(circle_interlaces(hv(a), hv(b)) == CircleInterlace::yes);
    }

    CHECK_THROWS_AS(circle_interlaces(hv({Rat(1), Rat(1)}), hv({Rat(1), Rat(1)})), DegreeMismatch);
}

TEST_CASE("interlace suite")
{
    auto r1 = interlace_suite(1);
    REQUIRE(r1.rows.size() == 1);
    CHECK(r1.rows[0].chain);
    CHECK(r1.rows[0].combination);
    CHECK(r1.all_pass);

    auto r10 = interlace_suite(10);
    CHECK(r10.all_pass);
    for (auto const& row : r10.rows) {
        CHECK(row.chain);
        CHECK(row.combination);
    }
}

TEST_CASE("cl_interlaces agrees with a brute-force weaving oracle")
{
    // imaginary parts computed in floating point, sorted, and woven by the
    // textbook b_1 <= a_1 <= b_2 <= ... definition; random coarse-grid
    // rationals keep distinct roots far apart, so doubles order them safely
    std::uniform_int_distribution<long> num(1, 40), den(1, 4);
    std::uniform_int_distribution<int> count(0, 3);
    auto random_c = [&] { return Rat(1, 4) + make_rat(Int(num(rng)), Int(den(rng))); };
    auto imag_parts = [](std::vector<Rat> const& cs, bool odd) {
        std::vector<double> t;
        for (auto const& c : cs) {
            double v = std::sqrt((c - Rat(1, 4)).convert_to<double>());
            t.push_back(v);
            t.push_back(-v);
        }
        if (odd)
            t.push_back(0.0);
        std::sort(t.begin(), t.end());
        return t;
    };
    auto brute_weave = [](std::vector<double> const& a, std::vector<double> const& b) {
        // b has one more entry than a
        for (size_t k = 0; k < a.size(); ++k)
            if (!(b[k] <= a[k] && a[k] <= b[k + 1]))
                return false;
        return true;
    };

    int checked = 0, interlacing_seen = 0;
    while (checked < 300) {
        int m = count(rng);
        // deg f = 2m+1 (odd), deg g = 2m+2 (even, m+1 factors)
        std::vector<Rat> cf, cg;
        for (int i = 0; i < m; ++i)
            cf.push_back(random_c());
        for (int i = 0; i < m + 1; ++i)
            cg.push_back(random_c());
        auto [ff, f] = cl_from_cs(Rat(1), Parity::odd, cf);
        auto [gf, g] = cl_from_cs(Rat(1), Parity::even, cg);
        bool expected = brute_weave(imag_parts(cf, true), imag_parts(cg, false));
        CHECK(cl_interlaces(f, g) == expected);
        interlacing_seen += expected ? 1 : 0;
        ++checked;
    }
    // the sample must exercise both outcomes
    CHECK(interlacing_seen > 0);
    CHECK(interlacing_seen < checked);
}

TEST_CASE("positive combinations along the connectedness family stay CL")
{
    Poly two_z_plus_one{Rat(1), Rat(2)};
    std::uniform_int_distribution<long> num(1, 50), den(1, 16);
    for (int d = 1; d <= 6; ++d) {
        Poly upper = pal_basis(0, d + 1);
        Poly lower = two_z_plus_one * pal_basis(0, d);
        for (int trial = 0; trial < 20; ++trial) {
            Rat c = make_rat(Int(num(rng)), Int(den(rng)));
            CHECK(std::holds_alternative<CLForm>(cl_detect(upper + lower * c)));
        }
    }
}
