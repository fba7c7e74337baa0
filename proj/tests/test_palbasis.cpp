#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critline/clform.hpp"
#include "critline/hstar.hpp"
#include "critline/palbasis.hpp"

using namespace critline;

namespace {

std::mt19937_64 rng(31337);

/* d! binom(n + d - i, d) for integer n, straight from integer falling
 * factorials; the independent route for the basis identity
 */
Int basis_value_at(int i, int d, long n)
{
    Int acc = 1;
    for (int j = 0; j < d; ++j)
        acc *= Int(n + d - i - j);
    return acc;
}

} // namespace

TEST_CASE("binomial basis examples")
{
    CHECK(binom_basis(0, 2) == Poly{Rat(2), Rat(3), Rat(1)}); // (z+2)(z+1)
    CHECK(binom_basis(2, 2) == Poly{Rat(0), Rat(-1), Rat(1)}); // z(z-1)
    CHECK(binom_basis(0, 4) + binom_basis(4, 4) ==
          Poly{Rat(24), Rat(44), Rat(46), Rat(4), Rat(2)});
    CHECK_THROWS_AS(binom_basis(3, 2), std::invalid_argument);
}

TEST_CASE("basis identity against integer binomials")
{
    // agreement at deg+1 points is polynomial identity
    for (int d = 1; d <= 25; ++d)
        for (int i = 0; i <= d; ++i) {
            Poly b = binom_basis(i, d);
            for (long n = -2; n <= d - 1; ++n)
                CHECK(b(Rat(n)) == Rat(basis_value_at(i, d, n)));
        }
}

TEST_CASE("palindromic basis examples")
{
    CHECK(pal_basis(0, 2) == Poly{Rat(2), Rat(2), Rat(2)});
    CHECK(pal_basis(1, 2) == Poly{Rat(0), Rat(1), Rat(1)}); // middle index: b_1 alone
    CHECK(pal_basis(0, 1) == Poly{Rat(1), Rat(2)});
}

TEST_CASE("palindromic basis symmetry")
{
    // p_i^d(-1-z) = (-1)^d p_i^d(z)
    for (int d = 1; d <= 12; ++d)
        for (int i = 0; 2 * i <= d; ++i) {
            Poly p = pal_basis(i, d);
            Poly reflected = p.mirror().shift(Rat(1));
            CHECK(reflected == (d % 2 == 0 ? p : -p));
        }
}

TEST_CASE("express_in_pal examples")
{
    {
        auto r = express_in_pal(Poly{Rat(2), Rat(3), Rat(3)});
        REQUIRE(r);
        CHECK(r->coeffs == std::vector<Rat>{Rat(1), Rat(1)});
    }
    {
        auto r = express_in_pal(pal_basis(0, 4));
        REQUIRE(r);
        CHECK(r->coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    }
    CHECK(!express_in_pal(Poly{Rat(0), Rat(0), Rat(0), Rat(1)})); // z^3
}

TEST_CASE("palindromic coefficients agree with h* entries")
{
    std::uniform_int_distribution<int> len(1, 6), par(0, 1);
    std::uniform_int_distribution<long> num(1, 60), den(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Rat> cs;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            cs.push_back(Rat(1, 4) + make_rat(Int(num(rng)), Int(den(rng))));
        Parity parity = par(rng) ? Parity::odd : Parity::even;
        auto [form, p] = cl_from_cs(make_rat(Int(num(rng)), Int(den(rng))), parity, cs);
        int d = p.degree();
        Int dfact = 1;
        for (int k = 2; k <= d; ++k)
            dfact *= k;

        auto coeffs = express_in_pal(p);
        REQUIRE(coeffs);
        auto h = hstar_from_poly(p);
        for (size_t i = 0; i < coeffs->coeffs.size(); ++i)
            CHECK(coeffs->coeffs[i] == h.h[i] / Rat(dfact));
    }
}

TEST_CASE("expressibility is exactly palindromicity of h*")
{
    std::uniform_int_distribution<int> deg(1, 10);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 4);
    int expressible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(d) + 1);
        for (auto& x : c)
            x = make_rat(Int(num(rng)), Int(den(rng)));
        if (c.back() == 0)
            c.back() = 1;
        // half the time, force palindromic h* by symmetrizing
        if (trial % 2 == 0) {
            auto h = hstar_from_poly(Poly(c));
            for (int i = 0; 2 * i <= d; ++i)
                h.h[static_cast<size_t>(d - i)] = h.h[static_cast<size_t>(i)];
            Poly p = poly_from_hstar(h);
            if (p.is_zero() || p.degree() != d)
                continue;
            c.assign(p.coeffs().begin(), p.coeffs().end());
        }
        Poly p(c);
        bool expressible = express_in_pal(p).has_value();
        CHECK(expressible == is_palindromic(hstar_from_poly(p)));
        expressible_seen += expressible ? 1 : 0;
    }
    CHECK(expressible_seen > 0);
    CHECK(expressible_seen < 200);
}

TEST_CASE("restriction to the critical line")
{
    {
        auto r = restrict_to_cl(pal_basis(0, 2));
        REQUIRE(r);
        CHECK(r->q == Poly{Rat(-3, 2), Rat(0), Rat(2)}); // 2t^2 - 3/2
        CHECK(r->parity_class == 2);
        CHECK(restriction_in_u(r->q) == Poly{Rat(-3, 2), Rat(2)});
    }
    {
        auto r = restrict_to_cl(Poly{Rat(1), Rat(2)});
        REQUIRE(r);
        CHECK(r->q == Poly{Rat(0), Rat(2)}); // 2t
        CHECK(restriction_in_u(r->q) == Poly{Rat(2)});
    }
    CHECK(!restrict_to_cl(Poly{Rat(0), Rat(0), Rat(1)})); // z^2 is not in the class

    // every basis element restricts cleanly
    for (int d = 1; d <= 25; ++d)
        for (int i = 0; 2 * i <= d; ++i)
            CHECK(restrict_to_cl(pal_basis(i, d)).has_value());

    // and so does every CL-polynomial
    std::uniform_int_distribution<long> num(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> cs{Rat(1, 4) + make_rat(Int(num(rng)), Int(4)),
                            Rat(1, 4) + make_rat(Int(num(rng)), Int(4))};
        auto [form, p] = cl_from_cs(Rat(1), trial % 2 ? Parity::odd : Parity::even, cs);
        auto r = restrict_to_cl(p);
        REQUIRE(r);
        // roots of the restriction are the imaginary parts: degree matches
        CHECK(r->q.degree() == p.degree());
    }
}

TEST_CASE("raw restriction reproduces complex evaluation")
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> deg(0, 9);
        int d = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(d) + 1);
        for (auto& x : c)
            x = make_rat(Int(num(rng)), Int(den(rng)));
        if (c.back() == 0)
            c.back() = 1;
        Poly p(std::move(c));
        auto [A, B] = restrict_to_cl_raw(p);
        Rat t0 = make_rat(Int(num(rng)), Int(den(rng)));
        auto [re, im] = p.eval_complex(Rat(-1, 2), t0);
        CHECK(A(t0) == re);
        CHECK(B(t0) == im);
    }
}

TEST_CASE("extremal roots of the basis restrictions")
{
    Rat w(1, 10000000);
    {
        auto a = extremal_a(0, 2, w);
        REQUIRE(a);
        CHECK(decimal_string(a->midpoint(), 7) == "0.8660254");
    }
    CHECK(!extremal_a(1, 2, w)); // degenerate middle index
    {
        auto a = extremal_a(0, 3, w);
        REQUIRE(a);
        CHECK(decimal_string(a->midpoint(), 3) == "2.398");
    }
    {
        auto sq = extremal_a_squared(0, 2);
        REQUIRE(sq);
        CHECK(sq->compare_rational(Rat(3, 4)) == 0);
    }
    // a_1^3 exists but is the zero root
    auto a13 = extremal_a(1, 3, w);
    REQUIRE(a13);
    CHECK(a13->is_exact());
    CHECK(a13->lo == 0);
}

TEST_CASE("alpha_tilde milestones")
{
    Rat w(1, 100000);
    CHECK(alpha_tilde(1, w).is_exact());
    CHECK(alpha_tilde(1, w).lo == 0);
    CHECK(decimal_string(alpha_tilde(2, w).midpoint(), 3) == "0.866");
    CHECK(decimal_string(alpha_tilde(10, w).midpoint(), 3) == "31.313");
}

TEST_CASE("extremal roots decrease in the index")
{
    for (int d = 2; d <= 20; ++d) {
        std::optional<AlgebraicReal> prev;
        for (int i = 0; 2 * i <= d; ++i) {
            auto cur = extremal_a_squared(i, d);
            if (!cur)
                continue; // degenerate middle index is skipped
            if (prev)
                CHECK(AlgebraicReal::compare(*cur, *prev) < 0);
            prev = std::move(cur);
        }
    }
}
