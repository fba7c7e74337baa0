#include "critline/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace critline {

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::monomial(int degree, Rat const& c)
{
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    std::vector<Rat> v(static_cast<size_t>(degree) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rat const& Poly::leading() const
{
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat Poly::coeff(int i) const
{
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size())
        return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

Poly Poly::operator-() const
{
    std::vector<Rat> v;
    v.reserve(coeffs_.size());
    for (auto const& c : coeffs_)
        v.push_back(-c);
    return Poly(std::move(v));
}

Poly Poly::operator+(Poly const& g) const
{
    std::vector<Rat> v(std::max(coeffs_.size(), g.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i] = coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i)
        v[i] += g.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(Poly const& g) const { return *this + (-g); }

Poly Poly::operator*(Poly const& g) const
{
    if (is_zero() || g.is_zero())
        return {};
    std::vector<Rat> v(coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * g.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(Rat const& a) const
{
    if (a == 0)
        return {};
    std::vector<Rat> v;
    v.reserve(coeffs_.size());
    for (auto const& c : coeffs_)
        v.push_back(c * a);
    return Poly(std::move(v));
}

Poly Poly::operator/(Rat const& a) const
{
    if (a == 0)
        throw std::invalid_argument("division by zero scalar");
    return *this * Rat(Rat(1) / a);
}

Rat Poly::eval(Rat const& x) const
{
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::pair<Rat, Rat> Poly::eval_complex(Rat const& re, Rat const& im) const
{
    Rat a(0), b(0); // accumulator a + b i
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rat na = a * re - b * im + *it;
        Rat nb = a * im + b * re;
        a = std::move(na);
        b = std::move(nb);
    }
    return {a, b};
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rat> v;
    v.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned n) const
{
    Poly result{Rat(1)};
    Poly base = *this;
    for (; n; n >>= 1) {
        if (n & 1)
            result *= base;
        if (n > 1)
            base *= base;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divmod(Poly const& divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    Poly rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd)
        return {{}, rem};
    std::vector<Rat> q(static_cast<size_t>(rem.degree() - dd) + 1, Rat(0));
    Rat const& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rat factor = rem.leading() / lead;
        q[static_cast<size_t>(k)] = factor;
        std::vector<Rat> rv = rem.coeffs_;
        for (int i = 0; i <= dd; ++i)
            rv[static_cast<size_t>(i + k)] -= factor * divisor.coeffs_[static_cast<size_t>(i)];
        rem = Poly(std::move(rv));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(Poly const& divisor) const
{
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::logic_error("exact_div: division was not exact");
    return q;
}

Poly Poly::mirror() const
{
    std::vector<Rat> v = coeffs_;
    for (size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return Poly(std::move(v));
}

Poly Poly::shift(Rat const& a) const
{
    // Horner: f(z + a) = (...((c_d)(z+a) + c_{d-1})(z+a) + ...)
    Poly acc;
    Poly zpa{a, Rat(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * zpa + Poly{*it};
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero())
        throw std::logic_error("monic of the zero polynomial");
    return *this / leading();
}

std::string Poly::str(std::string const& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat const& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        Rat a = boost::multiprecision::abs(c);
        if (a != 1 || i == 0)
            os << a;
        if (i > 0) {
            if (a != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

namespace {

/* Primitive integer image of a rational polynomial: multiply by the lcm of
 * denominators, divide by the gcd of numerators, keep the sign of the
 * leading coefficient.
 */
std::vector<Int> primitive_int_coeffs(Poly const& p)
{
    std::vector<Int> out;
    if (p.is_zero())
        return out;
    Int l = 1;
    for (auto const& c : p.coeffs())
        l = lcm(l, denominator(c));
    out.reserve(p.coeffs().size());
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

/* Pseudo-remainder of f by g over Z, reduced to primitive form. */
std::vector<Int> primitive_prem(std::vector<Int> r, std::vector<Int> const& g)
{
    Int const lg = g.back();
    while (r.size() >= g.size()) {
        Int top = r.back();
        if (top == 0) {
            r.pop_back();
            continue;
        }
        for (auto& c : r)
            c *= lg;
        size_t k = r.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            r[k + i] -= top * g[i];
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }
    if (!r.empty()) {
        Int content = 0;
        for (auto const& x : r)
            content = gcd(content, x);
        for (auto& x : r)
            x /= content;
    }
    return r;
}

} // namespace

Poly poly_gcd(Poly const& a, Poly const& b)
{
    if (a.is_zero())
        return b.is_zero() ? Poly{} : b.monic();
    if (b.is_zero())
        return a.monic();

    std::vector<Int> f = primitive_int_coeffs(a);
    std::vector<Int> g = primitive_int_coeffs(b);
    if (f.size() < g.size())
        std::swap(f, g);
    while (!g.empty()) {
        std::vector<Int> r = primitive_prem(std::move(f), g);
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<Rat> rc;
    rc.reserve(f.size());
    for (auto const& x : f)
        rc.emplace_back(x);
    return Poly(std::move(rc)).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0)
        return out;
    // Yun's algorithm
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a0 = poly_gcd(f, fp);
    Poly b = f.exact_div(a0);
    Poly c = fp.exact_div(a0);
    Poly d = c - b.derivative();
    for (int k = 1; !(b.degree() == 0); ++k) {
        Poly g = poly_gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, k);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
    }
    return out;
}

Poly SDecomposition::recompose() const
{
    Poly two_z_plus_one{Rat(1), Rat(2)};
    return compose_s(g) + two_z_plus_one * compose_s(h);
}

SDecomposition s_decompose(Poly const& p)
{
    // Horner against z^2 = s - z: carry the pair (v0(s), v1(s)) with
    // value = v0 + v1 * z, then v*z = v1*s + (v0 - v1)*z.
    Poly v0, v1;
    Poly s = Poly::monomial(1);
    for (int k = p.degree(); k >= 0; --k) {
        Poly n0 = v1 * s + Poly{p.coeff(k)};
        Poly n1 = v0 - v1;
        v0 = std::move(n0);
        v1 = std::move(n1);
    }
    // z = ((2z+1) - 1)/2
    Poly h = v1 / Rat(2);
    return SDecomposition{v0 - h, h};
}

Poly compose_s(Poly const& g)
{
    Poly s{Rat(0), Rat(1), Rat(1)}; // z^2 + z
    Poly acc;
    for (int k = g.degree(); k >= 0; --k)
        acc = acc * s + Poly{g.coeff(k)};
    return acc;
}

} // namespace critline
