#include "critline/cone.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "critline/errors.hpp"
#include "critline/hstar.hpp"
#include "critline/palbasis.hpp"

namespace critline {

VietaVector vieta(std::vector<Rat> const& cs, int degree)
{
    size_t m = cs.size();
    std::vector<Rat> e(m + 1, Rat(0));
    e[0] = 1;
    for (size_t i = 0; i < m; ++i)
        for (size_t l = std::min(i + 1, m); l >= 1; --l)
            e[l] += cs[i] * e[l - 1];
    VietaVector out;
    out.degree = degree >= 0 ? degree : static_cast<int>(2 * m);
    out.v.assign(e.begin() + 1, e.end());
    return out;
}

VietaVector vieta_from_cpoly(Poly const& c_poly, int degree)
{
    int m = c_poly.degree();
    VietaVector out;
    out.degree = degree;
    out.v.reserve(static_cast<size_t>(m));
    for (int l = 1; l <= m; ++l) {
        Rat v = c_poly.coeff(m - l);
        out.v.push_back(l % 2 == 0 ? v : -v);
    }
    return out;
}

Rat AffineIneq::eval(VietaVector const& x) const
{
    if (x.v.size() != normal.size())
        throw std::invalid_argument("AffineIneq::eval: dimension mismatch");
    Rat acc(offset);
    for (size_t i = 0; i < normal.size(); ++i)
        acc += Rat(normal[i]) * x.v[i];
    return acc;
}

std::string AffineIneq::str(std::string const& var) const
{
    std::ostringstream os;
    os << "<(";
    for (size_t i = 0; i < normal.size(); ++i)
        os << (i ? ", " : "") << normal[i];
    os << "), " << var << "> + " << offset << " >= 0";
    return os.str();
}

namespace {

AffineIneq primitive(AffineForm const& form)
{
    Int l = denominator(form.offset);
    for (auto const& x : form.normal)
        l = lcm(l, denominator(x));
    std::vector<Int> n;
    n.reserve(form.normal.size());
    Int g = numerator(form.offset) * (l / denominator(form.offset));
    Int offset = g;
    g = abs(g);
    for (auto const& x : form.normal) {
        Int v = numerator(x) * (l / denominator(x));
        g = gcd(g, v);
        n.push_back(std::move(v));
    }
    if (g == 0)
        g = 1;
    for (auto& v : n)
        v /= g;
    return AffineIneq{std::move(n), offset / g};
}

int floor_half(int d) { return d / 2; }

} // namespace

std::vector<AffineForm> hstar_linear_forms(int d)
{
    if (d < 1)
        throw std::invalid_argument("hstar_linear_forms: need d >= 1");
    int m = floor_half(d);
    bool odd = d % 2 != 0;
    Poly s{Rat(0), Rat(1), Rat(1)};
    Poly b = odd ? Poly{Rat(1), Rat(2)} : Poly{Rat(1)};

    // H_l = h* of (z^2+z)^(m-l) b(z), pinned at nominal degree d; the form
    // for h_i* is then offset H_0[i] plus sum_l v_l H_l[i]
    std::vector<HStarVector> H;
    H.reserve(static_cast<size_t>(m) + 1);
    for (int l = 0; l <= m; ++l)
        H.push_back(hstar_from_poly(s.pow(static_cast<unsigned>(m - l)) * b, d));

    std::vector<AffineForm> forms(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        AffineForm f;
        f.offset = H[0].h[static_cast<size_t>(i)];
        f.normal.reserve(static_cast<size_t>(m));
        for (int l = 1; l <= m; ++l)
            f.normal.push_back(H[static_cast<size_t>(l)].h[static_cast<size_t>(i)]);
        forms[static_cast<size_t>(i)] = std::move(f);
    }
    return forms;
}

std::vector<AffineIneq> generate_inequalities(int d)
{
    if (d < 2)
        throw std::invalid_argument("generate_inequalities: need d >= 2");
    auto forms = hstar_linear_forms(d);
    int m = floor_half(d);
    std::vector<AffineIneq> out;
    out.reserve(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        out.push_back(primitive(forms[static_cast<size_t>(i)]));
    return out;
}

std::pair<AffineIneq, AffineIneq> prop42_closed_forms(int d)
{
    if (d < 2)
        throw std::invalid_argument("prop42_closed_forms: need d >= 2");
    int m = floor_half(d);
    AffineForm first;
    first.normal.assign(static_cast<size_t>(m), Rat(0));
    first.normal.back() = 1;
    first.offset = 0;

    AffineForm second;
    second.normal.assign(static_cast<size_t>(m), Rat(0));
    Rat unit = d % 2 == 0 ? Rat(1) : Rat(3);
    Rat p = unit;
    for (int l = m - 1; l >= 0; --l) {
        p *= 2; // unit * 2^(m-l)
        if (l == 0)
            second.offset = p;
        else
            second.normal[static_cast<size_t>(l) - 1] = p;
    }
    second.normal.back() = d % 2 == 0 ? Rat(-d) : Rat(-(d - 2));
    return {primitive(first), primitive(second)};
}

std::vector<VietaVector> enumerate_vertices(int d)
{
    auto ineqs = generate_inequalities(d);
    size_t m = static_cast<size_t>(floor_half(d));
    std::vector<VietaVector> out;
    for (size_t omit = 0; omit < ineqs.size(); ++omit) {
        // solve the m x m equality system of the kept inequalities
        std::vector<std::vector<Rat>> a;
        for (size_t j = 0; j < ineqs.size(); ++j) {
            if (j == omit)
                continue;
            std::vector<Rat> row;
            row.reserve(m + 1);
            for (auto const& x : ineqs[j].normal)
                row.emplace_back(x);
            row.emplace_back(-Rat(ineqs[j].offset));
            a.push_back(std::move(row));
        }
        for (size_t c = 0, r = 0; c < m; ++c, ++r) {
            size_t p = r;
            while (p < a.size() && a[p][c] == 0)
                ++p;
            if (p == a.size())
                throw InternalInvariantViolation(
                    "enumerate_vertices: singular subsystem at degree " + std::to_string(d));
            std::swap(a[p], a[r]);
            Rat inv = Rat(1) / a[r][c];
            for (size_t j = c; j <= m; ++j)
                a[r][j] *= inv;
            for (size_t i = 0; i < a.size(); ++i) {
                if (i == r || a[i][c] == 0)
                    continue;
                Rat f = a[i][c];
                for (size_t j = c; j <= m; ++j)
                    a[i][j] -= f * a[r][j];
            }
        }
        VietaVector vx;
        vx.degree = d;
        vx.v.reserve(m);
        for (size_t c = 0; c < m; ++c)
            vx.v.push_back(a[c][m]);
        if (ineqs[omit].eval(vx) < 0)
            throw InternalInvariantViolation(
                "enumerate_vertices: candidate vertex violates the omitted inequality");
        out.push_back(std::move(vx));
    }
    return out;
}

bool lattice_check(std::vector<VietaVector> const& vertices)
{
    for (auto const& vx : vertices)
        for (auto const& x : vx.v)
            if (!is_integer(x))
                return false;
    return true;
}

bool sufficient_condition_check(std::vector<Rat> const& cs, int d)
{
    int m = floor_half(d);
    if (static_cast<int>(cs.size()) != m)
        throw std::invalid_argument("sufficient_condition_check: wrong number of c's for degree");
    if (!std::is_sorted(cs.begin(), cs.end()))
        throw std::invalid_argument("sufficient_condition_check: c's must be sorted ascending");
    bool odd = d % 2 != 0;
    for (int i = 0; i < m; ++i) {
        Rat bound = odd ? Rat(2 * i + 2) : Rat(2 * i + 1);
        if (cs[static_cast<size_t>(i)] > bound)
            return false;
    }
    return true;
}

VertexIdentityReport vertex_identity_check(int d)
{
    auto vertices = enumerate_vertices(d);
    int m = floor_half(d);
    bool odd = d % 2 != 0;

    std::vector<Poly> normalized_basis;
    for (int i = 0; i <= m; ++i)
        normalized_basis.push_back(pal_basis(i, d).monic());

    VertexIdentityReport rep{d, {}, true};
    std::vector<bool> used(static_cast<size_t>(m) + 1, false);
    for (auto const& vx : vertices) {
        // monic scale-1 polynomial with these Vieta coordinates
        std::vector<Rat> scoeffs(static_cast<size_t>(m) + 1);
        scoeffs[static_cast<size_t>(m)] = 1;
        for (int l = 1; l <= m; ++l)
            scoeffs[static_cast<size_t>(m - l)] = vx.v[static_cast<size_t>(l) - 1];
        Poly candidate = compose_s(Poly(std::move(scoeffs)));
        if (odd)
            candidate *= Poly{Rat(1, 2), Rat(1)}; // monic (z + 1/2) factor
        int match = -1;
        for (int i = 0; i <= m; ++i) {
            if (candidate == normalized_basis[static_cast<size_t>(i)]) {
                match = i;
                break;
            }
        }
        rep.pairing.push_back(match);
        if (match < 0 || used[static_cast<size_t>(match)])
            rep.ok = false;
        else
            used[static_cast<size_t>(match)] = true;
    }
    return rep;
}

ConeDescription cone_description(int d)
{
    ConeDescription out;
    out.degree = d;
    auto forms = hstar_linear_forms(d);
    forms.resize(static_cast<size_t>(floor_half(d)) + 1);
    out.forms = std::move(forms);
    out.inequalities = generate_inequalities(d);
    out.vertices = enumerate_vertices(d);
    out.is_lattice = lattice_check(out.vertices);
    return out;
}

namespace {

uint64_t fnv1a64(std::string const& s)
{
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string canonical_payload(std::map<int, AppendixEntry> const& entries)
{
    std::ostringstream os;
    for (auto const& [d, e] : entries) {
        os << "d=" << d << ";";
        for (auto const& iq : e.inequalities) {
            os << "ineq=";
            for (auto const& x : iq.normal)
                os << x << ",";
            os << iq.offset << ";";
        }
        for (auto const& vx : e.vertices) {
            os << "vx=";
            for (size_t i = 0; i < vx.size(); ++i)
                os << (i ? "," : "") << vx[i];
            os << ";";
        }
    }
    return os.str();
}

} // namespace

std::map<int, AppendixEntry> load_appendix(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw MissingReference("cannot open reference data file: " + path);
    nlohmann::json j;
    in >> j;

    std::map<int, AppendixEntry> out;
    for (auto const& deg : j.at("degrees")) {
        AppendixEntry e;
        e.degree = deg.at("degree").get<int>();
        for (auto const& iq : deg.at("inequalities")) {
            AffineIneq a;
            for (auto const& x : iq.at("normal"))
                a.normal.emplace_back(x.get<long long>());
            a.offset = Int(iq.at("offset").get<long long>());
            e.inequalities.push_back(std::move(a));
        }
        for (auto const& vx : deg.at("vertices")) {
            std::vector<Int> v;
            for (auto const& x : vx)
                v.emplace_back(x.get<long long>());
            e.vertices.push_back(std::move(v));
        }
        out[e.degree] = std::move(e);
    }

    std::ostringstream expect;
    expect << "fnv1a64:" << std::hex << fnv1a64(canonical_payload(out));
    std::string stored = j.at("checksum").get<std::string>();
    if (stored != expect.str())
        throw MissingReference("reference data checksum mismatch (file edited?): expected " +
                               expect.str() + ", stored " + stored);
    return out;
}

namespace {

AffineIneq primitive_copy(AffineIneq const& a)
{
    AffineForm f;
    f.offset = Rat(a.offset);
    for (auto const& x : a.normal)
        f.normal.emplace_back(x);
    return primitive(f);
}

bool lex_less(std::vector<Int> const& a, std::vector<Int> const& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

AppendixComparison appendix_compare(int d, std::map<int, AppendixEntry> const& reference)
{
    auto it = reference.find(d);
    if (it == reference.end())
        throw MissingReference("no appendix data for degree " + std::to_string(d));

    AppendixComparison cmp{d, false, false};

    auto mine = generate_inequalities(d);
    std::vector<std::vector<Int>> a, b;
    for (auto const& iq : mine) {
        auto p = primitive_copy(iq);
        p.normal.push_back(p.offset);
        a.push_back(std::move(p.normal));
    }
    for (auto const& iq : it->second.inequalities) {
        auto p = primitive_copy(iq);
        p.normal.push_back(p.offset);
        b.push_back(std::move(p.normal));
    }
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    cmp.inequalities_match = a == b;

    auto verts = enumerate_vertices(d);
    std::vector<std::vector<Int>> va, vb;
    for (auto const& vx : verts) {
        std::vector<Int> row;
        for (auto const& x : vx.v) {
            if (!is_integer(x))
                return cmp; // cannot match a non-integer vertex set
            row.push_back(numerator(x));
        }
        va.push_back(std::move(row));
    }
    vb = it->second.vertices;
    std::sort(va.begin(), va.end(), lex_less);
    std::sort(vb.begin(), vb.end(), lex_less);
    cmp.vertices_match = va == vb;
    return cmp;
}

} // namespace critline
