/* Command-line surface for the critical-line polynomial library.
 *
 * Subcommands: analyze, hstar, bounds, cone, interlace, omega, families.
 * Every command emits a structured report as plain text (default), JSON
 * (--json) or CSV (--csv, tabular commands). With --deterministic the
 * timing field is omitted and the output is byte-identical across runs.
 *
 * Exit codes: 0 success, 2 input/parse error, 3 domain error, 4 internal
 * invariant violation.
 */

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "critline/clform.hpp"
#include "critline/cone.hpp"
#include "critline/errors.hpp"
#include "critline/families.hpp"
#include "critline/hstar.hpp"
#include "critline/interlace.hpp"
#include "critline/palbasis.hpp"

using namespace critline;
using nlohmann::json;

namespace {

char const* const kVersion = "0.1.0";

enum class Format { text, json_out, csv };

struct Options {
    Format format = Format::text;
    int digits = 6;
    bool deterministic = false;
    std::string data_dir = "data";
};

std::vector<Rat> parse_rat_list(std::string const& s)
{
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    size_t pos = 1;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw ParseError("empty entry at position " + std::to_string(pos) + " in '" + s + "'");
        try {
            out.push_back(parse_rat(item));
        } catch (std::invalid_argument const& e) {
            throw ParseError("entry " + std::to_string(pos) + ": " + e.what());
        }
        ++pos;
    }
    if (out.empty())
        throw ParseError("empty list");
    return out;
}

std::vector<int> parse_degree_list(std::string const& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        try {
            if (dots != std::string::npos) {
                int lo = std::stoi(item.substr(0, dots));
                int hi = std::stoi(item.substr(dots + 2));
                if (lo > hi)
                    throw ParseError("empty range '" + item + "'");
                for (int d = lo; d <= hi; ++d)
                    out.push_back(d);
            } else {
                out.push_back(std::stoi(item));
            }
        } catch (std::invalid_argument const&) {
            throw ParseError("malformed degree entry '" + item + "'");
        } catch (std::out_of_range const&) {
            throw ParseError("degree out of range '" + item + "'");
        }
    }
    if (out.empty())
        throw ParseError("empty degree list");
    return out;
}

Rat display_width(int digits)
{
    Rat w(1);
    for (int i = 0; i < digits + 4; ++i)
        w /= 10;
    return w;
}

/* correctly rounded decimals: both interval endpoints must agree after
 * rounding, refining through the owning polynomial when they do not
 */
std::string interval_decimal(Poly const& owner, IsolatingInterval iv, int digits)
{
    return certified_decimal(owner, iv, digits);
}

std::string rat_str(Rat const& x)
{
    return denominator(x) == 1 ? numerator(x).str() : numerator(x).str() + "/" + denominator(x).str();
}

json poly_json(Poly const& p)
{
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(rat_str(p.coeff(i)));
    return json{{"degree", p.degree()}, {"coeffs_ascending", coeffs}, {"display", p.str()}};
}

json hstar_json(HStarVector const& h)
{
    json entries = json::array();
    for (auto const& x : h.h)
        entries.push_back(rat_str(x));
    return json{{"degree", h.degree}, {"entries", entries}};
}

json roots_json(CLForm const& form, Poly const& expansion, int digits)
{
    // imaginary parts are roots of the restriction; use it to certify digits
    auto restriction = restrict_to_cl(expansion);
    Poly owner = restriction ? restriction->q : Poly{};
    auto report = cl_roots(form, display_width(digits));
    json out = json::array();
    for (auto const& e : report.entries) {
        json entry;
        entry["real"] = "-1/2";
        entry["imag"] = e.imag.is_exact()
                            ? decimal_string(e.imag.lo, digits)
                            : (owner.is_zero() ? decimal_string(e.imag.midpoint(), digits)
                                               : interval_decimal(owner, e.imag, digits));
        entry["imag_exact"] = e.imag.is_exact();
        entry["multiplicity"] = e.multiplicity;
        entry["conjugate_pair"] = !(e.imag.is_exact() && e.imag.lo == 0);
        out.push_back(entry);
    }
    return out;
}

struct Command {
    std::string name;
    json inputs;
    json results;
    std::string text;
    std::vector<std::string> csv_lines; // empty when the command is not tabular
};

int emit(Command const& cmd, Options const& opt, std::chrono::steady_clock::time_point start)
{
    if (opt.format == Format::csv && cmd.csv_lines.empty())
        throw ParseError("--csv is only available for tabular commands");
    if (opt.format == Format::json_out) {
        json report{{"command", cmd.name},
                    {"inputs", cmd.inputs},
                    {"results", cmd.results},
                    {"precision", {{"digits", opt.digits}}},
                    {"version", kVersion}};
        if (!opt.deterministic) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            report["timing_ms"] = ms;
        }
        std::cout << report.dump(2) << "\n";
    } else if (opt.format == Format::csv) {
        for (auto const& line : cmd.csv_lines)
            std::cout << line << "\n";
    } else {
        std::cout << cmd.text;
        if (!opt.deterministic) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            std::cout << "(" << ms << " ms)\n";
        }
    }
    return 0;
}

Command cmd_analyze(Poly const& p, json inputs, Options const& opt)
{
    Command cmd;
    cmd.name = "analyze";
    cmd.inputs = std::move(inputs);

    auto rep = diamond_check(p);
    cmd.results["polynomial"] = poly_json(p);
    cmd.results["hstar"] = hstar_json(rep.hstar);
    cmd.results["palindromic"] = rep.palindromic;
    cmd.results["nonnegative"] = rep.nonnegative;
    cmd.results["diamond"] = rep.diamond;

    auto hibi = hibi_check(rep.hstar);
    cmd.results["hibi"] = hibi ? json(*hibi) : json("not_applicable");

    auto detected = cl_detect(p);
    std::ostringstream text;
    text << "polynomial: " << p.str() << "\n";
    if (auto* form = std::get_if<CLForm>(&detected)) {
        cmd.results["cl"] = true;
        cmd.results["cl_form"] = {{"scale", rat_str(form->scale)},
                                  {"parity", form->parity == Parity::odd ? "odd" : "even"},
                                  {"c_poly", poly_json(form->c_poly)}};
        cmd.results["roots"] = roots_json(*form, p, opt.digits);
        text << "CL-polynomial: yes (scale " << rat_str(form->scale) << ", "
             << (form->parity == Parity::odd ? "odd" : "even") << ", C(u) = "
             << form->c_poly.str("u") << ")\n";
        text << "roots (imaginary parts, real part -1/2):\n";
        for (auto const& r : cmd.results["roots"]) {
            if (r["conjugate_pair"].get<bool>())
                text << "  +-" << r["imag"].get<std::string>() << "i";
            else
                text << "  -1/2 exactly";
            text << "  (multiplicity " << r["multiplicity"].get<int>() << ")\n";
        }
    } else {
        cmd.results["cl"] = false;
        cmd.results["not_cl_reason"] = to_string(std::get<NotCLReason>(detected));
        text << "CL-polynomial: no (" << to_string(std::get<NotCLReason>(detected)) << ")\n";
    }
    text << "h*-vector: (";
    for (size_t i = 0; i < rep.hstar.h.size(); ++i)
        text << (i ? ", " : "") << rat_str(rep.hstar.h[i]);
    text << ")\n";
    text << "palindromic: " << (rep.palindromic ? "yes" : "no")
         << ", nonnegative: " << (rep.nonnegative ? "yes" : "no")
         << ", diamond: " << (rep.diamond ? "yes" : "no") << "\n";
    text << "Hibi lower bound: "
         << (hibi ? (*hibi ? "holds" : "fails") : "not applicable (h*_d = 0)") << "\n";
    cmd.text = text.str();
    return cmd;
}

Command cmd_hstar(Options const&, std::optional<std::string> const& coeffs,
                  std::optional<std::string> const& hstar)
{
    Command cmd;
    cmd.name = "hstar";
    if (coeffs && hstar)
        throw ParseError("give either --coeffs or --hstar, not both");
    if (coeffs) {
        Poly p(parse_rat_list(*coeffs));
        if (p.is_zero())
            throw ParseError("zero polynomial");
        cmd.inputs = {{"coeffs", *coeffs}};
        auto h = hstar_from_poly(p);
        cmd.results["hstar"] = hstar_json(h);
        cmd.results["palindromic"] = is_palindromic(h);
        std::ostringstream text;
        text << "h*-vector of " << p.str() << ": (";
        for (size_t i = 0; i < h.h.size(); ++i)
            text << (i ? ", " : "") << rat_str(h.h[i]);
        text << ")\n";
        cmd.text = text.str();
    } else if (hstar) {
        auto entries = parse_rat_list(*hstar);
        HStarVector h{static_cast<int>(entries.size()) - 1, entries};
        cmd.inputs = {{"hstar", *hstar}};
        Poly p = poly_from_hstar(h);
        cmd.results["polynomial"] = poly_json(p);
        cmd.text = "polynomial with this h*-vector: " + p.str() + "\n";
    } else {
        throw ParseError("hstar needs --coeffs or --hstar");
    }
    return cmd;
}

Command cmd_bounds(Options const& opt, std::string const& degrees)
{
    Command cmd;
    cmd.name = "bounds";
    cmd.inputs = {{"degrees", degrees}};
    auto ds = parse_degree_list(degrees);
    for (int d : ds)
        if (d < 1)
            throw OutOfRange("degrees must be >= 1");

    auto rows = bounds_table(ds, display_width(opt.digits));
    json jrows = json::array();
    std::ostringstream text;
    cmd.csv_lines.push_back("d,alpha_tilde,beta_sr,braun_develin,braun_disc");
    text << "d\talpha~_d\tbeta_sr\td^2/pi\td(d-1/2)\n";
    for (auto const& row : rows) {
        // certify the two computed columns through their defining data
        std::string at = row.alpha_tilde.is_exact()
                             ? decimal_string(row.alpha_tilde.lo, opt.digits)
                             : decimal_string(row.alpha_tilde.midpoint(), opt.digits);
        std::string sr = row.beta_sr.is_exact()
                             ? decimal_string(row.beta_sr.lo, opt.digits)
                             : decimal_string(row.beta_sr.midpoint(), opt.digits);
        std::string bd = decimal_string(row.braun_develin, opt.digits);
        // d(d-1/2) is an integer or a half-integer; print it like the table
        std::string disc = is_integer(row.braun_disc) ? numerator(row.braun_disc).str()
                                                      : decimal_string(row.braun_disc, 1);
        jrows.push_back({{"d", row.d},
                         {"alpha_tilde", at},
                         {"beta_sr", sr},
                         {"braun_develin", bd},
                         {"braun_disc", disc}});
        std::ostringstream line;
        line << row.d << "," << at << "," << sr << "," << bd << "," << disc;
        cmd.csv_lines.push_back(line.str());
        text << row.d << "\t" << at << "\t" << sr << "\t" << bd << "\t" << disc << "\n";
    }
    cmd.results["rows"] = jrows;
    cmd.text = text.str();
    return cmd;
}

Command cmd_cone(Options const& opt, int degree, bool check_appendix)
{
    Command cmd;
    cmd.name = "cone";
    cmd.inputs = {{"degree", degree}, {"check_appendix", check_appendix}};
    if (degree < 2)
        throw OutOfRange("cone needs degree >= 2");

    auto cd = cone_description(degree);
    json ineqs = json::array();
    for (auto const& iq : cd.inequalities) {
        json normal = json::array();
        for (auto const& x : iq.normal)
            normal.push_back(x.str());
        ineqs.push_back({{"normal", normal}, {"offset", iq.offset.str()}});
    }
    json verts = json::array();
    for (auto const& vx : cd.vertices) {
        json v = json::array();
        for (auto const& x : vx.v)
            v.push_back(rat_str(x));
        verts.push_back(v);
    }
    auto identity = vertex_identity_check(degree);
    cmd.results["inequalities"] = ineqs;
    cmd.results["vertices"] = verts;
    cmd.results["is_lattice"] = cd.is_lattice;
    cmd.results["vertex_basis_pairing"] = identity.pairing;
    cmd.results["vertex_identity_ok"] = identity.ok;

    std::ostringstream text;
    text << "diamond region for degree " << degree << " (in Vieta coordinates v_1..v_"
         << degree / 2 << ")\n";
    text << "inequalities:\n";
    for (auto const& iq : cd.inequalities)
        text << "  " << iq.str() << "\n";
    text << "vertices:\n";
    for (size_t j = 0; j < cd.vertices.size(); ++j) {
        text << "  (";
        for (size_t k = 0; k < cd.vertices[j].v.size(); ++k)
            text << (k ? ", " : "") << rat_str(cd.vertices[j].v[k]);
        text << ")  <-> p_" << identity.pairing[j] << "\n";
    }
    text << "lattice simplex: " << (cd.is_lattice ? "yes" : "no") << "\n";

    if (check_appendix) {
        auto reference = load_appendix(opt.data_dir + "/appendix_a.json");
        auto comparison = appendix_compare(degree, reference);
        cmd.results["appendix"] = {{"inequalities_match", comparison.inequalities_match},
                                   {"vertices_match", comparison.vertices_match}};
        text << "reference comparison: inequalities "
             << (comparison.inequalities_match ? "match" : "MISMATCH") << ", vertices "
             << (comparison.vertices_match ? "match" : "MISMATCH") << "\n";
    }
    cmd.text = text.str();
    return cmd;
}

Command cmd_interlace(Options const&, int dmax)
{
    Command cmd;
    cmd.name = "interlace";
    cmd.inputs = {{"dmax", dmax}};
    if (dmax < 1)
        throw OutOfRange("interlace needs --dmax >= 1");
    auto report = interlace_suite(dmax);
    json rows = json::array();
    std::ostringstream text;
    cmd.csv_lines.push_back("d,chain,combination");
    text << "d\tp0^d interlaces p0^(d+1)\tcombination check\n";
    for (auto const& row : report.rows) {
        rows.push_back(
            {{"d", row.d}, {"chain", row.chain}, {"combination", row.combination}});
        std::ostringstream line;
        line << row.d << "," << (row.chain ? "pass" : "fail") << ","
             << (row.combination ? "pass" : "fail");
        cmd.csv_lines.push_back(line.str());
        text << row.d << "\t" << (row.chain ? "pass" : "fail") << "\t"
             << (row.combination ? "pass" : "fail") << "\n";
    }
    cmd.results["rows"] = rows;
    cmd.results["all_pass"] = report.all_pass;
    text << (report.all_pass ? "all pass\n" : "FAILURES PRESENT\n");
    cmd.text = text.str();
    return cmd;
}

Command cmd_omega(Options const& opt, int degree, std::string const& target)
{
    Command cmd;
    cmd.name = "omega";
    cmd.inputs = {{"degree", degree}, {"target", target}};
    Rat t0 = parse_rat(target);
    auto w = omega_witness(degree, t0);
    cmd.results["c"] = rat_str(w.c);
    cmd.results["witness"] = poly_json(w.f);
    cmd.results["is_cl"] = w.is_cl;
    cmd.results["diamond"] = w.diamond;
    cmd.results["vanishes_at_target"] = w.vanishes_at_target;

    std::ostringstream text;
    text << "witness for a degree-" << degree << " diamond CL-polynomial vanishing at -1/2 + ("
         << rat_str(t0) << ")i\n";
    text << "c = " << rat_str(w.c) << "\n";
    text << "f = " << w.f.str() << "\n";
    text << "CL: " << (w.is_cl ? "yes" : "NO") << ", diamond: " << (w.diamond ? "yes" : "NO")
         << ", vanishes at target: " << (w.vanishes_at_target ? "yes" : "NO") << "\n";
    (void)opt;
    cmd.text = text.str();
    return cmd;
}

Command cmd_families(Options const& opt, bool prop36, bool degree10, int degree, long m_lo,
                     long m_hi)
{
    Command cmd;
    cmd.name = "families";
    cmd.inputs = {{"prop36", prop36}, {"degree10", degree10}};
    if (prop36 == degree10)
        throw ParseError("families needs exactly one of --prop36 or --degree10");
    std::ostringstream text;
    if (prop36) {
        cmd.inputs["degree"] = degree;
        if (degree < 2 || degree > 9)
            throw OutOfRange("the published ordering chains cover degrees 2..9");
        auto rep = prop36_order_check(degree);
        cmd.results["degree"] = rep.d;
        cmd.results["pass"] = rep.pass;
        cmd.results["chain"] = rep.chain;
        text << "extremal-root ordering at degree " << rep.d << ": "
             << (rep.pass ? "holds" : "FAILS") << "\n";
        for (auto const& line : rep.chain)
            text << "  " << line << "\n";
    } else {
        cmd.inputs["m_range"] = {{"lo", m_lo}, {"hi", m_hi}};
        json rows = json::array();
        cmd.csv_lines.push_back("m,is_cl,diamond,max_imag,beats_simplex");
        text << "degree-10 family f = p0 + p1 + m p2 + p3 + p4 + p5\n";
        text << "m\tCL\tdiamond\tmax imag\tbeats simplex\n";
        for (long m = m_lo; m <= m_hi; ++m) {
            auto rep = degree10_family(m);
            std::string imag =
                rep.is_cl ? decimal_string(rep.max_imag.midpoint(), opt.digits) : "-";
            rows.push_back({{"m", m},
                            {"is_cl", rep.is_cl},
                            {"diamond", rep.is_cl && rep.diamond.diamond},
                            {"max_imag", imag},
                            {"beats_simplex", rep.is_cl && rep.versus_sr > 0}});
            std::ostringstream line;
            line << m << "," << (rep.is_cl ? "yes" : "no") << ","
                 << ((rep.is_cl && rep.diamond.diamond) ? "yes" : "no") << "," << imag << ","
                 << ((rep.is_cl && rep.versus_sr > 0) ? "yes" : "no");
            cmd.csv_lines.push_back(line.str());
            text << m << "\t" << (rep.is_cl ? "yes" : "no") << "\t"
                 << ((rep.is_cl && rep.diamond.diamond) ? "yes" : "no") << "\t" << imag << "\t"
                 << ((rep.is_cl && rep.versus_sr > 0) ? "yes" : "no") << "\n";
        }
        cmd.results["rows"] = rows;
    }
    cmd.text = text.str();
    return cmd;
}

} // namespace

int main(int argc, char** argv)
{
    auto start = std::chrono::steady_clock::now();

    CLI::App app{"critline: exact analysis of polynomials with roots on Re(z) = -1/2"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    if (char const* env = std::getenv("CRITLINE_DIGITS")) {
        try {
            opt.digits = std::stoi(env);
        } catch (...) {
            std::cerr << "error: bad CRITLINE_DIGITS value '" << env << "'\n";
            return 2;
        }
    }

    bool as_json = false, as_csv = false;
    app.add_flag("--json", as_json, "emit a JSON report");
    app.add_flag("--csv", as_csv, "emit CSV (tabular commands)");
    app.add_flag("--deterministic", opt.deterministic,
                 "omit timing so identical inputs give identical bytes");
    app.add_option("--digits", opt.digits, "displayed decimal digits");
    app.add_option("--data", opt.data_dir, "reference data directory");

    auto* analyze = app.add_subcommand("analyze", "full report on one polynomial");
    std::optional<std::string> a_coeffs, a_cs, a_hstar, a_scale;
    bool a_even = false, a_odd = false;
    analyze->add_option("--coeffs", a_coeffs, "coefficients, ascending degree");
    analyze->add_option("--cs", a_cs, "factored input: list of c values");
    analyze->add_option("--scale", a_scale, "scale for --cs input");
    analyze->add_flag("--even", a_even, "--cs builds an even-degree polynomial");
    analyze->add_flag("--odd", a_odd, "--cs builds an odd-degree polynomial");
    analyze->add_option("--hstar", a_hstar, "h*-vector input");

    auto* hstar_cmd = app.add_subcommand("hstar", "h*-transform in either direction");
    std::optional<std::string> h_coeffs, h_hstar;
    hstar_cmd->add_option("--coeffs", h_coeffs, "polynomial coefficients, ascending");
    hstar_cmd->add_option("--hstar", h_hstar, "h*-vector to invert");

    auto* bounds = app.add_subcommand("bounds", "root-bound comparison table");
    std::string b_degrees;
    bounds->add_option("--degrees", b_degrees, "degree list, e.g. 2..10 or 2,5,150")->required();

    auto* cone = app.add_subcommand("cone", "diamond region in Vieta coordinates");
    int c_degree = 0;
    bool c_appendix = false;
    cone->add_option("--degree", c_degree, "degree")->required();
    cone->add_flag("--check-appendix", c_appendix, "compare against bundled reference data");

    auto* interlace = app.add_subcommand("interlace", "interlacing checks for the p0 family");
    int i_dmax = 0;
    interlace->add_option("--dmax", i_dmax, "largest degree")->required();

    auto* omega = app.add_subcommand("omega", "connectedness witness at a rational target");
    int o_degree = 0;
    std::string o_target;
    omega->add_option("--degree", o_degree, "witness degree")->required();
    omega->add_option("--target", o_target, "rational imaginary part")->required();

    auto* families = app.add_subcommand("families", "ordering checks and the degree-10 family");
    bool f_prop36 = false, f_degree10 = false;
    int f_degree = 0;
    long f_mlo = 1, f_mhi = 14;
    families->add_flag("--prop36", f_prop36, "extremal-root ordering chain");
    families->add_flag("--degree10", f_degree10, "degree-10 family sweep");
    families->add_option("--degree", f_degree, "degree for --prop36");
    families->add_option("--m-min", f_mlo, "first m for --degree10");
    families->add_option("--m-max", f_mhi, "last m for --degree10");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        // --help/--version exit 0; every other argv problem is input error
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (as_json && as_csv) {
        std::cerr << "error: choose one of --json or --csv\n";
        return 2;
    }
    opt.format = as_json ? Format::json_out : (as_csv ? Format::csv : Format::text);

    try {
        Command cmd;
        if (*analyze) {
            int sources = (a_coeffs ? 1 : 0) + (a_cs ? 1 : 0) + (a_hstar ? 1 : 0);
            if (sources != 1)
                throw ParseError("analyze needs exactly one of --coeffs, --cs, --hstar");
            Poly p;
            json inputs;
            if (a_coeffs) {
                p = Poly(parse_rat_list(*a_coeffs));
                inputs = {{"coeffs", *a_coeffs}};
            } else if (a_cs) {
                if (a_even == a_odd)
                    throw ParseError("--cs needs exactly one of --even / --odd");
                Rat scale = a_scale ? parse_rat(*a_scale) : Rat(1);
                auto cs = parse_rat_list(*a_cs);
                p = cl_from_cs(scale, a_odd ? Parity::odd : Parity::even, cs).second;
                inputs = {{"cs", *a_cs},
                          {"parity", a_odd ? "odd" : "even"},
                          {"scale", rat_str(scale)}};
            } else {
                auto entries = parse_rat_list(*a_hstar);
                HStarVector h{static_cast<int>(entries.size()) - 1, entries};
                p = poly_from_hstar(h);
                inputs = {{"hstar", *a_hstar}};
            }
            if (p.is_zero())
                throw ParseError("the zero polynomial has no analysis");
            cmd = cmd_analyze(p, std::move(inputs), opt);
        } else if (*hstar_cmd) {
            cmd = cmd_hstar(opt, h_coeffs, h_hstar);
        } else if (*bounds) {
            cmd = cmd_bounds(opt, b_degrees);
        } else if (*cone) {
            cmd = cmd_cone(opt, c_degree, c_appendix);
        } else if (*interlace) {
            cmd = cmd_interlace(opt, i_dmax);
        } else if (*omega) {
            cmd = cmd_omega(opt, o_degree, o_target);
        } else if (*families) {
            cmd = cmd_families(opt, f_prop36, f_degree10, f_degree, f_mlo, f_mhi);
        }
        return emit(cmd, opt, start);
    } catch (ParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (DomainError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
