#ifndef CRITLINE_CONE_HPP
#define CRITLINE_CONE_HPP

/* The (diamond) region of degree-d polynomials in Vieta coordinates
 * v_l = e_l(c_0, ..., c_{m-1}), m = floor(d/2): the h*-entries of a monic
 * scale-1 polynomial of the factored CL shape are affine in v, the region
 * is cut out by h_i*(v) >= 0 for i = 0..m, and its vertices (one per
 * omitted inequality) correspond to the palindromic basis elements.
 */

#include <map>
#include <string>
#include <vector>

#include "critline/poly.hpp"
#include "critline/rational.hpp"

namespace critline {

struct VietaVector {
    int degree = 0;     // d; v has floor(d/2) entries, v_0 = 1 is implicit
    std::vector<Rat> v; // v_1 .. v_m
};

/* Elementary symmetric values of the c's; degree defaults to the even
 * polynomial built on them.
 */
VietaVector vieta(std::vector<Rat> const& cs, int degree = -1);

/* Same coordinates read off a monic c-polynomial: v_l = (-1)^l [u^(m-l)],
 * which works even when the individual c_i are irrational.
 */
VietaVector vieta_from_cpoly(Poly const& c_poly, int degree);

/* <normal, v> + offset >= 0 with primitive integer entries. */
struct AffineIneq {
    std::vector<Int> normal;
    Int offset;

    Rat eval(VietaVector const& x) const;
    bool operator==(AffineIneq const& o) const = default;
    std::string str(std::string const& var = "v") const;
};

/* h_i*(v) as exact rational affine forms, i = 0..d, before normalization. */
struct AffineForm {
    std::vector<Rat> normal;
    Rat offset;
};

std::vector<AffineForm> hstar_linear_forms(int d);

/* The floor(d/2)+1 primitive inequalities h_i*(v) >= 0, i ascending. */
std::vector<AffineIneq> generate_inequalities(int d);

/* Closed-form expressions for the i = 0 and i = 1 rows. */
std::pair<AffineIneq, AffineIneq> prop42_closed_forms(int d);

/* One vertex per omitted inequality, in omitted-index order. */
std::vector<VietaVector> enumerate_vertices(int d);

bool lattice_check(std::vector<VietaVector> const& vertices);

/* cs must be sorted ascending; bounds c_i <= 2i+2 (d odd) / 2i+1 (d even). */
bool sufficient_condition_check(std::vector<Rat> const& cs, int d);

struct VertexIdentityReport {
    int degree;
    /* pairing[j] = i means vertex j equals the normalized p_i^d */
    std::vector<int> pairing;
    bool ok;
};

VertexIdentityReport vertex_identity_check(int d);

struct ConeDescription {
    int degree;
    std::vector<AffineForm> forms; // h_0* .. h_{floor(d/2)}*
    std::vector<AffineIneq> inequalities;
    std::vector<VietaVector> vertices;
    bool is_lattice;
};

ConeDescription cone_description(int d);

/* Bundled reference data transcribed from the published tables for degrees
 * 4..14; the loader rejects files whose payload checksum does not match.
 */
struct AppendixEntry {
    int degree;
    std::vector<AffineIneq> inequalities;
    std::vector<std::vector<Int>> vertices;
};

std::map<int, AppendixEntry> load_appendix(std::string const& path);

struct AppendixComparison {
    int degree;
    bool inequalities_match; // up to positive scaling and reordering
    bool vertices_match;     // exact as sets
};

/* Throws MissingReference when d is outside the bundled range. */
AppendixComparison appendix_compare(int d, std::map<int, AppendixEntry> const& reference);

} // namespace critline

#endif
