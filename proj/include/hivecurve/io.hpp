#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asymptotics.hpp"
#include "horn.hpp"
#include "hyperbolicity.hpp"
#include "patchwork.hpp"
#include "ronkin.hpp"
#include "tropical.hpp"

namespace hivecurve::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hivecurve/1";

inline Json document() { return Json{{"schema", kSchema}}; }

[[noreturn]] inline void schema_error(const std::string& what) { fail(ErrorKind::SchemaError, what); }

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline void check_schema(const Json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
        schema_error("unsupported schema " + j.at("schema").dump());
}

// ---------------------------------------------------------------- scalars

inline Json to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            schema_error(e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return from_double(j.get<double>());
    schema_error("expected a rational, got " + j.dump());
}

inline double real_from(const Json& j) {
    if (j.is_number()) return j.get<double>();
    return to_double(rational_from(j));
}

inline int int_from(const Json& j) {
    if (!j.is_number_integer()) schema_error("expected an integer, got " + j.dump());
    return j.get<int>();
}

template <class T>
Json vector_json(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Rational>) a.push_back(to_json(x));
        else a.push_back(x);
    }
    return a;
}

inline std::vector<Rational> rational_vector(const Json& j) {
    if (!j.is_array()) schema_error("expected an array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from(x));
    return out;
}

inline Json index_json(const TriangleIndex& t) { return Json::array({t.i, t.j, t.k}); }

// ---------------------------------------------------------------- triangle tables

template <class T>
Json table_json(const TriangleTable<T>& h) {
    Json doc = document();
    doc["n"] = h.degree();
    Json vals = Json::array();
    for (const auto& t : h.indices()) {
        Json e{{"i", t.i}, {"j", t.j}, {"k", t.k}};
        if constexpr (std::is_same_v<T, Rational>) e["v"] = to_json(h.at(t));
        else e["v"] = h.at(t);
        vals.push_back(e);
    }
    doc["values"] = vals;
    return doc;
}

namespace detail {

template <class T, class F>
TriangleTable<T> table_from(const Json& j, F&& conv) {
    check_schema(j);
    const int n = int_from(field(j, "n"));
    if (n < 0) schema_error("negative degree");
    const auto& vals = field(j, "values");
    if (!vals.is_array()) schema_error("\"values\" must be an array");
    TriangleTable<T> out(n);
    std::vector<bool> seen(out.size(), false);
    for (const auto& e : vals) {
        TriangleIndex t{int_from(field(e, "i")), int_from(field(e, "j")), int_from(field(e, "k"))};
        if (!in_triangle(n, t)) schema_error("index outside the triangle: " + e.dump());
        auto p = triangle_position(n, t);
        if (seen[p]) schema_error("duplicate index: " + e.dump());
        seen[p] = true;
        out[p] = conv(field(e, "v"));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) schema_error("incomplete table");
    return out;
}

} // namespace detail

inline Hive hive_from_json(const Json& j) { return detail::table_from<Rational>(j, rational_from); }
inline TernaryForm<Rational> exact_form_from_json(const Json& j) { return detail::table_from<Rational>(j, rational_from); }
inline TernaryForm<double> form_from_json(const Json& j) { return detail::table_from<double>(j, real_from); }

/// True if every value is a string or an integer (so the form is exact as written).
inline bool form_is_exact(const Json& j) {
    for (const auto& e : field(j, "values"))
        if (!field(e, "v").is_string() && !field(e, "v").is_number_integer()) return false;
    return true;
}

// ---------------------------------------------------------------- boundaries

template <class T>
Json boundary_json(const BoundarySpec<T>& b) {
    Json doc = document();
    doc["alpha"] = vector_json(b.alpha);
    doc["beta"] = vector_json(b.beta);
    doc["gamma"] = vector_json(b.gamma);
    return doc;
}

inline BoundarySpec<Rational> boundary_from_json(const Json& j) {
    check_schema(j);
    BoundarySpec<Rational> b{rational_vector(field(j, "alpha")), rational_vector(field(j, "beta")),
                             rational_vector(field(j, "gamma"))};
    if (b.beta.size() != b.alpha.size() || b.gamma.size() != b.alpha.size())
        schema_error("boundary sides of different lengths");
    return b;
}

// ---------------------------------------------------------------- matrices

template <class S>
Json matrix_json(const Matrix<S>& m) {
    Json doc{{"n", m.order()}};
    Json re = Json::array(), im = Json::array();
    for (int r = 0; r < m.order(); ++r) {
        Json rr = Json::array(), ii = Json::array();
        for (int c = 0; c < m.order(); ++c) {
            if constexpr (std::is_same_v<S, GaussianRational>) {
                rr.push_back(to_json(m(r, c).re));
                ii.push_back(to_json(m(r, c).im));
            } else {
                rr.push_back(m(r, c).real());
                ii.push_back(m(r, c).imag());
            }
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    doc["re"] = re;
    doc["im"] = im;
    return doc;
}

namespace detail {

template <class S, class F>
Matrix<S> matrix_from(const Json& j, F&& make) {
    const int n = int_from(field(j, "n"));
    if (n <= 0) schema_error("matrix order must be positive");
    const auto& re = field(j, "re");
    const Json im = j.contains("im") ? j.at("im") : Json();
    if (!re.is_array() || static_cast<int>(re.size()) != n) schema_error("\"re\" must have n rows");
    Matrix<S> m(n);
    for (int r = 0; r < n; ++r) {
        if (!re[r].is_array() || static_cast<int>(re[r].size()) != n) schema_error("\"re\" rows must have n entries");
        for (int c = 0; c < n; ++c) {
            Json zero = 0;
            const Json& imv = im.is_null() ? zero : im.at(r).at(c);
            m(r, c) = make(re[r][c], imv);
        }
    }
    return m;
}

} // namespace detail

inline ExactComplexMatrix exact_matrix_from_json(const Json& j) {
    return detail::matrix_from<GaussianRational>(
        j, [](const Json& a, const Json& b) { return GaussianRational(rational_from(a), rational_from(b)); });
}

inline ComplexMatrix matrix_from_json(const Json& j) {
    return detail::matrix_from<std::complex<double>>(
        j, [](const Json& a, const Json& b) { return std::complex<double>(real_from(a), real_from(b)); });
}

template <class S>
Json triple_json(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c, const char* na, const char* nb,
                 const char* nc) {
    Json doc = document();
    doc[na] = matrix_json(a);
    doc[nb] = matrix_json(b);
    doc[nc] = matrix_json(c);
    return doc;
}

template <class S>
Json pencil_json(const PencilTriple<S>& p) {
    return triple_json(p.X, p.Y, p.Z, "X", "Y", "Z");
}

inline PencilTriple<GaussianRational> exact_pencil_from_json(const Json& j) {
    check_schema(j);
    return make_pencil(exact_matrix_from_json(field(j, "X")), exact_matrix_from_json(field(j, "Y")),
                       exact_matrix_from_json(field(j, "Z")));
}

inline PencilTriple<std::complex<double>> pencil_from_json(const Json& j) {
    check_schema(j);
    return make_pencil(matrix_from_json(field(j, "X")), matrix_from_json(field(j, "Y")), matrix_from_json(field(j, "Z")));
}

inline GLTriple<std::complex<double>> gl_triple_from_json(const Json& j) {
    check_schema(j);
    return make_gl_triple(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")),
                          matrix_from_json(field(j, "C")));
}

inline GLTriple<GaussianRational> exact_gl_triple_from_json(const Json& j) {
    check_schema(j);
    return make_gl_triple(exact_matrix_from_json(field(j, "A")), exact_matrix_from_json(field(j, "B")),
                          exact_matrix_from_json(field(j, "C")));
}

// ---------------------------------------------------------------- families

inline Json family_json(const LiftedFamily& f) {
    Json doc = document();
    doc["n"] = f.degree();
    Json vals = Json::array();
    for (const auto& t : f.exponents.indices())
        vals.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", to_json(f.coefficients.at(t))},
                        {"h", to_json(f.exponents.at(t))}});
    doc["values"] = vals;
    return doc;
}

/// Accepts a family document (entries with "c" and "h") or a hive document,
/// which is read as exponents with unit coefficients.
inline LiftedFamily family_from_json(const Json& j) {
    check_schema(j);
    const auto& vals = field(j, "values");
    if (vals.is_array() && !vals.empty() && vals.front().contains("v")) return LiftedFamily::unit(hive_from_json(j));
    const int n = int_from(field(j, "n"));
    Json cj = j, hj = j;
    cj["values"] = Json::array();
    hj["values"] = Json::array();
    for (const auto& e : vals) {
        Json base{{"i", field(e, "i")}, {"j", field(e, "j")}, {"k", field(e, "k")}};
        Json c = base, h = base;
        c["v"] = e.contains("c") ? e.at("c") : Json(1);
        h["v"] = field(e, "h");
        cj["values"].push_back(c);
        hj["values"].push_back(h);
    }
    (void)n;
    try {
        return LiftedFamily(detail::table_from<Rational>(cj, rational_from), detail::table_from<Rational>(hj, rational_from));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError) throw;
        schema_error(e.what());
    }
}

/// {"order": n, "matrices": [{"base": matrix, "scaling": [d_1..d_n]}, ...]}:
/// matrix a is D base D with D = diag(t^{d}).
inline RMatrixFamily rmatrix_family_from_json(const Json& j) {
    check_schema(j);
    RMatrixFamily fam;
    fam.order = int_from(field(j, "order"));
    const auto& ms = field(j, "matrices");
    if (!ms.is_array() || ms.empty()) schema_error("\"matrices\" must be a nonempty array");
    for (const auto& m : ms) {
        auto base = matrix_from_json(field(m, "base"));
        if (base.order() != fam.order) schema_error("matrix order differs from \"order\"");
        auto d = m.contains("scaling") ? rational_vector(m.at("scaling")) : std::vector<Rational>(fam.order, Rational(0));
        if (static_cast<int>(d.size()) != fam.order) schema_error("one scaling exponent per row");
        fam.matrices.push_back(RMatrixFamily::scaled(base, d));
    }
    return fam;
}

// ---------------------------------------------------------------- reports

inline Json rhombus_json(const RhombusInequality& r) {
    return Json{{"family", to_string(r.family)},
                {"anchor", index_json(r.anchor())},
                {"plus", Json::array({index_json(r.plus[0]), index_json(r.plus[1])})},
                {"minus", Json::array({index_json(r.minus[0]), index_json(r.minus[1])})}};
}

inline Json hive_report_json(const HiveReport& rep) {
    Json doc = document();
    doc["verdict"] = to_string(rep.verdict);
    Json v = Json::array(), t = Json::array();
    for (const auto& r : rep.violated) v.push_back(rhombus_json(r));
    for (const auto& r : rep.tight) t.push_back(rhombus_json(r));
    doc["violated"] = v;
    doc["tight"] = t;
    return doc;
}

inline Json hyperbolicity_json(const HyperbolicityReport& rep) {
    Json doc = document();
    doc["verdict"] = to_string(rep.verdict);
    doc["probes"] = rep.probes_tested;
    doc["reprobes"] = rep.reprobes;
    if (rep.counterexample) {
        doc["counterexample"] = {{"base", rep.counterexample->base},
                                 {"direction", rep.counterexample->direction},
                                 {"real_roots", rep.counterexample_roots}};
    }
    return doc;
}

template <class T>
Json backward_json(const BackwardReport<T>& rep) {
    Json doc = document();
    doc["verdict"] = rep.pass ? "pass" : "fail";
    Json ms = Json::array();
    for (const auto& m : rep.margins) {
        Json e = rhombus_json(m.rhombus);
        if constexpr (std::is_same_v<T, Rational>) {
            e["weight"] = to_json(m.weight);
            e["margin"] = to_json(m.margin);
        } else {
            e["weight"] = m.weight;
            e["margin"] = m.margin;
        }
        ms.push_back(e);
    }
    doc["margins"] = ms;
    return doc;
}

inline Json subdivision_json(const Subdivision& S) {
    Json doc = document();
    doc["n"] = S.n;
    doc["class"] = to_string(classify_subdivision(S));
    Json cells = Json::array();
    for (const auto& c : S.cells) {
        Json v = Json::array(), p = Json::array();
        for (const auto& t : c.vertices) v.push_back(index_json(t));
        for (const auto& t : c.points) p.push_back(index_json(t));
        cells.push_back({{"vertices", v},
                         {"points", p},
                         {"functional", Json::array({to_json(c.functional.a), to_json(c.functional.b),
                                                     to_json(c.functional.c)})}});
    }
    doc["cells"] = cells;
    return doc;
}

inline const char* to_string(Side s) { return s == Side::alpha ? "alpha" : s == Side::beta ? "beta" : "gamma"; }

inline Json tropical_json(const TropicalCurve& T) {
    Json doc = document();
    doc["n"] = T.n;
    Json vs = Json::array(), es = Json::array(), rs = Json::array();
    for (const auto& v : T.vertices)
        vs.push_back({{"position", Json::array({to_json(v.position[0]), to_json(v.position[1])})}, {"cell", v.cell}});
    for (const auto& e : T.edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"direction", e.direction}, {"multiplicity", e.multiplicity}});
    for (const auto& r : T.rays)
        rs.push_back({{"vertex", r.vertex},
                      {"side", to_string(r.side)},
                      {"direction", r.direction},
                      {"multiplicity", r.multiplicity},
                      {"position", to_json(r.position)},
                      {"first_slot", r.first_slot}});
    doc["vertices"] = vs;
    doc["edges"] = es;
    doc["rays"] = rs;
    doc["balanced"] = is_balanced(T);
    return doc;
}

inline Json topology_json(const TopologyReport& R) {
    Json doc = document();
    doc["n"] = R.n;
    doc["ovals"] = R.ovals;
    doc["pseudoline"] = R.pseudolines > 0;
    doc["pseudolines"] = R.pseudolines;
    doc["nesting"] = R.positive_depth;
    Json cs = Json::array();
    for (const auto& c : R.components) cs.push_back({{"kind", to_string(c.kind)}, {"segments", c.segments}});
    doc["components"] = cs;
    doc["vinnikov"] = is_vinnikov_topology(R, R.n);
    return doc;
}

inline Json chart_json(const Chart& C) {
    Json doc{{"quadrant", C.quadrant}};
    Json segs = Json::array();
    for (const auto& s : C.segments)
        segs.push_back({{"triangle", s.triangle},
                        {"edges", Json::array({Json::array({index_json(s.edges[0].from), index_json(s.edges[0].to)}),
                                               Json::array({index_json(s.edges[1].from), index_json(s.edges[1].to)})})}});
    doc["segments"] = segs;
    return doc;
}

inline SignedLifting signed_lifting_from_json(const Json& j) {
    check_schema(j);
    Hive h = hive_from_json(j);
    TriangleTable<int> signs(h.degree(), 1);
    if (j.contains("signs")) {
        const auto& s = j.at("signs");
        if (!s.is_array() || s.size() != signs.size()) schema_error("\"signs\" must list one sign per lattice point");
        for (std::size_t p = 0; p < signs.size(); ++p) {
            int v = int_from(s[p]);
            if (v != 1 && v != -1) schema_error("signs must be +1 or -1");
            signs[p] = v;
        }
    }
    return {h, signs};
}

// ---------------------------------------------------------------- CSV

inline std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace hivecurve::io
