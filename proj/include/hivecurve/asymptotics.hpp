#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "family.hpp"
#include "hyperbolicity.hpp"

namespace hivecurve {

inline const std::vector<double>& default_tgrid() {
    static const std::vector<double> g{1e2, 1e3, 1e4, 1e5, 1e6};
    return g;
}

/// Grid for HIVE4 slope estimates. Quarter-integer scalings leave subleading
/// terms only t^{-1/4} below the leading one, so slopes need very large t.
inline const std::vector<double>& hive4_tgrid() {
    static const std::vector<double> g{1e10, 1e15, 1e20, 1e25, 1e30};
    return g;
}

namespace detail {

inline void check_tgrid(const std::vector<double>& tgrid) {
    require(!tgrid.empty(), ErrorKind::InvalidArgument, "empty t grid");
    for (std::size_t a = 0; a < tgrid.size(); ++a) {
        require(tgrid[a] > 0, ErrorKind::InvalidArgument, "t values must be positive");
        require(a == 0 || tgrid[a] > tgrid[a - 1], ErrorKind::InvalidArgument, "t grid must increase");
    }
}

} // namespace detail

/// A form-valued function of t, optionally with known leading exponents.
struct FormFamily {
    int degree = 0;
    std::function<TernaryForm<double>(double)> at;
    std::optional<TriangleTable<Rational>> exponents;
};

inline FormFamily form_family(const LiftedFamily& fam) {
    return {fam.degree(), [fam](double t) { return instantiate_normalized(fam, t); }, fam.exponents};
}

/// Product of positive families; the leading exponents are exact max-plus sums.
inline FormFamily form_family(const std::vector<LiftedFamily>& factors) {
    require(!factors.empty(), ErrorKind::InvalidArgument, "empty product");
    const auto& first = factors.front();
    auto sums = TriangleTable<TermSum>::generate(first.degree(), [&](const TriangleIndex& t) {
        return TermSum{{first.coefficients.at(t), first.exponents.at(t)}};
    });
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const auto& g = factors[f];
        TriangleTable<TermSum> next(sums.degree() + g.degree());
        for (const auto& a : sums.indices())
            for (const auto& b : g.exponents.indices()) {
                auto& dst = next.at(a.i + b.i, a.j + b.j, a.k + b.k);
                for (const auto& term : sums.at(a))
                    dst.push_back({term.c * g.coefficients.at(b), term.h + g.exponents.at(b)});
            }
        sums = std::move(next);
    }
    const auto& table = sums;
    TriangleTable<Rational> lead =
        TriangleTable<Rational>::generate(table.degree(), [&](const TriangleIndex& t) { return leading_exponent(table.at(t)); });
    auto eval = [table, lead](double t) {
        const long double lt = std::log(static_cast<long double>(t));
        long double top = -INFINITY;
        for (const auto& v : lead) top = std::max(top, to_long_double(v) * lt);
        TernaryForm<double> F(table.degree());
        for (std::size_t p = 0; p < F.size(); ++p) {
            long double s = 0;
            for (const auto& term : table[p])
                s += std::exp(std::log(to_long_double(term.c)) + to_long_double(term.h) * lt - top);
            F[p] = static_cast<double>(s);
        }
        return F;
    };
    return {table.degree(), eval, lead};
}

/// det(xX + yY + zZ) of an r=3 matrix family, computed exactly from the sampled matrices.
inline FormFamily form_family(const RMatrixFamily& fam) {
    require(fam.r() == 3, ErrorKind::DimensionMismatch, "a pencil family needs three matrices");
    auto eval = [fam](double t) {
        auto p = pencil_at(fam, t);
        PencilTriple<GaussianRational> e{to_exact(p.X), to_exact(p.Y), to_exact(p.Z)};
        auto F = pencil_det(e);
        Rational top = 0;
        for (const auto& v : F) top = std::max(top, abs_value(v));
        return F.map([&](const Rational& v) { return to_double(v / top); });
    };
    return {fam.order, eval, std::nullopt};
}

// ---------------------------------------------------------------- hyperbolicity sweep

struct SweepRow {
    double t;
    HyperbolicityReport report;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    /// Smallest grid t from which every verdict equals the last one.
    double threshold = 0;
    Verdict final_verdict = Verdict::pass;
};

inline SweepReport main_theorem_sweep(const FormFamily& fam, const std::vector<double>& tgrid,
                                      const VinnikovOptions& opt = {}) {
    detail::check_tgrid(tgrid);
    SweepReport rep;
    for (double t : tgrid) rep.rows.push_back({t, vinnikov_check(fam.at(t), opt)});
    rep.final_verdict = rep.rows.back().report.verdict;
    rep.threshold = rep.rows.back().t;
    for (std::size_t a = rep.rows.size(); a-- > 0;) {
        if (rep.rows[a].report.verdict != rep.final_verdict) break;
        rep.threshold = rep.rows[a].t;
    }
    return rep;
}

inline SweepReport main_theorem_sweep(const LiftedFamily& fam, const std::vector<double>& tgrid,
                                      const VinnikovOptions& opt = {}) {
    return main_theorem_sweep(form_family(fam), tgrid, opt);
}

// ---------------------------------------------------------------- boundary asymptotics

/// log of the curve boundary aligned with the hive boundary: slot m of a side
/// holds -log d_{n+1-m}, which decreases in m like the hive boundary does.
inline BoundarySpec<double> aligned_log_boundary(const BoundarySpec<double>& d) {
    BoundarySpec<double> out;
    const int n = d.degree();
    for (int s = 0; s < 3; ++s)
        for (int m = 1; m <= n; ++m) out.side(s).push_back(-std::log(d.side(s)[n - m]));
    return out;
}

inline BoundarySpec<double> half_log_boundary(const TernaryForm<double>& F) {
    auto b = boundary(F.map([](double v) { return std::log(v); }));
    for (int s = 0; s < 3; ++s)
        for (auto& v : b.side(s)) v *= 0.5;
    return b;
}

inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -INFINITY;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// The bound (1/2) log C(n, m) as stated for slot m.
inline double stated_residual_bound(int n, int m) { return 0.5 * log_binomial(n, m); }

/// What the coefficient/root comparison actually gives: the residual at slot m
/// lies in [-(1/2) log C(n,m), (1/2) log C(n,m-1)].
inline double sharp_residual_bound(int n, int m) {
    return 0.5 * std::max(log_binomial(n, m), log_binomial(n, m - 1));
}

struct BoundaryRow {
    double t;
    BoundarySpec<double> log_boundary;  // aligned log of the curve boundary
    BoundarySpec<double> half_d0;       // (1/2) boundary of log F
    BoundarySpec<double> residual;      // log_boundary - half_d0
    double max_abs_residual = 0;
    double stated_excess = 0;  // max over slots of |residual| - stated bound (<= 0 means within)
    double sharp_excess = 0;   // same against the sharp bound
};

struct BoundaryAsymptotics {
    int n = 0;
    std::vector<BoundaryRow> rows;
    BoundarySpec<double> slopes;           // least-squares slopes of log_boundary against log t
    std::optional<BoundarySpec<double>> expected_slopes;  // (1/2) boundary of the exponents, if known
    double slope_error = 0;                // max |slopes - expected|, 0 if unknown
    double slope_tolerance = 0;            // 2 / log t_max
    bool within_stated() const {
        for (const auto& r : rows)
            if (r.stated_excess > 1e-12) return false;
        return true;
    }
    bool within_sharp() const {
        for (const auto& r : rows)
            if (r.sharp_excess > 1e-12) return false;
        return true;
    }
};

inline BoundaryRow boundary_row(const TernaryForm<double>& F, double t = 1) {
    BoundaryRow row;
    row.t = t;
    row.log_boundary = aligned_log_boundary(curve_boundary(F));
    row.half_d0 = half_log_boundary(F);
    row.residual = row.log_boundary;
    const int n = F.degree();
    row.stated_excess = row.sharp_excess = -INFINITY;
    for (int s = 0; s < 3; ++s)
        for (int m = 1; m <= n; ++m) {
            double r = row.log_boundary.side(s)[m - 1] - row.half_d0.side(s)[m - 1];
            row.residual.side(s)[m - 1] = r;
            row.max_abs_residual = std::max(row.max_abs_residual, std::abs(r));
            row.stated_excess = std::max(row.stated_excess, std::abs(r) - stated_residual_bound(n, m));
            row.sharp_excess = std::max(row.sharp_excess, std::abs(r) - sharp_residual_bound(n, m));
        }
    if (n == 0) row.stated_excess = row.sharp_excess = 0;
    return row;
}

inline BoundaryAsymptotics boundary_asymptotics(const FormFamily& fam, const std::vector<double>& tgrid) {
    detail::check_tgrid(tgrid);
    BoundaryAsymptotics out;
    out.n = fam.degree;
    for (double t : tgrid) out.rows.push_back(boundary_row(fam.at(t), t));
    const int n = fam.degree;
    if (tgrid.size() < 2 || n == 0) return out;
    std::vector<double> lt;
    for (double t : tgrid) lt.push_back(std::log(t));
    out.slope_tolerance = 2.0 / lt.back();
    if (fam.exponents) {
        auto b = boundary(*fam.exponents);
        BoundarySpec<double> e;
        for (int s = 0; s < 3; ++s)
            for (const auto& v : b.side(s)) e.side(s).push_back(0.5 * to_double(v));
        out.expected_slopes = e;
    }
    for (int s = 0; s < 3; ++s)
        for (int m = 0; m < n; ++m) {
            std::vector<double> y;
            for (const auto& r : out.rows) y.push_back(r.log_boundary.side(s)[m]);
            double slope = ls_slope(lt, y);
            out.slopes.side(s).push_back(slope);
            if (out.expected_slopes)
                out.slope_error = std::max(out.slope_error, std::abs(slope - out.expected_slopes->side(s)[m]));
        }
    return out;
}

inline BoundaryAsymptotics boundary_asymptotics(const LiftedFamily& fam, const std::vector<double>& tgrid) {
    return boundary_asymptotics(form_family(fam), tgrid);
}

// ---------------------------------------------------------------- direct sums

struct DirectSumReport {
    double max_coefficient_error = 0;  // product coefficients vs term sums, relative, over the sample t
    bool exponents_match = true;       // leading exponents vs max-plus convolution, exact
    TriangleTable<Rational> leading;   // leading exponents of the product
    TriangleTable<Rational> convolution;
};

inline DirectSumReport direct_sum_check(const LiftedFamily& f, const LiftedFamily& g,
                                        const std::vector<double>& sample_t = {1.0, 2.0, 10.0}) {
    DirectSumReport rep;
    auto prod = family_product(f, g);
    rep.leading = TriangleTable<Rational>::generate(prod.degree(),
                                                    [&](const TriangleIndex& t) { return leading_exponent(prod.at(t)); });
    rep.convolution = max_plus_convolve(f.exponents, g.exponents);
    rep.exponents_match = rep.leading == rep.convolution;
    for (double t : sample_t) {
        auto F = multiply(instantiate(f, t), instantiate(g, t));
        for (std::size_t p = 0; p < F.size(); ++p) {
            double v = static_cast<double>(evaluate(prod[p], t));
            rep.max_coefficient_error = std::max(rep.max_coefficient_error, std::abs(F[p] - v) / std::abs(v));
        }
    }
    return rep;
}

template <class S>
PencilTriple<S> direct_sum(const PencilTriple<S>& p, const PencilTriple<S>& q) {
    return {block_diagonal(p.X, q.X), block_diagonal(p.Y, q.Y), block_diagonal(p.Z, q.Z)};
}

/// Largest relative difference between det of the block pencil and the product of dets.
inline double pencil_direct_sum_error(const PencilTriple<std::complex<double>>& p,
                                      const PencilTriple<std::complex<double>>& q) {
    auto whole = pencil_det(direct_sum(p, q));
    auto prod = multiply(pencil_det(p), pencil_det(q));
    double scale = 0, err = 0;
    for (double v : prod) scale = std::max(scale, std::abs(v));
    for (std::size_t a = 0; a < prod.size(); ++a) err = std::max(err, std::abs(whole[a] - prod[a]));
    return err / scale;
}

// ---------------------------------------------------------------- HIVE^4_2

using Index4 = std::array<int, 4>;

/// The ten exponents of a quaternary quadratic, keyed by multi-index.
using Exponents4 = std::map<Index4, double>;

inline std::vector<Index4> quadratic_indices4() {
    std::vector<Index4> out;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            Index4 e{0, 0, 0, 0};
            ++e[a];
            ++e[b];
            out.push_back(e);
        }
    return out;
}

inline Index4 unit_sum(int a, int b) {
    Index4 e{0, 0, 0, 0};
    ++e[a];
    ++e[b];
    return e;
}

/// Coefficients of det(sum x_a X_a) for 2x2 Hermitian X_a.
inline std::map<Index4, double> quadratic_coefficients4(const std::vector<ComplexMatrix>& X) {
    require(X.size() == 4, ErrorKind::DimensionMismatch, "four matrices expected");
    for (const auto& m : X) require(m.order() == 2, ErrorKind::DimensionMismatch, "2x2 matrices expected");
    std::map<Index4, double> c;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            const auto &A = X[a], &B = X[b];
            double v = a == b ? (A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0)).real()
                              : (A(0, 0) * B(1, 1) + B(0, 0) * A(1, 1)).real() - 2.0 * (A(0, 1) * B(1, 0)).real();
            c[unit_sum(a, b)] = v;
        }
    return c;
}

struct Hive4Inequality {
    std::string label;
    double lhs, rhs;
    double slack() const { return rhs - lhs; }
};

/// The 3 pairing inequalities and the 12 of the form h_{2a} + h_{b+c} <= h_{a+b} + h_{a+c}.
inline std::vector<Hive4Inequality> hive4_inequalities(const Exponents4& h) {
    auto H = [&](int a, int b) { return h.at(unit_sum(a, b)); };
    auto name = [](int a, int b) {
        Index4 e = unit_sum(a, b);
        std::string s = "h";
        for (int v : e) s += std::to_string(v);
        return s;
    };
    std::vector<Hive4Inequality> out;
    const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (int p = 0; p < 3; ++p) {
        const int* P = pairs[p];
        const int* Q = pairs[(p + 1) % 3];
        const int* R = pairs[(p + 2) % 3];
        out.push_back({name(P[0], P[1]) + "+" + name(P[2], P[3]) + " <= max(" + name(Q[0], Q[1]) + "+" +
                           name(Q[2], Q[3]) + ", " + name(R[0], R[1]) + "+" + name(R[2], R[3]) + ")",
                       H(P[0], P[1]) + H(P[2], P[3]),
                       std::max(H(Q[0], Q[1]) + H(Q[2], Q[3]), H(R[0], R[1]) + H(R[2], R[3]))});
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) {
                if (b == a || c == a) continue;
                out.push_back({name(a, a) + "+" + name(b, c) + " <= " + name(a, b) + "+" + name(a, c),
                               H(a, a) + H(b, c), H(a, b) + H(a, c)});
            }
    return out;
}

struct Hive4Report {
    Exponents4 exponents;  // estimated slopes
    std::vector<Hive4Inequality> inequalities;
    double tolerance = 1e-2;
    double min_slack() const {
        double m = INFINITY;
        for (const auto& q : inequalities) m = std::min(m, q.slack());
        return m;
    }
    bool holds() const { return min_slack() >= -tolerance; }
};

inline Hive4Report hive4_check(const RMatrixFamily& fam, const std::vector<double>& tgrid, double tolerance = 1e-2) {
    require(fam.r() == 4 && fam.order == 2, ErrorKind::DimensionMismatch, "HIVE4 check needs four 2x2 matrices");
    require(tgrid.size() >= 2, ErrorKind::InvalidArgument, "need at least two t values");
    detail::check_tgrid(tgrid);
    std::vector<double> lt;
    std::map<Index4, std::vector<double>> logs;
    for (double t : tgrid) {
        lt.push_back(std::log(t));
        for (const auto& [e, v] : quadratic_coefficients4(fam.at(t))) {
            require(v > 0, ErrorKind::NotPositiveDefinite, "nonpositive determinant coefficient");
            logs[e].push_back(std::log(v));
        }
    }
    Hive4Report rep;
    rep.tolerance = tolerance;
    for (const auto& [e, y] : logs) rep.exponents[e] = ls_slope(lt, y);
    rep.inequalities = hive4_inequalities(rep.exponents);
    return rep;
}

} // namespace hivecurve
