#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "hive.hpp"
#include "pencil.hpp"
#include "subdivision.hpp"

namespace hivecurve {

/// One-parameter coefficient family F_ijk(t) = c_ijk * t^h_ijk with c > 0.
struct LiftedFamily {
    TriangleTable<Rational> coefficients;
    TriangleTable<Rational> exponents;

    LiftedFamily() = default;
    LiftedFamily(TriangleTable<Rational> c, TriangleTable<Rational> h)
        : coefficients(std::move(c)), exponents(std::move(h)) {
        require(coefficients.degree() == exponents.degree(), ErrorKind::DimensionMismatch,
                "coefficient and exponent tables differ in degree");
        for (const auto& v : coefficients)
            require(v > 0, ErrorKind::NonpositiveCoefficient, "family coefficients must be positive");
    }

    static LiftedFamily unit(TriangleTable<Rational> h) {
        int n = h.degree();
        return {TriangleTable<Rational>(n, Rational(1)), std::move(h)};
    }

    int degree() const { return exponents.degree(); }
};

/// c * t^h evaluated through logarithms in extended precision.
inline long double power_term(const Rational& c, const Rational& h, double t) {
    return std::exp(std::log(to_long_double(c)) + to_long_double(h) * std::log(static_cast<long double>(t)));
}

inline TernaryForm<double> instantiate(const LiftedFamily& fam, double t) {
    require(t > 0, ErrorKind::InvalidArgument, "family parameter must be positive");
    TernaryForm<double> F(fam.degree());
    for (std::size_t p = 0; p < F.size(); ++p) {
        double v = static_cast<double>(power_term(fam.coefficients[p], fam.exponents[p], t));
        require(std::isfinite(v) && v > 0, ErrorKind::InvalidArgument, "coefficient out of double range at t");
        F[p] = v;
    }
    return F;
}

/// Same zero set, coefficients divided by the largest one; log_scale receives log of the divisor.
inline TernaryForm<double> instantiate_normalized(const LiftedFamily& fam, double t, double* log_scale = nullptr) {
    require(t > 0, ErrorKind::InvalidArgument, "family parameter must be positive");
    const long double lt = std::log(static_cast<long double>(t));
    std::vector<long double> logs(fam.coefficients.size());
    long double top = -INFINITY;
    for (std::size_t p = 0; p < logs.size(); ++p) {
        logs[p] = std::log(to_long_double(fam.coefficients[p])) + to_long_double(fam.exponents[p]) * lt;
        top = std::max(top, logs[p]);
    }
    TernaryForm<double> F(fam.degree());
    for (std::size_t p = 0; p < logs.size(); ++p) F[p] = static_cast<double>(std::exp(logs[p] - top));
    if (log_scale) *log_scale = static_cast<double>(top);
    return F;
}

struct Realization {
    LiftedFamily family;
    BoundarySpec<Rational> drift;  // boundary(exponents) - boundary(h)
};

/// Unit coefficients with exponents h + eps (ij+jk+ki).
inline Realization realize_hive(const Hive& h, const Rational& eps = Rational(0)) {
    require(eps >= 0, ErrorKind::InvalidArgument, "strictification must be nonnegative");
    require(classify_hive(h).is_hive(), ErrorKind::NotAHive, "realize_hive needs a hive");
    const int n = h.degree();
    Hive e = h;
    auto q = quadratic_hive(n);
    for (std::size_t p = 0; p < e.size(); ++p) e[p] += eps * q[p];
    auto b = boundary(q);
    for (int s = 0; s < 3; ++s)
        for (auto& v : b.side(s)) v *= eps;
    return {LiftedFamily::unit(std::move(e)), b};
}

/// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, ErrorKind::InvalidArgument, "slope needs two samples");
    double mx = 0, my = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
        mx += x[a];
        my += y[a];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
        sxy += (x[a] - mx) * (y[a] - my);
        sxx += (x[a] - mx) * (x[a] - mx);
    }
    require(sxx > 0, ErrorKind::InvalidArgument, "slope needs distinct abscissae");
    return sxy / sxx;
}

/// Log-log slopes per coefficient of a sequence of forms sampled on tgrid.
inline TriangleTable<double> fit_exponents(const std::vector<double>& tgrid, const std::vector<TernaryForm<double>>& forms,
                                           const std::vector<double>& log_scales = {}) {
    require(tgrid.size() == forms.size() && !forms.empty(), ErrorKind::DimensionMismatch, "one form per t");
    std::vector<double> lt;
    for (double t : tgrid) lt.push_back(std::log(t));
    TriangleTable<double> out(forms[0].degree());
    for (std::size_t p = 0; p < out.size(); ++p) {
        std::vector<double> y;
        for (std::size_t a = 0; a < forms.size(); ++a)
            y.push_back(std::log(std::abs(forms[a][p])) + (log_scales.empty() ? 0.0 : log_scales[a]));
        out[p] = ls_slope(lt, y);
    }
    return out;
}

inline TriangleTable<double> empirical_exponents(const LiftedFamily& fam, const std::vector<double>& tgrid) {
    require(tgrid.size() >= 2, ErrorKind::InvalidArgument, "need at least two t values");
    std::vector<TernaryForm<double>> forms;
    std::vector<double> scales;
    for (double t : tgrid) {
        double s = 0;
        forms.push_back(instantiate_normalized(fam, t, &s));
        scales.push_back(s);
    }
    return fit_exponents(tgrid, forms, scales);
}

/// A positive sum of power terms: the coefficient of a product of families.
struct Term {
    Rational c, h;
};
using TermSum = std::vector<Term>;

inline Rational leading_exponent(const TermSum& s) {
    require(!s.empty(), ErrorKind::InvalidArgument, "empty term sum");
    Rational best = s.front().h;
    for (const auto& term : s) best = std::max(best, term.h);
    return best;
}

inline long double evaluate(const TermSum& s, double t) {
    long double v = 0;
    for (const auto& term : s) v += power_term(term.c, term.h, t);
    return v;
}

/// Coefficients of the product of two families as term sums (no cancellation: all c > 0).
inline TriangleTable<TermSum> family_product(const LiftedFamily& f, const LiftedFamily& g) {
    TriangleTable<TermSum> out(f.degree() + g.degree());
    for (const auto& a : f.exponents.indices())
        for (const auto& b : g.exponents.indices())
            out.at(a.i + b.i, a.j + b.j, a.k + b.k)
                .push_back({f.coefficients.at(a) * g.coefficients.at(b), f.exponents.at(a) + g.exponents.at(b)});
    return out;
}

/// Product of two ternary forms.
template <class T>
TernaryForm<T> multiply(const TernaryForm<T>& f, const TernaryForm<T>& g) {
    TernaryForm<T> out(f.degree() + g.degree(), T(0));
    for (const auto& a : f.indices())
        for (const auto& b : g.indices()) out.at(a.i + b.i, a.j + b.j, a.k + b.k) += f.at(a) * g.at(b);
    return out;
}

/// Leading coefficients on a face: c_ijk for lattice points of the cell, zero elsewhere.
inline TernaryForm<Rational> face_truncation(const LiftedFamily& fam, const Cell& cell) {
    TernaryForm<Rational> out(fam.degree(), Rational(0));
    for (const auto& t : cell.points) out.at(t) = fam.coefficients.at(t);
    return out;
}

/// Scalar family c * t^e with complex coefficient.
struct ScalarFamily {
    std::complex<double> c;
    Rational e;

    std::complex<double> operator()(double t) const {
        return c * static_cast<double>(std::pow(static_cast<long double>(t), to_long_double(e)));
    }
};

/// PD test after the diagonal congruence that makes the diagonal one, so that
/// graded scalings t^{d_a + d_b} do not trip the relative tolerance.
inline bool graded_positive_definite(const ComplexMatrix& x) {
    const int n = x.order();
    std::vector<double> s(n);
    for (int a = 0; a < n; ++a) {
        if (!(x(a, a).real() > 0)) return false;
        s[a] = 1.0 / std::sqrt(x(a, a).real());
    }
    ComplexMatrix y(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) y(a, b) = x(a, b) * (s[a] * s[b]);
    return is_positive_definite(y);
}

struct FamilyMatrix {
    int order = 0;
    std::vector<ScalarFamily> entries;  // row-major

    explicit FamilyMatrix(int n = 0) : order(n), entries(static_cast<std::size_t>(n * n)) {}
    ScalarFamily& operator()(int r, int c) { return entries[static_cast<std::size_t>(r * order + c)]; }
    const ScalarFamily& operator()(int r, int c) const { return entries[static_cast<std::size_t>(r * order + c)]; }
};

/// r Hermitian matrices whose entries are scalar families.
struct RMatrixFamily {
    int order = 0;
    std::vector<FamilyMatrix> matrices;

    int r() const { return static_cast<int>(matrices.size()); }

    std::vector<ComplexMatrix> at(double t) const {
        std::vector<ComplexMatrix> out;
        for (const auto& m : matrices) {
            ComplexMatrix x(order);
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b) x(a, b) = m(a, b)(t);
            require(graded_positive_definite(x), ErrorKind::NotPositiveDefinite,
                    "family matrix not positive definite at t=" + std::to_string(t));
            out.push_back(std::move(x));
        }
        return out;
    }

    /// Congruence D P D with D = diag(t^{d_a}): PD for every t when P is PD.
    static FamilyMatrix scaled(const ComplexMatrix& P, const std::vector<Rational>& d) {
        const int n = P.order();
        require(static_cast<int>(d.size()) == n, ErrorKind::DimensionMismatch, "one scaling exponent per row");
        FamilyMatrix m(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m(a, b) = {P(a, b), d[a] + d[b]};
        return m;
    }
};

inline PencilTriple<std::complex<double>> pencil_at(const RMatrixFamily& fam, double t) {
    require(fam.r() == 3, ErrorKind::DimensionMismatch, "a pencil needs three matrices");
    auto m = fam.at(t);
    return {m[0], m[1], m[2]};  // definiteness already checked, graded
}

} // namespace hivecurve
