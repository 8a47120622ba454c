#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "asymptotics.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace hivecurve {

struct RonkinSpec {
    int resolution = 256;    // phase samples for the outer torus variable
    double tolerance = 1e-2;
    double window = 0;       // half-width of the search interval; 0 selects it from the coefficients
    int coarse = 65;         // coarse samples before golden-section refinement
    unsigned threads = 0;
};

namespace detail {

inline void check_spec(const RonkinSpec& s) {
    require(s.resolution >= 16, ErrorKind::InvalidArgument, "Ronkin resolution must be at least 16");
    require(s.tolerance > 0, ErrorKind::InvalidArgument, "Ronkin tolerance must be positive");
    require(s.window >= 0, ErrorKind::InvalidArgument, "negative window");
    require(s.coarse >= 3, ErrorKind::InvalidArgument, "need at least three coarse samples");
}

inline std::vector<std::complex<double>> small_roots(const std::vector<std::complex<double>>& c) {
    if (c.size() == 3 && c[0] != 0.0 && c[2] != 0.0) {
        // Stable quadratic formula.
        auto s = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
        auto q = std::real(std::conj(c[1]) * s) >= 0 ? -0.5 * (c[1] + s) : -0.5 * (c[1] - s);
        if (q == 0.0) return {0.0, 0.0};
        return {q / c[2], c[0] / q};
    }
    return complex_roots(c);
}

/// For w -> F(e^{a + i theta}, w, 1) at each phase sample: the mean of
/// log|leading coefficient| and the pooled log|roots| (minus infinity for zero roots).
struct Slice {
    double lead_mean = 0;
    std::vector<double> logs;
};

inline Slice ronkin_slice(const TernaryForm<double>& F, double a, const RonkinSpec& spec) {
    const int n = F.degree(), M = spec.resolution;
    std::vector<double> lead(M);
    std::vector<std::vector<double>> logs(M);
    parallel_for(
        static_cast<std::size_t>(M),
        [&](std::size_t m) {
            const std::complex<double> x = std::polar(std::exp(a), 2.0 * M_PI * (m + 0.5) / M);
            std::vector<std::complex<double>> c(n + 1);
            for (int j = 0; j <= n; ++j) {
                std::complex<double> acc = 0, xp = 1;
                for (int i = 0; i + j <= n; ++i) {
                    acc += F.at(i, j, n - i - j) * xp;
                    xp *= x;
                }
                c[j] = acc;
            }
            while (!c.empty() && c.back() == 0.0) c.pop_back();
            if (c.empty()) {
                lead[m] = -INFINITY;
                return;
            }
            lead[m] = std::log(std::abs(c.back()));
            for (const auto& r : small_roots(c)) logs[m].push_back(r == 0.0 ? -INFINITY : std::log(std::abs(r)));
        },
        spec.threads);
    Slice s;
    for (int m = 0; m < M; ++m) {
        s.lead_mean += lead[m] / M;
        s.logs.insert(s.logs.end(), logs[m].begin(), logs[m].end());
    }
    return s;
}

inline double jensen_sum(const std::vector<double>& logs, double b) {
    double v = 0;
    for (double l : logs) v += std::max(b, l);
    return v;
}

/// inf over b of N_2(a, b) - j b, exact for the sampled phases.
inline double ronkin_profile(const TernaryForm<double>& F, double a, int j, const RonkinSpec& spec) {
    const int M = spec.resolution;
    auto s = ronkin_slice(F, a, spec);
    if (j == 0) return s.lead_mean + std::accumulate(s.logs.begin(), s.logs.end(), 0.0) / M;
    std::sort(s.logs.begin(), s.logs.end());
    const double b = s.logs[static_cast<std::size_t>(j) * M - 1];
    return s.lead_mean + jensen_sum(s.logs, b) / M - j * b;
}

inline double log_spread(const TernaryForm<double>& F) {
    double lo = INFINITY, hi = -INFINITY;
    for (double v : F)
        if (v != 0.0) {
            lo = std::min(lo, std::log(std::abs(v)));
            hi = std::max(hi, std::log(std::abs(v)));
        }
    return hi - lo;
}

inline double max_abs(const TernaryForm<double>& F) {
    double m = 0;
    for (double v : F) m = std::max(m, std::abs(v));
    return m;
}

} // namespace detail

/// N_F(x, y, z) = n z + N_2(x - z, y - z); the inner circle integral is taken
/// exactly by Jensen's formula, the outer one by the trapezoid rule.
inline double ronkin_value(const TernaryForm<double>& F, const std::array<double, 3>& p, const RonkinSpec& spec = {}) {
    detail::check_spec(spec);
    const double scale = detail::max_abs(F);
    require(scale > 0, ErrorKind::ZeroPolynomial, "Ronkin function of the zero form");
    const int n = F.degree();
    auto G = F.map([&](double v) { return v / scale; });
    auto s = detail::ronkin_slice(G, p[0] - p[2], spec);
    return std::log(scale) + n * p[2] + s.lead_mean + detail::jensen_sum(s.logs, p[1] - p[2]) / spec.resolution;
}

/// |N at resolution M - N at resolution 2M|; the quadrature error estimate.
inline double ronkin_refinement_gap(const TernaryForm<double>& F, const std::array<double, 3>& p,
                                    const RonkinSpec& spec = {}) {
    RonkinSpec fine = spec;
    fine.resolution *= 2;
    return std::abs(ronkin_value(F, p, spec) - ronkin_value(F, p, fine));
}

/// u_ijk = inf (N_F - ix - jy - kz), with z = 0: exact minimization in y,
/// coarse scan plus golden section in x.
inline double ronkin_coefficient(const TernaryForm<double>& F, const TriangleIndex& t, const RonkinSpec& spec = {}) {
    detail::check_spec(spec);
    const int n = F.degree();
    require(in_triangle(n, t), ErrorKind::InvalidArgument, "index outside the triangle");
    require(F.at(n, 0, 0) != 0 && F.at(0, n, 0) != 0 && F.at(0, 0, n) != 0, ErrorKind::CornerCoefficientZero,
            "u_ijk needs nonzero corner coefficients");
    const double scale = detail::max_abs(F);
    auto G = F.map([&](double v) { return v / scale; });
    if (n == 0) return std::log(scale);
    const double W = spec.window > 0 ? spec.window : 2.0 * detail::log_spread(G) + 4.0;
    auto g = [&](double a) { return detail::ronkin_profile(G, a, t.j, spec) - t.i * a; };

    const int K = spec.coarse;
    std::vector<double> val(K);
    auto grid = [&](int q) { return -W + 2.0 * W * q / (K - 1); };
    for (int q = 0; q < K; ++q) val[q] = g(grid(q));
    int best = static_cast<int>(std::min_element(val.begin(), val.end()) - val.begin());
    double lo = grid(std::max(best - 1, 0)), hi = grid(std::min(best + 1, K - 1));
    double result = val[best];

    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
    double gc = g(c), gd = g(d);
    for (int it = 0; it < 80 && hi - lo > 1e-9 * (1.0 + W); ++it) {
        if (gc <= gd) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - phi * (hi - lo);
            gc = g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + phi * (hi - lo);
            gd = g(d);
        }
    }
    result = std::min({result, gc, gd});
    return std::log(scale) + result;
}

inline TriangleTable<double> ronkin_coefficients(const TernaryForm<double>& F, const RonkinSpec& spec = {}) {
    return TriangleTable<double>::generate(F.degree(), [&](const TriangleIndex& t) { return ronkin_coefficient(F, t, spec); });
}

/// u on the three sides from the edge restrictions alone: u_{n-j,j,0} is
/// log|F_0n0| plus the n-j largest log|roots| of F(1,u,0), and cyclically.
inline BoundarySpec<double> ronkin_edge_values(const TernaryForm<double>& F) {
    const int n = F.degree();
    require(F.at(n, 0, 0) != 0 && F.at(0, n, 0) != 0 && F.at(0, 0, n) != 0, ErrorKind::CornerCoefficientZero,
            "edge Ronkin values need nonzero corner coefficients");
    // Side s lists u along the side from its first corner: index d = 0..n.
    BoundarySpec<double> out;
    for (int s = 0; s < 3; ++s) {
        std::vector<std::complex<double>> c(n + 1);
        for (int d = 0; d <= n; ++d)
            c[d] = s == 0 ? F.at(n - d, d, 0) : s == 1 ? F.at(0, n - d, d) : F.at(d, 0, n - d);
        std::vector<double> L;
        for (const auto& r : complex_roots(c)) L.push_back(std::log(std::abs(r)));
        std::sort(L.begin(), L.end(), std::greater<>());
        const double lead = std::log(std::abs(c[n].real()));
        for (int d = 0; d <= n; ++d)
            out.side(s).push_back(lead + std::accumulate(L.begin(), L.begin() + (n - d), 0.0));
    }
    return out;
}

/// u on the boundary of the triangle, from the 2D minimization.
inline BoundarySpec<double> ronkin_edge_values_2d(const TernaryForm<double>& F, const RonkinSpec& spec = {}) {
    const int n = F.degree();
    BoundarySpec<double> out;
    for (int d = 0; d <= n; ++d) {
        out.alpha.push_back(ronkin_coefficient(F, {n - d, d, 0}, spec));
        out.beta.push_back(ronkin_coefficient(F, {0, n - d, d}, spec));
        out.gamma.push_back(ronkin_coefficient(F, {d, 0, n - d}, spec));
    }
    return out;
}

/// Consecutive differences along each side: the hive boundary of u.
inline BoundarySpec<double> edge_boundary(const BoundarySpec<double>& u) {
    BoundarySpec<double> b;
    for (int s = 0; s < 3; ++s)
        for (std::size_t d = 1; d < u.side(s).size(); ++d) b.side(s).push_back(u.side(s)[d] - u.side(s)[d - 1]);
    return b;
}

struct RonkinBoundaryReport {
    BoundarySpec<double> log_boundary;  // aligned log of the curve boundary
    BoundarySpec<double> half_du;       // (1/2) boundary of u
    double residual = 0;                // max |log_boundary - half_du|
    double tolerance = 1e-2;
    bool passes() const { return residual <= tolerance; }
};

inline RonkinBoundaryReport ronkin_boundary_check(const TernaryForm<double>& F, const RonkinSpec& spec = {}) {
    RonkinBoundaryReport rep;
    rep.tolerance = spec.tolerance;
    rep.log_boundary = aligned_log_boundary(curve_boundary(F));
    rep.half_du = edge_boundary(ronkin_edge_values_2d(F, spec));
    for (int s = 0; s < 3; ++s)
        for (std::size_t m = 0; m < rep.half_du.side(s).size(); ++m) {
            rep.half_du.side(s)[m] *= 0.5;
            rep.residual = std::max(rep.residual, std::abs(rep.log_boundary.side(s)[m] - rep.half_du.side(s)[m]));
        }
    return rep;
}

} // namespace hivecurve
