#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "parallel.hpp"
#include "pencil.hpp"
#include "polynomial.hpp"
#include "subdivision.hpp"

namespace hivecurve {

// Plane chart for R^3 / R(1,1,1): (X - Z, Y - Z).
using PlanePoint = std::array<Rational, 2>;
using LatticeVector = std::array<long, 2>;

/// Sides of Delta_n, matching the boundary vectors: alpha on k=0, beta on i=0, gamma on j=0.
enum class Side { alpha, beta, gamma };

struct TropicalVertex {
    PlanePoint position;
    int cell;
};

struct TropicalEdge {
    int from, to;
    LatticeVector direction;  // primitive, pointing from -> to
    long multiplicity;
    Segment dual;
};

struct TropicalRay {
    int vertex;
    Side side;
    LatticeVector direction;
    long multiplicity;
    Rational position;     // constant value of X-Y, Y-Z or Z-X along the ray
    int first_slot;        // boundary slots first_slot .. first_slot + multiplicity - 1
    Segment dual;
};

struct TropicalCurve {
    int n = 0;
    std::vector<TropicalVertex> vertices;
    std::vector<TropicalEdge> edges;
    std::vector<TropicalRay> rays;

    long ray_count() const {
        long total = 0;
        for (const auto& r : rays) total += r.multiplicity;
        return total;
    }
};

namespace detail {

inline LatticeVector ray_direction(Side s) {
    switch (s) {
    case Side::alpha: return {1, 1};
    case Side::beta: return {-1, 0};
    default: return {0, -1};
    }
}

/// Slot m of a side is the unit segment whose far endpoint has coordinate m
/// (j on alpha, k on beta, i on gamma).
inline int slot_coordinate(Side s, const TriangleIndex& t) {
    return s == Side::alpha ? t.j : s == Side::beta ? t.k : t.i;
}

inline Rational ray_position(Side s, const Functional& f) {
    return s == Side::alpha ? f.b - f.a : s == Side::beta ? f.c - f.b : f.a - f.c;
}

} // namespace detail

/// Dual graph of the regular subdivision: vertex (c-a, c-b) per cell.
inline TropicalCurve tropical_curve(const Subdivision& S) {
    TropicalCurve T;
    T.n = S.n;
    for (int c = 0; c < static_cast<int>(S.cells.size()); ++c) {
        const auto& f = S.cells[c].functional;
        T.vertices.push_back({{f.c - f.a, f.c - f.b}, c});
    }
    for (const auto& e : S.edges) {
        const auto &p = e.segment.from, &q = e.segment.to;
        long len = detail::lattice_length(p, q);
        if (e.boundary()) {
            Side s = static_cast<Side>(detail::side_of(p, q));
            int lo = std::min(detail::slot_coordinate(s, p), detail::slot_coordinate(s, q));
            T.rays.push_back({e.cells[0], s, detail::ray_direction(s), len,
                              detail::ray_position(s, S.cells[e.cells[0]].functional), lo + 1, e.segment});
            continue;
        }
        // Tropical edges are orthogonal to the dual segment: (e_j, -e_i) in the chart.
        LatticeVector d{(q.j - p.j) / len, -(q.i - p.i) / len};
        int u = e.cells[0], v = e.cells[1];
        const auto &pu = T.vertices[u].position, &pv = T.vertices[v].position;
        Rational dot = (pv[0] - pu[0]) * d[0] + (pv[1] - pu[1]) * d[1];
        if (dot < 0) d = {-d[0], -d[1]};
        T.edges.push_back({u, v, d, len, e.segment});
    }
    return T;
}

inline TropicalCurve tropical_curve(const Lifting& L) { return tropical_curve(regular_subdivision(L)); }

/// Sum of multiplicity-weighted outgoing directions at each vertex.
inline std::vector<LatticeVector> balancing_defects(const TropicalCurve& T) {
    std::vector<LatticeVector> sum(T.vertices.size(), LatticeVector{0, 0});
    for (const auto& e : T.edges)
        for (int a = 0; a < 2; ++a) {
            sum[e.from][a] += e.multiplicity * e.direction[a];
            sum[e.to][a] -= e.multiplicity * e.direction[a];
        }
    for (const auto& r : T.rays)
        for (int a = 0; a < 2; ++a) sum[r.vertex][a] += r.multiplicity * r.direction[a];
    return sum;
}

inline bool is_balanced(const TropicalCurve& T) {
    for (const auto& s : balancing_defects(T))
        if (s[0] != 0 || s[1] != 0) return false;
    return true;
}

/// Ray positions per side in slot order; they must fill all n slots and decrease.
inline BoundarySpec<Rational> honeycomb_boundary(const TropicalCurve& T) {
    const int n = T.n;
    std::array<std::vector<Rational>, 3> sides;
    std::array<std::vector<int>, 3> filled;
    for (int s = 0; s < 3; ++s) {
        sides[s].assign(n, Rational(0));
        filled[s].assign(n, 0);
    }
    for (const auto& r : T.rays) {
        int s = static_cast<int>(r.side);
        for (long m = r.first_slot; m < r.first_slot + r.multiplicity; ++m) {
            require(m >= 1 && m <= n, ErrorKind::NotHiveDual, "ray slot out of range");
            sides[s][m - 1] = r.position;
            ++filled[s][m - 1];
        }
    }
    static const char* names[] = {"alpha", "beta", "gamma"};
    for (int s = 0; s < 3; ++s) {
        for (int m = 0; m < n; ++m)
            require(filled[s][m] == 1, ErrorKind::NotHiveDual,
                    std::string(names[s]) + " slot " + std::to_string(m + 1) + " not covered by one ray");
        require(weakly_decreasing(sides[s]), ErrorKind::NotHiveDual,
                std::string(names[s]) + " ray positions increase along the side");
    }
    return {sides[0], sides[1], sides[2]};
}

/// Norm on R^3 / R(1,1,1) induced by the Euclidean norm on R^3, for a
/// difference given in chart coordinates: |(dx, dy, 0)|^2 - (dx + dy)^2 / 3.
inline double quotient_norm(double dx, double dy) {
    return std::sqrt(std::max(0.0, dx * dx + dy * dy - (dx + dy) * (dx + dy) / 3.0));
}

/// Quotient-metric distance from a chart point to the union of edges and rays.
inline double distance_to_curve(const TropicalCurve& T, const std::array<double, 2>& p) {
    auto pos = [&](int v) {
        const auto& q = T.vertices[v].position;
        return std::array<double, 2>{to_double(q[0]), to_double(q[1])};
    };
    // The quotient inner product in the chart: <u,v> = u.v - (u0+u1)(v0+v1)/3.
    auto inner = [](std::array<double, 2> u, std::array<double, 2> v) {
        return u[0] * v[0] + u[1] * v[1] - (u[0] + u[1]) * (v[0] + v[1]) / 3.0;
    };
    auto seg = [&](std::array<double, 2> a, std::array<double, 2> d, double tmax) {
        std::array<double, 2> w{p[0] - a[0], p[1] - a[1]};
        double t = std::clamp(inner(w, d) / inner(d, d), 0.0, tmax);
        return quotient_norm(w[0] - t * d[0], w[1] - t * d[1]);
    };
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : T.edges) {
        auto a = pos(e.from), b = pos(e.to);
        best = std::min(best, seg(a, {b[0] - a[0], b[1] - a[1]}, 1.0));
    }
    for (const auto& r : T.rays)
        best = std::min(best, seg(pos(r.vertex), {double(r.direction[0]), double(r.direction[1])},
                                  std::numeric_limits<double>::infinity()));
    for (int v = 0; v < static_cast<int>(T.vertices.size()); ++v) {
        auto a = pos(v);
        best = std::min(best, quotient_norm(p[0] - a[0], p[1] - a[1]));
    }
    return best;
}

struct AmoebaOptions {
    int moduli = 64;   // log|y| grid, and |x| fixed to 1 by homogeneity
    int phases = 32;   // arg y grid
    double log_min = 0, log_max = 0;  // equal values select an automatic window
    unsigned threads = 0;
};

struct AmoebaCloud {
    std::vector<std::array<double, 2>> points;  // chart coordinates (X-Z, Y-Z)
    int moduli = 0, phases = 0;
    double log_min = 0, log_max = 0;
};

/// Samples log|.| of zeros (1, y, z) with y on circles; every point lies on the amoeba.
inline AmoebaCloud amoeba_sample(const TernaryForm<double>& F, const AmoebaOptions& opt = {}) {
    const int n = F.degree();
    bool nonzero = std::any_of(F.begin(), F.end(), [](double v) { return v != 0.0; });
    require(nonzero, ErrorKind::ZeroPolynomial, "amoeba of zero form");
    require(opt.moduli >= 1 && opt.phases >= 1, ErrorKind::InvalidArgument, "empty amoeba grid");
    AmoebaCloud cloud;
    cloud.moduli = opt.moduli;
    cloud.phases = opt.phases;
    cloud.log_min = opt.log_min;
    cloud.log_max = opt.log_max;
    if (opt.log_min == opt.log_max) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (double v : F)
            if (v != 0.0) {
                lo = std::min(lo, std::log(std::abs(v)));
                hi = std::max(hi, std::log(std::abs(v)));
            }
        double w = 2.0 * (hi - lo) + 2.0;
        cloud.log_min = -w;
        cloud.log_max = w;
    }
    const int cells = opt.moduli * opt.phases;
    std::vector<std::vector<std::array<double, 2>>> found(cells);
    parallel_for(
        static_cast<std::size_t>(cells),
        [&](std::size_t idx) {
            int a = static_cast<int>(idx) / opt.phases, b = static_cast<int>(idx) % opt.phases;
            double s = opt.moduli == 1 ? cloud.log_min
                                       : cloud.log_min + (cloud.log_max - cloud.log_min) * a / (opt.moduli - 1);
            double phi = 2.0 * M_PI * (b + 0.5) / opt.phases;
            std::complex<double> y = std::polar(std::exp(s), phi);
            // coefficient of z^k: sum_j F_{n-j-k, j, k} y^j
            std::vector<std::complex<double>> c(n + 1);
            for (int k = 0; k <= n; ++k) {
                std::complex<double> acc = 0, yp = 1;
                for (int j = 0; j + k <= n; ++j) {
                    acc += F.at(n - j - k, j, k) * yp;
                    yp *= y;
                }
                c[k] = acc;
            }
            if (std::all_of(c.begin(), c.end(), [](auto v) { return v == 0.0; })) return;
            for (const auto& z : complex_roots(c)) {
                if (z == 0.0 || !std::isfinite(std::abs(z))) continue;
                double lz = std::log(std::abs(z));
                found[idx].push_back({-lz, s - lz});
            }
        },
        opt.threads);
    for (auto& f : found) cloud.points.insert(cloud.points.end(), f.begin(), f.end());
    return cloud;
}

inline AmoebaCloud amoeba_sample(const TernaryForm<Rational>& F, const AmoebaOptions& opt = {}) {
    return amoeba_sample(F.map([](const Rational& v) { return to_double(v); }), opt);
}

} // namespace hivecurve
