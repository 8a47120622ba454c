#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hive.hpp"
#include "random.hpp"

namespace hivecurve {

using Lifting = TriangleTable<Rational>;

/// Affine functional a*i + b*j + c*k; defined up to a common shift of (a,b,c).
struct Functional {
    Rational a, b, c;

    Rational operator()(const TriangleIndex& t) const { return a * t.i + b * t.j + c * t.k; }
    bool operator==(const Functional&) const = default;
};

struct Cell {
    std::vector<TriangleIndex> vertices;  // convex hull corners, counterclockwise in (i, j)
    std::vector<TriangleIndex> points;    // every lattice point on the face, canonical order
    Functional functional;
};

struct Segment {
    TriangleIndex from, to;  // from < to
    auto operator<=>(const Segment&) const = default;
};

struct SubdivisionEdge {
    Segment segment;
    std::vector<int> cells;  // one for boundary edges, two for interior edges
    bool boundary() const { return cells.size() == 1; }
};

struct Subdivision {
    int n = 0;
    std::vector<Cell> cells;
    std::vector<SubdivisionEdge> edges;
    std::vector<TriangleIndex> vertices;
};

namespace detail {

inline long cross2(const TriangleIndex& o, const TriangleIndex& a, const TriangleIndex& b) {
    return static_cast<long>(a.i - o.i) * (b.j - o.j) - static_cast<long>(a.j - o.j) * (b.i - o.i);
}

inline long lattice_length(const TriangleIndex& a, const TriangleIndex& b) {
    return std::gcd(std::gcd(std::abs(a.i - b.i), std::abs(a.j - b.j)), std::abs(a.k - b.k));
}

/// Counterclockwise hull corners of points in the (i, j) chart, collinear points dropped.
inline std::vector<TriangleIndex> hull_corners(std::vector<TriangleIndex> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
        return std::pair(x.i, x.j) < std::pair(y.i, y.j);
    });
    if (pts.size() < 3) return pts;
    std::vector<TriangleIndex> h(2 * pts.size());
    std::size_t m = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        while (m >= 2 && cross2(h[m - 2], h[m - 1], pts[p]) <= 0) --m;
        h[m++] = pts[p];
    }
    for (std::size_t p = pts.size() - 1, lo = m + 1; p-- > 0;) {
        while (m >= lo && cross2(h[m - 2], h[m - 1], pts[p]) <= 0) --m;
        h[m++] = pts[p];
    }
    h.resize(m - 1);
    return h;
}

inline int side_of(const TriangleIndex& a, const TriangleIndex& b) {
    if (a.k == 0 && b.k == 0) return 0;
    if (a.i == 0 && b.i == 0) return 1;
    if (a.j == 0 && b.j == 0) return 2;
    return -1;
}

} // namespace detail

/// Projection of the upper faces of {(i, j, h_ijk)}. Tied points stay in one
/// cell; the lifting is never perturbed here.
inline Subdivision regular_subdivision(const Lifting& L) {
    const int n = L.degree();
    Subdivision S;
    S.n = n;
    if (n == 0) {
        S.vertices = {{0, 0, 0}};
        return S;
    }
    auto pts = L.indices();
    const std::size_t N = pts.size();

    // Integer heights: scale by the lcm of denominators.
    BigInt scale = 1;
    for (const auto& v : L) scale = boost::multiprecision::lcm(scale, denominator_of(v));
    std::vector<BigInt> H(N);
    for (std::size_t p = 0; p < N; ++p) H[p] = numerator_of(L[p] * Rational(scale));

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> on;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b)
            for (std::size_t c = b + 1; c < N; ++c) {
                long o = detail::cross2(pts[a], pts[b], pts[c]);
                if (o == 0) continue;
                const BigInt db = H[b] - H[a], dc = H[c] - H[a];
                on.clear();
                bool upper = true;
                for (std::size_t p = 0; p < N && upper; ++p) {
                    // o * (H_p - plane(p)); positive means above the plane
                    BigInt v = o * (H[p] - H[a]) - detail::cross2(pts[a], pts[p], pts[c]) * db -
                               detail::cross2(pts[a], pts[b], pts[p]) * dc;
                    int s = v.sign() * (o > 0 ? 1 : -1);
                    if (s > 0) upper = false;
                    else if (s == 0) on.push_back(p);
                }
                if (!upper || !seen.insert(on).second) continue;

                Cell cell;
                for (auto p : on) cell.points.push_back(pts[p]);
                cell.vertices = detail::hull_corners(cell.points);
                // h = p*i + q*j + e on the face, homogenized with e = e(i+j+k)/n.
                const auto &A = pts[a], &B = pts[b], &C = pts[c];
                Rational hb = L[b] - L[a], hc = L[c] - L[a];
                Rational P = (hb * (C.j - A.j) - hc * (B.j - A.j)) / o;
                Rational Q = (hc * (B.i - A.i) - hb * (C.i - A.i)) / o;
                Rational E = L[a] - P * A.i - Q * A.j;
                cell.functional = {P + E / n, Q + E / n, E / n};
                S.cells.push_back(std::move(cell));
            }

    std::map<Segment, std::vector<int>> edge_cells;
    std::set<TriangleIndex> verts;
    for (int c = 0; c < static_cast<int>(S.cells.size()); ++c) {
        const auto& v = S.cells[c].vertices;
        for (std::size_t e = 0; e < v.size(); ++e) {
            const auto &x = v[e], &y = v[(e + 1) % v.size()];
            edge_cells[{std::min(x, y), std::max(x, y)}].push_back(c);
            verts.insert(x);
        }
    }
    for (auto& [seg, cs] : edge_cells) S.edges.push_back({seg, cs});
    S.vertices.assign(verts.begin(), verts.end());
    return S;
}

enum class SubdivisionClass { standard, coarsening_of_standard, other };

inline const char* to_string(SubdivisionClass c) {
    return c == SubdivisionClass::standard                 ? "standard"
           : c == SubdivisionClass::coarsening_of_standard ? "coarsening_of_standard"
                                                           : "other";
}

/// Standard: the n^2 unit triangles. Coarsening: every edge runs along a
/// grid direction and every lattice point lies on some upper face.
inline SubdivisionClass classify_subdivision(const Subdivision& S) {
    const int n = S.n;
    if (n == 0) return SubdivisionClass::standard;
    for (const auto& e : S.edges) {
        const auto &a = e.segment.from, &b = e.segment.to;
        if (a.i != b.i && a.j != b.j && a.k != b.k) return SubdivisionClass::other;
    }
    std::set<TriangleIndex> marked;
    for (const auto& c : S.cells) marked.insert(c.points.begin(), c.points.end());
    if (marked.size() != triangle_size(n)) return SubdivisionClass::other;
    // Every unimodular triangle has area one; grid-direction edges make it a unit triangle.
    bool unit = std::all_of(S.cells.begin(), S.cells.end(), [](const Cell& c) { return c.points.size() == 3; });
    return unit ? SubdivisionClass::standard : SubdivisionClass::coarsening_of_standard;
}

/// Explicit tie-breaking: adds eps * r_ijk with r_ijk uniform in [-1, 1] on a fine grid.
inline Lifting perturb_lifting(const Lifting& L, const Rational& eps, Rng& rng) {
    return Lifting::generate(L.degree(), [&](const TriangleIndex& t) {
        return L.at(t) + eps * Rational(rng.uniform_int(-1000, 1000), 1000);
    });
}

} // namespace hivecurve
