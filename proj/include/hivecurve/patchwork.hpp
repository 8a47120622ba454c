#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "subdivision.hpp"

namespace hivecurve {

using Quadrant = std::array<int, 3>;  // entries +1 / -1

struct SignedLifting {
    Lifting lifting;
    TriangleTable<int> signs;  // +1 / -1

    int degree() const { return lifting.degree(); }

    static SignedLifting all_plus(Lifting L) {
        int n = L.degree();
        return {std::move(L), TriangleTable<int>(n, 1)};
    }
};

inline const std::array<Quadrant, 4>& chart_quadrants() {
    static const std::array<Quadrant, 4> q{{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};
    return q;
}

inline int effective_sign(const SignedLifting& SL, const Quadrant& q, const TriangleIndex& t) {
    int s = SL.signs.at(t);
    if (q[0] < 0 && t.i % 2) s = -s;
    if (q[1] < 0 && t.j % 2) s = -s;
    if (q[2] < 0 && t.k % 2) s = -s;
    return s;
}

/// Segment joining the midpoints of two mixed-sign edges of one triangle.
struct ChartSegment {
    std::array<Segment, 2> edges;
    int triangle;
};

struct Chart {
    int n = 0;
    Quadrant quadrant{1, 1, 1};
    TriangleTable<int> signs;  // effective signs
    std::vector<std::array<TriangleIndex, 3>> triangles;
    std::vector<ChartSegment> segments;
};

namespace detail {

inline Segment make_segment(const TriangleIndex& a, const TriangleIndex& b) { return {std::min(a, b), std::max(a, b)}; }

inline std::vector<std::array<TriangleIndex, 3>> triangles_of(const Subdivision& S) {
    std::vector<std::array<TriangleIndex, 3>> out;
    for (const auto& c : S.cells) {
        require(c.points.size() == 3 && c.vertices.size() == 3, ErrorKind::NotATriangulation,
                "cell with " + std::to_string(c.points.size()) + " lattice points on its face");
        out.push_back({c.vertices[0], c.vertices[1], c.vertices[2]});
    }
    return out;
}

} // namespace detail

/// Effective signs sign(f) e1^i e2^j e3^k on a triangulation, plus one
/// midpoint segment per triangle with mixed signs.
inline Chart build_chart(const SignedLifting& SL, const Quadrant& q, const Subdivision& S) {
    Chart ch;
    ch.n = SL.degree();
    ch.quadrant = q;
    ch.signs = TriangleTable<int>::generate(ch.n, [&](const TriangleIndex& t) { return effective_sign(SL, q, t); });
    ch.triangles = detail::triangles_of(S);
    for (int t = 0; t < static_cast<int>(ch.triangles.size()); ++t) {
        const auto& v = ch.triangles[t];
        std::vector<Segment> mixed;
        for (int e = 0; e < 3; ++e) {
            const auto &a = v[e], &b = v[(e + 1) % 3];
            if (ch.signs.at(a) != ch.signs.at(b)) mixed.push_back(detail::make_segment(a, b));
        }
        if (!mixed.empty()) ch.segments.push_back({{mixed[0], mixed[1]}, t});
    }
    return ch;
}

inline Chart build_chart(const SignedLifting& SL, const Quadrant& q) {
    return build_chart(SL, q, regular_subdivision(SL.lifting));
}

enum class ComponentKind { oval, pseudoline };

inline const char* to_string(ComponentKind k) { return k == ComponentKind::oval ? "oval" : "pseudoline"; }

struct Component {
    ComponentKind kind;
    int segments;  // on the projective plane
};

struct TopologyReport {
    int n = 0;
    std::vector<Component> components;
    int ovals = 0;
    int pseudolines = 0;
    int positive_depth = 0;  // ovals whose interior contains the center of T+++
};

namespace detail {

using SphereVertex = std::array<int, 3>;
using SphereEdge = std::pair<SphereVertex, SphereVertex>;

inline SphereVertex place(const TriangleIndex& t, const Quadrant& q) { return {q[0] * t.i, q[1] * t.j, q[2] * t.k}; }

inline SphereVertex negate(SphereVertex v) { return {-v[0], -v[1], -v[2]}; }

inline SphereEdge sphere_edge(SphereVertex a, SphereVertex b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Glues the four charts and their antipodal copies (signs times (-1)^n) into
/// the octahedral double cover of RP^2. Circles mapped to themselves by the
/// antipodal map are pseudolines; antipodal pairs of circles are ovals.
inline TopologyReport glue_and_classify(const std::array<Chart, 4>& charts) {
    using namespace detail;
    const int n = charts[0].n;
    {
        std::set<Quadrant> qs;
        for (const auto& c : charts) {
            require(c.n == n, ErrorKind::DimensionMismatch, "charts of different degrees");
            qs.insert(c.quadrant);
        }
        for (const auto& q : chart_quadrants())
            require(qs.count(q) == 1, ErrorKind::InvalidArgument, "charts must cover the four quadrant classes");
    }
    const int parity = n % 2 ? -1 : 1;

    std::map<SphereVertex, int> vid;
    std::vector<int> vsign;
    auto vertex = [&](const SphereVertex& v, int s) {
        auto [it, fresh] = vid.emplace(v, static_cast<int>(vsign.size()));
        if (fresh) vsign.push_back(s);
        else require(vsign[it->second] == s, ErrorKind::Internal, "charts disagree on a shared vertex sign");
        return it->second;
    };
    struct Face {
        std::array<SphereVertex, 3> v;
        std::array<int, 3> s;
    };
    std::vector<Face> faces;
    for (const auto& c : charts)
        for (int flip : {1, -1}) {
            Quadrant q{flip * c.quadrant[0], flip * c.quadrant[1], flip * c.quadrant[2]};
            int sf = flip < 0 ? parity : 1;
            for (const auto& tri : c.triangles) {
                Face f;
                for (int a = 0; a < 3; ++a) {
                    f.v[a] = place(tri[a], q);
                    f.s[a] = sf * c.signs.at(tri[a]);
                    vertex(f.v[a], f.s[a]);
                }
                faces.push_back(f);
            }
        }

    // Curve graph: nodes are sign-changing edges, one arc per mixed face.
    std::map<SphereEdge, int> node;
    std::vector<std::vector<int>> adj;
    auto node_of = [&](const SphereEdge& e) {
        auto [it, fresh] = node.emplace(e, static_cast<int>(adj.size()));
        if (fresh) adj.emplace_back();
        return it->second;
    };
    detail::UnionFind regions(static_cast<int>(vsign.size()));
    for (const auto& f : faces) {
        std::vector<int> mixed;
        for (int e = 0; e < 3; ++e) {
            int a = e, b = (e + 1) % 3;
            if (f.s[a] != f.s[b]) mixed.push_back(node_of(sphere_edge(f.v[a], f.v[b])));
            else regions.unite(vid.at(f.v[a]), vid.at(f.v[b]));
        }
        if (mixed.size() == 2) {
            adj[mixed[0]].push_back(mixed[1]);
            adj[mixed[1]].push_back(mixed[0]);
        }
    }
    for (const auto& a : adj)
        require(a.size() == 2, ErrorKind::DanglingSegment, "curve node of degree " + std::to_string(a.size()));

    std::vector<SphereEdge> node_key(adj.size());
    for (const auto& [e, id] : node) node_key[id] = e;
    std::vector<int> cycle(adj.size(), -1);
    std::vector<int> cycle_size;
    for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
        if (cycle[s] >= 0) continue;
        int c = static_cast<int>(cycle_size.size());
        cycle_size.push_back(0);
        std::vector<int> stack{s};
        cycle[s] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++cycle_size[c];
            for (int y : adj[x])
                if (cycle[y] < 0) {
                    cycle[y] = c;
                    stack.push_back(y);
                }
        }
    }
    const int C = static_cast<int>(cycle_size.size());
    std::vector<int> partner(C, -1);
    std::vector<std::pair<int, int>> sides(C, {-1, -1});
    for (int x = 0; x < static_cast<int>(adj.size()); ++x) {
        const auto& [a, b] = node_key[x];
        partner[cycle[x]] = cycle[node.at(sphere_edge(negate(a), negate(b)))];
        sides[cycle[x]] = {regions.find(vid.at(a)), regions.find(vid.at(b))};
    }

    TopologyReport rep;
    rep.n = n;
    std::vector<int> oval_reps;  // one representative cycle per oval
    for (int c = 0; c < C; ++c) {
        if (partner[c] == c) {
            rep.components.push_back({ComponentKind::pseudoline, cycle_size[c] / 2});
            ++rep.pseudolines;
        } else if (c < partner[c]) {
            rep.components.push_back({ComponentKind::oval, cycle_size[c]});
            ++rep.ovals;
            oval_reps.push_back(c);
        }
    }

    // Locate the center (n/3, n/3, n/3) of T+++ in scaled coordinates 3*(i, j).
    std::optional<int> center;
    for (const auto& c : charts) {
        if (c.quadrant != Quadrant{1, 1, 1}) continue;
        auto area = [](std::array<long, 2> a, std::array<long, 2> b, std::array<long, 2> p) {
            return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        };
        std::array<long, 2> P{n, n};
        for (const auto& tri : c.triangles) {
            std::array<std::array<long, 2>, 3> V;
            for (int a = 0; a < 3; ++a) V[a] = {3L * tri[a].i, 3L * tri[a].j};
            long tot = area(V[0], V[1], V[2]);
            std::array<long, 3> w{area(V[1], V[2], P), area(V[2], V[0], P), area(V[0], V[1], P)};
            if (tot < 0) {
                tot = -tot;
                for (auto& x : w) x = -x;
            }
            if (w[0] < 0 || w[1] < 0 || w[2] < 0) continue;
            std::array<int, 3> s{c.signs.at(tri[0]), c.signs.at(tri[1]), c.signs.at(tri[2])};
            // With a lone-sign vertex a, the segment cuts off the corner where its barycentric weight exceeds 1/2.
            int pick = 0;
            for (int a = 0; a < 3; ++a)
                if (s[a] != s[(a + 1) % 3] && s[a] != s[(a + 2) % 3]) pick = 2 * w[a] > tot ? a : (a + 1) % 3;
            center = regions.find(vid.at(place(tri[pick], Quadrant{1, 1, 1})));
            break;
        }
    }
    if (n == 0 || !center) return rep;

    // Regions and circles form a tree; the small side of an oval's circle is
    // the one not containing its antipodal partner.
    std::map<int, std::vector<std::pair<int, int>>> tree;  // region -> (region, cycle)
    for (int c = 0; c < C; ++c) {
        tree[sides[c].first].push_back({sides[c].second, c});
        tree[sides[c].second].push_back({sides[c].first, c});
    }
    auto reach_without = [&](int start, int cut) {
        std::set<int> seen{start};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int r = stack.back();
            stack.pop_back();
            for (auto [r2, c] : tree[r])
                if (c != cut && seen.insert(r2).second) stack.push_back(r2);
        }
        return seen;
    };
    for (int c : oval_reps)
        for (int d : {c, partner[c]}) {
            auto side = reach_without(sides[d].first, d);
            int other = partner[d];
            bool partner_here = side.count(sides[other].first) && side.count(sides[other].second);
            auto small = partner_here ? reach_without(sides[d].second, d) : side;
            if (small.count(*center)) {
                ++rep.positive_depth;
                break;
            }
        }
    return rep;
}

inline TopologyReport glue_and_classify(const SignedLifting& SL) {
    auto S = regular_subdivision(SL.lifting);
    std::array<Chart, 4> charts;
    for (int q = 0; q < 4; ++q) charts[q] = build_chart(SL, chart_quadrants()[q], S);
    return glue_and_classify(charts);
}

inline bool is_vinnikov_topology(const TopologyReport& R, int n) {
    return R.ovals == n / 2 && R.pseudolines == n % 2 && R.positive_depth == n / 2;
}

/// Subdivision edges split at the lattice points lying on upper faces, so
/// every coefficient seen along an edge is a path vertex.
inline std::set<Segment> refined_edges(const Subdivision& S) {
    std::set<TriangleIndex> marked;
    for (const auto& c : S.cells) marked.insert(c.points.begin(), c.points.end());
    std::set<Segment> out;
    for (const auto& e : S.edges) {
        const auto &a = e.segment.from, &b = e.segment.to;
        long g = detail::lattice_length(a, b);
        TriangleIndex prev = a;
        for (long s = 1; s <= g; ++s) {
            TriangleIndex p{a.i + static_cast<int>((b.i - a.i) / g * s), a.j + static_cast<int>((b.j - a.j) / g * s),
                            a.k + static_cast<int>((b.k - a.k) / g * s)};
            if (s < g && !marked.count(p)) continue;
            out.insert(detail::make_segment(prev, p));
            prev = p;
        }
    }
    return out;
}

/// Number of sign flips in a sequence of nonzero signs.
inline int sign_changes(const std::vector<int>& signs) {
    int m = 0;
    for (std::size_t a = 1; a < signs.size(); ++a) m += (signs[a] > 0) != (signs[a - 1] > 0);
    return m;
}

/// Effective sign flips along a path of subdivision edges.
inline int sign_changes_along_path(const std::vector<TriangleIndex>& path, const SignedLifting& SL,
                                   const Subdivision& S, const Quadrant& q = {1, 1, 1}) {
    const auto edges = refined_edges(S);
    std::vector<int> s;
    for (std::size_t a = 0; a < path.size(); ++a) {
        require(SL.lifting.contains(path[a]), ErrorKind::NotAPath, "path vertex " + path[a].str() + " outside Delta");
        if (a > 0)
            require(edges.count(detail::make_segment(path[a - 1], path[a])) == 1, ErrorKind::NotAPath,
                    path[a - 1].str() + "-" + path[a].str() + " is not a subdivision edge between marked points");
        s.push_back(effective_sign(SL, q, path[a]));
    }
    return sign_changes(s);
}

inline int sign_changes_along_path(const std::vector<TriangleIndex>& path, const SignedLifting& SL,
                                   const Quadrant& q = {1, 1, 1}) {
    return sign_changes_along_path(path, SL, regular_subdivision(SL.lifting), q);
}

/// Path from the corner where `axis` equals n to the side where it is 0,
/// through a refined edge whose `axis` gap exceeds one.
struct ViolationPath {
    int axis;
    std::vector<TriangleIndex> path;

    int edges() const { return static_cast<int>(path.size()) - 1; }

    /// The chart that flips the sign of the axis coordinate.
    Quadrant mirror() const {
        Quadrant q{1, 1, 1};
        q[axis] = -1;
        return q;
    }
};

inline std::optional<ViolationPath> find_violation_path(const Subdivision& S) {
    const int n = S.n;
    const auto edges = refined_edges(S);
    std::map<TriangleIndex, std::vector<TriangleIndex>> nbr;
    for (const auto& e : edges) {
        nbr[e.from].push_back(e.to);
        nbr[e.to].push_back(e.from);
    }
    // Greedy walk: the largest step in the requested direction, ties to the smaller index.
    auto walk = [&](TriangleIndex v, int axis, int dir) {
        std::vector<TriangleIndex> out{v};
        while (dir > 0 ? v[axis] < n : v[axis] > 0) {
            std::optional<TriangleIndex> best;
            for (const auto& w : nbr[v])
                if ((w[axis] - v[axis]) * dir > 0 && (!best || (w[axis] - (*best)[axis]) * dir > 0)) best = w;
            require(best.has_value(), ErrorKind::Internal, "no monotone edge from " + v.str());
            v = *best;
            out.push_back(v);
        }
        return out;
    };
    for (int axis = 0; axis < 3; ++axis) {
        std::optional<ViolationPath> found;
        for (const auto& e : edges) {
            TriangleIndex hi = e.from, lo = e.to;
            if (hi[axis] < lo[axis]) std::swap(hi, lo);
            if (hi[axis] - lo[axis] <= 1) continue;
            auto up = walk(hi, axis, 1), down = walk(lo, axis, -1);
            ViolationPath vp{axis, {up.rbegin(), up.rend()}};
            vp.path.insert(vp.path.end(), down.begin(), down.end());
            if (!found || vp.edges() < found->edges() ||
                (vp.edges() == found->edges() && found->path.back() < vp.path.back()))
                found = std::move(vp);
        }
        if (found) return found;
    }
    return std::nullopt;
}

/// Sign changes of the path in T+++ plus those of its copy in the mirror chart.
inline int glued_sign_changes(const ViolationPath& vp, const SignedLifting& SL, const Subdivision& S) {
    return sign_changes_along_path(vp.path, SL, S) + sign_changes_along_path(vp.path, SL, S, vp.mirror());
}

} // namespace hivecurve
