#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "triangle.hpp"

namespace hivecurve {

using Hive = TriangleTable<Rational>;

enum class RhombusFamily { k, j, i };

inline const char* to_string(RhombusFamily f) {
    return f == RhombusFamily::k ? "k" : f == RhombusFamily::j ? "j" : "i";
}

/// slack = h(plus[0]) + h(plus[1]) - h(minus[0]) - h(minus[1]); the anchor is minus[0].
struct RhombusInequality {
    RhombusFamily family;
    std::array<TriangleIndex, 2> plus;
    std::array<TriangleIndex, 2> minus;

    const TriangleIndex& anchor() const { return minus[0]; }
    bool operator==(const RhombusInequality&) const = default;
};

inline std::vector<RhombusInequality> rhombus_inequalities(int n) {
    std::vector<RhombusInequality> out;
    for (const auto& t : index_set(n)) {
        int i = t.i, j = t.j, k = t.k;
        if (k >= 2)
            out.push_back({RhombusFamily::k,
                           {{{i + 1, j, k - 1}, {i, j + 1, k - 1}}},
                           {{t, {i + 1, j + 1, k - 2}}}});
        if (j >= 2)
            out.push_back({RhombusFamily::j,
                           {{{i + 1, j - 1, k}, {i, j - 1, k + 1}}},
                           {{t, {i + 1, j - 2, k + 1}}}});
        if (i >= 2)
            out.push_back({RhombusFamily::i,
                           {{{i - 1, j + 1, k}, {i - 1, j, k + 1}}},
                           {{t, {i - 2, j + 1, k + 1}}}});
    }
    return out;
}

template <class T>
T rhombus_slack(const TriangleTable<T>& h, const RhombusInequality& r) {
    return h.at(r.plus[0]) + h.at(r.plus[1]) - h.at(r.minus[0]) - h.at(r.minus[1]);
}

enum class HiveClass { strict_hive, hive, not_hive };

inline const char* to_string(HiveClass c) {
    return c == HiveClass::strict_hive ? "strict_hive" : c == HiveClass::hive ? "hive" : "not_hive";
}

struct HiveReport {
    HiveClass verdict = HiveClass::strict_hive;
    std::vector<RhombusInequality> violated;
    std::vector<RhombusInequality> tight;

    bool is_hive() const { return verdict != HiveClass::not_hive; }
};

/// Exact classification, no tolerance.
inline HiveReport classify_hive(const Hive& h) {
    HiveReport rep;
    for (const auto& r : rhombus_inequalities(h.degree())) {
        int s = rhombus_slack(h, r).sign();
        if (s < 0) rep.violated.push_back(r);
        else if (s == 0) rep.tight.push_back(r);
    }
    rep.verdict = !rep.violated.empty() ? HiveClass::not_hive
                  : !rep.tight.empty()  ? HiveClass::hive
                                        : HiveClass::strict_hive;
    return rep;
}

/// Float classification: slack >= -tol is a hive, |slack| <= tol is tight.
inline HiveReport classify_hive(const TriangleTable<double>& h, double tol) {
    HiveReport rep;
    for (const auto& r : rhombus_inequalities(h.degree())) {
        double s = rhombus_slack(h, r);
        if (s < -tol) rep.violated.push_back(r);
        else if (s <= tol) rep.tight.push_back(r);
    }
    rep.verdict = !rep.violated.empty() ? HiveClass::not_hive
                  : !rep.tight.empty()  ? HiveClass::hive
                                        : HiveClass::strict_hive;
    return rep;
}

/// Side differences (alpha, beta, gamma), each of length n.
template <class T>
struct BoundarySpec {
    std::vector<T> alpha, beta, gamma;

    int degree() const { return static_cast<int>(alpha.size()); }
    const std::vector<T>& side(int s) const { return s == 0 ? alpha : s == 1 ? beta : gamma; }
    std::vector<T>& side(int s) { return s == 0 ? alpha : s == 1 ? beta : gamma; }
    bool operator==(const BoundarySpec&) const = default;
};

template <class T>
BoundarySpec<T> boundary(const TriangleTable<T>& h) {
    int n = h.degree();
    BoundarySpec<T> b;
    for (int m = 1; m <= n; ++m) {
        b.alpha.push_back(h.at(n - m, m, 0) - h.at(n - m + 1, m - 1, 0));
        b.beta.push_back(h.at(0, n - m, m) - h.at(0, n - m + 1, m - 1));
        b.gamma.push_back(h.at(m, 0, n - m) - h.at(m - 1, 0, n - m + 1));
    }
    return b;
}

template <class T>
bool weakly_decreasing(const std::vector<T>& v) {
    for (std::size_t a = 1; a < v.size(); ++a)
        if (v[a] > v[a - 1]) return false;
    return true;
}

/// Max-plus convolution without the hive check.
template <class T>
TriangleTable<T> max_plus_convolve(const TriangleTable<T>& h, const TriangleTable<T>& g) {
    int n = h.degree(), m = g.degree();
    TriangleTable<T> out(n + m);
    std::vector<bool> seen(out.size(), false);
    for (const auto& a : h.indices())
        for (const auto& b : g.indices()) {
            TriangleIndex c{a.i + b.i, a.j + b.j, a.k + b.k};
            std::size_t p = triangle_position(n + m, c);
            T v = h.at(a) + g.at(b);
            if (!seen[p] || v > out[p]) out[p] = v;
            seen[p] = true;
        }
    return out;
}

inline Hive convolve(const Hive& h, const Hive& g) {
    require(classify_hive(h).is_hive(), ErrorKind::NotAHive, "left operand");
    require(classify_hive(g).is_hive(), ErrorKind::NotAHive, "right operand");
    return max_plus_convolve(h, g);
}

/// h + (a i + b j + c k).
template <class T>
TriangleTable<T> add_linear(const TriangleTable<T>& h, const T& a, const T& b, const T& c) {
    auto out = h;
    for (const auto& t : h.indices()) out.at(t) += a * t.i + b * t.j + c * t.k;
    return out;
}

inline Hive quadratic_hive(int n) {
    return Hive::generate(n, [](const TriangleIndex& t) {
        return Rational(t.i * t.j + t.j * t.k + t.k * t.i);
    });
}

/// Shift so that h(n,0,0) = 0.
template <class T>
TriangleTable<T> normalize(const TriangleTable<T>& h) {
    auto out = h;
    T c = h.at(h.degree(), 0, 0);
    for (auto& v : out) v -= c;
    return out;
}

} // namespace hivecurve
