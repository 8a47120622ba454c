#pragma once

#include <hivecurve/hive.hpp>

namespace fixtures {

using hivecurve::Hive;
using hivecurve::Rational;
using hivecurve::TriangleIndex;

inline Hive hive_of(int n, std::initializer_list<std::pair<TriangleIndex, Rational>> entries) {
    Hive h(n);
    for (const auto& [t, v] : entries) h.at(t) = v;
    return h;
}

inline std::vector<Rational> q(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// n=3 lifting whose upper hull contains the edge (2,1,0)-(0,2,1): h = -|i+2j-4|.
inline Hive long_edge_n3() {
    return Hive::generate(3, [](const TriangleIndex& t) { return Rational(-std::abs(t.i + 2 * t.j - 4)); });
}

// n=2, corners 0 except h_110 = -1.
inline Hive long_edge_n2() { return hive_of(2, {{{1, 1, 0}, -1}}); }

} // namespace fixtures
