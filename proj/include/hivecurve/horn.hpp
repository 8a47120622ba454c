#pragma once

#include <optional>
#include <string>

#include "hive.hpp"
#include "simplex.hpp"

namespace hivecurve {

struct HornResult {
    bool feasible = false;
    std::optional<Hive> witness;
};

/// Decides whether b is the boundary of some hive, by exact LP feasibility.
inline HornResult horn_feasible(const BoundarySpec<Rational>& b) {
    const int n = b.degree();
    require(b.beta.size() == b.alpha.size() && b.gamma.size() == b.alpha.size(),
            ErrorKind::DimensionMismatch,
            "alpha/beta/gamma lengths " + std::to_string(b.alpha.size()) + "/" +
                std::to_string(b.beta.size()) + "/" + std::to_string(b.gamma.size()));
    for (int s = 0; s < 3; ++s)
        require(weakly_decreasing(b.side(s)), ErrorKind::NotDecreasing,
                std::string("side ") + "abc"[s] + " is not weakly decreasing");

    const int nv = static_cast<int>(triangle_size(n));
    LinearSystem sys;
    sys.num_vars = nv;
    auto var = [n](int i, int j, int k) { return static_cast<int>(triangle_position(n, {i, j, k})); };
    auto diff_row = [&](TriangleIndex hi, TriangleIndex lo) {
        std::vector<Rational> row(nv);
        row[var(hi.i, hi.j, hi.k)] += 1;
        row[var(lo.i, lo.j, lo.k)] -= 1;
        return row;
    };

    std::vector<Rational> norm(nv);
    norm[var(n, 0, 0)] = 1;
    sys.add_eq(norm, 0);
    for (int m = 1; m <= n; ++m) {
        sys.add_eq(diff_row({n - m, m, 0}, {n - m + 1, m - 1, 0}), b.alpha[m - 1]);
        sys.add_eq(diff_row({0, n - m, m}, {0, n - m + 1, m - 1}), b.beta[m - 1]);
        sys.add_eq(diff_row({m, 0, n - m}, {m - 1, 0, n - m + 1}), b.gamma[m - 1]);
    }
    // plus - minus >= 0  <=>  minus - plus <= 0
    for (const auto& r : rhombus_inequalities(n)) {
        std::vector<Rational> row(nv);
        for (const auto& t : r.minus) row[var(t.i, t.j, t.k)] += 1;
        for (const auto& t : r.plus) row[var(t.i, t.j, t.k)] -= 1;
        sys.add_le(std::move(row), 0);
    }

    auto x = find_feasible_point(sys);
    if (!x) return {};
    Hive w(n, std::move(*x));
    require(boundary(w) == b && classify_hive(w).is_hive(), ErrorKind::Internal,
            "LP witness failed verification");
    return {true, std::move(w)};
}

} // namespace hivecurve
