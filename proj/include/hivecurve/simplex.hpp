#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace hivecurve {

/// Constraints over free variables x: eq_rows x = eq_rhs, le_rows x <= le_rhs.
struct LinearSystem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;

    void add_eq(std::vector<Rational> row, Rational rhs) {
        eq_rows.push_back(std::move(row));
        eq_rhs.push_back(std::move(rhs));
    }
    void add_le(std::vector<Rational> row, Rational rhs) {
        le_rows.push_back(std::move(row));
        le_rhs.push_back(std::move(rhs));
    }
};

/// Exact phase-one simplex (dense tableau, Bland's rule). Returns a feasible
/// point or nothing.
inline std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& sys) {
    const int nv = sys.num_vars;
    const int ne = static_cast<int>(sys.eq_rows.size());
    const int nl = static_cast<int>(sys.le_rows.size());
    const int m = ne + nl;
    // Columns: x+ (nv), x- (nv), slacks (nl), artificials (m), rhs.
    const int art0 = 2 * nv + nl;
    const int ncols = art0 + m;
    const int rhs = ncols;

    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(ncols + 1));
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        const auto& row = r < ne ? sys.eq_rows[r] : sys.le_rows[r - ne];
        require(static_cast<int>(row.size()) == nv, ErrorKind::DimensionMismatch, "LP row width");
        Rational b = r < ne ? sys.eq_rhs[r] : sys.le_rhs[r - ne];
        int sgn = b < 0 ? -1 : 1;
        for (int c = 0; c < nv; ++c) {
            if (row[c] == 0) continue;
            T[r][c] = sgn * row[c];
            T[r][nv + c] = -sgn * row[c];
        }
        if (r >= ne) T[r][2 * nv + (r - ne)] = sgn;
        T[r][art0 + r] = 1;
        T[r][rhs] = sgn * b;
        basis[r] = art0 + r;
    }
    // Objective row holds reduced costs of min sum(artificials).
    auto& obj = T[m];
    for (int r = 0; r < m; ++r)
        for (int c = 0; c <= ncols; ++c)
            if (c < art0 || c == rhs) obj[c] -= T[r][c];

    for (;;) {
        int enter = -1;
        for (int c = 0; c < ncols; ++c)
            if (obj[c] < 0) { enter = c; break; }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][rhs] / T[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break; // cannot happen: phase one is bounded below
        Rational piv = T[leave][enter];
        for (int c = 0; c <= ncols; ++c)
            if (T[leave][c] != 0) T[leave][c] /= piv;
        for (int r = 0; r <= m; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            Rational f = T[r][enter];
            for (int c = 0; c <= ncols; ++c)
                if (T[leave][c] != 0) T[r][c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }
    if (obj[rhs] != 0) return std::nullopt;

    std::vector<Rational> x(nv);
    for (int r = 0; r < m; ++r) {
        int b = basis[r];
        if (b < nv) x[b] += T[r][rhs];
        else if (b < 2 * nv) x[b - nv] -= T[r][rhs];
    }
    return x;
}

} // namespace hivecurve
