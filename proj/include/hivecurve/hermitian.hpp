#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "matrix.hpp"

namespace hivecurve {

inline constexpr int kJacobiSweepCap = 64;

/// Cyclic Jacobi with complex rotations. Eigenvalues are returned in
/// decreasing order.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require(is_hermitian(m), ErrorKind::NotHermitian, "eigenvalues need a Hermitian matrix");
    const int n = m.order();
    ComplexMatrix a = m;
    for (int r = 0; r < n; ++r) a(r, r) = a(r, r).real();
    auto frob = [&](bool offdiag) {
        double s = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!offdiag || r != c) s += std::norm(a(r, c));
        return std::sqrt(s);
    };
    const double target = 1e-13 * std::max(frob(false), 1e-300);

    int sweep = 0;
    while (frob(true) >= target) {
        require(++sweep <= kJacobiSweepCap, ErrorKind::NoConvergence,
                "Jacobi exceeded " + std::to_string(kJacobiSweepCap) + " sweeps");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const std::complex<double> phase = apq / mag;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const std::complex<double> j00 = c, j01 = s;
                const std::complex<double> j10 = -s * std::conj(phase), j11 = c * std::conj(phase);
                for (int k = 0; k < n; ++k) {
                    auto akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * j00 + akq * j10;
                    a(k, q) = akp * j01 + akq * j11;
                }
                for (int k = 0; k < n; ++k) {
                    auto apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
                    a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
    }
    std::vector<double> ev;
    for (int r = 0; r < n; ++r) ev.push_back(a(r, r).real());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

inline std::vector<double> hermitian_eigenvalues(const ExactComplexMatrix& m) {
    require(is_hermitian(m), ErrorKind::NotHermitian, "eigenvalues need a Hermitian matrix");
    return hermitian_eigenvalues(to_float(m));
}

/// Square roots of the eigenvalues of A*A, decreasing.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    auto ev = hermitian_eigenvalues(a.adjoint() * a);
    for (auto& v : ev) v = std::sqrt(std::max(v, 0.0));
    return ev;
}

inline std::vector<double> singular_values(const ExactComplexMatrix& a) {
    auto ev = hermitian_eigenvalues(a.adjoint() * a);
    for (auto& v : ev) v = std::sqrt(std::max(v, 0.0));
    return ev;
}

} // namespace hivecurve
