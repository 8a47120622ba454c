#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hive.hpp"
#include "matrix.hpp"

namespace hivecurve {

/// Seeded generator; distributions are derived from raw 64-bit draws so
/// streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    double normal() {
        double u1 = 1.0 - uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Rational small_rational(long max_num, long max_den) {
        return Rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Random hive: nonnegative combination of the concave generators
/// min(coord, c), the quadratic ij+jk+ki, and a linear term.
inline Hive random_hive(int n, Rng& rng, bool strict = false) {
    Hive h(n);
    for (int axis = 0; axis < 3; ++axis)
        for (int c = 1; c < n; ++c) {
            Rational w(rng.uniform_int(0, 3), rng.uniform_int(1, 3));
            if (rng.uniform_int(0, 2) == 0) w = 0;
            for (const auto& t : h.indices()) h.at(t) += w * std::min(t[axis], c);
        }
    Rational mu(rng.uniform_int(strict ? 1 : 0, 4), rng.uniform_int(1, 4));
    Rational a = rng.small_rational(5, 3), b = rng.small_rational(5, 3), c = rng.small_rational(5, 3);
    for (const auto& t : h.indices())
        h.at(t) += mu * (t.i * t.j + t.j * t.k + t.k * t.i) + a * t.i + b * t.j + c * t.k;
    return h;
}

/// Arbitrary rational lifting with small entries (often not a hive).
inline Hive random_lifting(int n, Rng& rng, long max_num = 6, long max_den = 3) {
    return Hive::generate(n, [&](const TriangleIndex&) { return rng.small_rational(max_num, max_den); });
}

inline ComplexMatrix random_complex_matrix(int n, Rng& rng, double scale = 1.0) {
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = {scale * rng.normal(), scale * rng.normal()};
    return m;
}

/// G*G + shift*Id with Gaussian G.
inline ComplexMatrix random_pd_matrix(int n, Rng& rng, double shift = 0.1) {
    auto g = random_complex_matrix(n, rng);
    auto m = g.adjoint() * g;
    for (int r = 0; r < n; ++r) m(r, r) += shift;
    for (int r = 0; r < n; ++r) {
        m(r, r) = m(r, r).real();
        for (int c = 0; c < r; ++c) m(r, c) = std::conj(m(c, r));
    }
    return m;
}

/// Small Gaussian-integer matrix with entries in [-bound, bound].
inline ExactComplexMatrix random_gaussian_integer_matrix(int n, Rng& rng, long bound = 3) {
    ExactComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = GaussianRational(Rational(rng.uniform_int(-bound, bound)), Rational(rng.uniform_int(-bound, bound)));
    return m;
}

inline ExactComplexMatrix random_exact_pd_matrix(int n, Rng& rng, long bound = 3) {
    auto g = random_gaussian_integer_matrix(n, rng, bound);
    auto m = g.adjoint() * g;
    for (int r = 0; r < n; ++r) m(r, r) += GaussianRational(1);
    return m;
}

} // namespace hivecurve
