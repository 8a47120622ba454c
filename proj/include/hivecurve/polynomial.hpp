#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hivecurve {

/// Univariate polynomial, coefficients in ascending degree.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    /// a + b u
    static Polynomial linear(const T& a, const T& b) { return Polynomial(std::vector<T>{a, b}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : T(0); }
    const T& leading() const { return c_.back(); }

    template <class X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial derivative() const {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t x = 0; x < a.c_.size(); ++x) {
            if (a.c_[x] == T(0)) continue;
            for (std::size_t y = 0; y < b.c_.size(); ++y) r[x + y] += a.c_[x] * b.c_[y];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> r = a.c_;
        for (auto& v : r) v = s * v;
        return Polynomial(std::move(r));
    }
    bool operator==(const Polynomial&) const = default;

    /// Euclidean division over a field.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        require(!d.is_zero(), ErrorKind::ZeroPolynomial, "division by zero polynomial");
        std::vector<T> r = c_;
        int dd = d.degree();
        std::vector<T> q(std::max(0, degree() - dd + 1), T(0));
        for (int k = degree(); k >= dd; --k) {
            if (r[k] == T(0)) continue;
            T f = r[k] / d.leading();
            q[k - dd] = f;
            for (int m = 0; m <= dd; ++m) r[k - dd + m] -= f * d.c_[m];
        }
        r.resize(std::max(0, dd));
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_exact(const Polynomial<double>& p) {
    std::vector<Rational> c;
    for (double v : p.coeffs()) c.push_back(from_double(v));
    return RationalPolynomial(std::move(c));
}

/// Scales by 1/|leading| so Sturm chains stay small; signs are unchanged.
inline RationalPolynomial monic_abs(const RationalPolynomial& p) {
    if (p.is_zero()) return p;
    Rational s = abs(p.leading());
    return Rational(1 / s) * p;
}

inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
    require(!p.is_zero(), ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
    std::vector<RationalPolynomial> seq{monic_abs(p)};
    if (p.degree() == 0) return seq;
    seq.push_back(monic_abs(p.derivative()));
    for (;;) {
        auto rem = seq[seq.size() - 2].divmod(seq.back()).second;
        if (rem.is_zero()) break;
        seq.push_back(monic_abs(Rational(-1) * rem));
    }
    return seq;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline int sturm_variations(const std::vector<RationalPolynomial>& seq, const Rational& x) {
    std::vector<int> s;
    for (const auto& q : seq) s.push_back(q(x).sign());
    return sign_variations(s);
}

/// dir = +1 for +infinity, -1 for -infinity.
inline int sturm_variations_at_infinity(const std::vector<RationalPolynomial>& seq, int dir) {
    std::vector<int> s;
    for (const auto& q : seq) {
        int sg = q.leading().sign();
        if (dir < 0 && q.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return sign_variations(s);
}

/// Half-open interval (lo, hi] for root counting.
struct RationalInterval {
    Rational lo, hi;
};

/// Distinct real roots (in (lo,hi] when an interval is given), exact Sturm count.
inline int real_root_count(const RationalPolynomial& p, const std::optional<RationalInterval>& iv = std::nullopt) {
    auto seq = sturm_sequence(p);
    if (!iv) return sturm_variations_at_infinity(seq, -1) - sturm_variations_at_infinity(seq, +1);
    return sturm_variations(seq, iv->lo) - sturm_variations(seq, iv->hi);
}

/// Cauchy bound: every root has |r| < bound.
inline Rational cauchy_bound(const RationalPolynomial& p) {
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / abs(p.leading())));
    return m + 1;
}

inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_abs(a);
}

inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.degree() <= 1) return p;
    auto g = gcd(p, p.derivative());
    return p.divmod(g).first;
}

/// Isolating intervals (lo, hi], each holding exactly one distinct real root, ascending.
inline std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& p) {
    auto seq = sturm_sequence(p);
    std::vector<RationalInterval> out;
    if (p.degree() < 1) return out;
    Rational b = cauchy_bound(p);
    std::vector<std::pair<RationalInterval, int>> stack;
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sturm_variations(seq, lo) - sturm_variations(seq, hi);
    };
    stack.push_back({{-b, b}, count(-b, b)});
    while (!stack.empty()) {
        auto [iv, c] = stack.back();
        stack.pop_back();
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        int left = count(iv.lo, mid);
        stack.push_back({{mid, iv.hi}, c - left});
        stack.push_back({{iv.lo, mid}, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return out;
}

/// Bisection on a squarefree polynomial to relative width ~2^-64.
inline double refine_root(const RationalPolynomial& sqf, RationalInterval iv) {
    if (sqf(iv.hi) == 0) return to_double(iv.hi);
    int shi = sqf(iv.hi).sign();
    for (int it = 0; it < 400; ++it) {
        Rational width = iv.hi - iv.lo;
        Rational scale = std::max(abs(iv.lo), abs(iv.hi));
        if (width * Rational(BigInt(1) << 64) <= scale || width < Rational(1, BigInt(1) << 1000)) break;
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sqf(mid).sign();
        if (sm == 0) return to_double(mid);
        if (sm == shi) iv.hi = mid;
        else iv.lo = mid;
    }
    return to_double((iv.lo + iv.hi) / 2);
}

/// Distinct real roots, ascending, refined to double precision.
inline std::vector<double> real_roots(const RationalPolynomial& p) {
    auto sqf = squarefree_part(p);
    std::vector<double> out;
    for (const auto& iv : isolate_real_roots(sqf)) out.push_back(refine_root(sqf, iv));
    return out;
}

namespace detail {

// Parlett-Reinsch balancing with power-of-two scalings.
inline void balance(Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    bool done = false;
    for (int sweep = 0; sweep < 64 && !done; ++sweep) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double c = 0, r = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c == 0 || r == 0) continue;
            double f = 1, s = c + r;
            while (c < r / 2) { c *= 2; r /= 2; f *= 2; }
            while (c >= r * 2) { c /= 2; r *= 2; f /= 2; }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

} // namespace detail

/// All complex roots (with multiplicity) via a balanced companion matrix
/// plus Newton polishing.
inline std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    require(!c.empty(), ErrorKind::ZeroPolynomial, "roots of zero polynomial");
    std::vector<std::complex<double>> roots;
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
    for (std::size_t z = 0; z < zeros; ++z) roots.emplace_back(0.0, 0.0);
    std::vector<std::complex<double>> q(c.begin() + static_cast<long>(zeros), c.end());
    const int d = static_cast<int>(q.size()) - 1;
    if (d <= 0) return roots;
    if (d == 1) {
        roots.push_back(-q[0] / q[1]);
        return roots;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 1; r < d; ++r) comp(r, r - 1) = 1.0;
    for (int r = 0; r < d; ++r) comp(r, d - 1) = -q[r] / q[d];
    detail::balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    require(es.info() == Eigen::Success, ErrorKind::NoConvergence, "companion eigenvalues");
    for (int r = 0; r < d; ++r) {
        std::complex<double> z = es.eigenvalues()[r];
        for (int it = 0; it < 3; ++it) {
            std::complex<double> f = 0, df = 0;
            for (int k = d; k >= 0; --k) {
                df = df * z + f;
                f = f * z + q[k];
            }
            if (df == 0.0) break;
            std::complex<double> step = f / df;
            if (!(std::abs(step) < 1e-3 * (std::abs(z) + 1e-300))) break;
            z -= step;
        }
        roots.push_back(z);
    }
    return roots;
}

inline std::vector<std::complex<double>> complex_roots(const Polynomial<double>& p) {
    std::vector<std::complex<double>> c(p.coeffs().begin(), p.coeffs().end());
    return complex_roots(c);
}

/// Float mode: companion eigenvalues whose imaginary part is within
/// imag_tol*max(1,|z|), merged when closer than cluster_tol (relative).
inline std::vector<double> real_roots_float(const Polynomial<double>& p, double imag_tol = 1e-7,
                                            double cluster_tol = 1e-9) {
    std::vector<double> re;
    for (const auto& z : complex_roots(p))
        if (std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z))) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    std::vector<double> out;
    for (double r : re)
        if (out.empty() || std::abs(r - out.back()) > cluster_tol * std::max(1.0, std::abs(r))) out.push_back(r);
    return out;
}

enum class NumericMode { exact, floating };

inline int real_root_count(const Polynomial<double>& p, NumericMode mode,
                           const std::optional<std::pair<double, double>>& iv = std::nullopt) {
    require(!p.is_zero(), ErrorKind::ZeroPolynomial, "root count of zero polynomial");
    if (mode == NumericMode::exact) {
        std::optional<RationalInterval> riv;
        if (iv) riv = RationalInterval{from_double(iv->first), from_double(iv->second)};
        return real_root_count(to_exact(p), riv);
    }
    int c = 0;
    for (double r : real_roots_float(p))
        if (!iv || (r > iv->first && r <= iv->second)) ++c;
    return c;
}

} // namespace hivecurve
