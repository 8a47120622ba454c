#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hivecurve {

/// Exact complex number with rational parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (im == 0 && o.im == 0) { re *= o.re; return *this; }
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.im == 0) { re /= o.re; im /= o.re; return *this; }
        Rational d = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re, -im}; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational norm2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
inline double norm2(const std::complex<double>& z) { return std::norm(z); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
    using Real = double;
    static constexpr bool exact = false;
    static double real(const std::complex<double>& z) { return z.real(); }
    static double imag(const std::complex<double>& z) { return z.imag(); }
    static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
    static std::complex<double> from_real(double r) { return {r, 0.0}; }
    static double magnitude(const std::complex<double>& z) { return std::abs(z); }
};

template <>
struct ScalarTraits<GaussianRational> {
    using Real = Rational;
    static constexpr bool exact = true;
    static Rational real(const GaussianRational& z) { return z.re; }
    static Rational imag(const GaussianRational& z) { return z.im; }
    static GaussianRational conj(const GaussianRational& z) { return hivecurve::conj(z); }
    static GaussianRational from_real(const Rational& r) { return {r, 0}; }
    static double magnitude(const GaussianRational& z) {
        return std::hypot(to_double(z.re), to_double(z.im));
    }
};

/// Dense square matrix, row-major.
template <class S>
class Matrix {
public:
    using Scalar = S;
    using Traits = ScalarTraits<S>;
    using Real = typename Traits::Real;

    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), S(0)) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int r = 0; r < n; ++r) m(r, r) = S(1);
        return m;
    }
    static Matrix diagonal(const std::vector<S>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int r = 0; r < m.n_; ++r) m(r, r) = d[r];
        return m;
    }

    int order() const { return n_; }
    S& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    const S& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

    Matrix adjoint() const {
        Matrix m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(c, r) = Traits::conj((*this)(r, c));
        return m;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix m = x;
        for (std::size_t p = 0; p < m.a_.size(); ++p) m.a_[p] += y.a_[p];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix m = x;
        for (std::size_t p = 0; p < m.a_.size(); ++p) m.a_[p] -= y.a_[p];
        return m;
    }
    friend Matrix operator*(const S& s, const Matrix& x) {
        Matrix m = x;
        for (auto& v : m.a_) v = s * v;
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        int n = x.n_;
        Matrix m(n);
        for (int r = 0; r < n; ++r)
            for (int l = 0; l < n; ++l) {
                if (is_zero(x(r, l))) continue;
                for (int c = 0; c < n; ++c) m(r, c) += x(r, l) * y(l, c);
            }
        return m;
    }
    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    double max_abs() const {
        double m = 0;
        for (const auto& v : a_) m = std::max(m, Traits::magnitude(v));
        return m;
    }

    template <class T>
    Matrix<T> convert(T (*f)(const S&)) const {
        Matrix<T> m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(r, c) = f((*this)(r, c));
        return m;
    }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        require(x.n_ == y.n_, ErrorKind::DimensionMismatch,
                "matrix orders " + std::to_string(x.n_) + " and " + std::to_string(y.n_));
    }

    int n_;
    std::vector<S> a_;
};

using ComplexMatrix = Matrix<std::complex<double>>;
using ExactComplexMatrix = Matrix<GaussianRational>;

inline GaussianRational exact_scalar(const std::complex<double>& z) {
    return {from_double(z.real()), from_double(z.imag())};
}
inline std::complex<double> float_scalar(const GaussianRational& z) {
    return {to_double(z.re), to_double(z.im)};
}
inline ExactComplexMatrix to_exact(const ComplexMatrix& m) { return m.convert<GaussianRational>(&exact_scalar); }
inline ComplexMatrix to_float(const ExactComplexMatrix& m) { return m.convert<std::complex<double>>(&float_scalar); }

template <class S>
Matrix<S> block_diagonal(const Matrix<S>& a, const Matrix<S>& b) {
    int n = a.order(), m = b.order();
    Matrix<S> out(n + m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = a(r, c);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out(n + r, n + c) = b(r, c);
    return out;
}

inline constexpr double kHermitianTol = 1e-12;

inline bool is_hermitian(const ExactComplexMatrix& m) { return m == m.adjoint(); }

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
    double scale = std::max(1.0, m.max_abs());
    for (int r = 0; r < m.order(); ++r)
        for (int c = r; c < m.order(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale) return false;
    return true;
}

/// Exact: Bareiss elimination with row swaps.
inline GaussianRational determinant(const ExactComplexMatrix& m) {
    int n = m.order();
    if (n == 0) return GaussianRational(1);
    ExactComplexMatrix a = m;
    GaussianRational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k).is_zero()) {
            int r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return GaussianRational(0);
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                a(r, c) = a(k, k) * a(r, c) - a(r, k) * a(k, c);
                a(r, c) /= prev;
            }
            a(r, k) = GaussianRational(0);
        }
        prev = a(k, k);
    }
    GaussianRational d = a(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Float: LU with partial pivoting.
inline std::complex<double> determinant(const ComplexMatrix& m) {
    int n = m.order();
    ComplexMatrix a = m;
    std::complex<double> det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
        if (a(p, k) == 0.0) return 0.0;
        if (p != k) {
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            det = -det;
        }
        det *= a(k, k);
        for (int r = k + 1; r < n; ++r) {
            auto f = a(r, k) / a(k, k);
            for (int c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; throws NotInvertible.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    using Traits = ScalarTraits<S>;
    int n = m.order();
    Matrix<S> a = m, inv = Matrix<S>::identity(n);
    double scale = std::max(m.max_abs(), 1e-300);
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int r = k + 1; r < n; ++r)
            if (Traits::magnitude(a(r, k)) > Traits::magnitude(a(p, k))) p = r;
        bool singular;
        if constexpr (Traits::exact) singular = a(p, k).is_zero();
        else singular = Traits::magnitude(a(p, k)) <= 1e-14 * scale;
        require(!singular, ErrorKind::NotInvertible, "matrix is singular");
        if (p != k)
            for (int c = 0; c < n; ++c) {
                std::swap(a(k, c), a(p, c));
                std::swap(inv(k, c), inv(p, c));
            }
        S piv = a(k, k);
        for (int c = 0; c < n; ++c) {
            a(k, c) /= piv;
            inv(k, c) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || is_zero(a(r, k))) continue;
            S f = a(r, k);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

/// Leading principal minors > 0, via exact LDL* pivots.
inline bool is_positive_definite(const ExactComplexMatrix& m) {
    require(is_hermitian(m), ErrorKind::NotHermitian, "positive-definiteness needs a Hermitian matrix");
    int n = m.order();
    ExactComplexMatrix a = m;
    for (int k = 0; k < n; ++k) {
        if (a(k, k).re <= 0) return false;
        for (int r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            GaussianRational f = a(r, k) / a(k, k);
            for (int c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return true;
}

inline bool is_positive_definite(const ComplexMatrix& m, double tol = 1e-13) {
    require(is_hermitian(m), ErrorKind::NotHermitian, "positive-definiteness needs a Hermitian matrix");
    int n = m.order();
    double scale = std::max(m.max_abs(), 1e-300);
    ComplexMatrix l(n);
    for (int c = 0; c < n; ++c) {
        double d = m(c, c).real();
        for (int k = 0; k < c; ++k) d -= std::norm(l(c, k));
        if (!(d > tol * scale)) return false;
        l(c, c) = std::sqrt(d);
        for (int r = c + 1; r < n; ++r) {
            auto s = m(r, c);
            for (int k = 0; k < c; ++k) s -= l(r, k) * std::conj(l(c, k));
            l(r, c) = s / l(c, c).real();
        }
    }
    return true;
}

} // namespace hivecurve
