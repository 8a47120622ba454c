#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hermitian.hpp"
#include "hive.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace hivecurve {

/// Coefficient table F_{ijk} of sum F_{ijk} x^i y^j z^k.
template <class T>
using TernaryForm = TriangleTable<T>;

template <class S>
struct PencilTriple {
    Matrix<S> X, Y, Z;
    int order() const { return X.order(); }
};

template <class S>
struct GLTriple {
    Matrix<S> A, B, C;
    int order() const { return A.order(); }
};

inline bool positive_definite(const ExactComplexMatrix& m) { return is_positive_definite(m); }
inline bool positive_definite(const ComplexMatrix& m) { return is_positive_definite(m); }

template <class S>
PencilTriple<S> make_pencil(Matrix<S> X, Matrix<S> Y, Matrix<S> Z) {
    require(X.order() == Y.order() && Y.order() == Z.order(), ErrorKind::DimensionMismatch,
            "pencil matrices of different orders");
    const char* names[3] = {"X", "Y", "Z"};
    const Matrix<S>* ms[3] = {&X, &Y, &Z};
    for (int m = 0; m < 3; ++m)
        require(positive_definite(*ms[m]), ErrorKind::NotPositiveDefinite,
                std::string(names[m]) + " is not positive definite");
    return {std::move(X), std::move(Y), std::move(Z)};
}

inline bool product_is_identity(const ExactComplexMatrix& p, double) {
    return p == ExactComplexMatrix::identity(p.order());
}
inline bool product_is_identity(const ComplexMatrix& p, double tol_scale) {
    return (p - ComplexMatrix::identity(p.order())).max_abs() <= tol_scale;
}

inline constexpr double kProductTol = 1e-10;

template <class S>
GLTriple<S> make_gl_triple(Matrix<S> A, Matrix<S> B, Matrix<S> C, double tol = kProductTol) {
    require(A.order() == B.order() && B.order() == C.order(), ErrorKind::DimensionMismatch,
            "GL triple matrices of different orders");
    (void)inverse(A);
    (void)inverse(B);
    (void)inverse(C);
    double scale = std::max(1.0, A.max_abs() * B.max_abs() * C.max_abs() * A.order() * A.order());
    require(product_is_identity(A * B * C, tol * scale), ErrorKind::ProductNotIdentity,
            "ABC differs from the identity");
    return {std::move(A), std::move(B), std::move(C)};
}

namespace detail {

inline Rational binomial_q(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
    return r;
}

// Coefficients of the binomial polynomial C(a, i) in powers of a.
inline std::vector<std::vector<Rational>> binomial_basis(int n) {
    std::vector<std::vector<Rational>> bc(n + 1);
    std::vector<Rational> cur{1};
    for (int i = 0; i <= n; ++i) {
        bc[i] = cur;
        // C(a, i+1) = C(a, i) * (a - i) / (i + 1)
        std::vector<Rational> next(cur.size() + 1);
        for (std::size_t m = 0; m < cur.size(); ++m) {
            next[m + 1] += cur[m] / (i + 1);
            next[m] -= cur[m] * i / (i + 1);
        }
        cur = std::move(next);
    }
    return bc;
}

inline Rational real_det(const ExactComplexMatrix& m) {
    auto d = determinant(m);
    require(d.im == 0, ErrorKind::Internal, "Hermitian pencil determinant is not real");
    return d.re;
}
inline double real_det(const ComplexMatrix& m) { return determinant(m).real(); }

template <class R>
R from_rational(const Rational& q) {
    if constexpr (std::is_same_v<R, Rational>) return q;
    else return to_double(q);
}

} // namespace detail

/// det(xX + yY + zZ) by Newton interpolation on the grid {(a,b,1) : a+b <= n}.
template <class S>
TernaryForm<typename ScalarTraits<S>::Real> pencil_det(const PencilTriple<S>& p) {
    using R = typename ScalarTraits<S>::Real;
    const int n = p.order();
    std::vector<std::vector<R>> P(n + 1);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            Matrix<S> m = S(R(a)) * p.X + S(R(b)) * p.Y + p.Z;
            P[a].push_back(detail::real_det(m));
        }
    std::vector<std::vector<R>> D(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            R acc(0);
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) {
                    Rational w = detail::binomial_q(i, a) * detail::binomial_q(j, b);
                    if ((i - a + j - b) % 2) w = -w;
                    acc += detail::from_rational<R>(w) * P[a][b];
                }
            D[i].push_back(acc);
        }
    const auto bc = detail::binomial_basis(n);
    TernaryForm<R> F(n);
    R scale(0);
    for (int m = 0; m <= n; ++m)
        for (int l = 0; m + l <= n; ++l) {
            R acc(0);
            for (int i = m; i <= n; ++i)
                for (int j = l; i + j <= n; ++j)
                    acc += D[i][j] * detail::from_rational<R>(bc[i][m] * bc[j][l]);
            F.at(m, l, n - m - l) = acc;
            if (abs_value(acc) > scale) scale = abs_value(acc);
        }
    for (const auto& v : F) {
        if constexpr (ScalarTraits<S>::exact)
            require(v > 0, ErrorKind::Internal, "pencil determinant has a nonpositive coefficient");
        else
            require(v > -1e-9 * scale, ErrorKind::Internal, "pencil determinant has a negative coefficient");
    }
    return F;
}

/// Returns (A*A, Id, (B^-1)*(B^-1)).
template <class S>
PencilTriple<S> beta_map(const GLTriple<S>& g) {
    Matrix<S> R = inverse(g.B);
    return make_pencil(g.A.adjoint() * g.A, Matrix<S>::identity(g.order()), R.adjoint() * R);
}

/// Gauge action (P,Q,R) -> (PG,QG,RG) on the pencil side.
template <class S>
PencilTriple<S> gauge(const PencilTriple<S>& p, const Matrix<S>& G) {
    auto Gs = G.adjoint();
    return make_pencil(Gs * p.X * G, Gs * p.Y * G, Gs * p.Z * G);
}

enum class Edge { xy, yz, zx };

inline const char* to_string(Edge e) { return e == Edge::xy ? "xy" : e == Edge::yz ? "yz" : "zx"; }

/// xy: F(-1,u,0); yz: F(0,-1,u); zx: F(u,0,-1).
template <class T>
Polynomial<T> restrict_edge(const TernaryForm<T>& F, Edge which) {
    const int n = F.degree();
    std::vector<T> c(n + 1);
    for (int d = 0; d <= n; ++d) {
        T v{};
        switch (which) {
        case Edge::xy: v = F.at(n - d, d, 0); break;
        case Edge::yz: v = F.at(0, n - d, d); break;
        case Edge::zx: v = F.at(d, 0, n - d); break;
        }
        c[d] = (n - d) % 2 ? T(-v) : v;
    }
    return Polynomial<T>(std::move(c));
}

/// Real roots counted with multiplicity, ascending.
inline std::vector<double> real_roots_with_multiplicity(const RationalPolynomial& p) {
    require(!p.is_zero(), ErrorKind::ZeroPolynomial, "roots of zero polynomial");
    std::vector<double> out;
    RationalPolynomial g = p;
    while (g.degree() >= 1) {
        auto r = real_roots(g);
        out.insert(out.end(), r.begin(), r.end());
        g = gcd(g, g.derivative());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline RationalPolynomial exact_poly(const Polynomial<Rational>& p) { return p; }
inline RationalPolynomial exact_poly(const Polynomial<double>& p) { return to_exact(p); }
} // namespace detail

/// Square roots of the edge roots, each side decreasing (the curve boundary).
template <class T>
BoundarySpec<double> curve_boundary(const TernaryForm<T>& F) {
    const int n = F.degree();
    BoundarySpec<double> b;
    const Edge edges[3] = {Edge::xy, Edge::yz, Edge::zx};
    for (int s = 0; s < 3; ++s) {
        auto p = detail::exact_poly(restrict_edge(F, edges[s]));
        auto roots = p.is_zero() ? std::vector<double>{} : real_roots_with_multiplicity(p);
        bool ok = static_cast<int>(roots.size()) == n && p.degree() == n;
        for (double r : roots) ok = ok && r > 0;
        require(ok, ErrorKind::NonRealEdgeRoots,
                std::string("edge ") + to_string(edges[s]) + " has " + std::to_string(roots.size()) +
                    " real roots, expected " + std::to_string(n) + " positive");
        auto& side = b.side(s);
        for (double r : roots) side.push_back(std::sqrt(r));
        std::sort(side.begin(), side.end(), std::greater<>());
    }
    return b;
}

} // namespace hivecurve
