#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hive.hpp"
#include "parallel.hpp"
#include "pencil.hpp"
#include "polynomial.hpp"
#include "random.hpp"

namespace hivecurve {

/// The line {base + s * direction}.
struct LineProbe {
    std::array<double, 3> base{1, 1, 1};
    std::array<double, 3> direction{};
    double theta = 0;
    int id = 0;
};

enum class Verdict { pass, fail };

inline const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

struct HyperbolicityReport {
    Verdict verdict = Verdict::pass;
    int probes_tested = 0;
    int reprobes = 0;
    std::optional<LineProbe> counterexample;
    int counterexample_roots = 0;
};

struct VinnikovOptions {
    std::array<double, 3> base{1, 1, 1};
    int equally_spaced = 360;
    int random = 128;
    std::uint64_t seed = 0;
    NumericMode mode = NumericMode::exact;
    double cluster_tol = 1e-9;
    int max_reprobes = 3;
    /// When non-empty, replaces the generated directions.
    std::vector<std::array<double, 3>> directions;
    unsigned threads = 0;
};

namespace detail {

inline std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline std::array<double, 3> normalized(std::array<double, 3> v) {
    double s = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= s;
    return v;
}

// Orthonormal basis of the plane orthogonal to b.
inline std::pair<std::array<double, 3>, std::array<double, 3>> complement_basis(const std::array<double, 3>& b) {
    int m = std::abs(b[0]) <= std::abs(b[1]) && std::abs(b[0]) <= std::abs(b[2]) ? 0
            : std::abs(b[1]) <= std::abs(b[2])                                   ? 1
                                                                                 : 2;
    std::array<double, 3> e{};
    e[m] = 1;
    auto e1 = normalized(cross(b, e));
    auto e2 = normalized(cross(b, e1));
    return {e1, e2};
}

// F(base + s * dir) as a polynomial in s. Probes call it as F(dir + s * base),
// whose leading coefficient F(base) never vanishes.
template <class T>
Polynomial<T> restrict_to_line(const TernaryForm<T>& F, const std::array<T, 3>& base,
                               const std::array<T, 3>& dir) {
    const int n = F.degree();
    std::array<std::vector<Polynomial<T>>, 3> pw;
    for (int a = 0; a < 3; ++a) {
        pw[a].push_back(Polynomial<T>::constant(T(1)));
        auto lin = Polynomial<T>::linear(base[a], dir[a]);
        for (int e = 1; e <= n; ++e) pw[a].push_back(pw[a].back() * lin);
    }
    Polynomial<T> acc;
    for (const auto& t : F.indices()) {
        const T& c = F.at(t);
        if (c == T(0)) continue;
        acc = acc + c * (pw[0][t.i] * pw[1][t.j] * pw[2][t.k]);
    }
    return acc;
}

enum class ProbeOutcome { ok, short_count, degenerate };

struct ProbeResult {
    ProbeOutcome outcome = ProbeOutcome::ok;
    int roots = 0;
};

inline ProbeResult probe_exact(const TernaryForm<Rational>& F, const std::array<double, 3>& base,
                               const std::array<double, 3>& dir) {
    const int n = F.degree();
    std::array<Rational, 3> b, d;
    for (int a = 0; a < 3; ++a) {
        b[a] = from_double(base[a]);
        d[a] = from_double(dir[a]);
    }
    auto p = restrict_to_line(F, d, b);
    if (p.degree() < n) return {ProbeOutcome::degenerate, p.is_zero() ? 0 : real_root_count(p)};
    int c = real_root_count(p);
    if (c == n) return {ProbeOutcome::ok, c};
    if (squarefree_part(p).degree() < p.degree()) return {ProbeOutcome::degenerate, c};
    return {ProbeOutcome::short_count, c};
}

inline ProbeResult probe_float(const TernaryForm<double>& F, const std::array<double, 3>& base,
                               const std::array<double, 3>& dir, double cluster_tol) {
    const int n = F.degree();
    auto p = restrict_to_line(F, dir, base);
    double scale = 0;
    for (double c : p.coeffs()) scale = std::max(scale, std::abs(c));
    if (p.degree() < n || std::abs(p.leading()) <= 1e-14 * scale) return {ProbeOutcome::degenerate, 0};
    std::vector<double> re;
    for (const auto& z : complex_roots(p))
        if (std::abs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z))) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    for (std::size_t a = 1; a < re.size(); ++a)
        if (std::abs(re[a] - re[a - 1]) <= cluster_tol * std::max(1.0, std::abs(re[a])))
            return {ProbeOutcome::degenerate, static_cast<int>(re.size())};
    int c = static_cast<int>(re.size());
    return {c == n ? ProbeOutcome::ok : ProbeOutcome::short_count, c};
}

inline TernaryForm<Rational> exact_form(const TernaryForm<Rational>& F) { return F; }
inline TernaryForm<Rational> exact_form(const TernaryForm<double>& F) { return F.map([](double v) { return from_double(v); }); }
inline TernaryForm<double> float_form(const TernaryForm<double>& F) { return F; }
inline TernaryForm<double> float_form(const TernaryForm<Rational>& F) { return F.map([](const Rational& v) { return to_double(v); }); }

} // namespace detail

/// Probe directions: equally spaced projective angles, then a seeded random batch.
inline std::vector<LineProbe> probe_lines(const VinnikovOptions& opt) {
    std::vector<LineProbe> out;
    if (!opt.directions.empty()) {
        for (std::size_t m = 0; m < opt.directions.size(); ++m)
            out.push_back({opt.base, opt.directions[m], 0.0, static_cast<int>(m)});
        return out;
    }
    auto [e1, e2] = detail::complement_basis(opt.base);
    auto dir = [&](double th) {
        return std::array<double, 3>{std::cos(th) * e1[0] + std::sin(th) * e2[0],
                                     std::cos(th) * e1[1] + std::sin(th) * e2[1],
                                     std::cos(th) * e1[2] + std::sin(th) * e2[2]};
    };
    for (int m = 0; m < opt.equally_spaced; ++m) {
        double th = M_PI * m / opt.equally_spaced;
        out.push_back({opt.base, dir(th), th, m});
    }
    Rng rng(opt.seed);
    for (int m = 0; m < opt.random; ++m) {
        double th = M_PI * rng.uniform();
        out.push_back({opt.base, dir(th), th, opt.equally_spaced + m});
    }
    return out;
}

/// Line-sampling test of real-rootedness through a positive base point.
/// A pass only means no probe found fewer than n real roots.
template <class T>
HyperbolicityReport vinnikov_check(const TernaryForm<T>& F, const VinnikovOptions& opt = {}) {
    for (const auto& v : F)
        require(v > T(0), ErrorKind::NonpositiveCoefficient, "vinnikov_check needs positive coefficients");
    for (double b : opt.base) require(b > 0, ErrorKind::InvalidArgument, "base point must be positive");
    auto probes = probe_lines(opt);
    const bool exact = opt.mode == NumericMode::exact;
    TernaryForm<Rational> Fe = exact ? detail::exact_form(F) : TernaryForm<Rational>(0);
    TernaryForm<double> Ff = exact ? TernaryForm<double>(0) : detail::float_form(F);
    auto run = [&](const LineProbe& pr) {
        return exact ? detail::probe_exact(Fe, pr.base, pr.direction)
                     : detail::probe_float(Ff, pr.base, pr.direction, opt.cluster_tol);
    };
    auto [e1, e2] = detail::complement_basis(opt.base);

    struct Slot {
        detail::ProbeResult res;
        LineProbe used;
        int reprobes = 0;
    };
    std::vector<Slot> slots(probes.size());
    parallel_for(
        probes.size(),
        [&](std::size_t m) {
            LineProbe pr = probes[m];
            auto res = run(pr);
            int tries = 0;
            while (res.outcome == detail::ProbeOutcome::degenerate && tries < opt.max_reprobes) {
                ++tries;
                pr.theta += 1e-6 * tries * 0.6180339887498949;
                for (int a = 0; a < 3; ++a)
                    pr.direction[a] = std::cos(pr.theta) * e1[a] + std::sin(pr.theta) * e2[a];
                res = run(pr);
            }
            slots[m] = {res, pr, tries};
        },
        opt.threads);

    HyperbolicityReport rep;
    rep.probes_tested = static_cast<int>(probes.size());
    for (const auto& s : slots) {
        rep.reprobes += s.reprobes;
        if (s.res.outcome != detail::ProbeOutcome::ok && rep.verdict == Verdict::pass) {
            rep.verdict = Verdict::fail;
            rep.counterexample = s.used;
            rep.counterexample_roots = s.res.roots;
        }
    }
    return rep;
}

/// x0 dF/dx + y0 dF/dy + z0 dF/dz.
template <class T>
TernaryForm<T> directional_derivative(const TernaryForm<T>& F, const std::array<T, 3>& dir) {
    const int n = F.degree();
    require(n >= 1, ErrorKind::InvalidArgument, "derivative of a degree-0 form");
    bool nonzero = false;
    for (const auto& d : dir) {
        require(d >= T(0), ErrorKind::InvalidArgument, "direction must be nonnegative");
        nonzero = nonzero || d > T(0);
    }
    require(nonzero, ErrorKind::InvalidArgument, "direction must be nonzero");
    TernaryForm<T> out(n - 1);
    for (const auto& t : out.indices()) {
        int i = t.i, j = t.j, k = t.k;
        out.at(t) = T(i + 1) * dir[0] * F.at(i + 1, j, k) + T(j + 1) * dir[1] * F.at(i, j + 1, k) +
                    T(k + 1) * dir[2] * F.at(i, j, k + 1);
    }
    return out;
}

template <class T>
struct BackwardMargin {
    RhombusInequality rhombus;
    T weight;
    T margin;
};

template <class T>
struct BackwardReport {
    std::vector<BackwardMargin<T>> margins;
    bool pass = true;
};

/// 2(m-1)/m for the coordinate m of the anchor that drops by two.
inline Rational backward_weight(const RhombusInequality& r) {
    const auto& a = r.anchor();
    int m = r.family == RhombusFamily::k ? a.k : r.family == RhombusFamily::j ? a.j : a.i;
    return Rational(2 * (m - 1)) / m;
}

template <class T>
BackwardReport<T> backward_inequalities(const TernaryForm<T>& F) {
    for (const auto& v : F)
        require(v > T(0), ErrorKind::NonpositiveCoefficient, "backward inequalities need positive coefficients");
    BackwardReport<T> rep;
    for (const auto& r : rhombus_inequalities(F.degree())) {
        T w;
        if constexpr (std::is_same_v<T, Rational>) w = backward_weight(r);
        else w = to_double(backward_weight(r));
        T m = w * F.at(r.plus[0]) * F.at(r.plus[1]) - F.at(r.minus[0]) * F.at(r.minus[1]);
        if (!(m > T(0))) rep.pass = false;
        rep.margins.push_back({r, w, m});
    }
    return rep;
}

/// -log(i! j! k! 2^(ij+jk+ki)).
inline TriangleTable<double> v1_vector(int n) {
    auto log_fact = [](int m) {
        double s = 0;
        for (int a = 2; a <= m; ++a) s += std::log(static_cast<double>(a));
        return s;
    };
    return TriangleTable<double>::generate(n, [&](const TriangleIndex& t) {
        return -(log_fact(t.i) + log_fact(t.j) + log_fact(t.k) + (t.i * t.j + t.j * t.k + t.k * t.i) * std::log(2.0));
    });
}

inline constexpr double kShiftedHiveTol = 1e-12;

/// classify_hive applied to log F - V1 (float tolerance on slacks).
template <class T>
HiveReport shifted_hive_check(const TernaryForm<T>& F, double tol = kShiftedHiveTol) {
    for (const auto& v : F)
        require(v > T(0), ErrorKind::NonpositiveCoefficient, "shifted hive check needs positive coefficients");
    auto v1 = v1_vector(F.degree());
    TriangleTable<double> h(F.degree());
    for (std::size_t p = 0; p < F.size(); ++p) {
        if constexpr (std::is_same_v<T, Rational>) h[p] = log_abs(F[p]) - v1[p];
        else h[p] = std::log(F[p]) - v1[p];
    }
    return classify_hive(h, tol);
}

/// Exact variant for rational F: the shifted slack is log of w * F+F+ / F-F-,
/// so its sign is the sign of the backward margin.
inline HiveReport shifted_hive_check_exact(const TernaryForm<Rational>& F) {
    HiveReport rep;
    for (const auto& m : backward_inequalities(F).margins) {
        int s = m.margin.sign();
        if (s < 0) rep.violated.push_back(m.rhombus);
        else if (s == 0) rep.tight.push_back(m.rhombus);
    }
    rep.verdict = !rep.violated.empty() ? HiveClass::not_hive
                  : !rep.tight.empty()  ? HiveClass::hive
                                        : HiveClass::strict_hive;
    return rep;
}

} // namespace hivecurve
