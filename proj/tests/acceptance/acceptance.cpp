// Acceptance gate: one PASS/FAIL line per criterion, with runtime against budget.
//
// Exit status is 0 when every criterion passes, or fails only in the way
// recorded as a known discrepancy (criteria 6 and 7, see README). Any other
// failure, or a documented criterion failing for a different reason, exits 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include <hivecurve/hivecurve.hpp>

using namespace hivecurve;

namespace {

enum class Status { pass, fail, documented_fail };

struct Outcome {
    Status status = Status::pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome verdict(bool ok, std::string detail) { return {ok ? Status::pass : Status::fail, std::move(detail)}; }

Hive negated_quadratic(int n) {
    auto h = quadratic_hive(n);
    for (auto& v : h) v = -v;
    return h;
}

Hive weak_hive(int n, Rng& rng) {
    Hive h(n);
    for (int axis = 0; axis < 3; ++axis)
        for (int c = 1; c < n; ++c) {
            Rational w(rng.uniform_int(0, 2));
            for (const auto& t : h.indices()) h.at(t) += w * std::min(t[axis], c);
        }
    return add_linear(h, rng.small_rational(3, 2), rng.small_rational(3, 2), Rational(0));
}

// ---------------------------------------------------------------- 1

Outcome hives_vs_subdivisions() {
    std::vector<Hive> corpus;
    Rng rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + (trial / 4) % 4;
        switch (trial % 4) {
        case 0: corpus.push_back(random_lifting(n, rng)); break;
        case 1: corpus.push_back(random_hive(n, rng, true)); break;
        case 2: corpus.push_back(weak_hive(n, rng)); break;
        default: {
            // a hive with one value nudged, often just across a rhombus wall
            auto h = random_hive(n, rng, rng.uniform_int(0, 1) == 1);
            auto idx = h.indices()[static_cast<std::size_t>(rng.uniform_int(0, long(h.size()) - 1))];
            h.at(idx) += rng.small_rational(2, 2);
            corpus.push_back(h);
        }
        }
    }
    // adversarial: constant, long edges, an unmarked interior point, shifted quadratics
    corpus.push_back(Hive(3));
    corpus.push_back(Hive::generate(2, [](const TriangleIndex& t) { return Rational(t == TriangleIndex{1, 1, 0} ? -1 : 0); }));
    corpus.push_back(Hive::generate(3, [](const TriangleIndex& t) { return Rational(-std::abs(t.i + 2 * t.j - 4)); }));
    corpus.push_back(Hive::generate(3, [](const TriangleIndex& t) { return Rational(t == TriangleIndex{1, 1, 1} ? -1 : 0); }));
    corpus.push_back(Hive::generate(4, [](const TriangleIndex& t) { return Rational(std::min({t.i, t.j, t.k})); }));
    for (int n = 2; n <= 4; ++n) {
        corpus.push_back(add_linear(quadratic_hive(n), Rational(1), Rational(0), Rational(-2)));
        corpus.push_back(negated_quadratic(n));
    }
    int mismatches = 0, counts[3] = {0, 0, 0};
    for (const auto& L : corpus) {
        auto hc = classify_hive(L).verdict;
        auto sc = classify_subdivision(regular_subdivision(L));
        mismatches += (hc == HiveClass::strict_hive) != (sc == SubdivisionClass::standard);
        mismatches += (hc != HiveClass::not_hive) != (sc != SubdivisionClass::other);
        ++counts[static_cast<int>(hc)];
    }
    std::ostringstream d;
    d << corpus.size() << " liftings (" << counts[0] << " strict, " << counts[1] << " weak, " << counts[2]
      << " non-hive), " << mismatches << " disagreements";
    return verdict(mismatches == 0, d.str());
}

// ---------------------------------------------------------------- 2

Outcome strict_families_hyperbolic() {
    VinnikovOptions opt;
    opt.equally_spaced = 720;
    opt.random = 128;
    opt.cluster_tol = 1e-9;
    opt.mode = NumericMode::exact;
    int failures = 0, rows = 0;
    for (int n : {2, 3, 4}) {
        auto rep = main_theorem_sweep(LiftedFamily::unit(quadratic_hive(n)), {1e3, 1e4, 1e5, 1e6}, opt);
        for (const auto& row : rep.rows) {
            ++rows;
            failures += row.report.verdict != Verdict::pass || row.report.probes_tested != 848;
        }
    }
    return verdict(failures == 0, std::to_string(rows) + " (n, t) rows at 848 probes, " + std::to_string(failures) +
                                      " failing");
}

// ---------------------------------------------------------------- 3

Outcome convex_families_fail() {
    VinnikovOptions opt;
    opt.equally_spaced = 720;
    opt.random = 128;
    bool ok = true;
    std::ostringstream d;
    for (int n : {2, 3}) {
        auto h = negated_quadratic(n);
        auto rep = main_theorem_sweep(LiftedFamily::unit(h), {1e2, 1e3, 1e4, 1e5, 1e6}, opt);
        int passing = 0;
        for (const auto& row : rep.rows) passing += row.report.verdict == Verdict::pass;
        auto S = regular_subdivision(h);
        auto vp = find_violation_path(S);
        SignedLifting SL = SignedLifting::all_plus(h);
        int glued = vp ? glued_sign_changes(*vp, SL, S) : -1;
        int direct = vp ? sign_changes_along_path(vp->path, SL, S) : -1;
        ok = ok && passing == 0 && vp && glued <= n - 1 && vp->edges() <= n - 1;
        d << (n == 2 ? "" : "; ") << "n=" << n << ": " << passing << " passing t, path " << (vp ? std::to_string(vp->edges()) : "none")
          << " edges, " << direct << "/" << glued << " sign changes (chart/glued)";
    }
    return verdict(ok, d.str());
}

// ---------------------------------------------------------------- 4

Outcome patchwork_topology() {
    Rng rng(404);
    int bad = 0, cases = 0;
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            auto h = trial == 0 ? quadratic_hive(n) : random_hive(n, rng, true);
            auto r = glue_and_classify(SignedLifting::all_plus(h));
            ++cases;
            bad += r.ovals != n / 2 || (r.pseudolines == 1) != (n % 2 == 1) || r.pseudolines > 1 ||
                   r.positive_depth != n / 2;
        }
    return verdict(bad == 0, std::to_string(cases) + " strict hives n=1..6, " + std::to_string(bad) + " wrong counts");
}

// ---------------------------------------------------------------- 5

double condition_number(const ComplexMatrix& m) {
    auto s = singular_values(m);
    return s.front() / s.back();
}

Outcome singular_value_roundtrip() {
    Rng rng(505);
    double worst = 0;
    int done = 0, rejected = 0;
    while (done < 100) {
        int n = 1 + done % 5;
        auto A = random_complex_matrix(n, rng) + 2.0 * ComplexMatrix::identity(n);
        auto B = random_complex_matrix(n, rng) + 2.0 * ComplexMatrix::identity(n);
        auto C = inverse(A * B);
        if (condition_number(A) > 1e3 || condition_number(B) > 1e3 || condition_number(C) > 1e3) {
            ++rejected;
            continue;
        }
        auto pf = beta_map(make_gl_triple(A, B, C));
        auto b = curve_boundary(pencil_det(make_pencil(to_exact(pf.X), to_exact(pf.Y), to_exact(pf.Z))));
        BoundarySpec<double> sv{singular_values(A), singular_values(B), singular_values(C)};
        for (int s = 0; s < 3; ++s)
            for (int r = 0; r < n; ++r) worst = std::max(worst, std::abs(b.side(s)[r] - sv.side(s)[r]));
        ++done;
    }
    return verdict(worst < 1e-8, "100 triples (" + std::to_string(rejected) + " resampled), max error " +
                                     fmt("%.2e", worst));
}

// ---------------------------------------------------------------- 6

Outcome positivity_backward_shifted() {
    Rng rng(606);
    int bad_coeff = 0, bad_backward = 0, bad_shifted = 0, not_strict = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 6;
        auto F = pencil_det(make_pencil(random_exact_pd_matrix(n, rng), random_exact_pd_matrix(n, rng),
                                        random_exact_pd_matrix(n, rng)));
        for (const auto& c : F) bad_coeff += c.sign() <= 0;
        auto bw = backward_inequalities(F);
        bool strictly = bw.pass;
        for (const auto& m : bw.margins) strictly = strictly && m.margin.sign() > 0;
        bad_backward += !strictly;
        bad_shifted += !shifted_hive_check(F).is_hive();
        not_strict += shifted_hive_check_exact(F).verdict != HiveClass::strict_hive;
    }
    TernaryForm<Rational> sos(2, Rational(1));  // x^2+y^2+z^2+xy+yz+zx
    bool sos_backward_fails = !backward_inequalities(sos).pass;
    auto sos_shift = shifted_hive_check(sos);
    bool sos_shift_fails = sos_shift.verdict == HiveClass::not_hive;

    std::ostringstream d;
    d << "200 pencils: " << bad_coeff << " nonpositive coeffs, " << bad_backward << " non-strict backward, "
      << bad_shifted << " shifted non-hives; counterexample backward " << (sos_backward_fails ? "fails" : "passes")
      << ", shifted verdict " << to_string(sos_shift.verdict) << " (" << sos_shift.tight.size() << " of "
      << rhombus_inequalities(2).size() << " rhombi tight)";
    bool pencils_ok = bad_coeff == 0 && bad_backward == 0 && bad_shifted == 0;
    if (pencils_ok && sos_backward_fails && sos_shift_fails) return {Status::pass, d.str()};
    // Known conflict: the counterexample's shifted candidate has slack exactly 0
    // on every rhombus, which the 1e-12 contract classifies as hive.
    bool documented = pencils_ok && sos_backward_fails && sos_shift.verdict == HiveClass::hive &&
                      sos_shift.tight.size() == rhombus_inequalities(2).size() && not_strict == 0;
    if (documented) d << "; strict-hive variant separates them (pencils strict, counterexample tight)";
    return {documented ? Status::documented_fail : Status::fail, d.str()};
}

// ---------------------------------------------------------------- 7

LiftedFamily linear_family(const std::array<Rational, 3>& h, const std::array<Rational, 3>& c) {
    return {TriangleTable<Rational>(1, std::vector<Rational>{c[0], c[1], c[2]}),
            TriangleTable<Rational>(1, std::vector<Rational>{h[0], h[1], h[2]})};
}

Outcome real_bound() {
    Rng rng(707);
    std::vector<std::pair<FormFamily, bool>> fixtures;  // family, slopes known
    // det(x diag(t^2,1) + y Id + z Id)
    fixtures.emplace_back(form_family(std::vector<LiftedFamily>{linear_family({2, 0, 0}, {1, 1, 1}),
                                                                linear_family({0, 0, 0}, {1, 1, 1})}),
                          true);
    // random diagonal pencils: each diagonal slot is a linear family
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<LiftedFamily> factors;
        for (int r = 0; r < 2 + trial % 3; ++r)
            factors.push_back(linear_family({rng.small_rational(4, 2), rng.small_rational(4, 2), rng.small_rational(4, 2)},
                                            {Rational(rng.uniform_int(1, 5)), Rational(rng.uniform_int(1, 5)),
                                             Rational(rng.uniform_int(1, 5))}));
        fixtures.emplace_back(form_family(factors), true);
    }
    // dense pencils with graded scalings
    for (int trial = 0; trial < 4; ++trial) {
        RMatrixFamily fam;
        fam.order = 2 + trial % 2;
        for (int a = 0; a < 3; ++a) {
            std::vector<Rational> d;
            for (int r = 0; r < fam.order; ++r) d.push_back(rng.small_rational(2, 2) / 2);
            fam.matrices.push_back(RMatrixFamily::scaled(random_pd_matrix(fam.order, rng), d));
        }
        fixtures.emplace_back(form_family(fam), false);
    }
    double stated = -INFINITY, sharp = -INFINITY, slope_margin = -INFINITY;
    for (const auto& [fam, slopes] : fixtures) {
        auto rep = boundary_asymptotics(fam, default_tgrid());
        for (const auto& row : rep.rows) {
            stated = std::max(stated, row.stated_excess);
            sharp = std::max(sharp, row.sharp_excess);
        }
        if (slopes) slope_margin = std::max(slope_margin, rep.slope_error - rep.slope_tolerance);
    }
    std::ostringstream d;
    d << fixtures.size() << " pencil families x 5 t; stated bound excess " << fmt("%.3e", stated)
      << ", sharp bound excess " << fmt("%.3e", sharp) << ", slope error minus tolerance " << fmt("%.3e", slope_margin);
    const double slack = 1e-12;
    bool slopes_ok = slope_margin <= 0;
    if (stated <= slack && slopes_ok) return {Status::pass, d.str()};
    // Known conflict: (1/2) log binom(n, n) = 0 at the last slot, where the
    // residual is strictly positive; the sharp two-sided bound is reported.
    bool documented = sharp <= slack && slopes_ok;
    return {documented ? Status::documented_fail : Status::fail, d.str()};
}

// ---------------------------------------------------------------- 8

Outcome horn_lp() {
    Rng rng(808);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto h = random_hive(1 + trial % 5, rng, trial % 2 == 0);
        auto b = boundary(h);
        auto res = horn_feasible(b);
        bad += !res.feasible || !res.witness || boundary(*res.witness) != b || !classify_hive(*res.witness).is_hive();
    }
    auto q = [](std::initializer_list<long> xs) {
        std::vector<Rational> v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    bool trace_rejected = !horn_feasible({q({1, 0}), q({0, -1}), q({1, 0})}).feasible;
    bool hand_rejected = !horn_feasible({q({0, 0}), q({0, 0}), q({1, -1})}).feasible;
    std::ostringstream d;
    d << "200 hive boundaries, " << bad << " roundtrip failures; trace-violating "
      << (trace_rejected ? "rejected" : "accepted") << ", hand-proved n=2 " << (hand_rejected ? "rejected" : "accepted");
    return verdict(bad == 0 && trace_rejected && hand_rejected, d.str());
}

// ---------------------------------------------------------------- 9

Outcome honeycomb_duality() {
    Rng rng(909);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto h = random_hive(1 + trial % 4, rng, trial % 2 == 0);
        auto T = tropical_curve(h);
        bad += T.ray_count() != 3 * h.degree() || !is_balanced(T) || honeycomb_boundary(T) != boundary(h);
    }
    return verdict(bad == 0, "100 hives, " + std::to_string(bad) + " failures");
}

// ---------------------------------------------------------------- 10

Hive brute_convolve(const Hive& h, const Hive& g) {
    Hive out(h.degree() + g.degree());
    for (const auto& t : out.indices()) {
        std::optional<Rational> best;
        for (const auto& a : h.indices()) {
            TriangleIndex b{t.i - a.i, t.j - a.j, t.k - a.k};
            if (b.i < 0 || b.j < 0 || b.k < 0) continue;
            Rational v = h.at(a) + g.at(b);
            if (!best || v > *best) best = v;
        }
        out.at(t) = *best;
    }
    return out;
}

Outcome direct_sum_convolution() {
    Rng rng(1010);
    double block = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int a = 1 + trial % 3, b = 1 + (trial / 3) % 3;
        auto p = make_pencil(random_pd_matrix(a, rng), random_pd_matrix(a, rng), random_pd_matrix(a, rng));
        auto q = make_pencil(random_pd_matrix(b, rng), random_pd_matrix(b, rng), random_pd_matrix(b, rng));
        block = std::max(block, pencil_direct_sum_error(p, q));
    }
    int exponent_bad = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(0, 3), m = rng.uniform_int(0, 3);
        auto coef = [&](int d) {
            return TriangleTable<Rational>::generate(d, [&](const TriangleIndex&) { return Rational(rng.uniform_int(1, 7), 3); });
        };
        LiftedFamily f(coef(n), random_lifting(n, rng, 3, 2)), g(coef(m), random_lifting(m, rng, 3, 2));
        auto rep = direct_sum_check(f, g);
        exponent_bad += !rep.exponents_match || rep.leading != brute_convolve(f.exponents, g.exponents);
    }
    int merge_bad = 0;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int rep = 0; rep < 3; ++rep) {
                auto h = random_hive(n, rng, rep == 0), g = random_hive(m, rng);
                auto hg = convolve(h, g);
                merge_bad += hg != brute_convolve(h, g);
                auto bh = boundary(h), bg = boundary(g), bhg = boundary(hg);
                for (int s = 0; s < 3; ++s) {
                    auto merged = bh.side(s);
                    merged.insert(merged.end(), bg.side(s).begin(), bg.side(s).end());
                    std::sort(merged.begin(), merged.end(), std::greater<>());
                    merge_bad += bhg.side(s) != merged;
                }
            }
    std::ostringstream d;
    d << "block pencil rel. error " << fmt("%.2e", block) << ", " << exponent_bad << " max-plus mismatches, "
      << merge_bad << " convolve/boundary-merge mismatches";
    return verdict(block < 1e-9 && exponent_bad == 0 && merge_bad == 0, d.str());
}

// ---------------------------------------------------------------- 11

TernaryForm<double> as_double(const TernaryForm<Rational>& F) {
    return F.map([](const Rational& v) { return to_double(v); });
}

Outcome ronkin_suite() {
    double mono = 0;
    {
        RonkinSpec spec;
        for (auto [t, c] : std::vector<std::pair<TriangleIndex, double>>{{{2, 0, 0}, 3.0}, {{1, 1, 1}, 0.25}, {{0, 1, 2}, 7.0}}) {
            TernaryForm<double> F(t.i + t.j + t.k, 0.0);
            F.at(t) = c;
            for (std::array<double, 3> p : {std::array<double, 3>{0, 0, 0}, {1.5, -2, 0.3}, {-4, 3, 2}})
                mono = std::max(mono, std::abs(ronkin_value(F, p, spec) -
                                               (std::log(c) + t.i * p[0] + t.j * p[1] + t.k * p[2])));
        }
    }
    double line;
    {
        RonkinSpec spec;
        spec.resolution = 2048;
        line = std::abs(ronkin_value(TernaryForm<double>(1, std::vector<double>{1, 1, 0}), {0, 0, 0}, spec));
    }
    Rng rng(1111);
    auto two_lines = multiply(TernaryForm<double>(1, std::vector<double>{1, 1, 3}), TernaryForm<double>(1, std::vector<double>{1, 2, 1}));
    auto diag = pencil_det(make_pencil(ComplexMatrix::diagonal({4, 1}), ComplexMatrix::identity(2), ComplexMatrix::diagonal({4, 1})));
    std::vector<TernaryForm<double>> pencils{diag, two_lines};
    for (int trial = 0; trial < 4; ++trial) {
        int n = 2 + trial % 2;
        pencils.push_back(as_double(pencil_det(
            make_pencil(random_exact_pd_matrix(n, rng), random_exact_pd_matrix(n, rng), random_exact_pd_matrix(n, rng)))));
    }
    double edge = 0, resid = 0;
    for (const auto& F : pencils) {
        auto one = ronkin_edge_values(F), two = ronkin_edge_values_2d(F);
        for (int s = 0; s < 3; ++s)
            for (std::size_t d = 0; d < one.side(s).size(); ++d) edge = std::max(edge, std::abs(one.side(s)[d] - two.side(s)[d]));
        resid = std::max(resid, ronkin_boundary_check(F).residual);
    }
    double slope = 0;
    {
        auto fam = LiftedFamily::unit(quadratic_hive(2));
        const std::vector<double> tgrid{1e3, 1e4, 1e5};
        std::vector<double> lt;
        std::vector<TriangleTable<double>> us;
        for (double t : tgrid) {
            lt.push_back(std::log(t));
            us.push_back(ronkin_coefficients(instantiate(fam, t)));
        }
        for (const auto& idx : fam.exponents.indices()) {
            std::vector<double> y;
            for (const auto& u : us) y.push_back(u.at(idx));
            slope = std::max(slope, std::abs(ls_slope(lt, y) - to_double(fam.exponents.at(idx))));
        }
    }
    std::ostringstream d;
    d << "monomial " << fmt("%.1e", mono) << ", line " << fmt("%.1e", line) << ", 1D/2D " << fmt("%.1e", edge)
      << ", boundary residual " << fmt("%.1e", resid) << ", slope " << fmt("%.1e", slope);
    return verdict(mono <= 1e-10 && line < 1e-4 && edge < 1e-2 && resid < 1e-2 && slope <= 0.05, d.str());
}

// ---------------------------------------------------------------- 12

Outcome hive4() {
    Rng rng(1212);
    const auto& tgrid = hive4_tgrid();
    double worst = INFINITY;
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        RMatrixFamily fam;
        fam.order = 2;
        for (int p = 0; p < 4; ++p)
            fam.matrices.push_back(RMatrixFamily::scaled(random_pd_matrix(2, rng),
                                                         {rng.small_rational(4, 2) / 2, rng.small_rational(4, 2) / 2}));
        auto rep = hive4_check(fam, tgrid, 1e-2);
        bad += !rep.holds() || rep.inequalities.size() != 15;
        worst = std::min(worst, rep.min_slack());
    }
    RMatrixFamily id;
    id.order = 2;
    id.matrices.assign(4, RMatrixFamily::scaled(ComplexMatrix::identity(2), {0, 0}));
    auto rep = hive4_check(id, tgrid, 1e-2);
    double tight = 0;
    for (const auto& q : rep.inequalities) tight = std::max(tight, std::abs(q.slack()));
    std::ostringstream d;
    d << "50 quadruples, " << bad << " violating, min slack " << fmt("%.2e", worst) << "; identity max |slack| "
      << fmt("%.1e", tight);
    return verdict(bad == 0 && tight <= 1e-9, d.str());
}

// ---------------------------------------------------------------- 13

Outcome amoeba_convergence() {
    const double t = 1e6, lt = std::log(t);
    auto fam = LiftedFamily::unit(quadratic_hive(2));
    auto T = tropical_curve(fam.exponents);
    AmoebaOptions opt;
    opt.moduli = 200;
    opt.phases = 48;
    opt.log_min = -3 * lt;
    opt.log_max = 3 * lt;
    auto cloud = amoeba_sample(instantiate(fam, t), opt);
    double worst = 0;
    for (const auto& p : cloud.points) worst = std::max(worst, distance_to_curve(T, {p[0] / lt, p[1] / lt}));
    return verdict(worst < 0.05, std::to_string(cloud.points.size()) + " points on |log|y|| <= 3 log t, max distance " +
                                     fmt("%.4f", worst));
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hive predicate vs subdivision", 10, hives_vs_subdivisions},
        {2, "strict-hive families hyperbolic", 60, strict_families_hyperbolic},
        {3, "negated families fail, short path", 30, convex_families_fail},
        {4, "patchwork topology", 5, patchwork_topology},
        {5, "singular-value roundtrip", 30, singular_value_roundtrip},
        {6, "positivity, backward, shifted hive", 60, positivity_backward_shifted},
        {7, "real bound constant", 60, real_bound},
        {8, "horn LP", 30, horn_lp},
        {9, "honeycomb duality", 10, honeycomb_duality},
        {10, "direct sum / convolution", 20, direct_sum_convolution},
        {11, "ronkin suite", 120, ronkin_suite},
        {12, "HIVE4 inequalities", 30, hive4},
        {13, "amoeba convergence", 60, amoeba_convergence},
    };
    int passed = 0, documented = 0, failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {Status::fail, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            o.status = Status::fail;
            o.detail += "; over runtime budget";
        }
        const char* tag = o.status == Status::pass ? "PASS" : "FAIL";
        std::printf("[%2d] %s  %-36s %7.2f s / %3.0f s  %s%s\n", c.id, tag, c.name, secs, c.budget_seconds,
                    o.detail.c_str(), o.status == Status::documented_fail ? "  [known discrepancy, see README]" : "");
        std::fflush(stdout);
        passed += o.status == Status::pass;
        documented += o.status == Status::documented_fail;
        failed += o.status == Status::fail;
    }
    std::printf("%d PASS, %d FAIL (%d of them known discrepancies, %d unexpected)\n", passed, documented + failed,
                documented, failed);
    return failed == 0 ? 0 : 1;
}
