#include <gtest/gtest.h>

#include <hivecurve/hyperbolicity.hpp>
#include <hivecurve/random.hpp>

using namespace hivecurve;

namespace {

TernaryForm<Rational> sos_quadratic() { return TernaryForm<Rational>(2, Rational(1)); }

TernaryForm<Rational> random_pencil_form(int n, Rng& rng) {
    return pencil_det(make_pencil(random_exact_pd_matrix(n, rng), random_exact_pd_matrix(n, rng),
                                  random_exact_pd_matrix(n, rng)));
}

// (x+y+z)^2
TernaryForm<Rational> square_of_line() {
    TernaryForm<Rational> F(2);
    for (const auto& t : F.indices()) F.at(t) = (t.i == 2 || t.j == 2 || t.k == 2) ? 1 : 2;
    return F;
}

} // namespace

TEST(VinnikovCheck, LinearFormsPass) {
    TernaryForm<Rational> F(1, std::vector<Rational>{3, Rational(1, 5), 7});
    auto rep = vinnikov_check(F);
    EXPECT_EQ(rep.verdict, Verdict::pass);
    EXPECT_EQ(rep.probes_tested, 360 + 128);
}

TEST(VinnikovCheck, PencilFormsPassInBothModes) {
    Rng rng(1);
    for (int trial = 0; trial < 6; ++trial) {
        auto F = random_pencil_form(2 + trial % 3, rng);
        VinnikovOptions opt;
        opt.equally_spaced = 90;
        opt.random = 30;
        EXPECT_EQ(vinnikov_check(F, opt).verdict, Verdict::pass);
        opt.mode = NumericMode::floating;
        EXPECT_EQ(vinnikov_check(F, opt).verdict, Verdict::pass);
    }
}

TEST(VinnikovCheck, DefiniteQuadraticFails) {
    auto rep = vinnikov_check(sos_quadratic());
    EXPECT_EQ(rep.verdict, Verdict::fail);
    ASSERT_TRUE(rep.counterexample);
    EXPECT_EQ(rep.counterexample_roots, 0);
    VinnikovOptions opt;
    opt.mode = NumericMode::floating;
    EXPECT_EQ(vinnikov_check(sos_quadratic(), opt).verdict, Verdict::fail);
}

TEST(VinnikovCheck, DoubleLineIsReprobedThenFails) {
    // (x+y+z)^2 has a double root on every line: jitter cannot help.
    VinnikovOptions opt;
    opt.equally_spaced = 8;
    opt.random = 0;
    auto rep = vinnikov_check(square_of_line(), opt);
    EXPECT_EQ(rep.verdict, Verdict::fail);
    EXPECT_GT(rep.reprobes, 0);
}

TEST(VinnikovCheck, Errors) {
    TernaryForm<Rational> F(1, std::vector<Rational>{1, 0, 1});
    EXPECT_THROW(vinnikov_check(F), Error);
    VinnikovOptions opt;
    opt.base = {1, -1, 1};
    EXPECT_THROW(vinnikov_check(TernaryForm<Rational>(1, Rational(1)), opt), Error);
}

TEST(VinnikovCheck, DeterministicAcrossThreadCounts) {
    Rng rng(2);
    auto F = sos_quadratic();
    VinnikovOptions a, b;
    a.threads = 1;
    b.threads = 3;
    auto ra = vinnikov_check(F, a), rb = vinnikov_check(F, b);
    EXPECT_EQ(ra.counterexample->id, rb.counterexample->id);
}

TEST(VinnikovCheck, ExplicitDirections) {
    VinnikovOptions opt;
    opt.directions = {{1, -1, 0}, {0, 1, -1}};
    auto rep = vinnikov_check(square_of_line(), opt);
    EXPECT_EQ(rep.probes_tested, 2);
}

TEST(DirectionalDerivative, Examples) {
    auto d = directional_derivative(square_of_line(), {Rational(1), Rational(0), Rational(0)});
    EXPECT_EQ(d, TernaryForm<Rational>(1, Rational(2)));
    Rng rng(3);
    auto F = random_pencil_form(3, rng);
    std::array<Rational, 3> dir{Rational(1, 2), Rational(0), Rational(3)};
    auto G = directional_derivative(F, dir);
    for (const auto& t : G.indices())
        EXPECT_EQ(G.at(t), (t.i + 1) * dir[0] * F.at(t.i + 1, t.j, t.k) + (t.j + 1) * dir[1] * F.at(t.i, t.j + 1, t.k) +
                               (t.k + 1) * dir[2] * F.at(t.i, t.j, t.k + 1));
    EXPECT_THROW(directional_derivative(F, {Rational(0), Rational(0), Rational(0)}), Error);
    EXPECT_THROW(directional_derivative(F, {Rational(-1), Rational(1), Rational(0)}), Error);
}

TEST(DirectionalDerivative, PreservesHyperbolicity) {
    Rng rng(4);
    auto F = random_pencil_form(4, rng);
    VinnikovOptions opt;
    opt.equally_spaced = 720;
    opt.random = 0;
    EXPECT_EQ(vinnikov_check(directional_derivative(F, {Rational(1), Rational(1), Rational(1)}), opt).verdict,
              Verdict::pass);
    opt.equally_spaced = 120;
    for (int trial = 0; trial < 4; ++trial) {
        auto G = random_pencil_form(2 + trial % 3, rng);
        std::array<Rational, 3> dir{rng.uniform_int(0, 3), rng.uniform_int(0, 3), rng.uniform_int(1, 3)};
        EXPECT_EQ(vinnikov_check(directional_derivative(G, dir), opt).verdict, Verdict::pass);
    }
}

TEST(Backward, BaseCaseIsTraceOfProduct) {
    // X = Id, n = 2: the i-family margin at (2,0,0) is tr Y tr Z - F_011 = Re tr(YZ).
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto Y = random_exact_pd_matrix(2, rng), Z = random_exact_pd_matrix(2, rng);
        auto F = pencil_det(make_pencil(ExactComplexMatrix::identity(2), Y, Z));
        auto rep = backward_inequalities(F);
        for (const auto& m : rep.margins)
            if (m.rhombus.family == RhombusFamily::i) {
                EXPECT_EQ(m.weight, 1);
                auto yz = Y * Z;
                EXPECT_EQ(m.margin, yz(0, 0).re + yz(1, 1).re);
                if (trial == 0) {
                    // diagonal parts only when off-diagonals vanish
                    auto Yd = ExactComplexMatrix::diagonal({Y(0, 0), Y(1, 1)});
                    auto Zd = ExactComplexMatrix::diagonal({Z(0, 0), Z(1, 1)});
                    auto Fd = pencil_det(make_pencil(ExactComplexMatrix::identity(2), Yd, Zd));
                    for (const auto& md : backward_inequalities(Fd).margins)
                        if (md.rhombus.family == RhombusFamily::i) {
                            EXPECT_EQ(md.margin, Y(0, 0).re * Z(0, 0).re + Y(1, 1).re * Z(1, 1).re);
                        }
                }
            }
        EXPECT_TRUE(rep.pass);
    }
}

TEST(Backward, DiagonalPencilExample) {
    auto F = pencil_det(make_pencil(ExactComplexMatrix::identity(2),
                                    ExactComplexMatrix::diagonal({GaussianRational(1), GaussianRational(2)}),
                                    ExactComplexMatrix::diagonal({GaussianRational(3), GaussianRational(1)})));
    auto rep = backward_inequalities(F);
    bool seen = false;
    for (const auto& m : rep.margins)
        if (m.rhombus.family == RhombusFamily::k) {
            EXPECT_EQ(m.rhombus.anchor(), (TriangleIndex{0, 0, 2}));
            EXPECT_EQ(m.margin, 28 - 9);
            seen = true;
        }
    EXPECT_TRUE(seen);
    EXPECT_TRUE(rep.pass);
}

TEST(Backward, DefiniteQuadraticFails) {
    auto rep = backward_inequalities(sos_quadratic());
    EXPECT_FALSE(rep.pass);
    for (const auto& m : rep.margins) EXPECT_EQ(m.margin, 0);
}

TEST(Backward, ExactWeightsNotJustOne) {
    // Larger n exercises weights 2(m-1)/m < 2; margins stay positive on pencils.
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        auto F = random_pencil_form(3 + trial % 3, rng);
        auto rep = backward_inequalities(F);
        EXPECT_TRUE(rep.pass);
        for (const auto& m : rep.margins) EXPECT_EQ(m.weight, backward_weight(m.rhombus));
    }
}

TEST(V1, Values) {
    auto v = v1_vector(2);
    EXPECT_DOUBLE_EQ(v.at(1, 1, 0), -std::log(2.0));
    EXPECT_DOUBLE_EQ(v.at(0, 0, 2), -std::log(2.0));
    EXPECT_DOUBLE_EQ(v1_vector(5).at(5, 0, 0), -std::log(120.0));
}

TEST(V1, RhombusRatioMatchesBackwardWeight) {
    for (int n = 2; n <= 7; ++n) {
        auto v = v1_vector(n);
        for (const auto& r : rhombus_inequalities(n))
            EXPECT_NEAR(rhombus_slack(v, r), -std::log(to_double(backward_weight(r))), 1e-12);
    }
}

TEST(ShiftedHive, Examples) {
    EXPECT_TRUE(shifted_hive_check(TernaryForm<Rational>(1, Rational(3))).is_hive());
    EXPECT_EQ(shifted_hive_check(sos_quadratic()).verdict, HiveClass::hive);  // tight within 1e-12
    EXPECT_EQ(shifted_hive_check_exact(sos_quadratic()).verdict, HiveClass::hive);
    TernaryForm<Rational> G = sos_quadratic();
    G.at(0, 0, 2) = 2;  // pushes the (0,0,2) margin negative
    EXPECT_EQ(shifted_hive_check(G).verdict, HiveClass::not_hive);
    TernaryForm<Rational> bad(1, std::vector<Rational>{1, 0, 1});
    try {
        shifted_hive_check(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonpositiveCoefficient);
    }
}

TEST(ShiftedHive, AgreesWithBackwardMarginsOnPencils) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto F = random_pencil_form(1 + trial % 5, rng);
        auto sh = shifted_hive_check(F);
        EXPECT_TRUE(sh.is_hive());
        EXPECT_EQ(sh.is_hive(), backward_inequalities(F).pass);
        EXPECT_EQ(shifted_hive_check_exact(F).verdict, HiveClass::strict_hive);
    }
}
