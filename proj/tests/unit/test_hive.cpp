#include <gtest/gtest.h>

#include <hivecurve/hive.hpp>
#include <hivecurve/random.hpp>

#include "support/fixtures.hpp"

using namespace hivecurve;

TEST(IndexSet, CanonicalOrderAndCounts) {
    auto one = index_set(1);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_EQ(one[0], (TriangleIndex{1, 0, 0}));
    EXPECT_EQ(one[1], (TriangleIndex{0, 1, 0}));
    EXPECT_EQ(one[2], (TriangleIndex{0, 0, 1}));
    EXPECT_EQ(index_set(2).size(), 6u);
    EXPECT_EQ(index_set(4).size(), 15u);
    for (int n = 0; n <= 6; ++n) {
        auto idx = index_set(n);
        for (std::size_t p = 0; p < idx.size(); ++p) EXPECT_EQ(triangle_position(n, idx[p]), p);
    }
}

TEST(Rhombus, CountsPerDegree) {
    EXPECT_TRUE(rhombus_inequalities(0).empty());
    EXPECT_TRUE(rhombus_inequalities(1).empty());
    auto two = rhombus_inequalities(2);
    ASSERT_EQ(two.size(), 3u);
    int per[3] = {0, 0, 0};
    for (const auto& r : two) ++per[static_cast<int>(r.family)];
    EXPECT_EQ(per[0], 1);
    EXPECT_EQ(per[1], 1);
    EXPECT_EQ(per[2], 1);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(rhombus_inequalities(n).size(), 3u * n * (n - 1) / 2);
}

TEST(Rhombus, EveryInstanceIsAUnitRhombus) {
    // plus points are adjacent; the two minus points are the far tips.
    for (int n = 2; n <= 5; ++n)
        for (const auto& r : rhombus_inequalities(n)) {
            for (const auto& t : r.plus) EXPECT_TRUE(in_triangle(n, t));
            for (const auto& t : r.minus) EXPECT_TRUE(in_triangle(n, t));
            auto dist = [](TriangleIndex a, TriangleIndex b) {
                return std::max({std::abs(a.i - b.i), std::abs(a.j - b.j), std::abs(a.k - b.k)});
            };
            EXPECT_EQ(dist(r.plus[0], r.plus[1]), 1);
            EXPECT_EQ(dist(r.minus[0], r.minus[1]), 2);
            for (const auto& p : r.plus)
                for (const auto& m : r.minus) EXPECT_EQ(dist(p, m), 1);
        }
}

TEST(ClassifyHive, ConstantIsTightHive) {
    for (int n = 0; n <= 5; ++n) {
        auto rep = classify_hive(Hive(n, Rational(7, 3)));
        EXPECT_EQ(rep.verdict, n >= 2 ? HiveClass::hive : HiveClass::strict_hive);
        EXPECT_EQ(rep.tight.size(), rhombus_inequalities(n).size());
    }
}

TEST(ClassifyHive, QuadraticIsStrictWithUnitSlack) {
    for (int n = 2; n <= 6; ++n) {
        auto h = quadratic_hive(n);
        EXPECT_EQ(classify_hive(h).verdict, HiveClass::strict_hive);
        for (const auto& r : rhombus_inequalities(n)) EXPECT_EQ(rhombus_slack(h, r), 1);
    }
}

TEST(ClassifyHive, LoweredMiddleEdgeViolatesIAndJFamilies) {
    auto rep = classify_hive(fixtures::long_edge_n2());
    EXPECT_EQ(rep.verdict, HiveClass::not_hive);
    ASSERT_EQ(rep.violated.size(), 2u);
    for (const auto& r : rep.violated) {
        if (r.family == RhombusFamily::j) EXPECT_EQ(r.anchor(), (TriangleIndex{0, 2, 0}));
        else {
            EXPECT_EQ(r.family, RhombusFamily::i);
            EXPECT_EQ(r.anchor(), (TriangleIndex{2, 0, 0}));
        }
    }
    ASSERT_EQ(rep.tight.size(), 0u);
}

TEST(ClassifyHive, FloatToleranceBand) {
    TriangleTable<double> h(2, 0.0);
    h.at(1, 1, 0) = -5e-13;
    EXPECT_EQ(classify_hive(h, 1e-12).verdict, HiveClass::hive);
    h.at(1, 1, 0) = -1e-9;
    EXPECT_EQ(classify_hive(h, 1e-12).verdict, HiveClass::not_hive);
}

TEST(Boundary, Examples) {
    auto b0 = boundary(Hive(3, Rational(2)));
    for (int s = 0; s < 3; ++s) EXPECT_EQ(b0.side(s), fixtures::q({0, 0, 0}));
    for (int n = 1; n <= 6; ++n) {
        auto b = boundary(quadratic_hive(n));
        std::vector<Rational> expect;
        for (int m = 1; m <= n; ++m) expect.emplace_back(n - 2 * m + 1);
        EXPECT_EQ(b.alpha, expect);
        EXPECT_EQ(b.beta, expect);
        EXPECT_EQ(b.gamma, expect);
    }
}

TEST(Boundary, TelescopesAndDecreasesOnHives) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 5;
        auto h = trial % 2 ? random_hive(n, rng) : random_lifting(n, rng);
        auto b = boundary(h);
        Rational total = 0;
        for (int s = 0; s < 3; ++s)
            for (const auto& v : b.side(s)) total += v;
        EXPECT_EQ(total, 0);
        if (classify_hive(h).is_hive()) {
            for (int s = 0; s < 3; ++s) EXPECT_TRUE(weakly_decreasing(b.side(s)));
        }
    }
}

TEST(Hive, LinearShiftPreservesSlacks) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 4;
        auto h = random_lifting(n, rng);
        auto g = add_linear(h, rng.small_rational(9, 4), rng.small_rational(9, 4), rng.small_rational(9, 4));
        for (const auto& r : rhombus_inequalities(n)) EXPECT_EQ(rhombus_slack(h, r), rhombus_slack(g, r));
        EXPECT_EQ(classify_hive(h).verdict, classify_hive(g).verdict);
    }
}

TEST(RandomHive, GeneratorProducesHives) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 6;
        EXPECT_TRUE(classify_hive(random_hive(n, rng)).is_hive());
        if (n >= 2) {
            EXPECT_EQ(classify_hive(random_hive(n, rng, true)).verdict, HiveClass::strict_hive);
        }
    }
}

TEST(Convolve, OrderZeroAddsConstant) {
    auto h = quadratic_hive(3);
    auto out = convolve(h, Hive(0, Rational(5, 2)));
    for (const auto& t : h.indices()) EXPECT_EQ(out.at(t), h.at(t) + Rational(5, 2));
}

TEST(Convolve, ConstantsAdd) {
    auto out = convolve(Hive(2, Rational(1)), Hive(3, Rational(-4)));
    EXPECT_EQ(out.degree(), 5);
    for (const auto& v : out) EXPECT_EQ(v, -3);
}

TEST(Convolve, OrderOneByEnumeration) {
    Hive a(1, std::vector<Rational>{3, -1, 2});
    Hive b(1, std::vector<Rational>{0, 4, Rational(1, 2)});
    auto c = convolve(a, b);
    EXPECT_EQ(c.at(1, 1, 0), std::max(Rational(3 + 4), Rational(-1 + 0)));
    EXPECT_EQ(c.at(2, 0, 0), 3);
    EXPECT_EQ(c.at(0, 2, 0), 3);
    EXPECT_EQ(c.at(0, 0, 2), 2 + Rational(1, 2));
    EXPECT_EQ(c.at(1, 0, 1), std::max(Rational(3) + Rational(1, 2), Rational(2)));
}

TEST(Convolve, RejectsNonHive) {
    try {
        convolve(fixtures::long_edge_n2(), Hive(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAHive);
    }
}

TEST(Convolve, CommutativeAssociativeAndMergesBoundaries) {
    Rng rng(17);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int rep = 0; rep < 4; ++rep) {
                auto h = random_hive(n, rng), g = random_hive(m, rng), f = random_hive(1 + rep % 2, rng);
                auto hg = convolve(h, g);
                EXPECT_EQ(hg, convolve(g, h));
                EXPECT_EQ(convolve(hg, f), convolve(h, convolve(g, f)));
                EXPECT_TRUE(classify_hive(hg).is_hive());
                auto bh = boundary(h), bg = boundary(g), bhg = boundary(hg);
                for (int s = 0; s < 3; ++s) {
                    auto merged = bh.side(s);
                    merged.insert(merged.end(), bg.side(s).begin(), bg.side(s).end());
                    std::sort(merged.begin(), merged.end(), std::greater<>());
                    EXPECT_EQ(bhg.side(s), merged);
                }
            }
}
