#include <gtest/gtest.h>

#include <hivecurve/horn.hpp>
#include <hivecurve/random.hpp>

#include "support/fixtures.hpp"

using namespace hivecurve;
using fixtures::q;

TEST(Simplex, SmallSystems) {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.add_eq(q({1, 1}), 3);
    sys.add_le(q({1, -1}), -1);
    auto x = find_feasible_point(sys);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0] + (*x)[1], 3);
    EXPECT_LE((*x)[0] - (*x)[1], -1);

    sys.add_le(q({-1, 0}), -5); // x0 >= 5 and x0 <= 1 conflict
    EXPECT_FALSE(find_feasible_point(sys));
}

TEST(Simplex, FreeVariablesTakeNegativeValues) {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.add_eq(q({2}), Rational(-7, 3));
    auto x = find_feasible_point(sys);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational(-7, 6));
}

TEST(Horn, QuadraticBoundaryRoundtrip) {
    auto b = boundary(quadratic_hive(2));
    auto res = horn_feasible(b);
    ASSERT_TRUE(res.feasible);
    EXPECT_EQ(boundary(*res.witness), b);
    EXPECT_EQ(res.witness->at(2, 0, 0), 0);
}

TEST(Horn, TraceViolationInfeasible) {
    BoundarySpec<Rational> b{q({1, 0}), q({0, -1}), q({1, 0})};
    EXPECT_FALSE(horn_feasible(b).feasible);
}

TEST(Horn, HandProvedInfeasibleInstance) {
    BoundarySpec<Rational> b{q({0, 0}), q({0, 0}), q({1, -1})};
    EXPECT_FALSE(horn_feasible(b).feasible);
}

TEST(Horn, Errors) {
    try {
        horn_feasible({q({1, 0}), q({0}), q({0, -1})});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    try {
        horn_feasible({q({-1, 1}), q({0, 0}), q({0, 0})});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDecreasing);
    }
}

TEST(Horn, RandomHiveRoundtrip) {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 5;
        auto h = random_hive(n, rng);
        auto b = boundary(h);
        auto res = horn_feasible(b);
        ASSERT_TRUE(res.feasible);
        EXPECT_EQ(boundary(*res.witness), b);
        EXPECT_TRUE(classify_hive(*res.witness).is_hive());
    }
}

TEST(Horn, DegreeZeroAndOne) {
    EXPECT_TRUE(horn_feasible({{}, {}, {}}).feasible);
    EXPECT_TRUE(horn_feasible({q({2}), q({-5}), q({3})}).feasible);
    EXPECT_FALSE(horn_feasible({q({2}), q({-5}), q({4})}).feasible);
}
