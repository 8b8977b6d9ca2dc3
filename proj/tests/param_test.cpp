#include "pipedlab/param.hpp"

#include <gtest/gtest.h>

using namespace pipedlab;

TEST(Heron, KnownTriangles) {
    HeronTriangle t1 = heron_triangle({1, 2, 1, 3});
    EXPECT_EQ(t1.a, 20);
    EXPECT_EQ(t1.b, 15);
    EXPECT_EQ(t1.c, 25);
    EXPECT_EQ(t1.area_squared, Rational(150 * 150));

    HeronTriangle t2 = heron_triangle({1, 2, 1, 2});
    EXPECT_EQ(t2.a, 10);
    EXPECT_EQ(t2.b, 10);
    EXPECT_EQ(t2.c, 12);
    EXPECT_EQ(t2.area_squared, Rational(48 * 48));

    HeronTriangle t3 = heron_triangle({2, 3, 1, 4});
    EXPECT_EQ(t3.a, 102);
    EXPECT_EQ(t3.b, 52);
    EXPECT_EQ(t3.c, 110);
    EXPECT_EQ(t3.area_squared, Rational(2640 * 2640));

    // negative raw third side is folded by absolute value
    HeronTriangle t4 = heron_triangle({3, 1, 1, 2});
    EXPECT_EQ(t4.a, 15);
    EXPECT_EQ(t4.b, 20);
    EXPECT_EQ(t4.c, 7);
    EXPECT_EQ(t4.area_squared, Rational(42 * 42));
    EXPECT_EQ(heron_area_param_law({3, 1, 1, 2}), 42);
}

// The printed parametric area expression 4mnpq(mq+np)(nq-mp) overstates the
// actual area by a factor of 4; freeze the discrepancy.
TEST(Heron, PrintedAreaExpressionCarriesFactorFour) {
    HeronParams hp{1, 2, 1, 3};
    BigInt printed = 4 * hp.m * hp.n * hp.p * hp.q *
                     (hp.m * hp.q + hp.n * hp.p) * (hp.n * hp.q - hp.m * hp.p);
    EXPECT_EQ(printed, 600);
    HeronTriangle t = heron_triangle(hp);
    EXPECT_EQ(*sqrt_rational(t.area_squared), Rational(150));
    EXPECT_EQ(printed, 4 * 150);
    EXPECT_EQ(heron_area_param_law(hp), 150);
}

TEST(Heron, DerivedAreaLawHoldsAcrossSweep) {
    for (const HeronParams& hp : heron_in_domain_sweep(2000)) {
        HeronTriangle t = heron_triangle(hp);
        auto area = sqrt_rational(t.area_squared);
        ASSERT_TRUE(area.has_value()) << "non-square Heron product";
        EXPECT_EQ(*area, Rational(heron_area_param_law(hp)));
    }
}

TEST(Heron, OutOfDomainRejected) {
    EXPECT_THROW(heron_triangle({0, 1, 1, 1}), std::domain_error);
    // nq == mp collapses the area to zero but keeps a valid degenerate tuple
    HeronParams flat{2, 2, 3, 3};
    if (heron_in_domain(flat)) {
        EXPECT_EQ(heron_triangle(flat).area_squared, 0);
    }
}

TEST(Wyss, KnownParallelogram) {
    ParallelogramSpec p = wyss_parallelogram({1, 1, 2, 1, 3});
    EXPECT_EQ(p.side_a, 5);
    EXPECT_EQ(p.side_b, 5);
    EXPECT_EQ(p.diag1, 8);
    EXPECT_EQ(p.diag2_squared, 36);
}

TEST(Wyss, RejectsImpossibleDiagonal) {
    // raw values (5, 14, 21, 1): the short diagonal is below b - a
    auto raw = wyss_raw({1, 3, 2, 1, 4});
    EXPECT_EQ(raw[0], 5);
    EXPECT_EQ(raw[1], 14);
    EXPECT_EQ(raw[2], 21);
    EXPECT_EQ(raw[3], 1);
    EXPECT_FALSE(wyss_in_domain({1, 3, 2, 1, 4}));
    EXPECT_THROW(wyss_parallelogram({1, 3, 2, 1, 4}), std::domain_error);
}

TEST(Wyss, ParallelogramLawHoldsForAllTuplesEvenRejected) {
    for (const WyssParams& wp : wyss_param_sweep(5000)) {
        auto r = wyss_raw(wp);
        EXPECT_EQ(2 * (r[0] * r[0] + r[1] * r[1]), r[2] * r[2] + r[3] * r[3]);
    }
}

TEST(Wyss, AcceptedTuplesAreValidTwoDiagonalParallelograms) {
    for (const WyssParams& wp : wyss_in_domain_sweep(1000)) {
        ParallelogramSpec p = wyss_parallelogram(wp);
        EXPECT_GT(p.side_a, 0);
        EXPECT_GT(p.diag1, 0);
        auto d2 = sqrt_rational(p.diag2_squared);
        ASSERT_TRUE(d2.has_value());
        EXPECT_EQ(denominator(*d2), 1);
        EXPECT_EQ(p.diag2_squared + Rational(p.diag1 * p.diag1),
                  Rational(2 * (p.side_a * p.side_a + p.side_b * p.side_b)));
    }
}

TEST(Wyss, ScalingParameterScalesLinearly) {
    WyssParams base{1, 1, 2, 1, 3};
    for (long k = 2; k <= 9; ++k) {
        WyssParams scaled{k, 1, 2, 1, 3};
        ParallelogramSpec p0 = wyss_parallelogram(base);
        ParallelogramSpec pk = wyss_parallelogram(scaled);
        EXPECT_EQ(pk.side_a, k * p0.side_a);
        EXPECT_EQ(pk.side_b, k * p0.side_b);
        EXPECT_EQ(pk.diag1, k * p0.diag1);
        EXPECT_EQ(pk.area_squared, Rational(BigInt(k) * k * k * k) * p0.area_squared);
    }
}

TEST(Sweeps, DeterministicPrefix) {
    auto a = heron_param_sweep(100);
    auto b = heron_param_sweep(200);
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].m, b[i].m);
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].p, b[i].p);
        EXPECT_EQ(a[i].q, b[i].q);
    }
}
