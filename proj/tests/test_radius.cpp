#include "oracles.hpp"

#include <booth/radius.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace booth;

namespace {

const double sweep[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

// Plain bisection on a sign change, independent of the library's root finder.
template <typename F>
double naive_bisect(F f, double lo, double hi)
{
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f(lo) < 0.0) == (f(mid) < 0.0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST(Radius, Polynomials)
{
    for (double r : {0.0, 0.3, 0.9}) {
        EXPECT_DOUBLE_EQ(l_alpha(0.0, r), r * r - 3.0 * r + 1.0);
        EXPECT_DOUBLE_EQ(cho_quartic(0.0, r), l_alpha(0.0, r));
    }
    EXPECT_EQ(m_alpha(0.4, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(m_alpha(0.4, 1.0), -0.4);
    for (double a : sweep) {
        for (double r : {0.1, 0.5, 0.8}) {
            EXPECT_NEAR(l_alpha_prime(a, r), test::central_difference([a](double x) { return l_alpha(a, x); }, r),
                        1e-8);
            EXPECT_NEAR(cho_quartic_prime(a, r),
                        test::central_difference([a](double x) { return cho_quartic(a, x); }, r), 1e-8);
        }
    }
}

TEST(Radius, BsValues)
{
    const double classic = (3.0 - std::sqrt(5.0)) / 2.0;
    const auto r0 = radius_bs(0.0);
    EXPECT_NEAR(r0.radius, classic, 1e-12);
    EXPECT_EQ(r0.r_doubleprime, 1.0);

    const auto r1 = radius_bs(1.0);
    EXPECT_NEAR(r1.r_doubleprime, (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
    EXPECT_NEAR(r1.r_prime, naive_bisect([](double r) { return l_alpha(1.0, r); }, 0.0, 1.0), 1e-12);

    const auto rh = radius_bs(0.5);
    EXPECT_NEAR(rh.r_doubleprime, std::sqrt(3.0) - 1.0, 1e-15);
    EXPECT_NEAR(rh.r_prime, naive_bisect([](double r) { return l_alpha(0.5, r); }, 0.0, 1.0), 1e-12);

    for (double a : sweep) {
        const auto r = radius_bs(a);
        EXPECT_LE(std::abs(l_alpha(a, r.r_prime)), 1e-11);
        EXPECT_LE(std::abs(m_alpha(a, r.r_doubleprime)), 1e-14);
        EXPECT_LE(r.bracket_lo, r.r_prime);
        EXPECT_GE(r.bracket_hi, r.r_prime);
        EXPECT_GT(r.radius, 0.0);
        EXPECT_LT(r.radius, 1.0);
    }
}

TEST(Radius, BkValues)
{
    EXPECT_EQ(radius_bk(0.0), 1.0);
    EXPECT_NEAR(radius_bk(1.0), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
    EXPECT_NEAR(radius_bk(0.25), 2.0 * (std::sqrt(2.0) - 1.0), 1e-15);
    for (int k = 1; k <= 100; ++k) {
        const double a = k / 100.0;
        EXPECT_NEAR(radius_bk(a), m_alpha_root_bisect(a), 1e-12);
        EXPECT_NEAR(radius_bk(a), (std::sqrt(1.0 + 4.0 * a) - 1.0) / (2.0 * a), 1e-12);
    }
}

TEST(RadiusProperty, BkRadiusDecreasing)
{
    double prev = radius_bk(0.0);
    for (int k = 1; k <= 1000; ++k) {
        const double cur = radius_bk(k / 1000.0);
        EXPECT_LT(cur, prev);
        prev = cur;
    }
}

TEST(Radius, HAndPsi)
{
    for (double a : sweep) {
        EXPECT_EQ(psi(a, 0.0), 1.0);
        for (double r : {0.1, 0.3, 0.5}) {
            if (r >= m_alpha_root(a)) {
                continue;
            }
            const double expected = l_alpha(a, r) / ((1.0 - a * r * r) * m_alpha(a, r));
            EXPECT_NEAR(h(a, r, r), expected, 1e-13);
        }
    }
    for (double s : {0.0, 0.2, 0.7, 0.99}) {
        EXPECT_NEAR(psi(0.0, s), (1.0 - s) * (1.0 - s), 1e-15);
    }
    EXPECT_THROW((void)h(0.5, 0.3, 0.4), domain_violation);
    EXPECT_THROW((void)h(1.0, 0.9, 0.8), domain_violation);
}

// -dh/ds has the sign of psi: compare against a finite difference.
TEST(RadiusProperty, HDecreasingInS)
{
    random_stream rng(77, 0);
    for (double a : sweep) {
        const double cap = m_alpha_root(a) * (1.0 - 1e-9);
        for (int i = 0; i < 1000; ++i) {
            const double r = 0.99 * rng.uniform();
            const double top = std::min(r, cap);
            double s1 = top * rng.uniform();
            double s2 = top * rng.uniform();
            if (s1 > s2) {
                std::swap(s1, s2);
            }
            EXPECT_GE(h(a, r, s1), h(a, r, s2) - 1e-12);
        }
        for (int k = 0; k <= 999; ++k) {
            EXPECT_GE(psi(a, k * 1e-3), -1e-12);
        }
    }
}

TEST(Radius, VerifyBs)
{
    for (double a : sweep) {
        const auto v = verify_radius_bs(a);
        EXPECT_TRUE(v.passed()) << "alpha=" << a;
        EXPECT_TRUE(v.sign_change);
        if (a > 0.0) {
            ASSERT_TRUE(v.f1_near_pole.has_value());
            EXPECT_GT(*v.f1_near_pole, 1e3);
        }
    }
    // f_1 at r' -+ 1e-3
    const auto r = radius_bs(0.5);
    const auto [inner, z] = circle_min([](complex z) { return f1_convexity(0.5, z); }, r.r_prime - 1e-3, 2048);
    EXPECT_GT(inner, 0.0);
    EXPECT_LT(f1_convexity(0.5, complex(-(r.r_prime + 1e-3))), 0.0);
}

TEST(Radius, VerifyBk)
{
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        const auto v = verify_radius_bk(a, 20);
        EXPECT_TRUE(v.passed()) << "alpha=" << a;
        ASSERT_TRUE(v.member_positivity.has_value());
    }
    EXPECT_FALSE(verify_radius_bk(0.0, 5).member_positivity.has_value());
}

TEST(Cho, Refutation)
{
    const auto c0 = refute_cho(0.0);
    ASSERT_TRUE(c0.cho_root.has_value());
    EXPECT_NEAR(c0.difference, 0.0, 1e-12);
    EXPECT_FALSE(c0.discrepancy);

    const auto c1 = refute_cho(1.0);
    ASSERT_TRUE(c1.cho_root.has_value());
    EXPECT_NEAR(*c1.cho_root,
                naive_bisect([](double r) { return cho_quartic(1.0, r); }, 0.0, radius_bs(1.0).radius), 1e-12);
    EXPECT_TRUE(c1.discrepancy);
    EXPECT_TRUE(c1.theorem_confirmed);

    std::size_t found = 0;
    for (int k = 1; k <= 10; ++k) {
        const auto c = refute_cho(k / 10.0);
        found += c.discrepancy && c.theorem_confirmed ? 1 : 0;
    }
    EXPECT_GE(found, 1u);
}
