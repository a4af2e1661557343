#include <booth/coefficients.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace booth;

TEST(Coefficients, TaylorFormulaExamples)
{
    for (double a : {0.0, 0.3, 1.0}) {
        const auto t = taylor_a234(schwarz_map::monomial(1), a);
        EXPECT_NEAR(std::abs(t.a2 - 1.0), 0.0, 1e-16);
        EXPECT_NEAR(std::abs(t.a3 - 0.5), 0.0, 1e-16);
        EXPECT_NEAR(std::abs(t.a4 - (1.0 + 2.0 * a) / 6.0), 0.0, 1e-16);
        const auto t3 = taylor_a234(schwarz_map::monomial(3), a);
        EXPECT_EQ(t3.a2, complex(0.0));
        EXPECT_EQ(t3.a3, complex(0.0));
        EXPECT_NEAR(std::abs(t3.a4 - 1.0 / 3.0), 0.0, 1e-16);
    }
    const auto w = schwarz_map::blaschke({0.5}, 1.0);
    const auto t = taylor_a234(w, 0.5);
    const auto m = from_schwarz_bs(w, 0.5);
    EXPECT_NEAR(std::abs(t.a2 - m.a(2)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.a3 - m.a(3)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.a4 - m.a(4)), 0.0, 1e-12);
}

TEST(CoefficientsProperty, FormulasMatchSeries)
{
    random_stream rng(100, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto w = sample_schwarz(rng, 5, 8);
        const double a = rng.uniform();
        const auto t = taylor_a234(w, a);
        const auto m = from_schwarz_bs(w, a, 8);
        EXPECT_LE(std::abs(t.a2 - m.a(2)), 1e-11);
        EXPECT_LE(std::abs(t.a3 - m.a(3)), 1e-11);
        EXPECT_LE(std::abs(t.a4 - m.a(4)), 1e-11);

        const auto g = log_coeffs(m, 3);
        const auto gf = gamma_formula(w, a);
        for (int k = 0; k < 3; ++k) {
            EXPECT_LE(std::abs(g[k] - gf[k]), 1e-11);
        }
    }
}

TEST(Coefficients, Bounds)
{
    const auto b0 = bs_a_bounds(0.0);
    EXPECT_EQ(b0.a2, 1.0);
    EXPECT_EQ(b0.a3, 0.5);
    EXPECT_DOUBLE_EQ(b0.a4, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(bs_a_bounds(0.5).a4, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(bs_a_bounds(0.5 + 1e-12).a4, (2.0 + 2e-12) / 6.0);
    EXPECT_DOUBLE_EQ(bs_a_bounds(1.0).a4, 0.5);

    const auto k0 = bk_a_bounds(0.0);
    EXPECT_EQ(k0.a2, 0.5);
    EXPECT_DOUBLE_EQ(k0.a3, 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(k0.a4, 1.0 / 12.0);
    EXPECT_DOUBLE_EQ(bk_a_bounds(1.0).a4, 1.0 / 8.0);
    const auto g1 = extremal_bk(1, 0.75);
    EXPECT_NEAR(std::abs(g1.a(4)), 2.5 / 24.0, 1e-15);
}

TEST(Coefficients, LogCoefficients)
{
    for (double a : {0.0, 0.4, 1.0}) {
        for (unsigned n = 1; n <= 6; ++n) {
            const auto g = log_coeffs(extremal_fn(n, a, 12), n);
            EXPECT_NEAR(std::abs(g[n - 1]), 1.0 / (2.0 * n), 1e-15);
        }
    }
    EXPECT_THROW((void)log_coeffs(extremal_bk(1, 0.5), 3), std::invalid_argument);
    EXPECT_THROW((void)log_coefficients(extremal_fn(1, 0.5, 4).f, 5), std::invalid_argument);

    EXPECT_DOUBLE_EQ(gamma_bounds(0.1, 7), 1.0 / 14.0);
    EXPECT_DOUBLE_EQ(gamma_bounds(0.9, 2), 0.25);
    EXPECT_DOUBLE_EQ(gamma_bounds(0.9, 7), 0.5);
    EXPECT_DOUBLE_EQ(gamma_bounds(convexity_threshold, 9), 1.0 / 18.0);
    EXPECT_FALSE(gamma_bound_sharp(0.9, 4));
    EXPECT_THROW((void)gamma_bounds(0.5, 0), std::invalid_argument);
}

TEST(Prokhorov, Regions)
{
    const auto c1 = prokhorov_bound(1.5, (1.0 + 2.0 * 0.3) / 2.0);
    EXPECT_EQ(c1.region, prokhorov_region::omega2);
    EXPECT_EQ(c1.bound, 1.0);

    for (double a : {0.0, 0.5, 1.0}) {
        EXPECT_EQ(prokhorov_bound(0.0, a).region, prokhorov_region::omega1);
    }
    const auto c3 = prokhorov_bound(1.5, 1.4);
    EXPECT_EQ(c3.region, prokhorov_region::omega3);
    EXPECT_DOUBLE_EQ(*c3.bound, 1.4);

    const auto out = prokhorov_bound(3.0, 0.0);
    EXPECT_EQ(out.region, prokhorov_region::outside);
    EXPECT_FALSE(out.bound.has_value());

    // nu = 1 is shared by Omega_2 and Omega_3: both give 1, lower index wins.
    EXPECT_EQ(prokhorov_bound(1.0, 1.0).region, prokhorov_region::omega2);
}

TEST(ProkhorovProperty, EdgeStability)
{
    for (int i = 0; i <= 60; ++i) {
        const double mu = 0.5 + 1.5 * i / 60.0;
        const double nu = prokhorov_lower_edge(mu);
        const auto mid = prokhorov_bound(mu, nu);
        EXPECT_EQ(mid.region, prokhorov_bound(mu, nu + 1e-12).region) << mu;
        EXPECT_EQ(mid.region, prokhorov_bound(mu, nu - 1e-12).region) << mu;
        EXPECT_EQ(mid.region, prokhorov_bound(-mu, nu).region) << mu;
        EXPECT_NE(mid.region, prokhorov_region::outside);
    }
}

TEST(ProkhorovProperty, LemmaHoldsOnSamples)
{
    random_stream rng(55, 0);
    for (int i = 0; i < 500; ++i) {
        const auto w = sample_schwarz(rng, 5, 8);
        for (auto [mu, nu] : {std::pair{0.0, 0.5}, std::pair{1.5, 0.8}, std::pair{1.5, 1.4}, std::pair{1.0, -0.2}}) {
            const auto c = prokhorov_bound(mu, nu);
            ASSERT_TRUE(c.bound.has_value());
            EXPECT_LE(prokhorov_functional(w, mu, nu), *c.bound + 1e-9);
        }
    }
}

TEST(KeoghMerkes, Examples)
{
    const auto r1 = keogh_merkes_check(schwarz_map::monomial(2), complex(3.0, 1.0));
    EXPECT_DOUBLE_EQ(r1.observed, 1.0);
    EXPECT_TRUE(r1.holds());
    const auto r2 = keogh_merkes_check(schwarz_map::monomial(1), 2.0);
    EXPECT_DOUBLE_EQ(r2.observed, 2.0);
    EXPECT_DOUBLE_EQ(r2.bound, 2.0);
    EXPECT_TRUE(r2.holds());

    sampler_config cfg;
    cfg.samples = 2000;
    const auto rep = falsify("|c2 - c1^2/2|",
                             [](const schwarz_map& w) { return keogh_merkes_check(w, 0.5).observed; }, 1.0, cfg);
    EXPECT_TRUE(rep.holds());
    EXPECT_LE(rep.observed, 1.0 + 1e-9);
}

TEST(Falsify, Examples)
{
    sampler_config cfg;
    cfg.seed = 1;
    const auto a4 = falsify("|a4|", [](const schwarz_map& w) { return std::abs(taylor_a234(w, 0.3).a4); },
                            bs_a_bounds(0.3).a4, cfg);
    EXPECT_TRUE(a4.holds());
    EXPECT_NEAR(a4.observed, 1.0 / 3.0, 1e-12);
    EXPECT_EQ(a4.samples, 10005u);

    const auto g3 = falsify("|gamma3|", [](const schwarz_map& w) { return std::abs(gamma_formula(w, 0.8)[2]); },
                            gamma_bounds(0.8, 3), cfg);
    EXPECT_TRUE(g3.holds());
    EXPECT_NEAR(g3.observed, 1.0 / 6.0, 1e-12);
    EXPECT_EQ(g3.witness, "monomial(3)");

    const auto bk = falsify_class_bounds(class_tag::bk, 0.6, cfg);
    ASSERT_EQ(bk.size(), 3u);
    EXPECT_NEAR(bk[0].observed, 0.5, 1e-12);
    EXPECT_EQ(bk[0].witness, "monomial(1)");

    // A deliberately wrong bound must be caught.
    const auto wrong = falsify("|a2|", [](const schwarz_map& w) { return std::abs(w.c(1)); }, 0.9, cfg);
    EXPECT_FALSE(wrong.holds());
}

TEST(Falsify, WorkerCountDoesNotChangeResult)
{
    sampler_config cfg;
    cfg.samples = 3000;
    cfg.seed = 9;
    cfg.workers = 1;
    const auto one = falsify_class_bounds(class_tag::bs, 0.9, cfg);
    cfg.workers = 4;
    const auto four = falsify_class_bounds(class_tag::bs, 0.9, cfg);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
        EXPECT_EQ(one[k].observed, four[k].observed);
        EXPECT_EQ(one[k].witness, four[k].witness);
    }
}

TEST(Falsify, Attainment)
{
    for (double a : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        for (auto tag : {class_tag::bs, class_tag::bk}) {
            for (const auto& r : attainment_reports(tag, a)) {
                EXPECT_TRUE(r.holds()) << r.functional_name << " alpha=" << a;
            }
        }
    }
    const auto low = attainment_reports(class_tag::bs, 0.1);
    EXPECT_EQ(low.size(), 3u + max_gamma_index);
    const auto high = attainment_reports(class_tag::bs, 0.9);
    EXPECT_EQ(high.size(), 3u + 3u);
    EXPECT_EQ(attainment_reports(class_tag::bk, 0.75)[2].witness, "g1");
    EXPECT_EQ(attainment_reports(class_tag::bk, 0.25)[2].witness, "g2");
}
