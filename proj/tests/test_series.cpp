#include <booth/domain.hpp>
#include <booth/random.hpp>
#include <booth/series.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace booth;

namespace {

series random_series(random_stream& rng, std::size_t order, complex c0)
{
    series s(order);
    s.at(0) = c0;
    for (std::size_t k = 1; k <= order; ++k) {
        // decaying coefficients keep the recurrences well scaled
        const double scale = std::pow(0.7, static_cast<double>(k));
        s.at(k) = scale * complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    }
    return s;
}

void expect_coeffs(const series& s, std::initializer_list<complex> expected, double tol = 1e-14)
{
    std::size_t k = 0;
    for (auto c : expected) {
        EXPECT_NEAR(std::abs(s[k] - c), 0.0, tol) << "coefficient " << k;
        ++k;
    }
}

} // namespace

TEST(Series, AddSubScale)
{
    const series a(4, {1.0, 1.0});
    const series b(4, {1.0, -1.0});
    expect_coeffs(a + b, {2.0, 0.0, 0.0, 0.0, 0.0});
    expect_coeffs(series(4, {0.0, 1.0, 1.0}) * complex(2.0), {0.0, 2.0, 2.0});
    const series z = series::monomial(1, 4);
    EXPECT_EQ((z - z).valuation(), 5u);
}

TEST(Series, MixedOrdersTruncateToMinimum)
{
    const series a(6, {1.0, 2.0});
    const series b(3, {1.0});
    EXPECT_EQ((a + b).order(), 3u);
    EXPECT_EQ((a * b).order(), 3u);
    EXPECT_EQ((a / b).order(), 3u);
}

TEST(Series, Multiplication)
{
    expect_coeffs(series(5, {1.0, 1.0}) * series(5, {1.0, -1.0}), {1.0, 0.0, -1.0, 0.0, 0.0, 0.0});
    expect_coeffs(series::monomial(1, 5) * series::monomial(1, 5), {0.0, 0.0, 1.0, 0.0});
    expect_coeffs(series(5, {1.0, 1.0, 1.0}) * series(5, {1.0, -1.0}), {1.0, 0.0, 0.0, -1.0, 0.0, 0.0});
}

TEST(Series, Division)
{
    const series one = series::constant(1.0, 6);
    expect_coeffs(one / series(6, {1.0, -1.0}), {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});

    const double a = 0.3;
    const series q = series::monomial(1, 7) / series(7, {1.0, 0.0, -a});
    expect_coeffs(q, {0.0, 1.0, 0.0, a, 0.0, a * a, 0.0, a * a * a});
    EXPECT_LT(max_coeff_distance(q, f_alpha_series(a, 7)), 1e-15);
}

TEST(Series, DivisionCancellationMode)
{
    const series num(5, {0.0, 1.0, 1.0});
    const series z = series::monomial(1, 5);
    const auto q = divide_cancel(num, z);
    EXPECT_EQ(q.order(), 4u);
    expect_coeffs(q, {1.0, 1.0, 0.0, 0.0, 0.0});

    EXPECT_THROW((void)(num / z), division_by_zero_series);
    EXPECT_THROW((void)divide_cancel(z, series::monomial(2, 5)), division_by_zero_series);
    EXPECT_THROW((void)divide_cancel(z, series(5)), division_by_zero_series);
}

TEST(Series, Composition)
{
    const double a = 0.25;
    const auto fa = f_alpha_series(a, 12);
    const auto c = compose(fa, series::monomial(2, 12));
    expect_coeffs(c, {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, a, 0.0, 0.0, 0.0, a * a});

    const series s(6, {1.0, 2.0, 3.0, 4.0});
    EXPECT_EQ(compose(s, series::monomial(1, 6)), s);

    // exp(log(1+z)) = 1+z
    const series log1pz = log1(series(10, {1.0, 1.0}));
    series exp_series(10);
    double fact = 1.0;
    for (std::size_t k = 0; k <= 10; ++k) {
        exp_series.at(k) = 1.0 / fact;
        fact *= static_cast<double>(k + 1);
    }
    expect_coeffs(compose(exp_series, log1pz), {1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 1e-13);

    EXPECT_THROW((void)compose(s, series(6, {0.1, 1.0})), composition_requires_zero_constant);
}

TEST(Series, ComposeWithMonomialsIsAssociative)
{
    random_stream rng(11, 0);
    const auto s = random_series(rng, 30, complex(0.3, -0.2));
    const auto z2 = series::monomial(2, 30);
    const auto z3 = series::monomial(3, 30);
    const auto lhs = compose(compose(s, z2), z3);
    const auto rhs = compose(s, series::monomial(6, 30));
    EXPECT_LT(max_coeff_distance(lhs, rhs), 1e-15);
}

TEST(Series, LogExpPow)
{
    expect_coeffs(log1(series::constant(1.0, 6) / series(6, {1.0, -1.0})),
                  {0.0, 1.0, 1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 5, 1.0 / 6});
    expect_coeffs(powc(series(6, {1.0, 1.0}), 2.0), {1.0, 2.0, 1.0, 0.0, 0.0});

    EXPECT_THROW((void)log1(series(4, {2.0, 1.0})), branch_point_at_origin);
    EXPECT_THROW((void)powc(series(4, {0.0, 1.0}), 0.5), branch_point_at_origin);
}

// f_1(z)/z at alpha = 1/4 is ((1 + z/2)/(1 - z/2))^1. Oracle: exp of the
// series log((1+u)/(1-u)) = 2 sum u^{2k+1}/(2k+1) with u = z/2, built directly.
TEST(Series, PowcMatchesLogSeriesOracle)
{
    const std::size_t n = 16;
    const double s = 0.5;  // sqrt(1/4)
    const series base = series(n, {1.0, s}) / series(n, {1.0, -s});
    const auto p = powc(base, 1.0 / (2.0 * s));

    series log_ratio(n);
    for (std::size_t k = 1; k <= n; k += 2) {
        log_ratio.at(k) = 2.0 * std::pow(s, static_cast<double>(k)) / static_cast<double>(k);
    }
    const auto oracle = exp0(log_ratio * complex(1.0 / (2.0 * s)));
    EXPECT_LT(max_coeff_distance(p, oracle), 1e-14);
    expect_coeffs(p, {1.0, 1.0, 0.5, 1.0 / 6 + 1.0 / 12});

    // non-integer exponent against the same oracle at alpha = 0.3
    const double t = std::sqrt(0.3);
    const series base2 = series(n, {1.0, t}) / series(n, {1.0, -t});
    series log2(n);
    for (std::size_t k = 1; k <= n; k += 2) {
        log2.at(k) = 2.0 * std::pow(t, static_cast<double>(k)) / static_cast<double>(k);
    }
    EXPECT_LT(max_coeff_distance(powc(base2, 1.0 / (2.0 * t)), exp0(log2 * complex(1.0 / (2.0 * t)))), 1e-14);
}

TEST(Series, CalculusRoundTrip)
{
    expect_coeffs(derivative(series(4, {0.0, 1.0, 1.0})), {1.0, 2.0, 0.0, 0.0});
    expect_coeffs(integrate0(series(4, {1.0, 1.0})), {0.0, 1.0, 0.5, 0.0, 0.0});

    random_stream rng(5, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 40, complex(rng.uniform(), rng.uniform()));
        const auto back = derivative(integrate0(a));
        ASSERT_EQ(back.order(), a.order() - 1);
        EXPECT_LT(max_coeff_distance(back, a), 1e-15);
    }
}

TEST(Series, Evaluation)
{
    EXPECT_EQ(series(4, {1.0, 1.0, 1.0})(0.0), complex(1.0));
    EXPECT_EQ(series(4, {1.0, -1.0})(1.0), complex(0.0));

    const auto fa = f_alpha_series(0.5, 40);
    EXPECT_NEAR(std::abs(fa(0.5) - 0.5 / (1.0 - 0.125)), 0.0, 1e-12);
}

TEST(SeriesProperty, ExpLogRoundTrip)
{
    random_stream rng(2024, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t order = 8 + rng.below(41);  // up to 48
        const auto a = random_series(rng, order, 1.0);
        EXPECT_LT(max_coeff_distance(exp0(log1(a)), a), 1e-12);
        const auto b = random_series(rng, order, 0.0);
        EXPECT_LT(max_coeff_distance(log1(exp0(b)), b), 1e-12);
    }
}

TEST(SeriesProperty, DivisionInvertsMultiplication)
{
    random_stream rng(7, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(rng, 24, complex(rng.uniform(), 0.0));
        const auto b = random_series(rng, 24, complex(0.5 + rng.uniform(), rng.uniform()));
        EXPECT_LT(max_coeff_distance((a / b) * b, a), 1e-12);

        // cancellation mode: both vanish to order 2
        const auto az = a.shifted_up(2);
        const auto bz = b.shifted_up(2);
        const auto q = divide_cancel(az, bz);
        EXPECT_LT(max_coeff_distance(q * b.truncated(q.order()), a.truncated(q.order())), 1e-12);
    }
}

TEST(SeriesProperty, TruncatedFAlphaWithinTailBound)
{
    const std::size_t n = 32;
    for (double a : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        const auto fa = f_alpha_series(a, n);
        for (double r : {0.1, 0.5, 0.8, 0.9}) {
            for (int j = 0; j < 16; ++j) {
                const complex z = std::polar(r, 0.4 * j);
                const double err = std::abs(fa(z) - f_alpha(a, z));
                const double bound = 2.0 * std::pow(a, n / 2.0) * std::pow(r, n + 1.0) / (1.0 - r);
                EXPECT_LE(err, bound + 1e-15) << "alpha=" << a << " z=" << z;
            }
        }
    }
}
