#pragma once

// Members of BS(alpha) (z f'/f - 1 subordinate to F_alpha) and BK(alpha)
// (z f''/f' subordinate to F_alpha), built from a Schwarz function omega via
// B(z) = F_alpha(omega(z)) = sum b_n z^n:
//
//   BS:  log(f/z) = sum (b_n / n) z^n
//   BK:  log f'   = sum (b_n / n) z^n

#include <booth/domain.hpp>
#include <booth/report.hpp>
#include <booth/schwarz.hpp>
#include <booth/series.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace booth {

enum class class_tag { bs, bk };

inline const char* to_string(class_tag t) { return t == class_tag::bs ? "bs" : "bk"; }

class non_normalized_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct class_member {
    class_tag tag;
    alpha_param alpha;
    schwarz_map omega;
    series f;       // a_0 = 0, a_1 = 1
    series fprime;  // cached derivative
    std::string name;

    /// a_k.
    [[nodiscard]] complex a(std::size_t k) const noexcept { return f[k]; }
};

namespace detail {

/// sum_{n>=1} (b_n / n) z^n for B = F_alpha(omega).
inline series log_integrand(const schwarz_map& omega, double alpha, std::size_t order)
{
    const series b = f_alpha_compose(alpha, omega.to_series(order));
    series l(order);
    for (std::size_t k = 1; k <= order; ++k) {
        l.at(k) = b[k] / static_cast<double>(k);
    }
    return l;
}

/// The closed-form log series of the extremal family:
/// sum_{k>=0} alpha^k z^{n(2k+1)} / (n(2k+1)); at alpha = 0 only z^n / n survives.
inline series extremal_log_series(unsigned n, double alpha, std::size_t order)
{
    series l(order);
    double p = 1.0;
    for (std::size_t k = 0;; ++k) {
        const std::size_t m = static_cast<std::size_t>(n) * (2 * k + 1);
        if (m > order) {
            break;
        }
        l.at(m) = p / static_cast<double>(m);
        p *= alpha;
    }
    return l;
}

} // namespace detail

inline class_member from_schwarz_bs(const schwarz_map& omega, alpha_param alpha, std::size_t order = default_order)
{
    const series f = exp0(detail::log_integrand(omega, alpha, order)).shifted_up(1);
    return {class_tag::bs, alpha, omega, f, derivative(f), "bs-member"};
}

inline class_member from_schwarz_bk(const schwarz_map& omega, alpha_param alpha, std::size_t order = default_order)
{
    series fp = exp0(detail::log_integrand(omega, alpha, order));
    series f = integrate0(fp);
    return {class_tag::bk, alpha, omega, std::move(f), std::move(fp), "bk-member"};
}

/// f_n(z) = z ((1 + sqrt(alpha) z^n) / (1 - sqrt(alpha) z^n))^{1/(2 n sqrt(alpha))},
/// with the limit z exp(z^n / n) at alpha = 0.
inline class_member extremal_fn(unsigned n, alpha_param alpha, std::size_t order = default_order)
{
    if (n == 0) {
        throw std::invalid_argument("extremal_fn needs n >= 1");
    }
    const series f = exp0(detail::extremal_log_series(n, alpha, order)).shifted_up(1);
    return {class_tag::bs, alpha, schwarz_map::monomial(n, order), f, derivative(f), "f" + std::to_string(n)};
}

/// BK extremal g with g' = exp(integral of t^{n-1} / (1 - alpha t^{2n})):
/// g_1 for n = 1, g_2 for n = 3.
inline class_member extremal_bk(unsigned n, alpha_param alpha, std::size_t order = default_order)
{
    if (n == 0) {
        throw std::invalid_argument("extremal_bk needs n >= 1");
    }
    series fp = exp0(detail::extremal_log_series(n, alpha, order));
    series f = integrate0(fp);
    std::string name = n == 1 ? "g1" : n == 3 ? "g2" : "g(n=" + std::to_string(n) + ")";
    return {class_tag::bk, alpha, schwarz_map::monomial(n, order), std::move(f), std::move(fp), std::move(name)};
}

inline class_member make_member(class_tag tag, const schwarz_map& omega, alpha_param alpha,
                                std::size_t order = default_order)
{
    return tag == class_tag::bs ? from_schwarz_bs(omega, alpha, order) : from_schwarz_bk(omega, alpha, order);
}

/// Closed-form pre-Schwarzian f_1''/f_1' = (2 + z) / ((1 + z - alpha z^2)(1 - alpha z^2)).
inline complex f1_pre_schwarzian(double alpha, complex z)
{
    const complex az2 = alpha * z * z;
    return (2.0 + z) / ((1.0 + z - az2) * (1.0 - az2));
}

/// Closed-form pre-Schwarzian g_1''/g_1' = 1 / (1 - alpha z^2).
inline complex g1_pre_schwarzian(double alpha, complex z) { return 1.0 / (1.0 - alpha * z * z); }

/// Closed-form pre-Schwarzian g_2''/g_2' = z^2 / (1 - alpha z^6).
inline complex g2_pre_schwarzian(double alpha, complex z)
{
    const complex z2 = z * z;
    return z2 / (1.0 - alpha * z2 * z2 * z2);
}

/// 1 + z f''/f' for the BS member of a Schwarz map, from exact values of
/// omega and omega': with B = F_alpha(omega), it equals 1 + B + z B' / (1 + B).
inline complex bs_convexity_value(const schwarz_map& omega, double alpha, complex z)
{
    const complex w = omega(z);
    const complex aw2 = alpha * w * w;
    const complex b = w / (1.0 - aw2);
    const complex db = (1.0 + aw2) / ((1.0 - aw2) * (1.0 - aw2)) * omega.derivative(z);
    return 1.0 + b + z * db / (1.0 + b);
}

/// Recovers F_alpha(omega(z)) from f alone: z f'/f - 1 for BS (common zero at
/// the origin cancelled), z f''/f' for BK.
inline series subordinate_image(const series& f, class_tag tag)
{
    if (tag == class_tag::bs) {
        return divide_cancel(z_derivative(f), f) - complex(1.0);
    }
    const series fp = derivative(f);
    return z_derivative(fp) / fp;
}

inline void require_normalized(const series& f)
{
    if (f.order() < 1 || std::abs(f[0]) > 1e-12 || std::abs(f[1] - complex(1.0)) > 1e-12) {
        throw non_normalized_input("function must satisfy f(0) = 0, f'(0) = 1");
    }
}

struct probe_grid {
    std::vector<double> radii{0.5, 0.7, 0.85, 0.95};
    std::size_t angles = 256;
};

/// Evaluates z f'/f - 1 (BS) or z f''/f' (BK) from the truncated series on
/// the grid and counts points whose image leaves Omega(alpha). The truncation
/// tail sum_{k > N-4} |a_k| r^k at the largest radius goes into `note`;
/// verdicts with a large tail are advisory only.
inline bound_report membership_probe(const series& f, class_tag tag, alpha_param alpha, const probe_grid& grid = {})
{
    require_normalized(f);
    const booth_domain domain(alpha);
    const series fp = derivative(f);
    const series fpp = derivative(fp);

    bound_report rep;
    rep.functional_name = std::string("points outside Omega(alpha), ") + to_string(tag) + " mode";
    rep.bound = 0.0;
    rep.tolerance = 0.0;
    std::size_t violations = 0;
    for (auto z : polar_grid(grid.radii, grid.angles)) {
        const complex w = tag == class_tag::bs ? z * fp(z) / f(z) - 1.0 : z * fpp(z) / fp(z);
        ++rep.samples;
        if (!domain.contains(w)) {
            if (violations == 0) {
                rep.witness_point = z;
                rep.witness = "w = " + detail::format_complex(w);
            }
            ++violations;
        }
    }
    rep.observed = static_cast<double>(violations);

    double rmax = 0.0;
    for (double r : grid.radii) {
        rmax = std::max(rmax, r);
    }
    double tail = 0.0;
    const std::size_t n = f.order();
    for (std::size_t k = n > 3 ? n - 3 : 1; k <= n; ++k) {
        tail += std::abs(f[k]) * std::pow(rmax, static_cast<double>(k));
    }
    rep.note = "truncated series of order " + std::to_string(n) + "; tail estimate " + fmt(tail) +
               " at r = " + fmt(rmax);
    rep.settle();
    return rep;
}

} // namespace booth
