#pragma once

// Coefficient functionals of BS(alpha) / BK(alpha), the sharp bounds they
// satisfy, the two Schwarz-function coefficient lemmas the bounds rest on,
// and a seeded falsification search over Schwarz maps.

#include <booth/class_member.hpp>
#include <booth/domain.hpp>
#include <booth/parallel.hpp>
#include <booth/random.hpp>
#include <booth/report.hpp>
#include <booth/schwarz.hpp>
#include <booth/series.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace booth {

struct taylor_coeffs {
    complex a2, a3, a4;
};

/// a_2 = c_1, a_3 = (c_1^2 + c_2)/2, a_4 = ((1+2 alpha) c_1^3 + 3 c_1 c_2 + 2 c_3)/6
/// for the BS member generated by omega.
inline taylor_coeffs taylor_a234(const schwarz_map& omega, double alpha)
{
    const complex c1 = omega.c(1), c2 = omega.c(2), c3 = omega.c(3);
    return {c1, 0.5 * (c1 * c1 + c2), ((1.0 + 2.0 * alpha) * c1 * c1 * c1 + 3.0 * c1 * c2 + 2.0 * c3) / 6.0};
}

struct coefficient_bounds {
    double a2, a3, a4;
};

inline coefficient_bounds bs_a_bounds(alpha_param alpha)
{
    const double a = alpha.value();
    return {1.0, 0.5, a <= 0.5 ? 1.0 / 3.0 : (1.0 + 2.0 * a) / 6.0};
}

/// BK bounds are the BS bounds divided by n, since f in BK iff z f' in BS.
inline coefficient_bounds bk_a_bounds(alpha_param alpha)
{
    const double a = alpha.value();
    return {0.5, 1.0 / 6.0, a <= 0.5 ? 1.0 / 12.0 : (1.0 + 2.0 * a) / 24.0};
}

inline coefficient_bounds a_bounds(class_tag tag, alpha_param alpha)
{
    return tag == class_tag::bs ? bs_a_bounds(alpha) : bk_a_bounds(alpha);
}

/// gamma_1..gamma_n with log(f/z) = 2 sum gamma_k z^k; needs order(f) > n.
inline std::vector<complex> log_coefficients(const series& f, std::size_t n)
{
    require_normalized(f);
    if (f.order() < n + 1) {
        throw std::invalid_argument("series order too low for the requested log coefficients");
    }
    const series l = log1(f.shifted_down(1));
    std::vector<complex> g(n);
    for (std::size_t k = 1; k <= n; ++k) {
        g[k - 1] = 0.5 * l[k];
    }
    return g;
}

inline std::vector<complex> log_coeffs(const class_member& member, std::size_t n)
{
    if (member.tag != class_tag::bs) {
        throw std::invalid_argument("log_coeffs expects a BS member");
    }
    return log_coefficients(member.f, n);
}

/// gamma_1 = c_1/2, gamma_2 = c_2/4, gamma_3 = (alpha c_1^3 + c_3)/6.
inline std::array<complex, 3> gamma_formula(const schwarz_map& omega, double alpha)
{
    const complex c1 = omega.c(1), c2 = omega.c(2), c3 = omega.c(3);
    return {c1 / 2.0, c2 / 4.0, (alpha * c1 * c1 * c1 + c3) / 6.0};
}

/// 1/(2n) when n <= 3 or F_alpha is convex; otherwise only 1/2 is known.
inline double gamma_bounds(alpha_param alpha, std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("log coefficients start at n = 1");
    }
    if (n <= 3 || alpha.target_convex()) {
        return 1.0 / (2.0 * static_cast<double>(n));
    }
    return 0.5;
}

/// Whether gamma_bounds(alpha, n) is attained (by f_n).
inline bool gamma_bound_sharp(alpha_param alpha, std::size_t n) { return n <= 3 || alpha.target_convex(); }

// Prokhorov's lemma: |c_3 + mu c_1 c_2 + nu c_1^3| <= 1 on Omega_1 u Omega_2
// and <= |nu| on Omega_3.

enum class prokhorov_region { omega1, omega2, omega3, outside };

inline const char* to_string(prokhorov_region r)
{
    switch (r) {
    case prokhorov_region::omega1: return "Omega1";
    case prokhorov_region::omega2: return "Omega2";
    case prokhorov_region::omega3: return "Omega3";
    default: return "outside";
    }
}

/// Regions are closed; boundary tests carry this slack so points within
/// rounding of a shared edge classify consistently.
inline constexpr double prokhorov_edge_tolerance = 1e-10;

struct prokhorov_classification {
    prokhorov_region region;
    std::optional<double> bound;  // empty outside the three regions
};

/// Lower edge of Omega_2: nu = 4/27 (|mu|+1)^3 - (|mu|+1).
inline double prokhorov_lower_edge(double mu)
{
    const double t = std::abs(mu) + 1.0;
    return 4.0 / 27.0 * t * t * t - t;
}

/// Where regions overlap (their shared edges) the one with the smaller bound
/// wins, and Omega_1 before Omega_2 when the bounds agree.
inline prokhorov_classification prokhorov_bound(double mu, double nu)
{
    constexpr double eps = prokhorov_edge_tolerance;
    const double m = std::abs(mu);
    const bool in1 = m <= 0.5 + eps && nu >= -1.0 - eps && nu <= 1.0 + eps;
    const bool in2 = m >= 0.5 - eps && m <= 2.0 + eps && nu >= prokhorov_lower_edge(mu) - eps && nu <= 1.0 + eps;
    const bool in3 = m <= 2.0 + eps && nu >= 1.0 - eps;
    if (in1) {
        return {prokhorov_region::omega1, 1.0};
    }
    if (in2) {
        return {prokhorov_region::omega2, 1.0};
    }
    if (in3) {
        return {prokhorov_region::omega3, std::abs(nu)};
    }
    return {prokhorov_region::outside, std::nullopt};
}

inline double prokhorov_functional(const schwarz_map& omega, double mu, double nu)
{
    const complex c1 = omega.c(1), c2 = omega.c(2), c3 = omega.c(3);
    return std::abs(c3 + mu * c1 * c2 + nu * c1 * c1 * c1);
}

/// |c_2 - mu c_1^2| <= max(1, |mu|).
inline bound_report keogh_merkes_check(const schwarz_map& omega, complex mu, double tolerance = 1e-9)
{
    const complex c1 = omega.c(1), c2 = omega.c(2);
    auto rep = make_report("|c2 - mu c1^2|", std::abs(c2 - mu * c1 * c1), std::max(1.0, std::abs(mu)), tolerance);
    rep.witness = omega.describe();
    rep.samples = 1;
    return rep;
}

// Falsification search.

struct sampler_config {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;  // random Blaschke products
    unsigned max_degree = 5;
    unsigned monomials = 5;       // z, z^2, ..., z^monomials are always included
    std::size_t order = 8;        // series order of the sampled maps
    double tolerance = 1e-9;
    std::size_t workers = 0;      // 0: default_workers()
};

/// Map number i of a search: the monomials first, then seeded Blaschke products.
inline schwarz_map falsification_map(const sampler_config& cfg, std::size_t i)
{
    if (i < cfg.monomials) {
        return schwarz_map::monomial(static_cast<unsigned>(i + 1), cfg.order);
    }
    random_stream rng(cfg.seed, i - cfg.monomials);
    return sample_schwarz(rng, cfg.max_degree, cfg.order);
}

struct functional_spec {
    std::string name;
    double bound;
};

/// Fills values[k] with functional k evaluated on the member of omega.
using functional_batch = std::function<void(const schwarz_map&, std::span<double>)>;

/// Maximises every functional over the same sampled maps. Each report holds
/// the max, its witness map and the verdict against bound + tolerance. The
/// result depends only on the config's seed and counts, not on workers.
inline std::vector<bound_report> falsify_all(const std::vector<functional_spec>& specs, const functional_batch& eval,
                                             const sampler_config& cfg)
{
    const std::size_t total = cfg.monomials + cfg.samples;
    const std::size_t nf = specs.size();
    const std::size_t workers = cfg.workers ? cfg.workers : default_workers();
    std::vector<std::vector<arg_max>> partial(std::max<std::size_t>(workers, 1),
                                              std::vector<arg_max>(nf, arg_max{-1.0, total}));
    parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, std::size_t w) {
        std::vector<double> values(nf);
        auto& best = partial[w];
        for (std::size_t i = begin; i < end; ++i) {
            eval(falsification_map(cfg, i), values);
            for (std::size_t k = 0; k < nf; ++k) {
                if (best[k].index == total || values[k] > best[k].value) {
                    best[k] = {values[k], i};
                }
            }
        }
    });

    std::vector<bound_report> out;
    out.reserve(nf);
    for (std::size_t k = 0; k < nf; ++k) {
        arg_max best{-1.0, total};
        for (const auto& p : partial) {
            const auto& c = p[k];
            if (c.index == total) {
                continue;
            }
            if (best.index == total || c.value > best.value || (c.value == best.value && c.index < best.index)) {
                best = c;
            }
        }
        auto rep = make_report(specs[k].name, best.value, specs[k].bound, cfg.tolerance);
        rep.samples = total;
        if (best.index < total) {
            rep.witness = falsification_map(cfg, best.index).describe();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

inline bound_report falsify(const std::string& name, const std::function<double(const schwarz_map&)>& functional,
                            double bound, const sampler_config& cfg)
{
    return falsify_all({{name, bound}},
                       [&](const schwarz_map& omega, std::span<double> v) { v[0] = functional(omega); }, cfg)
        .front();
}

/// Highest log-coefficient index checked by the bound suites.
inline constexpr std::size_t max_gamma_index = 10;

/// |a_2|, |a_3|, |a_4| (and |gamma_1..gamma_10| for BS) against their bounds.
inline std::vector<bound_report> falsify_class_bounds(class_tag tag, alpha_param alpha, sampler_config cfg)
{
    const auto bounds = a_bounds(tag, alpha);
    std::vector<functional_spec> specs{{"|a2|", bounds.a2}, {"|a3|", bounds.a3}, {"|a4|", bounds.a4}};
    const std::size_t ngamma = tag == class_tag::bs ? max_gamma_index : 0;
    for (std::size_t n = 1; n <= ngamma; ++n) {
        specs.push_back({"|gamma" + std::to_string(n) + "|", gamma_bounds(alpha, n)});
    }
    cfg.order = std::max<std::size_t>(cfg.order, ngamma + 1);
    const std::size_t order = cfg.order;
    auto eval = [&](const schwarz_map& omega, std::span<double> v) {
        const auto m = make_member(tag, omega, alpha, order);
        v[0] = std::abs(m.a(2));
        v[1] = std::abs(m.a(3));
        v[2] = std::abs(m.a(4));
        if (ngamma) {
            const auto g = log_coeffs(m, ngamma);
            for (std::size_t n = 0; n < ngamma; ++n) {
                v[3 + n] = std::abs(g[n]);
            }
        }
    };
    return falsify_all(specs, eval, cfg);
}

/// The designated extremal reaches each sharp bound: |a_k| for f_1 / f_3
/// (g_1 / g_2 for BK) and |gamma_n| for f_n where the bound is sharp.
inline std::vector<bound_report> attainment_reports(class_tag tag, alpha_param alpha, double tolerance = 1e-9)
{
    const auto bounds = a_bounds(tag, alpha);
    const auto make = [&](unsigned n) {
        return tag == class_tag::bs ? extremal_fn(n, alpha, 12) : extremal_bk(n, alpha, 12);
    };
    const auto m1 = make(1);
    const auto m3 = make(3);
    std::vector<bound_report> out;
    auto add = [&](std::string name, const class_member& m, double value, double bound) {
        auto r = make_report(std::move(name), value, bound, tolerance, bound_sense::lower);
        r.witness = m.name;
        r.samples = 1;
        out.push_back(std::move(r));
    };
    add("|a2| attained", m1, std::abs(m1.a(2)), bounds.a2);
    add("|a3| attained", m1, std::abs(m1.a(3)), bounds.a3);
    const auto& a4_extremal = alpha.value() <= 0.5 ? m3 : m1;
    add("|a4| attained", a4_extremal, std::abs(a4_extremal.a(4)), bounds.a4);
    if (tag == class_tag::bs) {
        for (unsigned n = 1; n <= max_gamma_index; ++n) {
            if (!gamma_bound_sharp(alpha, n)) {
                continue;
            }
            const auto fn = extremal_fn(n, alpha, max_gamma_index + 2);
            add("|gamma" + std::to_string(n) + "| attained", fn, std::abs(log_coeffs(fn, n)[n - 1]),
                gamma_bounds(alpha, n));
        }
    }
    return out;
}

} // namespace booth
