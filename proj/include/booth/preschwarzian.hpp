#pragma once

// Pre-Schwarzian derivative P_f = f''/f' and its hyperbolic sup-norm
// ||P_f|| = sup over the disk of (1 - |z|^2) |P_f(z)|.

#include <booth/class_member.hpp>
#include <booth/coefficients.hpp>
#include <booth/domain.hpp>
#include <booth/parallel.hpp>
#include <booth/random.hpp>
#include <booth/report.hpp>
#include <booth/schwarz.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace booth {

class critical_point_hit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncated-series evaluators are not trusted beyond this radius.
inline constexpr double series_eval_radius = 0.9;

struct pre_schwarzian {
    std::string name;
    std::function<complex(complex)> eval;
    double max_radius = 1.0;  // evaluation is trusted for |z| <= max_radius
};

inline pre_schwarzian identity_pre_schwarzian()
{
    return {"identity", [](complex) { return complex(0.0); }, 1.0};
}

inline pre_schwarzian f1_evaluator(double alpha)
{
    return {"f1", [alpha](complex z) { return f1_pre_schwarzian(alpha, z); }, 1.0};
}

inline pre_schwarzian g1_evaluator(double alpha)
{
    return {"g1", [alpha](complex z) { return g1_pre_schwarzian(alpha, z); }, 1.0};
}

inline pre_schwarzian g2_evaluator(double alpha)
{
    return {"g2", [alpha](complex z) { return g2_pre_schwarzian(alpha, z); }, 1.0};
}

/// For f in BK(alpha) generated by omega, z f''/f' = F_alpha(omega(z)), so
/// P_f(z) = (omega(z)/z) / (1 - alpha omega(z)^2), exact for Blaschke products.
inline pre_schwarzian bk_member_evaluator(const schwarz_map& omega, double alpha)
{
    return {"bk:" + omega.describe(),
            [omega, alpha](complex z) {
                const complex w = omega(z);
                return omega.over_z(z) / (1.0 - alpha * w * w);
            },
            1.0};
}

/// f''/f' from the truncated series of f, restricted to |z| <= 0.9.
inline pre_schwarzian series_evaluator(const series& f, std::string name = "series")
{
    const series fp = derivative(f);
    const series fpp = derivative(fp);
    return {std::move(name),
            [fp, fpp](complex z) {
                const complex d = fp(z);
                if (std::abs(d) < 1e-14) {
                    throw critical_point_hit("f' vanishes at " + detail::format_complex(z));
                }
                return fpp(z) / d;
            },
            series_eval_radius};
}

struct norm_config {
    std::size_t rings = 64;
    std::size_t angles = 256;
    std::size_t levels = 3;
    std::size_t factor = 4;
    std::size_t top_k = 8;
    double ring_limit = 1.0 - 1e-4;
    double escape = 1e3;
    double growth = 2.0;
    std::size_t confirm_levels = 8;  // extra zoom levels once `escape` is crossed
};

struct norm_estimate {
    double value = 0.0;            // +inf when a pole was hit exactly
    complex arg_witness;
    bool diverged = false;
    std::size_t refinement_depth = 0;
    std::vector<double> depth_values;  // running sup after each depth
};

namespace detail {

struct norm_sample {
    double value;
    double r;
    double theta;
};

} // namespace detail

/// Sup of (1 - |z|^2)|P(z)| on a polar grid of `rings` radii (0 to the ring
/// limit) by `angles` angles, refined `levels` times around the top_k cells
/// with spacing divided by `factor` each time. Once the sup crosses `escape`
/// the zoom continues for up to `confirm_levels` more levels; the estimate
/// is declared divergent when the final sup is at least `growth` times the
/// coarse-grid sup, i.e. it keeps growing as the grid closes in on a pole.
inline norm_estimate estimate_norm(const pre_schwarzian& p, const norm_config& cfg = {})
{
    const double rmax = std::min(cfg.ring_limit, p.max_radius);
    double dr = cfg.rings > 1 ? rmax / static_cast<double>(cfg.rings - 1) : rmax;
    double dt = 2.0 * std::numbers::pi / static_cast<double>(cfg.angles);

    norm_estimate out;
    auto value_at = [&](double r, double t) {
        const complex z = std::polar(r, t);
        const double v = (1.0 - r * r) * std::abs(p.eval(z));
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    double best = -1.0;
    auto consider = [&](const detail::norm_sample& s) {
        if (s.value > best) {
            best = s.value;
            out.arg_witness = std::polar(s.r, s.theta);
        }
    };

    std::vector<detail::norm_sample> level;
    level.reserve(cfg.rings * cfg.angles);
    for (std::size_t i = 0; i < cfg.rings; ++i) {
        const double r = cfg.rings > 1 ? rmax * static_cast<double>(i) / static_cast<double>(cfg.rings - 1) : rmax;
        for (std::size_t j = 0; j < cfg.angles; ++j) {
            const double t = dt * static_cast<double>(j);
            level.push_back({value_at(r, t), r, t});
            consider(level.back());
        }
    }
    out.depth_values.push_back(best);

    const auto f = static_cast<long>(cfg.factor);
    std::size_t depth = 0;
    while (std::isfinite(best)) {
        const bool scheduled = depth < cfg.levels;
        const bool confirming = !scheduled && best >= cfg.escape && depth < cfg.levels + cfg.confirm_levels &&
                                best < cfg.growth * out.depth_values.front();
        if (!scheduled && !confirming) {
            break;
        }
        ++depth;
        const std::size_t k = std::min(cfg.top_k, level.size());
        std::partial_sort(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(k), level.end(),
                          [](const auto& x, const auto& y) {
                              if (x.value != y.value) {
                                  return x.value > y.value;
                              }
                              return x.r != y.r ? x.r < y.r : x.theta < y.theta;
                          });
        const std::vector<detail::norm_sample> seeds(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(k));
        dr /= static_cast<double>(cfg.factor);
        dt /= static_cast<double>(cfg.factor);
        level.clear();
        for (const auto& s : seeds) {
            for (long i = -f; i <= f; ++i) {
                const double r = std::clamp(s.r + static_cast<double>(i) * dr, 0.0, rmax);
                for (long j = -f; j <= f; ++j) {
                    const double t = s.theta + static_cast<double>(j) * dt;
                    level.push_back({value_at(r, t), r, t});
                    consider(level.back());
                }
            }
        }
        out.depth_values.push_back(best);
    }
    out.value = best;
    out.refinement_depth = depth;
    out.diverged = !std::isfinite(best) || (best >= cfg.escape && best >= cfg.growth * out.depth_values.front());
    return out;
}

/// Max of the norm estimate over sampled BK(alpha) members plus g_1 and the
/// identity, against the bound 1. A second report checks that g_1 reaches it.
inline std::vector<bound_report> bk_norm_sweep(const std::vector<double>& alphas, std::size_t samples,
                                               std::uint64_t seed = 0, const norm_config& cfg = {},
                                               double tolerance = 1e-4, std::size_t workers = 0)
{
    if (workers == 0) {
        workers = default_workers();
    }
    std::vector<bound_report> out;
    for (double a : alphas) {
        const alpha_param alpha(a);
        // index 0: g1 (omega = z), 1: identity (omega = 0), then samples
        auto map_at = [&](std::size_t i) {
            if (i == 0) {
                return schwarz_map::monomial(1, 8);
            }
            if (i == 1) {
                return schwarz_map::zero(8);
            }
            random_stream rng(seed, i - 2);
            return sample_schwarz(rng, 5, 8);
        };
        const std::size_t total = samples + 2;
        const auto best = parallel_arg_max(total, workers, [&](std::size_t i) {
            return estimate_norm(bk_member_evaluator(map_at(i), alpha), cfg).value;
        });
        auto rep = make_report("||P_f|| over BK(" + fmt(a) + ")", best.value, 1.0, tolerance);
        rep.witness = map_at(best.index).describe();
        rep.samples = total;
        out.push_back(std::move(rep));

        auto sharp = make_report("||P_g1|| attains 1 at alpha=" + fmt(a),
                                 estimate_norm(g1_evaluator(alpha), cfg).value, 1.0, tolerance, bound_sense::lower);
        sharp.witness = "g1";
        sharp.samples = 1;
        out.push_back(std::move(sharp));
    }
    return out;
}

} // namespace booth
