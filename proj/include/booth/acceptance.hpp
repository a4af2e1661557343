#pragma once

// The eight end-to-end checks run by `booth_gft all-checks` and by the
// acceptance test binary. Each returns a pass flag, a one-line summary and the
// underlying reports.

#include <booth/class_member.hpp>
#include <booth/coefficients.hpp>
#include <booth/domain.hpp>
#include <booth/preschwarzian.hpp>
#include <booth/radius.hpp>
#include <booth/report.hpp>
#include <booth/series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace booth {

struct check_options {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;       // Schwarz maps per alpha in the bound searches
    std::size_t norm_samples = 1000;   // BK members in the norm sweep
    std::size_t bk_members = 100;      // BK members in the radius spot-check
    std::size_t workers = 0;
};

struct check_result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;
    std::vector<bound_report> reports;
};

namespace detail {

inline bool all_hold(const std::vector<bound_report>& reps)
{
    return std::all_of(reps.begin(), reps.end(), [](const bound_report& r) { return r.holds(); });
}

inline std::string alpha_tag(double a) { return " [alpha=" + fmt(a) + "]"; }

inline void tag_reports(std::vector<bound_report>& reps, double a)
{
    for (auto& r : reps) {
        r.functional_name += alpha_tag(a);
    }
}

inline sampler_config sampler_for(const check_options& opt)
{
    sampler_config cfg;
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    cfg.workers = opt.workers;
    return cfg;
}

inline const std::vector<double>& coefficient_alphas()
{
    static const std::vector<double> a{0.0, 0.25, 0.5, 0.75, 1.0};
    return a;
}

inline std::vector<double> tenths()
{
    std::vector<double> a;
    for (int k = 1; k <= 10; ++k) {
        a.push_back(k / 10.0);
    }
    return a;
}

inline std::vector<double> twentieths()
{
    std::vector<double> a;
    for (int k = 0; k <= 20; ++k) {
        a.push_back(k / 20.0);
    }
    return a;
}

inline check_result finish(check_result c)
{
    c.passed = c.passed && all_hold(c.reports);
    std::size_t failed = 0;
    for (const auto& r : c.reports) {
        failed += r.holds() ? 0 : 1;
    }
    if (!c.summary.empty()) {
        c.summary += "; ";
    }
    c.summary += std::to_string(c.reports.size() - failed) + "/" + std::to_string(c.reports.size()) + " reports hold";
    return c;
}

inline check_result taylor_check(int id, std::string title, class_tag tag, const check_options& opt)
{
    check_result c{id, std::move(title), true, {}, {}};
    double worst_margin = -1.0;
    for (double a : coefficient_alphas()) {
        auto found = falsify_class_bounds(tag, a, sampler_for(opt));
        found.resize(3);
        auto hit = attainment_reports(tag, a);
        hit.resize(3);
        for (const auto& r : found) {
            worst_margin = std::max(worst_margin, r.observed - r.bound);
        }
        tag_reports(found, a);
        tag_reports(hit, a);
        c.reports.insert(c.reports.end(), found.begin(), found.end());
        c.reports.insert(c.reports.end(), hit.begin(), hit.end());
    }
    c.summary = "max(observed - bound) = " + fmt(worst_margin);
    return c;
}

} // namespace detail

/// 1. |a2|, |a3|, |a4| over seeded Schwarz maps stay below the BS bounds and
/// f_1 / f_3 reach them.
inline check_result check_bs_taylor(const check_options& opt)
{
    return detail::finish(detail::taylor_check(1, "sharp Taylor bounds for BS(alpha)", class_tag::bs, opt));
}

/// 2. The same for BK with g_1 / g_2.
inline check_result check_bk_taylor(const check_options& opt)
{
    auto c = detail::taylor_check(2, "sharp Taylor bounds for BK(alpha)", class_tag::bk, opt);
    for (double a : detail::coefficient_alphas()) {
        const double bound = bk_a_bounds(a).a4;
        if (a >= 0.5) {
            auto r = make_report("|a4(g1)| attained" + detail::alpha_tag(a), std::abs(extremal_bk(1, a, 8).a(4)), bound,
                                 1e-9, bound_sense::lower);
            r.witness = "g1";
            c.reports.push_back(std::move(r));
        }
        if (a <= 0.5) {
            auto r = make_report("|a4(g2)| attained" + detail::alpha_tag(a), std::abs(extremal_bk(3, a, 8).a(4)), bound,
                                 1e-9, bound_sense::lower);
            r.witness = "g2";
            c.reports.push_back(std::move(r));
        }
    }
    return detail::finish(std::move(c));
}

/// 3. Log coefficients: 1/(2n) for n <= 3 everywhere, for n <= 10 at
/// alpha = 0.1, and 1/2 for n <= 10 at alpha = 0.9; f_n attains 1/(2n).
inline check_result check_log_coefficients(const check_options& opt)
{
    check_result c{3, "logarithmic coefficient bounds", true, {}, {}};
    std::vector<double> alphas = detail::coefficient_alphas();
    alphas.push_back(0.1);
    alphas.push_back(0.9);
    std::sort(alphas.begin(), alphas.end());
    double worst_margin = -1.0;
    for (double a : alphas) {
        const auto found = falsify_class_bounds(class_tag::bs, a, detail::sampler_for(opt));
        const bool full = a == 0.1 || a == 0.9;
        std::vector<bound_report> keep;
        for (std::size_t n = 1; n <= max_gamma_index; ++n) {
            if (n > 3 && !full) {
                break;
            }
            keep.push_back(found[2 + n]);
            worst_margin = std::max(worst_margin, found[2 + n].observed - found[2 + n].bound);
        }
        auto hit = attainment_reports(class_tag::bs, a);
        hit.erase(hit.begin(), hit.begin() + 3);
        detail::tag_reports(keep, a);
        detail::tag_reports(hit, a);
        c.reports.insert(c.reports.end(), keep.begin(), keep.end());
        c.reports.insert(c.reports.end(), hit.begin(), hit.end());
    }
    c.summary = "max(observed - bound) = " + fmt(worst_margin);
    return detail::finish(std::move(c));
}

/// 4. Radius of convexity of BS(alpha).
inline check_result check_bs_radius(const check_options& opt)
{
    check_result c{4, "radius of convexity for BS(alpha)", true, {}, {}};
    const double classic = (3.0 - std::sqrt(5.0)) / 2.0;
    const auto r0 = radius_bs(0.0);
    c.reports.push_back(make_report("|radius_bs(0) - (3-sqrt5)/2|", std::abs(r0.radius - classic), 0.0, 1e-10));

    radius_check_options ro;
    ro.seed = opt.seed;
    double psi_min = std::numeric_limits<double>::infinity();
    std::size_t signs = 0;
    std::vector<double> alphas = detail::tenths();
    for (double a : alphas) {
        const auto v = verify_radius_bs(a, ro);
        psi_min = std::min(psi_min, v.psi_min.observed);
        signs += v.sign_change ? 1 : 0;
        auto sign = make_report("f1 sign change within 1e-6 of radius" + detail::alpha_tag(a),
                                v.sign_change ? 1.0 : 0.0, 1.0, 0.0, bound_sense::lower);
        sign.witness = "f1";
        sign.note = "Re(1+zf1''/f1') = " + fmt(v.f1_inside) + " at -(r-1e-6), " + fmt(v.f1_outside) + " at -(r+1e-6)";
        std::vector<bound_report> reps{sign, v.psi_min, v.h_increase, v.f1_circle_min, v.member_bound};
        for (std::size_t k = 1; k < reps.size(); ++k) {
            reps[k].functional_name += detail::alpha_tag(a);
        }
        c.reports.insert(c.reports.end(), reps.begin(), reps.end());
    }
    c.summary = "radius_bs(0) = " + fmt(r0.radius) + ", sign changes " + std::to_string(signs) + "/" +
                std::to_string(alphas.size()) + ", min psi = " + fmt(psi_min);
    return detail::finish(std::move(c));
}

/// 5. Radius of convexity of BK(alpha).
inline check_result check_bk_radius(const check_options& opt)
{
    check_result c{5, "radius of convexity for BK(alpha)", true, {}, {}};
    double worst = 0.0;
    for (double a : detail::twentieths()) {
        worst = std::max(worst, std::abs(radius_bk(a) - m_alpha_root_bisect(a)));
    }
    c.reports.push_back(make_report("max |closed form - bisection| over alpha sweep", worst, 0.0, 1e-12));
    c.reports.push_back(
        make_report("|radius_bk(1) - (sqrt5-1)/2|", std::abs(radius_bk(1.0) - (std::sqrt(5.0) - 1.0) / 2.0), 0.0, 1e-12));
    double member_min = std::numeric_limits<double>::infinity();
    for (double a : detail::tenths()) {
        const auto v = verify_radius_bk(a, opt.bk_members, opt.seed);
        auto sign = make_report("g1 sign change at radius_bk" + detail::alpha_tag(a), v.sign_change ? 1.0 : 0.0, 1.0,
                                0.0, bound_sense::lower);
        sign.witness = "g1";
        c.reports.push_back(std::move(sign));
        if (v.member_positivity) {
            auto r = *v.member_positivity;
            member_min = std::min(member_min, r.observed);
            r.functional_name += detail::alpha_tag(a);
            c.reports.push_back(std::move(r));
        }
    }
    c.summary = "closed form vs bisection " + fmt(worst) + ", min member convexity " + fmt(member_min);
    return detail::finish(std::move(c));
}

/// 6. The conjectured quartic gives a different, wrong radius somewhere.
inline check_result check_cho(const check_options&)
{
    check_result c{6, "refutation of the conjectured radius", false, {}, {}};
    std::size_t found = 0;
    double largest = 0.0;
    double at = 0.0;
    for (double a : detail::tenths()) {
        const auto cmp = refute_cho(a);
        if (cmp.discrepancy && cmp.theorem_confirmed) {
            ++found;
            if (cmp.difference > largest) {
                largest = cmp.difference;
                at = a;
            }
        }
    }
    c.passed = found > 0;
    auto r = make_report("largest |cho root - radius_bs| with radius_bs confirmed", largest, 1e-6, 0.0,
                         bound_sense::lower);
    r.witness = "alpha=" + fmt(at);
    r.samples = 10;
    c.reports.push_back(std::move(r));
    c.summary = std::to_string(found) + "/10 alphas differ by > 1e-6 with radius_bs confirmed; largest gap " +
                fmt(largest) + " at alpha=" + fmt(at);
    return detail::finish(std::move(c));
}

/// 7. Pre-Schwarzian norms.
inline check_result check_preschwarzian(const check_options& opt)
{
    check_result c{7, "pre-Schwarzian norm", true, {}, {}};
    norm_config cfg;
    double sweep_max = 0.0;
    for (auto& r : bk_norm_sweep({0.0, 0.5, 1.0}, opt.norm_samples, opt.seed, cfg, 1e-4, opt.workers)) {
        if (r.sense == bound_sense::upper) {
            sweep_max = std::max(sweep_max, r.observed);
        }
        c.reports.push_back(std::move(r));
    }
    for (double a : {0.0, 0.5, 1.0}) {
        auto r = make_report("|norm(g1) - 1|" + detail::alpha_tag(a), std::abs(estimate_norm(g1_evaluator(a), cfg).value - 1.0),
                             0.0, 1e-4);
        r.witness = "g1";
        c.reports.push_back(std::move(r));
    }
    std::string diverged;
    for (double a : {0.25, 0.5, 1.0}) {
        const auto e = estimate_norm(f1_evaluator(a), cfg);
        const bool ok = e.diverged && e.value > 1e2;
        auto r = make_report("f1 norm estimate diverges" + detail::alpha_tag(a), ok ? 1.0 : 0.0, 1.0, 0.0,
                             bound_sense::lower);
        r.witness = "f1";
        r.witness_point = e.arg_witness;
        r.note = "estimate " + fmt(e.value) + " after " + std::to_string(e.refinement_depth) + " refinements";
        c.reports.push_back(std::move(r));
        diverged += (diverged.empty() ? "" : ",") + fmt(e.value);
    }
    const double id = estimate_norm(identity_pre_schwarzian(), cfg).value;
    c.reports.push_back(make_report("norm(identity)", id, 0.0, 0.0));
    c.passed = id == 0.0;
    c.summary = "max BK sweep estimate " + fmt(sweep_max) + ", f1 estimates " + diverged + ", identity " + fmt(id);
    return detail::finish(std::move(c));
}

/// 8. Series round trips, extremal consistency and the boundary residual.
inline check_result check_infrastructure(const check_options& opt)
{
    check_result c{8, "infrastructure properties", true, {}, {}};
    random_stream rng(opt.seed, 0x8);
    double round_trip = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t order = 8 + rng.below(41);
        series a(order), b(order);
        a.at(0) = 1.0;
        for (std::size_t k = 1; k <= order; ++k) {
            const double s = std::pow(0.7, static_cast<double>(k));
            a.at(k) = s * complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
            b.at(k) = s * complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
        }
        round_trip = std::max({round_trip, max_coeff_distance(exp0(log1(a)), a),
                               max_coeff_distance(log1(exp0(b)), b), max_coeff_distance(derivative(integrate0(a)), a)});
    }
    c.reports.push_back(make_report("series round-trip error", round_trip, 0.0, 1e-12));

    double extremal = 0.0;
    for (unsigned n = 1; n <= 4; ++n) {
        for (int k = 0; k <= 10; ++k) {
            const double a = k / 10.0;
            extremal = std::max(extremal, max_coeff_distance(extremal_fn(n, a, 32).f,
                                                             from_schwarz_bs(schwarz_map::monomial(n, 32), a, 32).f));
        }
    }
    c.reports.push_back(make_report("extremal_fn vs from_schwarz_bs", extremal, 0.0, 1e-12));

    double residual = 0.0;
    for (int k = 0; k <= 9; ++k) {
        for (int j = 0; j < 720; ++j) {
            residual = std::max(residual, std::abs(boundary_residual(k / 10.0, 2.0 * std::numbers::pi * j / 720.0)));
        }
    }
    c.reports.push_back(make_report("max boundary residual, alpha <= 0.9", residual, 0.0, 1e-10));
    c.summary = "round trip " + fmt(round_trip) + ", extremal " + fmt(extremal) + ", residual " + fmt(residual);
    return detail::finish(std::move(c));
}

using check_fn = check_result (*)(const check_options&);

inline const std::vector<check_fn>& all_check_functions()
{
    static const std::vector<check_fn> fns{check_bs_taylor,  check_bk_taylor, check_log_coefficients,
                                           check_bs_radius,  check_bk_radius, check_cho,
                                           check_preschwarzian, check_infrastructure};
    return fns;
}

inline std::vector<check_result> run_all_checks(const check_options& opt)
{
    std::vector<check_result> out;
    for (auto fn : all_check_functions()) {
        out.push_back(fn(opt));
    }
    return out;
}

} // namespace booth
