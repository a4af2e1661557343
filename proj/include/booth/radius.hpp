#pragma once

// Radii of convexity.
//
// BS(alpha): the radius is min(r', r'') where r' is the root in (0,1) of
//   l(r) = alpha^2 r^4 + alpha r^3 + (1 - 2 alpha) r^2 - 3 r + 1
// and r'' the root of m(r) = 1 - r - alpha r^2. The lower bound
//   Re(1 + z f''/f') >= h(|z|, |omega(z)|) >= h(r, r) = l(r) / ((1 - alpha r^2) m(r))
// holds for every member, and f_1 attains it at z = -r.
//
// BK(alpha): the radius is r'' itself.

#include <booth/class_member.hpp>
#include <booth/domain.hpp>
#include <booth/parallel.hpp>
#include <booth/random.hpp>
#include <booth/report.hpp>
#include <booth/schwarz.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace booth {

class bracket_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_violation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline double l_alpha(double alpha, double r)
{
    return (((alpha * alpha * r + alpha) * r + (1.0 - 2.0 * alpha)) * r - 3.0) * r + 1.0;
}

inline double l_alpha_prime(double alpha, double r)
{
    return ((4.0 * alpha * alpha * r + 3.0 * alpha) * r + 2.0 * (1.0 - 2.0 * alpha)) * r - 3.0;
}

inline double m_alpha(double alpha, double r) { return 1.0 - r - alpha * r * r; }

inline double m_alpha_prime(double alpha, double r) { return -1.0 - 2.0 * alpha * r; }

/// The quartic 1 - 3r + (1 - 6 alpha) r^2 + 5 alpha r^3 + 5 alpha^2 r^4 whose
/// smallest positive root was conjectured to give the BS radius.
inline double cho_quartic(double alpha, double r)
{
    return (((5.0 * alpha * alpha * r + 5.0 * alpha) * r + (1.0 - 6.0 * alpha)) * r - 3.0) * r + 1.0;
}

inline double cho_quartic_prime(double alpha, double r)
{
    return ((20.0 * alpha * alpha * r + 15.0 * alpha) * r + 2.0 * (1.0 - 6.0 * alpha)) * r - 3.0;
}

struct root_bracket {
    double root;
    double lo;
    double hi;
    double residual;  // |f(root)|
};

/// Bisection on a sign change down to width `tol`, then up to three Newton
/// steps, each kept only if it stays inside the bracket and lowers |f|.
template <typename F, typename DF>
root_bracket bisect_root(F&& f, DF&& df, double lo, double hi, double tol = 1e-13)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        return {lo, lo, lo, 0.0};
    }
    if (fhi == 0.0) {
        return {hi, hi, hi, 0.0};
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw bracket_failure("no sign change on [" + fmt(lo) + ", " + fmt(hi) + "]");
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    double fx = std::abs(f(x));
    for (int it = 0; it < 3; ++it) {
        const double d = df(x);
        if (d == 0.0) {
            break;
        }
        const double y = x - f(x) / d;
        const double fy = std::abs(f(y));
        if (!(y >= lo && y <= hi) || !(fy < fx)) {
            break;
        }
        x = y;
        fx = fy;
    }
    return {x, lo, hi, fx};
}

/// Root of m_alpha in (0, 1], written as 2 / (1 + sqrt(1 + 4 alpha)) so that
/// alpha = 0 gives the limit 1 without a special case.
inline double m_alpha_root(double alpha) { return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * alpha)); }

struct radius_result {
    double alpha = 0.0;
    double r_prime = 0.0;
    double r_doubleprime = 0.0;
    double radius = 0.0;
    double bracket_lo = 0.0;  // final bisection bracket around r'
    double bracket_hi = 0.0;
    double residual_l = 0.0;
    double residual_m = 0.0;
};

inline radius_result radius_bs(alpha_param alpha)
{
    const double a = alpha.value();
    const auto root = bisect_root([a](double r) { return l_alpha(a, r); },
                                  [a](double r) { return l_alpha_prime(a, r); }, 1e-9, 1.0 - 1e-9);
    radius_result res;
    res.alpha = a;
    res.r_prime = root.root;
    res.bracket_lo = root.lo;
    res.bracket_hi = root.hi;
    res.residual_l = root.residual;
    res.r_doubleprime = m_alpha_root(a);
    res.residual_m = std::abs(m_alpha(a, res.r_doubleprime));
    res.radius = std::min(res.r_prime, res.r_doubleprime);
    return res;
}

inline double radius_bk(alpha_param alpha) { return m_alpha_root(alpha.value()); }

/// The root of m_alpha found by bracketed bisection on [0, 1]; the
/// independent route for the closed form.
inline double m_alpha_root_bisect(double alpha)
{
    return bisect_root([alpha](double r) { return m_alpha(alpha, r); },
                       [alpha](double r) { return m_alpha_prime(alpha, r); }, 0.0, 1.0, 1e-15)
        .root;
}

/// Lower bound for Re(1 + z f''/f') at |z| = r, |omega(z)| = s:
///   1 - s/(1 - alpha s^2) - r (1 + alpha s^2)(1 - s^2) / ((1 - r^2) m(s) (1 - alpha s^2)).
inline double h(double alpha, double r, double s)
{
    if (!(s >= 0.0 && s <= r && r < 1.0)) {
        throw domain_violation("h needs 0 <= s <= r < 1");
    }
    const double ms = m_alpha(alpha, s);
    const double q = 1.0 - alpha * s * s;
    if (!(ms > 0.0) || !(q > 0.0)) {
        throw domain_violation("h evaluated where m_alpha(s) <= 0");
    }
    return 1.0 - s / q - r * (1.0 + alpha * s * s) * (1.0 - s * s) / ((1.0 - r * r) * ms * q);
}

/// Numerator polynomial of -dh/ds; nonnegative on [0, 1).
inline double psi(double alpha, double s)
{
    const double a = alpha;
    const double c[7] = {1.0,
                         -(2.0 - 6.0 * a),
                         1.0 - 4.0 * a,
                         -4.0 * a * (1.0 + a),
                         a * (4.0 - a),
                         2.0 * a * a * (3.0 - a),
                         -a * a};
    double acc = 0.0;
    for (int k = 6; k >= 0; --k) {
        acc = acc * s + c[k];
    }
    return acc;
}

/// Re(1 + z f_1''/f_1') from the closed-form pre-Schwarzian of f_1.
inline double f1_convexity(double alpha, complex z) { return (1.0 + z * f1_pre_schwarzian(alpha, z)).real(); }

/// Re(1 + z g_1''/g_1') = Re(1 + z / (1 - alpha z^2)).
inline double g1_convexity(double alpha, complex z) { return (1.0 + z * g1_pre_schwarzian(alpha, z)).real(); }

template <typename F>
std::pair<double, complex> circle_min(F&& value, double r, std::size_t angles)
{
    double best = std::numeric_limits<double>::infinity();
    complex arg;
    for (std::size_t j = 0; j < angles; ++j) {
        const complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles));
        const double v = value(z);
        if (v < best) {
            best = v;
            arg = z;
        }
    }
    return {best, arg};
}

struct radius_check_options {
    double psi_step = 1e-3;
    double psi_max = 0.999;
    std::size_t h_samples = 10000;
    double sign_offset = 1e-6;  // f_1 is probed at z = -(radius -+ offset)
    std::size_t circle_angles = 1024;
    std::size_t members = 200;  // random BS members for the lower-bound check
    std::size_t member_angles = 64;
    std::uint64_t seed = 0;
};

struct radius_verification {
    radius_result radius;
    bound_report psi_min;        // min psi on the grid, >= -1e-12
    bound_report h_increase;     // max of h(r, s2) - h(r, s1) over s1 <= s2, <= 1e-12
    double f1_inside = 0.0;      // f_1 convexity value at z = -(radius - offset)
    double f1_outside = 0.0;     // ... at z = -(radius + offset)
    bool sign_change = false;
    bound_report f1_circle_min;  // min over circles |z| = r < radius - offset, >= 0
    std::optional<double> f1_near_pole;  // |value| just inside r'' (alpha > 0)
    bound_report member_bound;   // min over members of Re(1 + z f''/f') - h(r, r), >= -1e-9

    [[nodiscard]] bool passed() const
    {
        return psi_min.holds() && h_increase.holds() && sign_change && f1_circle_min.holds() && member_bound.holds();
    }
};

inline radius_verification verify_radius_bs(alpha_param alpha, const radius_check_options& opt = {})
{
    const double a = alpha.value();
    radius_verification out;
    out.radius = radius_bs(alpha);
    const double rad = out.radius.radius;

    double psi_lo = std::numeric_limits<double>::infinity();
    double psi_arg = 0.0;
    const auto steps = static_cast<std::size_t>(std::llround(opt.psi_max / opt.psi_step));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double s = std::min(opt.psi_max, static_cast<double>(k) * opt.psi_step);
        const double v = psi(a, s);
        if (v < psi_lo) {
            psi_lo = v;
            psi_arg = s;
        }
    }
    out.psi_min = make_report("min psi_alpha(s)", psi_lo, 0.0, 1e-12, bound_sense::lower);
    out.psi_min.witness_point = complex(psi_arg);
    out.psi_min.samples = steps + 1;

    // h(r, .) must be nonincreasing on [0, min(r, r'')).
    random_stream rng(opt.seed, 0x68);
    double worst = -std::numeric_limits<double>::infinity();
    std::optional<complex> worst_at;
    const double s_cap = out.radius.r_doubleprime * (1.0 - 1e-9);
    for (std::size_t i = 0; i < opt.h_samples; ++i) {
        const double r = 0.999 * rng.uniform();
        const double top = std::min(r, s_cap);
        double s1 = top * rng.uniform();
        double s2 = top * rng.uniform();
        if (s1 > s2) {
            std::swap(s1, s2);
        }
        const double inc = h(a, r, s2) - h(a, r, s1);
        if (inc > worst) {
            worst = inc;
            worst_at = complex(s1, s2);
        }
    }
    out.h_increase = make_report("max h(r,s2) - h(r,s1), s1 <= s2", worst, 0.0, 1e-12);
    out.h_increase.witness_point = worst_at;
    out.h_increase.samples = opt.h_samples;

    out.f1_inside = f1_convexity(a, complex(-(rad - opt.sign_offset)));
    out.f1_outside = f1_convexity(a, complex(-(rad + opt.sign_offset)));
    out.sign_change = out.f1_inside > 0.0 && out.f1_outside < 0.0;

    double cmin = std::numeric_limits<double>::infinity();
    complex carg;
    for (double frac : {0.25, 0.5, 0.75, 0.9, 0.99}) {
        const auto [v, z] = circle_min([a](complex z) { return f1_convexity(a, z); }, frac * rad, opt.circle_angles);
        if (v < cmin) {
            cmin = v;
            carg = z;
        }
    }
    {
        const auto [v, z] = circle_min([a](complex z) { return f1_convexity(a, z); }, rad - opt.sign_offset,
                                       opt.circle_angles);
        if (v < cmin) {
            cmin = v;
            carg = z;
        }
    }
    out.f1_circle_min = make_report("min Re(1+z f1''/f1') inside radius", cmin, 0.0, 0.0, bound_sense::lower);
    out.f1_circle_min.witness = "f1";
    out.f1_circle_min.witness_point = carg;

    if (a > 0.0) {
        out.f1_near_pole = std::abs(f1_convexity(a, complex(-(out.radius.r_doubleprime - 1e-9))));
    }

    double mmin = std::numeric_limits<double>::infinity();
    std::string mwit;
    std::optional<complex> mz;
    for (std::size_t i = 0; i < opt.members; ++i) {
        random_stream srng(opt.seed, 0x10000 + i);
        const auto omega = sample_schwarz(srng, 5, 8);
        for (double frac : {0.25, 0.5, 0.75, 0.95}) {
            const double r = frac * rad;
            const double floor = h(a, r, r);
            const auto [v, z] = circle_min([&](complex z) { return bs_convexity_value(omega, a, z).real(); }, r,
                                           opt.member_angles);
            if (v - floor < mmin) {
                mmin = v - floor;
                mwit = omega.describe();
                mz = z;
            }
        }
    }
    out.member_bound = make_report("min Re(1+zf''/f') - h(r,r) over BS members", mmin, 0.0, 1e-9, bound_sense::lower);
    out.member_bound.witness = mwit;
    out.member_bound.witness_point = mz;
    out.member_bound.samples = opt.members;
    return out;
}

struct bk_radius_verification {
    double radius = 0.0;
    double bisection_root = 0.0;
    double g1_inside = 0.0;  // g_1 convexity value at z = -(radius - 1e-6)
    double g1_outside = 0.0;
    bool sign_change = false;
    std::optional<bound_report> member_positivity;  // only when radius - 1e-3 <= 0.9

    [[nodiscard]] bool passed() const
    {
        return std::abs(radius - bisection_root) <= 1e-12 && sign_change &&
               (!member_positivity || member_positivity->holds());
    }
};

/// Closed form against bisection, the sign change of g_1 at the radius, and
/// for r = radius - 1e-3 <= 0.9 the minimum of Re(1 + z f''/f') over |z| = r
/// for random BK members, evaluated from their truncated series.
inline bk_radius_verification verify_radius_bk(alpha_param alpha, std::size_t members = 100, std::uint64_t seed = 0,
                                               std::size_t order = 160)
{
    const double a = alpha.value();
    bk_radius_verification out;
    out.radius = radius_bk(alpha);
    out.bisection_root = m_alpha_root_bisect(a);
    out.g1_inside = g1_convexity(a, complex(-(out.radius - 1e-6)));
    out.g1_outside = g1_convexity(a, complex(-(out.radius + 1e-6)));
    out.sign_change = out.g1_inside > 0.0 && (a == 0.0 || out.g1_outside < 0.0);

    const double r = out.radius - 1e-3;
    if (r <= 0.9) {
        double worst = std::numeric_limits<double>::infinity();
        std::string wit;
        std::optional<complex> wz;
        for (std::size_t i = 0; i < members; ++i) {
            random_stream rng(seed, 0x20000 + i);
            const auto m = from_schwarz_bk(sample_schwarz(rng, 5, order), alpha, order);
            const series fpp = derivative(m.fprime);
            const auto [v, z] = circle_min(
                [&](complex z) { return (1.0 + z * fpp(z) / m.fprime(z)).real(); }, r, 256);
            if (v < worst) {
                worst = v;
                wit = m.omega.describe();
                wz = z;
            }
        }
        auto rep = make_report("min Re(1+zf''/f') at radius_bk - 1e-3", worst, 0.0, 1e-8, bound_sense::lower);
        rep.witness = wit;
        rep.witness_point = wz;
        rep.samples = members;
        rep.note = "series order " + std::to_string(order);
        out.member_positivity = rep;
    }
    return out;
}

/// Smallest positive root of the conjectured quartic, searched on (0, 2].
inline std::optional<root_bracket> cho_root(double alpha)
{
    auto f = [alpha](double r) { return cho_quartic(alpha, r); };
    auto df = [alpha](double r) { return cho_quartic_prime(alpha, r); };
    constexpr double step = 1e-3;
    double lo = 0.0;
    double flo = f(lo);
    for (int k = 1; k <= 2000; ++k) {
        const double hi = k * step;
        const double fhi = f(hi);
        if ((flo < 0.0) != (fhi < 0.0) || fhi == 0.0) {
            return bisect_root(f, df, lo, hi);
        }
        lo = hi;
        flo = fhi;
    }
    return std::nullopt;
}

struct cho_comparison {
    double alpha = 0.0;
    std::optional<double> cho_root;
    double radius = 0.0;
    double difference = 0.0;  // |cho_root - radius|
    bool discrepancy = false; // difference > 1e-6
    double probe_r = 0.0;     // midpoint between the two candidates
    double h_at_probe = 0.0;  // class-wide lower bound h(r, r) at probe_r
    double f1_at_probe = 0.0; // min over |z| = probe_r of Re(1 + z f_1''/f_1')
    bool theorem_confirmed = false;
};

/// Compares the conjectured radius with radius_bs. Where they differ, the
/// probe radius between them decides: if the conjectured root is smaller,
/// every member is still convex at the probe (h > 0, f_1 circle min > 0); if
/// larger, f_1 already fails there.
inline cho_comparison refute_cho(alpha_param alpha)
{
    const double a = alpha.value();
    cho_comparison out;
    out.alpha = a;
    const auto rb = radius_bs(alpha);
    out.radius = rb.radius;
    const auto root = cho_root(a);
    const bool sign_ok = f1_convexity(a, complex(-(rb.radius - 1e-6))) > 0.0 &&
                         f1_convexity(a, complex(-(rb.radius + 1e-6))) < 0.0;
    if (!root) {
        out.discrepancy = true;
        out.difference = std::numeric_limits<double>::infinity();
        out.theorem_confirmed = sign_ok;
        return out;
    }
    out.cho_root = root->root;
    out.difference = std::abs(root->root - rb.radius);
    out.discrepancy = out.difference > 1e-6;
    out.probe_r = 0.5 * (root->root + rb.radius);
    try {
        out.h_at_probe = h(a, out.probe_r, out.probe_r);
    } catch (const domain_violation&) {
        out.h_at_probe = -std::numeric_limits<double>::infinity();
    }
    out.f1_at_probe = circle_min([a](complex z) { return f1_convexity(a, z); }, out.probe_r, 1024).first;
    if (!out.discrepancy) {
        out.theorem_confirmed = sign_ok;
    } else if (root->root < rb.radius) {
        out.theorem_confirmed = sign_ok && out.h_at_probe > 0.0 && out.f1_at_probe > 0.0;
    } else {
        out.theorem_confirmed = sign_ok && out.f1_at_probe < 0.0;
    }
    return out;
}

} // namespace booth
