#pragma once

// The target map F_alpha(z) = z / (1 - alpha z^2) and its image Omega(alpha),
// the interior of an elliptic Booth lemniscate for alpha < 1 and the plane
// slit along {iy : |y| >= 1/2} for alpha = 1.

#include <booth/report.hpp>
#include <booth/series.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace booth {

/// 3 - 2 sqrt(2): F_alpha is convex exactly for alpha up to this value.
inline const double convexity_threshold = 3.0 - 2.0 * std::sqrt(2.0);

class alpha_param {
public:
    alpha_param(double alpha) : alpha_(alpha)
    {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw std::domain_error("alpha must lie in [0, 1]");
        }
        sqrt_alpha_ = std::sqrt(alpha);
    }

    [[nodiscard]] double value() const noexcept { return alpha_; }
    [[nodiscard]] double sqrt_value() const noexcept { return sqrt_alpha_; }
    [[nodiscard]] bool target_convex() const noexcept { return alpha_ <= convexity_threshold; }

    operator double() const noexcept { return alpha_; }

private:
    double alpha_;
    double sqrt_alpha_;
};

class pole_hit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline complex f_alpha(double alpha, complex z)
{
    const complex den = 1.0 - alpha * z * z;
    if (den == complex(0)) {
        throw pole_hit("F_alpha evaluated at a pole");
    }
    return z / den;
}

/// Series of F_alpha itself: z + alpha z^3 + alpha^2 z^5 + ...
inline series f_alpha_series(double alpha, std::size_t order)
{
    series s(order);
    double p = 1.0;
    for (std::size_t k = 1; k <= order; k += 2) {
        s.at(k) = p;
        p *= alpha;
    }
    return s;
}

/// F_alpha(w(z)) for a series w vanishing at 0.
inline series f_alpha_compose(double alpha, const series& w)
{
    if (w[0] != complex(0)) {
        throw composition_requires_zero_constant("F_alpha composition needs w(0) = 0");
    }
    return w / (1.0 - alpha * (w * w));
}

/// Re w treated as 0 within this distance for the alpha = 1 slits.
inline constexpr double slit_tolerance = 1e-12;

class booth_domain {
public:
    explicit booth_domain(alpha_param alpha) : alpha_(alpha) {}

    [[nodiscard]] const alpha_param& alpha() const noexcept { return alpha_; }

    /// Defining quartic multiplied through by (1-alpha)^2 (1+alpha)^2 so it
    /// stays finite as alpha -> 1. Negative inside.
    [[nodiscard]] double scaled_quartic(complex w) const noexcept
    {
        const double a = alpha_.value();
        const double x2 = w.real() * w.real();
        const double y2 = w.imag() * w.imag();
        const double p = (1.0 - a) * (1.0 - a);
        const double q = (1.0 + a) * (1.0 + a);
        return (x2 + y2) * (x2 + y2) * p * q - x2 * q - y2 * p;
    }

    [[nodiscard]] bool contains(complex w) const noexcept
    {
        if (alpha_.value() == 1.0) {
            return !(std::abs(w.real()) < slit_tolerance && std::abs(w.imag()) >= 0.5);
        }
        if (w == complex(0)) {
            return true;
        }
        return scaled_quartic(w) < 0.0;
    }

private:
    alpha_param alpha_;
};

/// The unscaled quartic (x^2+y^2)^2 - x^2/(1-alpha)^2 - y^2/(1+alpha)^2 at
/// F_alpha(e^{i theta}); zero up to rounding since F_alpha maps the circle
/// onto the lemniscate.
inline double boundary_residual(double alpha, double theta)
{
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::domain_error("boundary_residual needs 0 <= alpha < 1");
    }
    const complex w = f_alpha(alpha, std::polar(1.0, theta));
    const double x2 = w.real() * w.real();
    const double y2 = w.imag() * w.imag();
    return (x2 + y2) * (x2 + y2) - x2 / ((1.0 - alpha) * (1.0 - alpha)) - y2 / ((1.0 + alpha) * (1.0 + alpha));
}

/// Re(z F'/F) = Re((1 + alpha z^2) / (1 - alpha z^2)).
inline double f_alpha_starlike_quantity(double alpha, complex z)
{
    const complex z2 = z * z;
    return ((1.0 + alpha * z2) / (1.0 - alpha * z2)).real();
}

/// Re(1 + z F''/F') = Re(1 + 2 alpha z^2/(1 + alpha z^2) + 4 alpha z^2/(1 - alpha z^2)).
inline double f_alpha_convex_quantity(double alpha, complex z)
{
    const complex z2 = z * z;
    return (1.0 + 2.0 * alpha * z2 / (1.0 + alpha * z2) + 4.0 * alpha * z2 / (1.0 - alpha * z2)).real();
}

struct shape_report {
    bound_report starlike;
    bound_report convex;
};

/// Minimum of the starlikeness and convexity quantities of F_alpha over the
/// grid; each holds when its minimum is >= -tolerance.
inline shape_report target_shape_checks(double alpha, const std::vector<complex>& grid, double tolerance = 1e-8)
{
    shape_report rep{make_report("min Re(zF'/F)", std::numeric_limits<double>::infinity(), 0.0, tolerance,
                                 bound_sense::lower),
                     make_report("min Re(1+zF''/F')", std::numeric_limits<double>::infinity(), 0.0, tolerance,
                                 bound_sense::lower)};
    for (auto z : grid) {
        const double s = f_alpha_starlike_quantity(alpha, z);
        const double c = f_alpha_convex_quantity(alpha, z);
        if (s < rep.starlike.observed) {
            rep.starlike.observed = s;
            rep.starlike.witness_point = z;
        }
        if (c < rep.convex.observed) {
            rep.convex.observed = c;
            rep.convex.witness_point = z;
        }
    }
    for (auto* r : {&rep.starlike, &rep.convex}) {
        r->samples = grid.size();
        r->witness = "F_alpha";
        r->settle();
    }
    return rep;
}

/// Boundary of Omega(alpha) as a closed polyline F_alpha(e^{i theta_k}).
/// For alpha = 1 the two slits are returned instead, clipped at |Im w| = clip.
inline std::vector<std::vector<complex>> domain_boundary(double alpha, std::size_t points, double clip = 3.0)
{
    alpha_param a(alpha);
    if (a.value() == 1.0) {
        std::vector<complex> upper{complex(0, 0.5), complex(0, clip)};
        std::vector<complex> lower{complex(0, -0.5), complex(0, -clip)};
        return {upper, lower};
    }
    std::vector<complex> curve;
    curve.reserve(points + 1);
    for (std::size_t k = 0; k <= points; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k % points) / static_cast<double>(points);
        curve.push_back(f_alpha(alpha, std::polar(1.0, t)));
    }
    return {curve};
}

} // namespace booth
