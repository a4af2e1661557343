#pragma once

// Schwarz functions: analytic self-maps of the unit disk fixing the origin.

#include <booth/random.hpp>
#include <booth/report.hpp>
#include <booth/series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace booth {

inline constexpr std::size_t default_order = 32;

/// Sampled Blaschke zeros stay inside this radius.
inline constexpr double sampler_zero_radius = 0.95;

class zero_outside_disk : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Points r e^{i theta} for every listed radius and `angles` equally spaced angles.
inline std::vector<complex> polar_grid(const std::vector<double>& radii, std::size_t angles)
{
    std::vector<complex> pts;
    pts.reserve(radii.size() * angles);
    for (double r : radii) {
        for (std::size_t j = 0; j < angles; ++j) {
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles)));
        }
    }
    return pts;
}

/// `count` radii equally spaced on (0, rmax].
inline std::vector<double> radii_up_to(double rmax, std::size_t count)
{
    std::vector<double> r(count);
    for (std::size_t i = 0; i < count; ++i) {
        r[i] = rmax * static_cast<double>(i + 1) / static_cast<double>(count);
    }
    return r;
}

namespace detail {

inline std::string format_complex(complex c)
{
    std::ostringstream os;
    os << std::setprecision(17) << '(' << c.real() << ',' << c.imag() << ')';
    return os.str();
}

} // namespace detail

class schwarz_map {
public:
    struct monomial_kind {
        unsigned n;
    };
    struct blaschke_kind {
        std::vector<complex> zeros;
        complex rotation;
    };
    struct raw_kind {
        series coeffs;
    };
    using kind_type = std::variant<monomial_kind, blaschke_kind, raw_kind>;

    /// z^n.
    static schwarz_map monomial(unsigned n, std::size_t order = default_order)
    {
        if (n == 0) {
            throw std::invalid_argument("monomial Schwarz map needs n >= 1");
        }
        return schwarz_map(monomial_kind{n}, order);
    }

    /// rotation * z * prod (a_i - z) / (1 - conj(a_i) z).
    static schwarz_map blaschke(std::vector<complex> zeros, complex rotation, std::size_t order = default_order)
    {
        for (auto a : zeros) {
            if (!(std::abs(a) < 1.0)) {
                throw zero_outside_disk("Blaschke zero " + detail::format_complex(a) + " is not in the open disk");
            }
        }
        if (std::abs(std::abs(rotation) - 1.0) > 1e-12) {
            throw std::invalid_argument("Blaschke rotation must be unimodular");
        }
        return schwarz_map(blaschke_kind{std::move(zeros), rotation}, order);
    }

    /// A caller-supplied coefficient list; it is trusted to map the disk into
    /// itself, only the vanishing constant term is enforced.
    static schwarz_map raw(series coeffs)
    {
        if (coeffs[0] != complex(0)) {
            throw composition_requires_zero_constant("Schwarz map must vanish at the origin");
        }
        const auto order = coeffs.order();
        return schwarz_map(raw_kind{std::move(coeffs)}, order);
    }

    /// omega = 0.
    static schwarz_map zero(std::size_t order = default_order) { return raw(series(order)); }

    [[nodiscard]] const kind_type& kind() const noexcept { return kind_; }

    /// Series cached at construction order.
    [[nodiscard]] const series& coefficients() const noexcept { return series_; }

    /// c_k from the cached series.
    [[nodiscard]] complex c(std::size_t k) const noexcept { return series_[k]; }

    [[nodiscard]] series to_series(std::size_t order) const
    {
        if (order == series_.order()) {
            return series_;
        }
        return expand(kind_, order);
    }

    /// Exact value for monomials and Blaschke products; Horner for raw series.
    [[nodiscard]] complex operator()(complex z) const { return z * over_z(z); }

    /// omega(z) / z, regular at the origin.
    [[nodiscard]] complex over_z(complex z) const
    {
        return std::visit(
            [&](const auto& k) -> complex {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, monomial_kind>) {
                    return std::pow(z, static_cast<int>(k.n - 1));
                } else if constexpr (std::is_same_v<K, blaschke_kind>) {
                    complex p = k.rotation;
                    for (auto a : k.zeros) {
                        p *= (a - z) / (1.0 - std::conj(a) * z);
                    }
                    return p;
                } else {
                    return k.coeffs.shifted_down(1)(z);
                }
            },
            kind_);
    }

    /// omega'(z): exact for monomials and Blaschke products (product rule),
    /// truncated-series derivative for raw series.
    [[nodiscard]] complex derivative(complex z) const
    {
        return std::visit(
            [&](const auto& k) -> complex {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, monomial_kind>) {
                    return static_cast<double>(k.n) * std::pow(z, static_cast<int>(k.n - 1));
                } else if constexpr (std::is_same_v<K, blaschke_kind>) {
                    const std::size_t d = k.zeros.size();
                    std::vector<complex> phi(d), dphi(d);
                    for (std::size_t i = 0; i < d; ++i) {
                        const complex a = k.zeros[i];
                        const complex den = 1.0 - std::conj(a) * z;
                        phi[i] = (a - z) / den;
                        dphi[i] = (std::norm(a) - 1.0) / (den * den);
                    }
                    complex prod(1.0);
                    for (auto p : phi) {
                        prod *= p;
                    }
                    complex sum(0.0);
                    for (std::size_t i = 0; i < d; ++i) {
                        complex term = dphi[i];
                        for (std::size_t j = 0; j < d; ++j) {
                            if (j != i) {
                                term *= phi[j];
                            }
                        }
                        sum += term;
                    }
                    return k.rotation * (prod + z * sum);
                } else {
                    return booth::derivative(k.coeffs)(z);
                }
            },
            kind_);
    }

    [[nodiscard]] std::string describe() const
    {
        return std::visit(
            [](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, monomial_kind>) {
                    return "monomial(" + std::to_string(k.n) + ")";
                } else if constexpr (std::is_same_v<K, blaschke_kind>) {
                    std::string s = "blaschke(zeros=[";
                    for (std::size_t i = 0; i < k.zeros.size(); ++i) {
                        s += (i ? "," : "") + detail::format_complex(k.zeros[i]);
                    }
                    return s + "],rotation=" + detail::format_complex(k.rotation) + ")";
                } else {
                    return k.coeffs.valuation() > k.coeffs.order() ? "zero" : "raw-series";
                }
            },
            kind_);
    }

private:
    schwarz_map(kind_type kind, std::size_t order) : kind_(std::move(kind)), series_(expand(kind_, order)) {}

    static series expand(const kind_type& kind, std::size_t order)
    {
        return std::visit(
            [order](const auto& k) -> series {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, monomial_kind>) {
                    return series::monomial(k.n, order);
                } else if constexpr (std::is_same_v<K, blaschke_kind>) {
                    series s = series::monomial(1, order, k.rotation);
                    for (auto a : k.zeros) {
                        const series num(order, {a, complex(-1.0)});
                        const series den(order, {complex(1.0), -std::conj(a)});
                        s = s * (num / den);
                    }
                    return s;
                } else {
                    return k.coeffs.truncated(order);
                }
            },
            kind);
    }

    kind_type kind_;
    series series_;
};

/// Blaschke product of degree uniform on {0..max_degree}, zeros uniform on
/// the disk of radius 0.95, rotation uniform on the circle.
inline schwarz_map sample_schwarz(random_stream& rng, unsigned max_degree, std::size_t order = default_order)
{
    const auto degree = static_cast<std::size_t>(rng.below(std::uint64_t{max_degree} + 1));
    std::vector<complex> zeros(degree);
    for (auto& a : zeros) {
        const double r = sampler_zero_radius * std::sqrt(rng.uniform());
        a = std::polar(r, rng.angle());
    }
    const complex rotation = std::polar(1.0, rng.angle());
    return schwarz_map::blaschke(std::move(zeros), rotation, order);
}

inline schwarz_map sample_schwarz(std::uint64_t seed, unsigned max_degree, std::size_t order = default_order)
{
    random_stream rng(seed, 0);
    return sample_schwarz(rng, max_degree, order);
}

/// Largest violation over the grid of |omega(z)| <= |z| and of
/// |omega'(z)| <= (1 - |omega(z)|^2) / (1 - |z|^2). Non-positive means both hold.
inline bound_report schwarz_pick_check(const schwarz_map& omega, const std::vector<complex>& grid,
                                       double tolerance = 1e-8)
{
    bound_report rep;
    rep.functional_name = "schwarz-pick slack";
    rep.bound = 0.0;
    rep.tolerance = tolerance;
    rep.witness = omega.describe();
    rep.samples = grid.size();
    rep.observed = -std::numeric_limits<double>::infinity();
    for (auto z : grid) {
        if (!(std::abs(z) < 0.99 + 1e-15)) {
            throw std::invalid_argument("schwarz_pick_check grid must lie in |z| <= 0.99");
        }
        const complex w = omega(z);
        const double s1 = std::abs(w) - std::abs(z);
        const double s2 = std::abs(omega.derivative(z)) - (1.0 - std::norm(w)) / (1.0 - std::norm(z));
        const double s = std::max(s1, s2);
        if (s > rep.observed) {
            rep.observed = s;
            rep.witness_point = z;
        }
    }
    if (grid.empty()) {
        rep.observed = 0.0;
    }
    rep.settle();
    return rep;
}

} // namespace booth
