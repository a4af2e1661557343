#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
//
// Every operation is exact on the retained coefficients; the only
// approximation is the truncation at order N. Binary operations on series of
// orders N1 and N2 produce a series of order min(N1, N2).

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace booth {

class series_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when the divisor vanishes at the origin to a higher order than the
/// dividend, or when plain division is attempted with a zero constant term.
class division_by_zero_series : public series_error {
public:
    using series_error::series_error;
};

class composition_requires_zero_constant : public series_error {
public:
    using series_error::series_error;
};

/// log and complex powers are only defined for series with constant term 1.
class branch_point_at_origin : public series_error {
public:
    using series_error::series_error;
};

template <typename T>
class basic_series {
public:
    using real_type = T;
    using value_type = std::complex<T>;

    /// The zero series of the given order.
    explicit basic_series(std::size_t order = 0) : coeffs_(order + 1) {}

    basic_series(std::size_t order, std::initializer_list<value_type> init)
        : coeffs_(order + 1)
    {
        std::size_t i = 0;
        for (auto c : init) {
            if (i > order) {
                break;
            }
            coeffs_[i++] = c;
        }
    }

    /// Takes ownership of c_0..c_N; the order is coeffs.size() - 1.
    explicit basic_series(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("series needs at least one coefficient");
        }
    }

    static basic_series constant(value_type c, std::size_t order)
    {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c z^n, or the zero series when n exceeds the order.
    static basic_series monomial(std::size_t n, std::size_t order, value_type c = value_type(1))
    {
        basic_series s(order);
        if (n <= order) {
            s.coeffs_[n] = c;
        }
        return s;
    }

    /// 1 / (1 - q z) = sum q^k z^k.
    static basic_series geometric(value_type q, std::size_t order)
    {
        basic_series s(order);
        value_type p(1);
        for (std::size_t k = 0; k <= order; ++k) {
            s.coeffs_[k] = p;
            p *= q;
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero beyond the truncation order.
    [[nodiscard]] value_type operator[](std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : value_type(0);
    }
    value_type& at(std::size_t k) { return coeffs_.at(k); }

    /// Index of the first coefficient that is exactly nonzero, or order()+1.
    [[nodiscard]] std::size_t valuation() const noexcept
    {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == value_type(0)) {
            ++k;
        }
        return k;
    }

    [[nodiscard]] basic_series truncated(std::size_t order) const
    {
        std::vector<value_type> c(order + 1);
        std::copy_n(coeffs_.begin(), std::min(order + 1, coeffs_.size()), c.begin());
        return basic_series(std::move(c));
    }

    /// Multiplies by z^k keeping the order (top coefficients fall off).
    [[nodiscard]] basic_series shifted_up(std::size_t k) const
    {
        basic_series s(order());
        for (std::size_t i = k; i <= order(); ++i) {
            s.coeffs_[i] = coeffs_[i - k];
        }
        return s;
    }

    /// Divides by z^k; the order drops by k. The low coefficients are dropped
    /// unchecked, callers must know they vanish.
    [[nodiscard]] basic_series shifted_down(std::size_t k) const
    {
        if (k > order()) {
            throw std::invalid_argument("shift exceeds series order");
        }
        return basic_series(std::vector<value_type>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    basic_series& operator+=(const basic_series& b)
    {
        coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += b.coeffs_[i];
        }
        return *this;
    }
    basic_series& operator-=(const basic_series& b)
    {
        coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= b.coeffs_[i];
        }
        return *this;
    }
    basic_series& operator*=(value_type c)
    {
        for (auto& x : coeffs_) {
            x *= c;
        }
        return *this;
    }
    basic_series& operator+=(value_type c)
    {
        coeffs_[0] += c;
        return *this;
    }
    basic_series& operator-=(value_type c)
    {
        coeffs_[0] -= c;
        return *this;
    }

    friend basic_series operator+(basic_series a, const basic_series& b) { return a += b; }
    friend basic_series operator-(basic_series a, const basic_series& b) { return a -= b; }
    friend basic_series operator+(basic_series a, value_type c) { return a += c; }
    friend basic_series operator+(value_type c, basic_series a) { return a += c; }
    friend basic_series operator-(basic_series a, value_type c) { return a -= c; }
    friend basic_series operator-(value_type c, const basic_series& a) { return -a + c; }
    friend basic_series operator*(basic_series a, value_type c) { return a *= c; }
    friend basic_series operator*(value_type c, basic_series a) { return a *= c; }
    friend basic_series operator-(basic_series a)
    {
        for (auto& x : a.coeffs_) {
            x = -x;
        }
        return a;
    }

    /// Cauchy product truncated at the smaller order.
    friend basic_series operator*(const basic_series& a, const basic_series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        basic_series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == value_type(0)) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Quotient for a divisor with nonzero constant term.
    friend basic_series operator/(const basic_series& a, const basic_series& b)
    {
        if (b.coeffs_[0] == value_type(0)) {
            throw division_by_zero_series("divisor has zero constant term; use divide_cancel");
        }
        const std::size_t n = std::min(a.order(), b.order());
        basic_series q(n);
        const value_type inv = value_type(1) / b.coeffs_[0];
        for (std::size_t k = 0; k <= n; ++k) {
            value_type acc = a.coeffs_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc -= b.coeffs_[j] * q.coeffs_[k - j];
            }
            q.coeffs_[k] = acc * inv;
        }
        return q;
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

    /// Horner evaluation of the truncated polynomial.
    [[nodiscard]] value_type operator()(value_type z) const noexcept
    {
        value_type acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    }

private:
    std::vector<value_type> coeffs_;
};

using series = basic_series<double>;
using complex = std::complex<double>;

/// Quotient a/b when both vanish at the origin; the common factor z^k with
/// k = valuation(b) is cancelled first, so the result has order
/// min(order(a), order(b)) - k.
template <typename T>
basic_series<T> divide_cancel(const basic_series<T>& a, const basic_series<T>& b)
{
    const std::size_t vb = b.valuation();
    if (vb > b.order()) {
        throw division_by_zero_series("divisor is the zero series");
    }
    if (vb > a.valuation()) {
        throw division_by_zero_series("divisor vanishes to higher order than dividend");
    }
    const std::size_t n = std::min(a.order(), b.order());
    return a.truncated(n).shifted_down(vb) / b.truncated(n).shifted_down(vb);
}

/// outer(inner(z)) by Horner's scheme; inner must vanish at 0.
template <typename T>
basic_series<T> compose(const basic_series<T>& outer, const basic_series<T>& inner)
{
    if (inner[0] != typename basic_series<T>::value_type(0)) {
        throw composition_requires_zero_constant("inner series must vanish at the origin");
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const auto in = inner.truncated(n);
    basic_series<T> acc(n);
    for (std::size_t k = n + 1; k-- > 0;) {
        acc = acc * in;
        acc += outer[k];
    }
    return acc;
}

template <typename T>
basic_series<T> derivative(const basic_series<T>& a)
{
    if (a.order() == 0) {
        return basic_series<T>(0);
    }
    basic_series<T> d(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        d.at(k - 1) = a[k] * static_cast<T>(k);
    }
    return d;
}

/// z a'(z) at the same order: coefficients k a_k.
template <typename T>
basic_series<T> z_derivative(const basic_series<T>& a)
{
    basic_series<T> s(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        s.at(k) = a[k] * static_cast<T>(k);
    }
    return s;
}

/// Antiderivative vanishing at 0, kept at the input order (the z^{N+1} term
/// is dropped), so derivative(integrate0(a)) reproduces a_0..a_{N-1}.
template <typename T>
basic_series<T> integrate0(const basic_series<T>& a)
{
    basic_series<T> s(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        s.at(k) = a[k - 1] / static_cast<T>(k);
    }
    return s;
}

namespace detail {

template <typename T>
void require_unit_constant(const basic_series<T>& a, const char* what)
{
    if (std::abs(a[0] - typename basic_series<T>::value_type(1)) > T(1e-12)) {
        throw branch_point_at_origin(std::string(what) + " requires constant term 1");
    }
}

} // namespace detail

/// Principal logarithm of a series with a(0) = 1.
template <typename T>
basic_series<T> log1(const basic_series<T>& a)
{
    detail::require_unit_constant(a, "log1");
    const std::size_t n = a.order();
    basic_series<T> b(n);
    // a' = a b'  =>  k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        auto acc = a[k] * static_cast<T>(k);
        for (std::size_t j = 1; j < k; ++j) {
            acc -= static_cast<T>(j) * b[j] * a[k - j];
        }
        b.at(k) = acc / static_cast<T>(k);
    }
    return b;
}

template <typename T>
basic_series<T> exp0(const basic_series<T>& a)
{
    const std::size_t n = a.order();
    basic_series<T> e(n);
    e.at(0) = std::exp(a[0]);
    // e' = a' e  =>  k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        typename basic_series<T>::value_type acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<T>(j) * a[j] * e[k - j];
        }
        e.at(k) = acc / static_cast<T>(k);
    }
    return e;
}

/// a^gamma on the branch with value 1 at the origin; a(0) must be 1.
template <typename T>
basic_series<T> powc(const basic_series<T>& a, typename basic_series<T>::value_type gamma)
{
    detail::require_unit_constant(a, "powc");
    const std::size_t n = a.order();
    basic_series<T> p(n);
    p.at(0) = 1;
    // a p' = gamma a' p  =>  k p_k = sum_{j=1}^{k} ((gamma + 1) j - k) a_j p_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        typename basic_series<T>::value_type acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += ((gamma + T(1)) * static_cast<T>(j) - static_cast<T>(k)) * a[j] * p[k - j];
        }
        p.at(k) = acc / static_cast<T>(k);
    }
    return p;
}

/// Largest coefficientwise distance over the common orders.
template <typename T>
T max_coeff_distance(const basic_series<T>& a, const basic_series<T>& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    T m(0);
    for (std::size_t k = 0; k <= n; ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

} // namespace booth
