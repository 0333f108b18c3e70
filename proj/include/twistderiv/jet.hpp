#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

#include <twistderiv/error.hpp>

namespace twistderiv {

namespace detail {

template <typename T>
struct is_complex : std::false_type {
};

template <typename T>
struct is_complex<std::complex<T>> : std::true_type {
};

} // namespace detail

// Refuse arccosh when the constant term is within this distance of the branch point 1.
inline constexpr double branch_epsilon = 1e-9;

/// Truncated power series c_0 + c_1 z + ... + c_K z^K + O(z^{K+1}).
///
/// All binary operations require equal orders. Scalar may be double or
/// std::complex<double>.
template <typename Scalar>
class Jet {
public:
    using scalar_type = Scalar;

    Jet() : coeffs_(1, Scalar(0)) {}
    explicit Jet(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}
    Jet(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs)
    {
        if (coeffs_.empty()) {
            coeffs_.push_back(Scalar(0));
        }
    }
    explicit Jet(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            coeffs_.push_back(Scalar(0));
        }
    }

    static Jet constant(std::size_t order, Scalar value)
    {
        Jet out(order);
        out.coeffs_[0] = value;
        return out;
    }

    // The independent variable z.
    static Jet variable(std::size_t order)
    {
        Jet out(order);
        if (order >= 1) {
            out.coeffs_[1] = Scalar(1);
        }
        return out;
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
    Scalar& operator[](std::size_t m) { return coeffs_[m]; }
    const Scalar& operator[](std::size_t m) const { return coeffs_[m]; }

    // f^(m)(0) = m! c_m.
    [[nodiscard]] Scalar derivative(std::size_t m) const
    {
        if (m > order()) {
            throw error(errc::order_exceeded, "derivative order exceeds jet order");
        }
        double fact = 1.0;
        for (std::size_t i = 2; i <= m; ++i) {
            fact *= static_cast<double>(i);
        }
        return coeffs_[m] * fact;
    }

    Jet operator-() const
    {
        Jet out(*this);
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    Jet& operator+=(const Jet& other)
    {
        check_order(other);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            coeffs_[m] += other.coeffs_[m];
        }
        return *this;
    }

    Jet& operator-=(const Jet& other)
    {
        check_order(other);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            coeffs_[m] -= other.coeffs_[m];
        }
        return *this;
    }

    Jet& operator*=(Scalar s)
    {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    Jet& operator/=(Scalar s)
    {
        for (auto& c : coeffs_) {
            c /= s;
        }
        return *this;
    }

    Jet& operator*=(const Jet& other)
    {
        *this = *this * other;
        return *this;
    }

    // Cauchy product truncated at the common order.
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        a.check_order(b);
        Jet out(a.order());
        for (std::size_t m = 0; m <= a.order(); ++m) {
            Scalar acc(0);
            for (std::size_t j = 0; j <= m; ++j) {
                acc += a.coeffs_[j] * b.coeffs_[m - j];
            }
            out.coeffs_[m] = acc;
        }
        return out;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, Scalar s) { return a *= s; }
    friend Jet operator*(Scalar s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, Scalar s) { return a /= s; }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    void check_order(const Jet& other) const
    {
        if (other.order() != order()) {
            throw error(errc::order_mismatch, "jet orders differ");
        }
    }

    std::vector<Scalar> coeffs_;
};

// b = exp(a) via m b_m = sum_{j=1}^{m} j a_j b_{m-j}.
template <typename Scalar>
Jet<Scalar> exp(const Jet<Scalar>& a)
{
    using std::exp;
    const auto K = a.order();
    Jet<Scalar> b(K);
    b[0] = exp(a[0]);
    for (std::size_t m = 1; m <= K; ++m) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= m; ++j) {
            acc += static_cast<double>(j) * a[j] * b[m - j];
        }
        b[m] = acc / static_cast<double>(m);
    }
    return b;
}

template <typename Scalar>
Jet<Scalar> cosh(const Jet<Scalar>& a)
{
    return (exp(a) + exp(-a)) * Scalar(0.5);
}

template <typename Scalar>
Jet<Scalar> sinh(const Jet<Scalar>& a)
{
    return (exp(a) - exp(-a)) * Scalar(0.5);
}

/// Inverse of cosh on the branch with positive constant term.
///
/// Solves cosh(b) = a order by order: with s = sinh(b) and c = cosh(b),
/// m a_m = sum_{j=1}^{m} j b_j s_{m-j} fixes b_m (division by s_0), and
/// m s_m = sum_{j=1}^{m} j b_j c_{m-j} advances s. Throws branch_point when
/// a_0 is within branch_epsilon of 1 (for real scalars, also when a_0 < 1).
template <typename Scalar>
Jet<Scalar> arccosh(const Jet<Scalar>& a)
{
    using std::abs;
    using std::acosh;
    using std::sinh;
    const auto K = a.order();
    const Scalar a0 = a[0];
    if constexpr (detail::is_complex<Scalar>::value) {
        if (abs(a0 - Scalar(1)) <= branch_epsilon || abs(a0 + Scalar(1)) <= branch_epsilon) {
            throw error(errc::branch_point, "arccosh constant term is at a branch point (+-1)");
        }
    } else {
        if (!(a0 > 1.0 + branch_epsilon)) {
            throw error(errc::branch_point, "arccosh constant term must exceed 1 (non-hyperbolic trace)");
        }
    }

    Jet<Scalar> b(K);
    Jet<Scalar> s(K);
    b[0] = acosh(a0);
    s[0] = sinh(b[0]);
    for (std::size_t m = 1; m <= K; ++m) {
        Scalar acc = static_cast<double>(m) * a[m];
        for (std::size_t j = 1; j < m; ++j) {
            acc -= static_cast<double>(j) * b[j] * s[m - j];
        }
        b[m] = acc / (static_cast<double>(m) * s[0]);

        // c_{m-j} = a_{m-j} since cosh(b) = a.
        Scalar sacc(0);
        for (std::size_t j = 1; j <= m; ++j) {
            sacc += static_cast<double>(j) * b[j] * a[m - j];
        }
        s[m] = sacc / static_cast<double>(m);
    }
    return b;
}

// Length series from a trace series through T = 2 cosh(L/2).
template <typename Scalar>
Jet<Scalar> length_from_trace(const Jet<Scalar>& trace)
{
    return arccosh(trace * Scalar(0.5)) * Scalar(2);
}

} // namespace twistderiv
