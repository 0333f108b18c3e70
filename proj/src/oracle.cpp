#include <twistderiv/error.hpp>
#include <twistderiv/oracle.hpp>

#include <cmath>

#include <fmt/core.h>

namespace twistderiv {

LiftEndpoints lift_endpoints(double length, double angle)
{
    check_angle(angle);
    const double lambda = std::exp(length);
    const double u = std::tan(0.5 * angle);
    return {lambda * u, -lambda / u};
}

Mat2<double> lift_normalizer(const LiftEndpoints& e)
{
    const double s = 1.0 / std::sqrt(e.a - e.b);
    return {s, -e.a * s, s, -e.b * s};
}

Mat2<double> lift_normalizer_inverse(const LiftEndpoints& e)
{
    const double s = 1.0 / std::sqrt(e.a - e.b);
    return {-e.b * s, e.a * s, -s, s};
}

Mat2<double> twist_generator_matrix(const LiftEndpoints& e)
{
    const double w = 1.0 / (2.0 * (e.a - e.b));
    return {-(e.a + e.b) * w, 2.0 * e.a * e.b * w, -2.0 * w, (e.a + e.b) * w};
}

Mat2<double> a_matrix(const IntersectionPoint& p)
{
    const double c = std::cos(p.angle);
    const double s = std::sin(p.angle);
    return {c, -std::exp(p.length) * s, -std::exp(-p.length) * s, -c};
}

Mat2<double> translation_matrix(double total_length)
{
    return {std::exp(0.5 * total_length), 0.0, 0.0, std::exp(-0.5 * total_length)};
}

double trace_A_product(std::span<const IntersectionPoint> points, double total_length)
{
    Mat2<double> prod{1.0, 0.0, 0.0, 1.0};
    for (const auto& p : points) {
        prod = prod * a_matrix(p);
    }
    return (prod * translation_matrix(total_length)).trace();
}

namespace {

template <typename S>
std::vector<Mat2<Jet<S>>> factors_impl(const IntersectionConfig& input, std::size_t order, S direction)
{
    const auto config = validate(input);
    // S(z) = diag(e^{z/2}, e^{-z/2}) with z = direction * t.
    const auto half_z = Jet<S>::variable(order) * (direction * S(0.5));
    const auto up = exp(half_z);
    const auto down = exp(-half_z);

    std::vector<Mat2<Jet<S>>> out;
    out.reserve(config.size());
    for (const auto& p : config.points) {
        const auto ends = lift_endpoints(p.length, p.angle);
        const auto f = lift_normalizer(ends);
        const auto g = lift_normalizer_inverse(ends);
        // (g diag(up, down) f)_{pq} = g_{p0} up f_{0q} + g_{p1} down f_{1q}.
        auto entry = [&](double g0, double g1, double f0, double f1) {
            return up * S(g0 * f0) + down * S(g1 * f1);
        };
        out.push_back({entry(g.a, g.b, f.a, f.c), entry(g.a, g.b, f.b, f.d), entry(g.c, g.d, f.a, f.c),
                       entry(g.c, g.d, f.b, f.d)});
    }
    return out;
}

template <typename S>
Jet<S> holonomy_impl(const IntersectionConfig& config, std::size_t order, S direction)
{
    const auto factors = factors_impl<S>(config, order, direction);
    const auto gamma = translation_matrix(config.total_length);
    Mat2<Jet<S>> prod{Jet<S>::constant(order, S(gamma.a)), Jet<S>(order), Jet<S>(order),
                      Jet<S>::constant(order, S(gamma.d))};
    // Right to left: R_1 (R_2 ( ... (R_n gamma))).
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        prod = *it * prod;
    }
    return prod.trace();
}

} // namespace

std::vector<Mat2<Jet<double>>> deformation_factors(const IntersectionConfig& config, std::size_t order)
{
    return factors_impl<double>(config, order, 1.0);
}

std::vector<Mat2<Jet<std::complex<double>>>> deformation_factors(const IntersectionConfig& config, std::size_t order,
                                                                 std::complex<double> direction)
{
    return factors_impl<std::complex<double>>(config, order, direction);
}

Jet<double> holonomy_jet(const IntersectionConfig& config, std::size_t order)
{
    return holonomy_impl<double>(config, order, 1.0);
}

Jet<std::complex<double>> holonomy_jet(const IntersectionConfig& config, std::size_t order,
                                       std::complex<double> direction)
{
    return holonomy_impl<std::complex<double>>(config, order, direction);
}

double oracle_trace_derivative(const IntersectionConfig& config, unsigned k)
{
    return holonomy_jet(config, k).derivative(k);
}

double oracle_length_derivative(const IntersectionConfig& config, unsigned k)
{
    return length_from_trace(holonomy_jet(config, k)).derivative(k);
}

std::vector<double> oracle_trace_derivatives(const IntersectionConfig& config, unsigned max_order)
{
    const auto jet = holonomy_jet(config, max_order);
    std::vector<double> out;
    for (unsigned m = 0; m <= max_order; ++m) {
        out.push_back(jet.derivative(m));
    }
    return out;
}

std::vector<double> oracle_length_derivatives(const IntersectionConfig& config, unsigned max_order)
{
    const auto jet = length_from_trace(holonomy_jet(config, max_order));
    std::vector<double> out;
    for (unsigned m = 0; m <= max_order; ++m) {
        out.push_back(jet.derivative(m));
    }
    return out;
}

std::complex<double> bend_derivative(const IntersectionConfig& config, unsigned k)
{
    static constexpr std::complex<double> powers[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return powers[k % 4] * oracle_length_derivative(config, k);
}

std::complex<double> bend_derivative_direct(const IntersectionConfig& config, unsigned k)
{
    const auto trace = holonomy_jet(config, k, std::complex<double>(0.0, 1.0));
    return length_from_trace(trace).derivative(k);
}

double trace_at_twist(const IntersectionConfig& input, double s)
{
    const auto config = validate(input);
    const double up = std::exp(0.5 * s);
    const double down = std::exp(-0.5 * s);
    Mat2<double> prod = translation_matrix(config.total_length);
    for (auto it = config.points.rbegin(); it != config.points.rend(); ++it) {
        const auto ends = lift_endpoints(it->length, it->angle);
        const auto R = lift_normalizer_inverse(ends) * Mat2<double>{up, 0.0, 0.0, down} * lift_normalizer(ends);
        prod = R * prod;
    }
    return prod.trace();
}

double finite_difference_check(const IntersectionConfig& config, unsigned k, double step)
{
    if (!(step >= min_fd_step)) {
        throw error(errc::step_too_small, fmt::format("finite-difference step {} is below {}", step, min_fd_step));
    }
    if (k > 3) {
        throw error(errc::invalid_range, fmt::format("finite differences support k <= 3, got {}", k));
    }
    auto T = [&](double s) { return trace_at_twist(config, s); };
    auto central = [&](double h) {
        switch (k) {
            case 1:
                return (T(h) - T(-h)) / (2.0 * h);
            case 2:
                return (T(h) - 2.0 * T(0.0) + T(-h)) / (h * h);
            default:
                return (T(2.0 * h) - 2.0 * T(h) + 2.0 * T(-h) - T(-2.0 * h)) / (2.0 * h * h * h);
        }
    };
    if (k == 0) {
        return T(0.0);
    }
    // Both stencils have error c2 h^2 + c4 h^4 + ...; eliminate the h^2 term.
    return (4.0 * central(step) - central(2.0 * step)) / 3.0;
}

} // namespace twistderiv
