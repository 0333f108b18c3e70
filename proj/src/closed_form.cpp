#include <twistderiv/closed_form.hpp>
#include <twistderiv/error.hpp>

#include <cmath>

#include <fmt/core.h>

namespace twistderiv {

namespace {

void check_points(std::span<const IntersectionPoint> points, double total_length)
{
    if (!(total_length > 0.0)) {
        throw error(errc::length_out_of_range, fmt::format("translation length L = {} must be positive", total_length));
    }
    for (const auto& p : points) {
        check_angle(p.angle);
    }
}

template <typename Visit>
void visit_F_terms(std::span<const IntersectionPoint> points, double total_length, Visit&& visit)
{
    const auto r = points.size();
    const bool odd = r % 2 == 1;
    std::vector<double> lengths(r);
    std::vector<double> sines(r);
    std::vector<double> cosines(r);
    for (std::size_t i = 0; i < r; ++i) {
        lengths[i] = points[i].length;
        sines[i] = std::sin(points[i].angle);
        cosines[i] = std::cos(points[i].angle);
    }
    for (std::size_t m = 0; m <= r; m += 2) {
        for_each_subset_of_size(r, m, [&](const IndexSubset& subset) {
            FTermBreakdown term;
            term.sign = signature(subset) % 2 == 0 ? 1 : -1;
            for (std::size_t i = 1; i <= r; ++i) {
                if (subset.contains(i)) {
                    term.sin_product *= sines[i - 1];
                } else {
                    term.cos_product *= cosines[i - 1];
                }
            }
            const double arg = 0.5 * total_length - alternating_length(subset, lengths);
            term.hyperbolic = 2.0 * (odd ? std::sinh(arg) : std::cosh(arg));
            term.total = term.sign * term.sin_product * term.cos_product * term.hyperbolic;
            term.subset = subset;
            visit(term);
        });
    }
}

} // namespace

std::vector<FTermBreakdown> F_terms(std::span<const IntersectionPoint> points, double total_length)
{
    check_points(points, total_length);
    std::vector<FTermBreakdown> out;
    visit_F_terms(points, total_length, [&](const FTermBreakdown& t) { out.push_back(t); });
    return out;
}

double eval_F(std::span<const IntersectionPoint> points, double total_length)
{
    check_points(points, total_length);
    double sum = 0.0;
    visit_F_terms(points, total_length, [&](const FTermBreakdown& t) { sum += t.total; });
    return sum;
}

double eval_G(std::size_t r, const IntersectionConfig& config)
{
    const auto n = config.size();
    if (r > n) {
        throw error(errc::invalid_range, fmt::format("G_{} needs at least {} intersection points, have {}", r, r, n));
    }
    std::vector<IntersectionPoint> selected(r);
    double sum = 0.0;
    for_each_subset_of_size(n, r, [&](const IndexSubset& subset) {
        for (std::size_t j = 0; j < r; ++j) {
            selected[j] = config.points[subset.indices()[j] - 1];
        }
        sum += eval_F(selected, config.total_length);
    });
    return sum;
}

double trace_derivative_closed(const IntersectionConfig& input, unsigned k)
{
    const auto config = validate(input);
    const auto n = config.size();
    if (k == 0) {
        return 2.0 * std::cosh(0.5 * config.total_length);
    }
    if (n == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t r = k % 2; r <= std::min<std::size_t>(k, n); r += 2) {
        const auto B = coefficient_B(n, k, r).convert_to<double>();
        sum += B * eval_G(r, config);
    }
    return std::ldexp(sum, -static_cast<int>(k));
}

std::vector<double> trace_derivatives_closed(const IntersectionConfig& config, unsigned max_order)
{
    std::vector<double> out;
    out.reserve(max_order + 1);
    for (unsigned m = 0; m <= max_order; ++m) {
        out.push_back(trace_derivative_closed(config, m));
    }
    return out;
}

Jet<double> trace_jet_closed(const IntersectionConfig& config, unsigned max_order)
{
    Jet<double> jet(max_order);
    double fact = 1.0;
    for (unsigned m = 0; m <= max_order; ++m) {
        if (m > 1) {
            fact *= m;
        }
        jet[m] = trace_derivative_closed(config, m) / fact;
    }
    return jet;
}

double length_derivative_closed(const IntersectionConfig& config, unsigned k)
{
    return length_from_trace(trace_jet_closed(config, k)).derivative(k);
}

std::vector<double> length_derivatives_closed(const IntersectionConfig& config, unsigned max_order)
{
    const auto jet = length_from_trace(trace_jet_closed(config, max_order));
    std::vector<double> out;
    out.reserve(max_order + 1);
    for (unsigned m = 0; m <= max_order; ++m) {
        out.push_back(jet.derivative(m));
    }
    return out;
}

double wolpert_second_literal(const IntersectionConfig& input)
{
    const auto config = validate(input);
    const double L = config.total_length;
    const auto& pts = config.points;
    const double denom = 2.0 * std::expm1(L);
    double sum = 0.0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t q = 0; q < pts.size(); ++q) {
            // Oriented distance from x_p to x_q along the geodesic; l_pp = 0.
            const double lpq = p <= q ? pts[q].length - pts[p].length : L - (pts[p].length - pts[q].length);
            const double lqp = L - lpq;
            sum += (std::exp(lpq) + std::exp(lqp)) / denom * std::sin(pts[p].angle) * std::sin(pts[q].angle);
        }
    }
    return sum;
}

double third_derivative_literal(const IntersectionConfig& input)
{
    const auto config = validate(input);
    const double half = 0.5 * config.total_length;
    const auto& pts = config.points;
    const auto n = pts.size();

    double cos_sum = 0.0;
    for (const auto& p : pts) {
        cos_sum += std::cos(p.angle);
    }
    double triple = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const double si = std::sin(pts[i].angle), ci = std::cos(pts[i].angle);
                const double sj = std::sin(pts[j].angle), cj = std::cos(pts[j].angle);
                const double sk = std::sin(pts[k].angle), ck = std::cos(pts[k].angle);
                const double lij = pts[j].length - pts[i].length;
                const double lik = pts[k].length - pts[i].length;
                const double ljk = pts[k].length - pts[j].length;
                triple += std::sinh(half) * ci * cj * ck + std::sinh(half - lij) * si * sj * ck
                          - std::sinh(half - lik) * si * cj * sk + std::sinh(half - ljk) * ci * sj * sk;
            }
        }
    }
    const double nn = static_cast<double>(n);
    return ((6.0 * nn - 4.0) * std::sinh(half) * cos_sum + 12.0 * triple) / 8.0;
}

} // namespace twistderiv
