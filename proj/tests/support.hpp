#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <twistderiv/model.hpp>

namespace twistderiv::fixtures {

struct ConfigRanges {
    std::size_t min_n = 1;
    std::size_t max_n = 6;
    double min_length = 0.5;
    double max_length = 5.0;
    double min_angle = 0.1;
    double max_angle = std::numbers::pi - 0.1;
};

// Valid config with n crossings: l_1 = 0, the rest sorted uniform draws in (0, L).
inline IntersectionConfig random_config(std::mt19937_64& rng, std::size_t n, const ConfigRanges& ranges = {})
{
    std::uniform_real_distribution<double> len(ranges.min_length, ranges.max_length);
    std::uniform_real_distribution<double> ang(ranges.min_angle, ranges.max_angle);
    IntersectionConfig c;
    c.total_length = len(rng);
    std::uniform_real_distribution<double> pos(0.0, c.total_length);
    std::vector<double> ls{0.0};
    while (ls.size() < n) {
        const double l = pos(rng);
        if (l > 1e-6 && l < c.total_length && std::find(ls.begin(), ls.end(), l) == ls.end()) {
            ls.push_back(l);
        }
    }
    std::sort(ls.begin(), ls.end());
    ls.resize(n);
    for (double l : ls) {
        c.points.push_back({l, ang(rng)});
    }
    return c;
}

inline IntersectionConfig random_config(std::mt19937_64& rng, const ConfigRanges& ranges = {})
{
    std::uniform_int_distribution<std::size_t> count(ranges.min_n, ranges.max_n);
    return random_config(rng, count(rng), ranges);
}

// Arbitrary (unordered) crossing data for matrix identities that do not need a valid config.
inline std::vector<IntersectionPoint> random_points(std::mt19937_64& rng, std::size_t r, double max_length = 5.0)
{
    std::uniform_real_distribution<double> len(0.0, max_length);
    std::uniform_real_distribution<double> ang(0.1, std::numbers::pi - 0.1);
    std::vector<IntersectionPoint> pts(r);
    for (auto& p : pts) {
        p = {len(rng), ang(rng)};
    }
    return pts;
}

// T'(0) = sinh(L/2) sum cos(theta_i).
inline double first_trace_literal(const IntersectionConfig& c)
{
    double sum = 0.0;
    for (const auto& p : c.points) {
        sum += std::cos(p.angle);
    }
    return std::sinh(0.5 * c.total_length) * sum;
}

// T''(0) = sum_{i<j} (c_i c_j cosh(L/2) + s_i s_j cosh(L/2 - l_ij)) + n cosh(L/2) / 2.
inline double second_trace_literal(const IntersectionConfig& c)
{
    const double half = 0.5 * c.total_length;
    const auto& p = c.points;
    double sum = 0.5 * static_cast<double>(p.size()) * std::cosh(half);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            sum += std::cos(p[i].angle) * std::cos(p[j].angle) * std::cosh(half)
                   + std::sin(p[i].angle) * std::sin(p[j].angle) * std::cosh(half - (p[j].length - p[i].length));
        }
    }
    return sum;
}

inline double rel_err(double value, double reference)
{
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

} // namespace twistderiv::fixtures
