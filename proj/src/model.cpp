#include <twistderiv/error.hpp>
#include <twistderiv/model.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/core.h>

namespace twistderiv {

std::string_view to_string(errc code) noexcept
{
    switch (code) {
        case errc::degenerate_angle:
            return "DegenerateAngle";
        case errc::unordered_lengths:
            return "UnorderedLengths";
        case errc::length_out_of_range:
            return "LengthOutOfRange";
        case errc::index_out_of_range:
            return "IndexOutOfRange";
        case errc::partition_sum_mismatch:
            return "PartitionSumMismatch";
        case errc::invalid_range:
            return "InvalidRange";
        case errc::order_mismatch:
            return "OrderMismatch";
        case errc::order_exceeded:
            return "OrderExceeded";
        case errc::branch_point:
            return "BranchPointError";
        case errc::step_too_small:
            return "StepTooSmall";
        case errc::size_guard:
            return "SizeGuard";
        case errc::parse_error:
            return "ParseError";
    }
    return "UnknownError";
}

void check_angle(double theta)
{
    // NaN fails both comparisons and is rejected here too.
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw error(errc::degenerate_angle, fmt::format("angle {} is not in the open interval (0, pi)", theta));
    }
}

IntersectionConfig validate(IntersectionConfig config)
{
    if (!(config.total_length > 0.0) || !std::isfinite(config.total_length)) {
        throw error(errc::length_out_of_range,
                    fmt::format("translation length L = {} must be positive and finite", config.total_length));
    }
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        const auto& p = config.points[i];
        if (!(p.angle > 0.0 && p.angle < std::numbers::pi)) {
            throw error(errc::degenerate_angle,
                        fmt::format("points[{}]: angle {} is not in the open interval (0, pi)", i, p.angle));
        }
        if (i == 0) {
            if (p.length != 0.0) {
                throw error(errc::unordered_lengths,
                            fmt::format("points[0]: base point must have length 0, got {}", p.length));
            }
            continue;
        }
        if (!(p.length > config.points[i - 1].length)) {
            throw error(errc::unordered_lengths,
                        fmt::format("points[{}]: length {} does not exceed previous length {}", i, p.length,
                                    config.points[i - 1].length));
        }
        if (!(p.length < config.total_length)) {
            throw error(errc::length_out_of_range,
                        fmt::format("points[{}]: length {} is not below L = {}", i, p.length, config.total_length));
        }
    }
    return config;
}

IntersectionConfig relabel_base_point(const IntersectionConfig& config, std::size_t j)
{
    const auto n = config.points.size();
    if (j < 1 || j > n) {
        throw error(errc::index_out_of_range, fmt::format("base point index {} outside 1..{}", j, n));
    }
    const double shift = config.points[j - 1].length;
    IntersectionConfig out;
    out.total_length = config.total_length;
    out.points.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const auto& p = config.points[(j - 1 + m) % n];
        double l = p.length - shift;
        if (l < 0.0) {
            l += config.total_length;
        }
        out.points.push_back({m == 0 ? 0.0 : l, p.angle});
    }
    return out;
}

} // namespace twistderiv
