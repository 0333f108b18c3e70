#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace twistderiv {

// One transverse crossing of the twisting multicurve with the closed geodesic.
struct IntersectionPoint {
    double length = 0.0; // distance along the geodesic from the base crossing
    double angle = 0.0;  // crossing angle in radians, in (0, pi)

    // The complex coordinate l + i*theta used by the closed-form expansion.
    [[nodiscard]] std::complex<double> coordinate() const noexcept { return {length, angle}; }

    friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

/// Measured intersection data of a twisting multicurve with a closed geodesic.
///
/// `total_length` is the translation length of the geodesic; `points` are the
/// crossings ordered along it starting at the base point. A config with no
/// points is allowed and describes a geodesic the twist does not move.
struct IntersectionConfig {
    double total_length = 0.0;
    std::vector<IntersectionPoint> points;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }

    friend bool operator==(const IntersectionConfig&, const IntersectionConfig&) = default;
};

// Returns the config unchanged if it satisfies every geometric precondition:
// L > 0, l_1 = 0, strictly increasing lengths below L, angles in (0, pi).
// Throws twistderiv::error otherwise.
IntersectionConfig validate(IntersectionConfig config);

// Throws unless theta lies in the open interval (0, pi).
void check_angle(double theta);

// Moves the base point to the j-th crossing (1-based). Lengths become
// (l_i - l_j) mod L and the points are cyclically rotated so x_j comes first.
IntersectionConfig relabel_base_point(const IntersectionConfig& config, std::size_t j);

} // namespace twistderiv
