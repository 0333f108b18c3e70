#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <twistderiv/model.hpp>

namespace twistderiv {

/// Parses and validates a JSON intersection config:
///
///   { "L": 2.0,
///     "points": [ {"l": 0.0, "theta": 1.0472}, {"l": 0.7, "theta": 0.7854} ],
///     "degrees": false }
///
/// "degrees": true reads every theta in degrees. An optional "n" must match the
/// number of points. Syntax and validation errors are thrown as twistderiv::error
/// with a "line N:" prefix whenever the offending location is known.
IntersectionConfig parse_config(std::string_view text);
IntersectionConfig load_config(const std::filesystem::path& path);

std::string render_config(const IntersectionConfig& config);

} // namespace twistderiv
