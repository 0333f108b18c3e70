#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <twistderiv/model.hpp>

namespace twistderiv {

enum class DerivativeSource { closed_form, jet_oracle, finite_difference };

std::string_view to_string(DerivativeSource source) noexcept;
std::optional<DerivativeSource> parse_source(std::string_view text) noexcept;

/// Trace and length derivatives T^(m)(0), L^(m)(0) for m = 0..order.
struct DerivativeReport {
    std::size_t n = 0;
    double total_length = 0.0;
    unsigned order = 0;
    std::vector<double> trace_derivs;
    std::vector<double> length_derivs;
    DerivativeSource source = DerivativeSource::closed_form;
    // Absolute differences of the trace derivatives against a second source.
    std::optional<std::vector<double>> deltas;

    friend bool operator==(const DerivativeReport&, const DerivativeReport&) = default;
};

DerivativeReport make_report(const IntersectionConfig& config, unsigned order, DerivativeSource source);

inline constexpr int report_schema_version = 1;

// Line-oriented "key value..." rendering, doubles with 17 significant digits:
//
//   schema twistderiv-report
//   version 1
//   source closed_form
//   n 2
//   L 2
//   order 2
//   trace_derivs 3.0861612696304874 1.4241...
//   length_derivs 2 1.2071067811865475 ...
//   deltas 0 4.4408920985006262e-16 ...     (optional)
std::string render_structured(const DerivativeReport& report);

// Inverse of render_structured. Throws error(parse_error) naming the offending line.
DerivativeReport parse_structured(std::string_view text);

std::string render_text(const DerivativeReport& report);

// |a - b| / max(1, |reference|): relative for large values, absolute near zero.
double relative_delta(double value, double reference);

// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

} // namespace twistderiv
