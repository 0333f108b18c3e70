#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistderiv {

enum class errc {
    degenerate_angle,
    unordered_lengths,
    length_out_of_range,
    index_out_of_range,
    partition_sum_mismatch,
    invalid_range,
    order_mismatch,
    order_exceeded,
    branch_point,
    step_too_small,
    size_guard,
    parse_error,
};

std::string_view to_string(errc code) noexcept;

// Single exception type for the library; the code identifies the failed precondition.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace twistderiv
