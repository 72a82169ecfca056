#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tribone {

enum class ErrorCode {
    not_closed,
    non_integral_area,
    not_a_cell_center,
    off_hexagon_graph,
    invalid_params,
    empty_region,
    not_simply_connected,
    non_isolated_spur,
    shadow_not_closed,
    invalid_tiling,
    invalid_placement,
    construction_failed,
    resource_limit,
    parse_error,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this one exception type;
// callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tribone
