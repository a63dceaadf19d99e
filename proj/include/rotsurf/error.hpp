#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rotsurf {

enum class ErrorCode {
    InvalidArgument,
    DomainMargin,
    DegeneratePoint,
    NotOrthogonal,
    OutOfDomain,
    EmptyDomain,
    InfeasibleDomain,
    NegativeDiscriminant,
    NegativeRadicand,
    AllDegenerate,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code. Grid and trajectory
/// operations attach the (u, v) point or the parameter u where the failure
/// occurred.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code),
          detail_(message) {}

    Error(ErrorCode code, const std::string& message, double u)
        : Error(code, message) { location_ = u; }

    Error(ErrorCode code, const std::string& message, std::array<double, 2> point)
        : Error(code, message) { point_ = point; }

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    std::optional<double> location() const noexcept { return location_; }
    std::optional<std::array<double, 2>> point() const noexcept { return point_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::optional<double> location_;
    std::optional<std::array<double, 2>> point_;
};

}  // namespace rotsurf
