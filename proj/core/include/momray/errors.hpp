#pragma once

#include <stdexcept>
#include <string>

namespace momray {

/// Raised when an iterative numerical procedure fails to reach its target
/// accuracy. Carries a human-readable diagnostic of the failing stage.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace momray
