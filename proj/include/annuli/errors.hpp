#pragma once

#include <stdexcept>
#include <string>

namespace annuli {

// A numerical procedure failed (no sign change, non-convergence, singular
// system). Distinct from std::invalid_argument, which signals bad parameters.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace annuli
