#pragma once

#include <stdexcept>

namespace grouppart {

// Input exceeds a configured enumeration, memory, factorization or modulus cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric routine could not certify the requested tolerance.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace grouppart
