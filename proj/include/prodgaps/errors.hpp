#pragma once

#include <stdexcept>
#include <string>

namespace prodgaps {

// No prime exists in the required interval for a spec construction.
struct construction_unavailable : std::runtime_error {
    explicit construction_unavailable(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive enumeration would exceed its work guard.
struct enumeration_too_large : std::runtime_error {
    explicit enumeration_too_large(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is too small for a pigeonhole argument to bite.
struct insufficient_size : std::runtime_error {
    explicit insufficient_size(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate the theory guarantees to exist was not found, or a quantity
// the proofs force failed to hold. Reaching this is an implementation bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace prodgaps
