#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

// Bad input: malformed documents, broken invariants, violated preconditions.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An exhaustive routine was asked to visit more states than its budget allows.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// No perfect matching exists within the admissible edge set.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer arithmetic would leave the 64-bit range.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fairdiv
