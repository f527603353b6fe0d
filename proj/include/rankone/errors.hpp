#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

// Evaluation of a rational coefficient at a zero of its denominator.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation outside the domain of a kernel term (e.g. r=0 with negative exponent).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter outside the admissible range of an operation.
struct RangeError : std::invalid_argument {
    explicit RangeError(const std::string& what) : std::invalid_argument(what) {}
};

// Group action would move the support of a grid function outside the box.
struct SupportError : std::runtime_error {
    explicit SupportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankone
