#pragma once

#include <stdexcept>
#include <string>

namespace disq {

// Precondition violated by the caller (bad modulus, out-of-range index, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simulator capacity or consumable resource (EPR pairs) exhausted.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed, e.g. a state vector lost its normalization.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace disq
