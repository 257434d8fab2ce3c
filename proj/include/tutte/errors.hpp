#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

/// Malformed or out-of-range input data (files, element ids, weight maps).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter value outside the supported range (q = 0, unsupported q, ...).
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An instance exceeds the configured enumeration budget.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tutte
