#pragma once

#include <stdexcept>
#include <string>

namespace qaf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input or unmet operation precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A result failed its own re-verification, or a proved statement was
/// contradicted by a computation. Always a defect to investigate.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace qaf
