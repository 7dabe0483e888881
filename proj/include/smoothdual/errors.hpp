#pragma once

#include <stdexcept>

namespace smoothdual {

/// Input violates a documented precondition (bad value, malformed record).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard refused the request.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative numerical method failed to meet its contract.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exactness invariant broke; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace smoothdual
