#pragma once

#include <stdexcept>
#include <string>

namespace leastprime {

/// Malformed user input: records, files, numeric arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state the algorithms rule out was reached; signals a bug rather than bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A first-hit series whose survival mass did not vanish within the prime table.
class SeriesDivergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leastprime
