#pragma once

#include <stdexcept>
#include <string>

namespace numev {

/// Operands over state sets of different size.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value left [0,1] (or went negative) where the type forbids it.
class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input: duplicate events, broken poset axioms, unknown labels.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. product criterion on a
/// family that is not structured).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A proven implication failed; always a defect in this library.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace numev
