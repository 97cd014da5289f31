#pragma once

#include <stdexcept>
#include <string>

namespace phaseless {

/// An operation was called on input that violates its documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive enumeration would exceed its fixed size cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A search that is guaranteed to succeed did not. Indicates a certifier bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace phaseless
