#pragma once

#include <stdexcept>
#include <string>

namespace jaco {

/// Caller passed an argument outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural property the construction guarantees did not hold.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// No finite brush allocation can clean a cyclic orientation.
class UndoableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration refused because the edge count is above the cap.
class CapExceededError : public std::length_error {
public:
    CapExceededError(std::size_t eps, std::size_t cap)
        : std::length_error("edge count " + std::to_string(eps) + " exceeds oracle cap " +
                            std::to_string(cap)),
          eps_(eps),
          cap_(cap) {}

    std::size_t eps() const noexcept { return eps_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t eps_;
    std::size_t cap_;
};

}  // namespace jaco
