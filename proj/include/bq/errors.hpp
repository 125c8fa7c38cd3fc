#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bq {

/// Raised when an operation's mathematical precondition does not hold
/// (zero norm, non-unit rotation, null biquaternion, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the text/JSON readers. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace bq
