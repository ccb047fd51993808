#pragma once

#include <stdexcept>
#include <string>

namespace newtonsing {

// Malformed input text. pos is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Input is well formed but outside the mathematical domain of the operation
// (non-commode where required, non-isolated, singular change, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Valid input the exact algorithms do not cover.
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace newtonsing
