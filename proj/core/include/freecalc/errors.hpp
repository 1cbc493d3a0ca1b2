#pragma once

#include <stdexcept>
#include <string>

namespace freecalc {

/// Argument violates a precondition (size mismatch, out-of-range index, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is structurally valid but outside the operation's domain
/// (crossing partition where a non-crossing one is required, invalid path, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested size exceeds a configured cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A moment required by a computation is not present in the table.
/// The message names the missing word; nothing is ever zero-filled.
class MissingMomentError : public std::runtime_error {
public:
    explicit MissingMomentError(const std::string& word_repr)
        : std::runtime_error("missing moment for word " + word_repr), word(word_repr) {}
    std::string word;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace freecalc
