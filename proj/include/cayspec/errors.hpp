#ifndef CAYSPEC_ERRORS_HPP
#define CAYSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cayspec {

// Instance exceeds the configured resource budget (exit code 3 in the CLI).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An internal invariant failed (e.g. a characteristic polynomial came out
// with a non-integer coefficient). Signals a bug, never a bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cayspec

#endif
