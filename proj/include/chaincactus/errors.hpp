#pragma once

#include <stdexcept>
#include <string>

namespace chaincactus {

/// Malformed textual input (spec strings, labels, ranges).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An evaluator refused an input that exceeds its hard size limit.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chaincactus
