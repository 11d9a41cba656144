#pragma once

#include <stdexcept>
#include <string>

namespace borm {

/// Raised when an input file cannot be parsed into samples.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numeric argument is outside the domain of an operation.
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace borm
