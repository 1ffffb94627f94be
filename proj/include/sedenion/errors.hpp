#pragma once

#include <stdexcept>
#include <string>

namespace sedenion {

/// Raised when an operation's precondition on its arguments is violated.
class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for requests outside the supported algebra levels (above sedenions).
class unsupported_error : public std::domain_error {
 public:
  explicit unsupported_error(const std::string& what) : std::domain_error(what) {}
};

/// Raised by the text/JSON readers.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sedenion
