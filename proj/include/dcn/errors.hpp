#pragma once

#include <stdexcept>
#include <string>

namespace dcn {

/// Malformed input: duplicate labels, unknown vertices, bad label syntax.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the range where a construction or formula applies.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Instance too large for the configured build budget, or arithmetic overflow.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcn
