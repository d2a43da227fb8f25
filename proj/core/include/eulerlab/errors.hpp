#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

// A partition handed to an operation lies outside the class it requires.
class ClassViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not follow the partition grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration request above the configured cutoff.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Series whose constant term is not a unit in the integers.
class InvertibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace eulerlab
