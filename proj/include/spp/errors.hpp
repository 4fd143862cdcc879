#pragma once

#include <stdexcept>
#include <string>

namespace spp {

// Malformed textual input (problem files, scalars, oracle replies before
// they reach the oracle layer).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible sizes or arities, or a value outside its admissible domain.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource guard was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An objective oracle failed to produce a value.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spp
