#pragma once

#include <stdexcept>
#include <string>

namespace hdepth {

// Degree vectors of different lengths were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value lies outside the box or order relation an operation requires.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or invalid module / partition / candidate input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller asked for an operation whose precondition does not hold
// (e.g. the dim <= 1 algorithm on a module with a 2-dimensional component).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input is outside the supported subclass of modules.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A supplied decomposition does not reproduce the table it claims to cover.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hdepth
