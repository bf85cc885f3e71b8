#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasitree {

// Bad user input: unparseable text, out-of-range indices, invalid permutations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// PD code whose labels do not describe a valid oriented diagram.
class MalformedCode : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedLink : public InputError {
 public:
  using InputError::InputError;
};

// A move requested at a location where it does not apply.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid input outside the domain of an operation (e.g. disconnected maps).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasitree
