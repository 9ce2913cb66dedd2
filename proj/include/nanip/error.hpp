#pragma once

#include <stdexcept>
#include <string>

namespace nanip {

// Base for all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds an algorithm's size ceiling (exit code 3).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A result failed a cross-check that must always hold (exit code 4).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace nanip
