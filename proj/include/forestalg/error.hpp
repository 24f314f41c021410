#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forestalg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed forest/context expression or recognizer file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a semantic requirement
/// (broken monoid laws, non-tree language passed to a tree decider, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was hit. Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Resource caps shared by the closure and enumeration routines.
struct Limits {
  std::size_t max_v_elements = 20000;
  std::size_t max_states = 200000;
  std::size_t max_enumeration = 1000000;

  /// Defaults, with FORESTALG_MAX_STATES overriding every cap when set.
  static Limits from_env();
};

}  // namespace forestalg
