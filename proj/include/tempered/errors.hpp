#pragma once

#include <stdexcept>
#include <string>

namespace tempered {

/// Malformed or inconsistent user input (bad dimensions, non-closed subspace, bad JSON).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well-formed but outside what exact rational arithmetic can decide.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result contradicted a proven identity; always a bug in this library.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured budget (chambers, trials) was exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tempered
