#pragma once

#include <stdexcept>
#include <string>

namespace labelflow {

/// Malformed input: bad edge-list lines, unreadable ground-truth files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration or benchmark spec that cannot be run as given.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An engine invariant was broken. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace labelflow
