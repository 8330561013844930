#pragma once

#include <stdexcept>
#include <string>

namespace spectralign {

enum class ErrorKind {
  InvalidArgument,
  BadSequence,
  TooLong,
  PowerRange,
  BadScenario,
  Malformed,
};

/// Library error carrying a coarse kind so the C API can map it onto a
/// status code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spectralign
