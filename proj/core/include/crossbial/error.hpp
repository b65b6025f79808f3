#pragma once

#include <stdexcept>
#include <string>

namespace crossbial {

enum class ErrorKind {
  Domain,
  Shape,
  Configuration,
  NonInvertible,
  Parse,
  Precondition,
  NotABat,
  NotSplitting,
  InvalidSystem,
  NotConvolutionInvertible,
  InternalConsistency,
  Unsupported,
  Parameter,
  Usage,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by invert(); carries the rank that was found.
class NonInvertibleError : public Error {
 public:
  NonInvertibleError(const std::string& what, std::size_t rank)
      : Error(ErrorKind::NonInvertible, what), rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace crossbial
