#pragma once

#include <stdexcept>
#include <string>

namespace discop {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or on the domain of an operator was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A kernel failed validation (partition defect, divergence, metadata mismatch).
class KernelError : public Error {
 public:
  using Error::Error;
};

/// A series could not be truncated within the requested tolerance and window.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A function sample was NaN or infinite.
class NonFiniteSample : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (PBM, CSV).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The image does not hold a single simple traceable curve.
class TraceError : public Error {
 public:
  TraceError(const std::string& what, int x, int y, bool has_pixel = true)
      : Error(what), x_(x), y_(y), has_pixel_(has_pixel) {}
  explicit TraceError(const std::string& what) : TraceError(what, 0, 0, false) {}

  bool has_pixel() const noexcept { return has_pixel_; }
  int x() const noexcept { return x_; }
  int y() const noexcept { return y_; }

 private:
  int x_;
  int y_;
  bool has_pixel_;
};

}  // namespace discop
