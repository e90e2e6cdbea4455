#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swm {

enum class ErrorCode {
  kInvalidArgument,
  kSingularSystem,
  kIo,
  kFormat,
};

/// Base of every exception thrown by the library. The code drives the C API
/// status and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCode::kInvalidArgument, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorCode::kIo, message) {}
};

/// Malformed or unsupported file content.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message)
      : Error(ErrorCode::kFormat, message) {}
};

/// Raised when a pivot falls below the singularity threshold during
/// factorization. `condition_estimate` is a lower bound (largest entry over
/// the offending pivot), infinite for an exact zero pivot.
class SingularSystem : public Error {
 public:
  SingularSystem(std::size_t n, double condition_estimate);
  std::size_t order() const noexcept { return n_; }
  double condition_estimate() const noexcept { return condition_; }

 private:
  std::size_t n_;
  double condition_;
};

}  // namespace swm
