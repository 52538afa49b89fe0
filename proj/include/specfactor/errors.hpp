#pragma once

#include <stdexcept>
#include <string>

namespace specfactor {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied arguments violate an operation's preconditions.
class precondition_error : public error {
 public:
  using error::error;
};

/// Input exceeds the configured size limit of an exact (exponential) routine.
class limit_exceeded : public error {
 public:
  limit_exceeded(const std::string& what, int size, int limit)
      : error(what + ": size " + std::to_string(size) + " exceeds limit " +
              std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  int size() const noexcept { return size_; }
  int limit() const noexcept { return limit_; }

 private:
  int size_;
  int limit_;
};

/// Power iteration hit its iteration cap before meeting the tolerance.
class convergence_error : public error {
 public:
  using error::error;
};

/// A feasibility solve produced a certificate that fails re-validation.
class solver_error : public error {
 public:
  using error::error;
};

}  // namespace specfactor
