#pragma once

#include <stdexcept>
#include <string>

namespace rlu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter violates a precondition (k > l, empty lists, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Numerical rank of an intermediate fell below what the caller asked for.
class RankDeficiencyError : public Error {
 public:
  RankDeficiencyError(const std::string& what, std::size_t achievable)
      : Error(what), achievable_(achievable) {}
  std::size_t achievable_rank() const noexcept { return achievable_; }

 private:
  std::size_t achievable_;
};

/// A triangular or Gram system is numerically singular.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// File contents do not follow the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlu
