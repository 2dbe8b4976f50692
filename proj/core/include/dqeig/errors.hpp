#pragma once

#include <stdexcept>
#include <string>

namespace dqeig {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (zero quaternion inverse,
/// non-appreciable dual quaternion, illegal dual-number division, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dual-complex class representative requested for v_s = 0, v_d != 0.
class ClassRepUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The iterate's standard part vanished, so normalization is undefined.
class BreakdownError : public Error {
 public:
  using Error::Error;
};

class UndefinedRateError : public Error {
 public:
  using Error::Error;
};

/// Iterative oracle routine (QR sweeps, Jacobi SVD) failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check of an oracle result failed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dqeig
