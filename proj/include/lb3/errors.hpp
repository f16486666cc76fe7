#pragma once

#include <stdexcept>
#include <string>

namespace lb3 {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

/// The given matrix does not square to the identity within tolerance.
class NotAnInvolution : public Error {
 public:
  explicit NotAnInvolution(const std::string& msg) : Error(msg) {}
};

/// The given matrix does not cube to the identity within tolerance.
class NotOrderThree : public Error {
 public:
  explicit NotOrderThree(const std::string& msg) : Error(msg) {}
};

/// A trace that should be a small nonnegative integer is not one.
class NonIntegralMultiplicity : public Error {
 public:
  explicit NonIntegralMultiplicity(const std::string& msg) : Error(msg) {}
};

/// The pair (s1, s2) violates the symmetric-group relations.
class NotAnS3Rep : public Error {
 public:
  explicit NotAnS3Rep(const std::string& msg) : Error(msg) {}
};

class DegenerateAlpha : public Error {
 public:
  explicit DegenerateAlpha(const std::string& msg) : Error(msg) {}
};

class RetryExhausted : public Error {
 public:
  explicit RetryExhausted(const std::string& msg) : Error(msg) {}
};

class SplitOutOfRange : public Error {
 public:
  explicit SplitOutOfRange(const std::string& msg) : Error(msg) {}
};

/// A representation file failed schema or invariant validation on load.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace lb3
