#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcert {

// Root of every error thrown by the library. The CLI maps the subclasses
// onto exit codes: input problems -> 1, fallback/unavailable -> 2,
// invariant violations -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug or corrupted input
// that slipped past validation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// The requested regime is not covered by the certificate machinery
// (e.g. fixed rank k < 3 for the Lefschetz lower bound).
class FallbackRegime : public Error {
 public:
  using Error::Error;
};

class RankShortfall : public PreconditionError {
 public:
  RankShortfall(std::size_t required, std::size_t actual)
      : PreconditionError("fixed subspace rank " + std::to_string(actual) +
                          " is below the requested k = " +
                          std::to_string(required)),
        required_(required),
        actual_(actual) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t required_;
  std::size_t actual_;
};

// The full orbit sum of the seed vector is not fixed by the matrix.
class OrbitSumNotFixed : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace symcert
