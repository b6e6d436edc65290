#pragma once

#include <stdexcept>

namespace wps {

// All library failures derive from wps::Error so callers (and the CLI) can
// map them to exit codes without catching unrelated standard exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weights violate a hard precondition (gcd conditions, empty vector, ...).
class InvalidWeights : public Error {
 public:
  using Error::Error;
};

// Weights are valid but the requested closed form or construction is not
// known for them.
class UnsupportedWeights : public Error {
 public:
  using Error::Error;
};

// A point or point configuration falls outside what an operation handles.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

// A map or function is undefined at the requested input.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Field arithmetic problems: non-prime modulus, characteristic too small,
// non-invertible denominators.
class FieldError : public Error {
 public:
  using Error::Error;
};

// The inductive engine could not produce a certificate.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

// A scan that is expected to pass everywhere found a counterexample.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace wps
