#pragma once

#include <stdexcept>
#include <string>

namespace gfrep {

// Error taxonomy aligned with the CLI exit codes:
//   ValidationError    -> 2  (malformed or inconsistent input)
//   HypothesisError    -> 3  (a theorem precondition does not hold)
//   CertificationError -> 4  (an internal cross-check failed; bug signal)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfrep
