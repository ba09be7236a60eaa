#pragma once

#include <stdexcept>
#include <string>

namespace distq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a precondition (empty pattern, wrong q-gram length, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A parameter is outside its supported range (q > m, q > 8, reps = 0, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Corpus generation could not satisfy its postcondition within the retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Two matchers disagreed on the same input. Always a bug.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace distq
