#pragma once

#include <stdexcept>
#include <string>

namespace pwh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Γ evaluated at (or within 1e-9 of) a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

// c - a - b is an integer; the two-term connection formulas degenerate.
class LogarithmicCase : public Error {
 public:
  using Error::Error;
};

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class StripViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pwh
