#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(p)") {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

// Raised by MatrixProductCode::encode; `component` is 0-based.
class NotInComponentCode : public Error {
 public:
  NotInComponentCode(std::size_t component, const std::string& what)
      : Error(what), component_(component) {}
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t component_;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mpc
