#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lindex {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed poset/shape/permutation/expression text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration or expansion would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (bad index, wrong poset kind, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Cover relation contains a directed cycle; `witness` lists it in order.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

// Arithmetic failure: division by zero, evaluation at a pole, a residue that
// should have been an integer and was not.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace lindex
