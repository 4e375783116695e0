#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weilbounds {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error {
 public:
  explicit NotPrimeError(unsigned long long p)
      : Error("not a prime: " + std::to_string(p)), p_(p) {}
  unsigned long long value() const { return p_; }

 private:
  unsigned long long p_;
};

class SizeCapError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero field element") {}
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public Error {
 public:
  using Error::Error;
};

class DegreeCapError : public Error {
 public:
  using Error::Error;
};

class ArityMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("total degree of the zero polynomial") {}
};

class EmptyRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class InsufficientCountsError : public Error {
 public:
  using Error::Error;
};

class NonIntegralCoefficientsError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& detail)
      : Error("schema error in " + path + ": " + detail) {}
};

class NonHomogeneousFormError : public Error {
 public:
  explicit NonHomogeneousFormError(std::size_t form_index)
      : Error("form " + std::to_string(form_index) +
              " is not homogeneous in a projective ambient"),
        index_(form_index) {}
  std::size_t form_index() const { return index_; }

 private:
  std::size_t index_;
};

class DeclarationError : public Error {
 public:
  using Error::Error;
};

}  // namespace weilbounds
