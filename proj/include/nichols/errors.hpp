#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nichols {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeCap : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroParameter : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// The braid equation fails; `witness()` is the basis tensor e_i (x) e_j (x) e_k
/// of V^{(x)3} on which the two sides first differ.
class YangBaxterViolation : public Error {
 public:
  YangBaxterViolation(const std::string& what, std::array<std::size_t, 3> witness)
      : Error(what), witness_(witness) {}
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

/// A graded quotient failed ideal closure or the coideal containment.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

class EnvelopeExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nichols
