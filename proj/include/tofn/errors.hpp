#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tofn {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (e.g. alpha outside [0,1]).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A value lies outside the closure of a base function's range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Operands belong to different typed rings and neither is rectangular.
class MixedTypeError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// A proper OFN was required.
class ImproperError : public Error {
public:
  using Error::Error;
};

class DegenerateError : public Error {
public:
  using Error::Error;
};

/// A correction procedure was applied to an OFN with a different pathology.
class WrongPathology : public Error {
public:
  using Error::Error;
};

/// A polynomial product exceeds the configured degree cap.
class DegreeCap : public Error {
public:
  using Error::Error;
};

/// Classical L-R numbers with different spread families were combined.
class FamilyMismatch : public Error {
public:
  using Error::Error;
};

class NegativeCycle : public Error {
public:
  using Error::Error;
};

class UnknownBase : public Error {
public:
  using Error::Error;
};

/// A JSON document does not describe a valid OFN or graph.
class DocumentError : public Error {
public:
  using Error::Error;
};

/// Expression parse failure; `position` is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace tofn
