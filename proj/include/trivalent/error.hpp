#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trivalent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, inference or document text. `position()` is a byte
/// offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), message_(message), position_(position) {}

  /// Message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A computation would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A valuation was asked for an atom outside its declared atom set.
class MissingAtomError : public Error {
 public:
  explicit MissingAtomError(const std::string& atom)
      : Error("valuation does not cover atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

class SchemeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace trivalent
