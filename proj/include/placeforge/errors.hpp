#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace placeforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset into the
/// parsed text, or npos when no single position applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands that do not fit together: mismatched ambient groups, arities,
/// base fields, or division by zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested target shape cannot be realized for the given input.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace placeforge
