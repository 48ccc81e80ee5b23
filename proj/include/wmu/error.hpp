#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmu {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. `position` is the 0-based byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured computational cap (pair count, table size, ...) was exceeded.
class LimitError : public Error {
 public:
  LimitError(const std::string& cap_name, const std::string& what)
      : Error(what), cap_name_(cap_name) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

// Evaluation of a rational function at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Precondition violations: size mismatches, unbalanced input where balance is
// required, disconnected complexes, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace wmu
