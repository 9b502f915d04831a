#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range parameters, malformed specs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Edge-list or family-spec text that does not parse. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An iterative kernel failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace alphaspec
