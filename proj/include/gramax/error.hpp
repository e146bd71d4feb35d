#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gramax {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

// A kernel produced (or would produce) non-finite entries.
class NumericOverflowError : public Error {
public:
  using Error::Error;
};

class InvalidInputError : public Error {
public:
  using Error::Error;
};

class InvalidBudgetError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class ZeroInitError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// Negative off-diagonal entry found where a Metzler matrix is required.
// row()/col() are zero-based; the message reports them one-based.
class MetzlerViolation : public Error {
public:
  MetzlerViolation(std::size_t row, std::size_t col, double value)
      : Error("metzler-violation: A(" + std::to_string(row + 1) + "," +
              std::to_string(col + 1) + ") = " + std::to_string(value) +
              " is a negative off-diagonal entry"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace gramax
