#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superrsk {

// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Structural problems: bad partitions, filling/shape mismatch, bad corners.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A filling that breaks the signed row/column rules.
class TableauError : public Error {
 public:
  using Error::Error;
};

class BiwordError : public Error {
 public:
  BiwordError(const std::string& what, std::size_t column)
      : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class InconsistentPairError : public Error {
 public:
  using Error::Error;
};

class NoCanonicalTableauError : public Error {
 public:
  using Error::Error;
};

}  // namespace superrsk
