#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compmat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A principal pivot was requested on a singular block.
class SingularPivot : public Error {
 public:
  using Error::Error;
};

/// lp_feasible was handed a strict inequality in a non-homogeneous system.
class UnsupportedSystem : public Error {
 public:
  using Error::Error;
};

/// An exponential enumeration was requested above the configured dimension cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : Error("dimension " + std::to_string(n) + " exceeds enumeration cap " +
              std::to_string(cap) + " (set COMPMAT_NMAX to raise it)"),
        n_(n),
        cap_(cap) {}
  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

class DegenerateQ : public Error {
 public:
  using Error::Error;
};

/// A (w, z) pair handed to an operation is not a solution of the instance.
class InvalidSolution : public Error {
 public:
  using Error::Error;
};

/// Two independent decision procedures, or a theorem-backed cross-check,
/// disagreed. Always an implementation bug or a falsified claim.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ModeDisagreement : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace compmat
