#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compmat/rational.hpp"

namespace compmat {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
bool is_nonnegative(const Vector& v);
bool is_positive(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Positive rescaling of a nonzero vector to the primitive integer vector on
/// the same ray. Zero vectors are returned unchanged.
Vector primitive(const Vector& v);

std::string to_string(const Vector& v);

/// Sorted subset of {0..n-1}. Rendered and parsed 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::size_t ambient, std::vector<std::size_t> indices);

  static IndexSet empty(std::size_t ambient) { return IndexSet(ambient, {}); }
  static IndexSet full(std::size_t ambient);
  static IndexSet from_mask(std::size_t ambient, std::uint64_t mask);
  /// Parses "1,3" or "{1,3}" (1-based, whitespace tolerant); "" and "{}" are the empty set.
  static IndexSet parse_one_based(std::size_t ambient, std::string_view text);

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t i) const;
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::uint64_t mask() const;
  IndexSet complement() const;

  /// "{1,3}" with 1-based members.
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> indices_;
};

/// All subsets of {0..n-1} as bit masks, ordered by cardinality and then
/// lexicographically by their sorted members.
std::vector<std::uint64_t> subsets_by_cardinality(std::size_t n, bool include_empty);

/// Dense row-major matrix of rationals. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  /// Rows in `rows`, columns in `cols`; the A_{αβ} of LCP notation.
  Matrix block(const IndexSet& rows, const IndexSet& cols) const;
  Matrix principal(const IndexSet& alpha) const { return block(alpha, alpha); }
  /// All rows, columns in `cols` (A[:, σ]).
  Matrix columns(const IndexSet& cols) const;

  Matrix transpose() const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Embeds a vector indexed by `support` into R^n with zeros elsewhere.
Vector embed(const IndexSet& support, const Vector& values);
/// Restricts a length-n vector to the coordinates in `set`.
Vector restrict(const Vector& v, const IndexSet& set);

/// Maximum dimension for operations that enumerate all 2^n index subsets.
/// Defaults to 14; the COMPMAT_NMAX environment variable overrides it.
std::size_t enumeration_cap();
/// Throws CapExceeded when n > enumeration_cap().
void check_enumeration_cap(std::size_t n);

}  // namespace compmat
