#pragma once

// Exact rational vectors and matrices over GMP rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tempered {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q"; throws InputError on anything else or q = 0.
Scalar parse_scalar(std::string_view text);
/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Scalar& x);
/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
Scalar rational(long num, long den);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
/// Scales v to a primitive integer vector whose first nonzero entry is positive.
Vector primitive_direction(std::span<const Scalar> v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  /// Matrix-vector product M v.
  Vector apply(std::span<const Scalar> v) const;
  /// Row vector times matrix, v M.
  Vector apply_left(std::span<const Scalar> v) const;

  Scalar trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form with pivots searched in the given column order
/// (default: natural order). Zero rows are removed.
Echelon rref(const Matrix& m, std::span<const std::size_t> column_order = {});
std::size_t rank(const Matrix& m);
/// Basis (as rows) of { v : M v = 0 }, in reduced echelon form.
Matrix nullspace(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Inverse of a square nonsingular matrix; throws InputError when singular.
Matrix inverse(const Matrix& m);
/// Some solution x of M x = b, or empty if inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

}  // namespace tempered
