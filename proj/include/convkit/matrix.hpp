#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convkit/field.hpp"

namespace convkit {

using Vec = std::vector<Elem>;

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(Elem a) const;
  Matrix transpose() const;

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Elem determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix right_nullspace(const Matrix& m);
/// Rows form a basis of {y : y m = 0}.
Matrix left_nullspace(const Matrix& m);
/// A solution of m x = b with free variables set to zero, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Vec vec_mul(const FieldPtr& f, const Vec& v, const Matrix& m);
Vec mat_vec(const Matrix& m, const Vec& v);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
std::size_t hamming_weight(const Vec& v);

}  // namespace convkit
