#pragma once

#include <cstddef>
#include <vector>

#include "convkit/matrix.hpp"
#include "convkit/poly.hpp"

namespace convkit {

using PolyVector = std::vector<Poly>;

/// Matrix with entries in F_q[z].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(FieldPtr field, std::size_t n);
  static PolyMatrix from_rows(FieldPtr field, const std::vector<PolyVector>& rows);
  static PolyMatrix from_constant(const Matrix& m);
  /// sum_i coeffs[i] z^i
  static PolyMatrix from_coefficients(FieldPtr field, const std::vector<Matrix>& coeffs);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  PolyVector row(std::size_t r) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const Poly& p) const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);

  /// Largest entry degree; kMinusInfinity for the zero matrix.
  int degree() const;
  /// Row degrees; a zero row has degree kMinusInfinity.
  std::vector<int> row_degrees() const;
  /// Constant coefficient matrix of z^i.
  Matrix coefficient(int i) const;
  /// Highest-row-coefficient matrix: row i holds the z^{nu_i} coefficients of row i.
  Matrix highest_row_coefficients() const;
  /// Row-wise reversal: entry (i, j) becomes z^{nu_i} g_ij(1/z).
  PolyMatrix row_reversed() const;
  /// Evaluation at z = x.
  Matrix eval(Elem x) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Row vector times matrix.
PolyVector vec_mul(const PolyVector& v, const PolyMatrix& m);
/// Matrix times column vector.
PolyVector mat_vec(const PolyMatrix& m, const PolyVector& v);
/// Sum of coefficient weights over all entries.
std::size_t weight(const PolyVector& v);
int degree(const PolyVector& v);

/// All r-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

Poly determinant(const PolyMatrix& m);
/// Rank over the rational function field F_q(z).
std::size_t rank(const PolyMatrix& m);
/// k x k minors of a k x n matrix, column sets in lexicographic order.
std::vector<Poly> full_size_minors(const PolyMatrix& m);
/// Largest degree among the full-size minors.
int internal_degree(const PolyMatrix& m);

/// U m = form with U unimodular. The form is in echelon shape with monic pivots and
/// every other entry of a pivot column of lower degree than the pivot.
struct ColumnHermite {
  PolyMatrix form;
  PolyMatrix transform;
  PolyMatrix transform_inverse;
  std::vector<std::size_t> pivot_columns;
};
ColumnHermite column_hermite_form(const PolyMatrix& m);

/// m U = form = [Delta 0] with Delta lower triangular, U unimodular.
struct RowHermite {
  PolyMatrix form;
  PolyMatrix transform;
  PolyMatrix transform_inverse;
  std::vector<std::size_t> pivot_rows;
};
RowHermite row_hermite_form(const PolyMatrix& m);

/// Rows spanning {v : v m = 0}; the rows are left prime.
PolyMatrix left_kernel(const PolyMatrix& m);
/// Rows spanning {v : m v^T = 0}; the rows are left prime.
PolyMatrix right_kernel(const PolyMatrix& m);

bool is_row_reduced(const PolyMatrix& m);
/// reduced = transform * m, transform unimodular, reduced row reduced.
struct RowReduction {
  PolyMatrix reduced;
  PolyMatrix transform;
};
RowReduction row_reduce(const PolyMatrix& m);

enum class SmithOrder {
  /// gamma_i divides gamma_{i+1}
  Ascending,
  /// gamma_{i+1} divides gamma_i
  Descending,
};

/// form = U m V with U, V unimodular and form = [diag(gamma) 0].
struct SmithForm {
  PolyMatrix form;
  PolyMatrix U;
  PolyMatrix V;
  PolyMatrix U_inverse;
  PolyMatrix V_inverse;
  std::vector<Poly> invariants;
  SmithOrder order = SmithOrder::Descending;
};
SmithForm smith_form(const PolyMatrix& m, SmithOrder order = SmithOrder::Descending);
/// Invariant factors d_i / d_{i-1} from the gcds d_i of the i x i minors, ascending order.
std::vector<Poly> invariant_factors_from_minors(const PolyMatrix& m);

bool is_unimodular(const PolyMatrix& m);
/// Inverse of a unimodular matrix.
PolyMatrix unimodular_inverse(const PolyMatrix& m);
bool is_left_prime(const PolyMatrix& m);
/// Polynomial P with m P = I; m must be left prime.
PolyMatrix right_inverse(const PolyMatrix& m);
/// L with [m; L] unimodular; m must be left prime.
PolyMatrix complete_to_unimodular(const PolyMatrix& m);

/// Entries as poly literals separated by ';', rows separated by newlines.
std::string format_poly_matrix(const PolyMatrix& m);
/// Rows separated by newlines or '|', entries by ';'.
PolyMatrix parse_poly_matrix(const FieldPtr& field, std::string_view text);

}  // namespace convkit
