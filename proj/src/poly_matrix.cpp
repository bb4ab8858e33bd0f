#include "convkit/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace convkit {

PolyMatrix::PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(field)) {}

PolyMatrix PolyMatrix::identity(FieldPtr field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(field, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(FieldPtr field, const std::vector<PolyVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged polynomial matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) require_same_field(field, rows[i][j].field());
      m(i, j) = rows[i][j].is_zero() ? Poly(field) : rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_constant(const Matrix& a) {
  PolyMatrix m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Poly::constant(a.field(), a(i, j));
  return m;
}

PolyMatrix PolyMatrix::from_coefficients(FieldPtr field, const std::vector<Matrix>& coeffs) {
  if (coeffs.empty()) throw InvalidArgument("no coefficient matrices");
  const std::size_t r = coeffs[0].rows(), c = coeffs[0].cols();
  PolyMatrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Elem> v(coeffs.size());
      for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].rows() != r || coeffs[d].cols() != c) throw InvalidArgument("coefficient shape mismatch");
        v[d] = coeffs[d](i, j);
      }
      m(i, j) = Poly(field, std::move(v));
    }
  return m;
}

PolyVector PolyMatrix::row(std::size_t r) const {
  return PolyVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw InvalidArgument("polynomial matrix product dimension mismatch");
  PolyMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Poly& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(l, j).is_zero()) out(i, j) = out(i, j) + a * o(l, j);
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("polynomial matrix sum dimension mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("polynomial matrix difference dimension mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix out = *this;
  for (auto& e : out.data_) e = e * p;
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  PolyMatrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InvalidArgument("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

int PolyMatrix::degree() const {
  int d = kMinusInfinity;
  for (const auto& e : data_) d = std::max(d, e.degree());
  return d;
}

std::vector<int> PolyMatrix::row_degrees() const {
  std::vector<int> nu(rows_, kMinusInfinity);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) nu[i] = std::max(nu[i], (*this)(i, j).degree());
  return nu;
}

Matrix PolyMatrix::coefficient(int d) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(d);
  return m;
}

Matrix PolyMatrix::highest_row_coefficients() const {
  const auto nu = row_degrees();
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (nu[i] == kMinusInfinity) continue;
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(nu[i]);
  }
  return m;
}

PolyMatrix PolyMatrix::row_reversed() const {
  const auto nu = row_degrees();
  PolyMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (nu[i] == kMinusInfinity) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).reversed(nu[i]);
  }
  return out;
}

Matrix PolyMatrix::eval(Elem x) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(x);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyVector vec_mul(const PolyVector& v, const PolyMatrix& m) {
  if (v.size() != m.rows()) throw InvalidArgument("vector-matrix dimension mismatch");
  PolyVector out(m.cols(), Poly(m.field()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    require_same_field(v[i].field(), m.field());
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[i] * m(i, j);
  }
  return out;
}

PolyVector mat_vec(const PolyMatrix& m, const PolyVector& v) {
  if (v.size() != m.cols()) throw InvalidArgument("matrix-vector dimension mismatch");
  PolyVector out(m.rows(), Poly(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (v[j].is_zero()) continue;
      require_same_field(v[j].field(), m.field());
      out[i] = out[i] + m(i, j) * v[j];
    }
  return out;
}

std::size_t weight(const PolyVector& v) {
  std::size_t w = 0;
  for (const auto& p : v) w += p.weight();
  return w;
}

int degree(const PolyVector& v) {
  int d = kMinusInfinity;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldPtr& f = m.field();
  if (n == 0) return Poly::constant(f, 1);
  PolyMatrix a = m;
  bool negate = false;
  Poly prev = Poly::constant(f, 1);
  // fraction-free (Bareiss) elimination over F_q[z]
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

// Simultaneous elementary row operations on a matrix, its left transform U and U^{-1}.
struct RowOps {
  PolyMatrix& a;
  PolyMatrix U;
  PolyMatrix Uinv;

  explicit RowOps(PolyMatrix& m)
      : a(m), U(PolyMatrix::identity(m.field(), m.rows())), Uinv(PolyMatrix::identity(m.field(), m.rows())) {}

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv(r, i), Uinv(r, j));
  }
  // row_i <- row_i + q row_j
  void add(std::size_t i, std::size_t j, const Poly& q) {
    if (q.is_zero()) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = a(i, c) + q * a(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = U(i, c) + q * U(j, c);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, j) = Uinv(r, j) - Uinv(r, i) * q;
  }
  void scale(std::size_t i, Elem s) {
    const Field& f = *a.field();
    const Elem si = f.inv(s);
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = a(i, c).scaled(s);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = U(i, c).scaled(s);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, i) = Uinv(r, i).scaled(si);
  }
};

// Simultaneous elementary column operations on a matrix, its right transform V and V^{-1}.
struct ColOps {
  PolyMatrix& a;
  PolyMatrix V;
  PolyMatrix Vinv;

  explicit ColOps(PolyMatrix& m)
      : a(m), V(PolyMatrix::identity(m.field(), m.cols())), Vinv(PolyMatrix::identity(m.field(), m.cols())) {}

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv(i, c), Vinv(j, c));
  }
  // col_i <- col_i + q col_j
  void add(std::size_t i, std::size_t j, const Poly& q) {
    if (q.is_zero()) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = a(r, i) + a(r, j) * q;
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) = V(r, i) + V(r, j) * q;
    for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv(j, c) = Vinv(j, c) - q * Vinv(i, c);
  }
};

struct Echelon {
  PolyMatrix form;
  PolyMatrix U;
  PolyMatrix Uinv;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const PolyMatrix& m) {
  Echelon out{m, {}, {}, {}};
  RowOps ops(out.form);
  PolyMatrix& a = out.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool found = false;
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (!a(i, c).is_zero() && (best == a.rows() || a(i, c).degree() < a(best, c).degree())) best = i;
      if (best == a.rows()) break;
      found = true;
      ops.swap(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        ops.add(i, r, -divmod(a(i, c), a(r, c)).first);
        if (!a(i, c).is_zero()) others = true;
      }
      if (!others) break;
    }
    if (!found) continue;
    ops.scale(r, a.field()->inv(a(r, c).leading()));
    for (std::size_t i = 0; i < r; ++i)
      if (!a(i, c).is_zero()) ops.add(i, r, -divmod(a(i, c), a(r, c)).first);
    out.pivots.push_back(c);
    ++r;
  }
  out.U = std::move(ops.U);
  out.Uinv = std::move(ops.Uinv);
  return out;
}

void require_full_row_rank(const PolyMatrix& m, const char* what) {
  if (rank(m) != m.rows()) throw InvalidArgument(std::string(what) + ": matrix is not of full row rank");
}

}  // namespace

std::size_t rank(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return echelon(m).pivots.size();
}

std::vector<Poly> full_size_minors(const PolyMatrix& m) {
  if (m.rows() > m.cols()) throw InvalidArgument("full-size minors need rows <= cols");
  std::vector<Poly> out;
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  for (const auto& cols : combinations(m.cols(), m.rows())) out.push_back(determinant(m.submatrix(all_rows, cols)));
  return out;
}

int internal_degree(const PolyMatrix& m) {
  int d = kMinusInfinity;
  for (const auto& p : full_size_minors(m)) d = std::max(d, p.degree());
  return d;
}

ColumnHermite column_hermite_form(const PolyMatrix& m) {
  if (m.rows() > m.cols()) throw InvalidArgument("column Hermite form needs rows <= cols");
  auto e = echelon(m);
  if (e.pivots.size() != m.rows()) throw InvalidArgument("column Hermite form: matrix is not of full row rank");
  return {std::move(e.form), std::move(e.U), std::move(e.Uinv), std::move(e.pivots)};
}

RowHermite row_hermite_form(const PolyMatrix& m) {
  if (m.rows() > m.cols()) throw InvalidArgument("row Hermite form needs rows <= cols");
  auto e = echelon(m.transpose());
  if (e.pivots.size() != m.rows()) throw InvalidArgument("row Hermite form: matrix is not of full row rank");
  return {e.form.transpose(), e.U.transpose(), e.Uinv.transpose(), std::move(e.pivots)};
}

PolyMatrix left_kernel(const PolyMatrix& m) {
  auto e = echelon(m);
  const std::size_t r = e.pivots.size();
  return e.U.block(r, 0, m.rows() - r, m.rows());
}

PolyMatrix right_kernel(const PolyMatrix& m) { return left_kernel(m.transpose()); }

bool is_row_reduced(const PolyMatrix& m) {
  const auto nu = m.row_degrees();
  if (std::any_of(nu.begin(), nu.end(), [](int d) { return d == kMinusInfinity; })) return false;
  return rank(m.highest_row_coefficients()) == m.rows();
}

RowReduction row_reduce(const PolyMatrix& m) {
  require_full_row_rank(m, "row_reduce");
  PolyMatrix a = m;
  RowOps ops(a);
  const Field& f = *m.field();
  while (true) {
    const auto nu = a.row_degrees();
    const Matrix hrc = a.highest_row_coefficients();
    const Matrix ker = left_nullspace(hrc);
    if (ker.rows() == 0) break;
    const Vec coef = ker.row(0);
    std::size_t target = a.rows();
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (coef[i] != 0 && (target == a.rows() || nu[i] > nu[target])) target = i;
    const Elem inv = f.inv(coef[target]);
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (j == target || coef[j] == 0) continue;
      ops.add(target, j, Poly::monomial(m.field(), f.mul(coef[j], inv), nu[target] - nu[j]));
    }
  }
  return {a, ops.U};
}

SmithForm smith_form(const PolyMatrix& m, SmithOrder order) {
  if (m.rows() > m.cols()) throw InvalidArgument("Smith form needs rows <= cols");
  PolyMatrix a = m;
  RowOps rows(a);
  ColOps cols(a);
  const std::size_t k = a.rows(), n = a.cols();
  std::size_t t = 0;
  for (; t < k; ++t) {
    bool nonzero = true;
    while (true) {
      std::size_t bi = k, bj = n;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a(i, j).is_zero() && (bi == k || a(i, j).degree() < a(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi == k) {
        nonzero = false;
        break;
      }
      rows.swap(t, bi);
      cols.swap(t, bj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (a(i, t).is_zero()) continue;
        rows.add(i, t, -divmod(a(i, t), a(t, t)).first);
        dirty = dirty || !a(i, t).is_zero();
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        cols.add(j, t, -divmod(a(t, j), a(t, t)).first);
        dirty = dirty || !a(t, j).is_zero();
      }
      if (dirty) continue;
      std::size_t bad = k;
      for (std::size_t i = t + 1; i < k && bad == k; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a(i, j).is_zero() && !divmod(a(i, j), a(t, t)).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == k) break;
      rows.add(t, bad, Poly::constant(a.field(), 1));
    }
    if (!nonzero) break;
    rows.scale(t, a.field()->inv(a(t, t).leading()));
  }

  SmithForm out;
  out.order = order;
  if (order == SmithOrder::Descending) {
    // reverse the leading k x k block
    for (std::size_t i = 0; i < k / 2; ++i) {
      rows.swap(i, k - 1 - i);
      cols.swap(i, k - 1 - i);
    }
  }
  out.form = a;
  out.U = rows.U;
  out.U_inverse = rows.Uinv;
  out.V = cols.V;
  out.V_inverse = cols.Vinv;
  for (std::size_t i = 0; i < k; ++i) out.invariants.push_back(a(i, i));
  return out;
}

std::vector<Poly> invariant_factors_from_minors(const PolyMatrix& m) {
  const FieldPtr& f = m.field();
  std::vector<Poly> out;
  Poly prev = Poly::constant(f, 1);
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t s = 1; s <= r; ++s) {
    Poly g(f);
    for (const auto& rs : combinations(m.rows(), s))
      for (const auto& cs : combinations(m.cols(), s)) g = gcd(g, determinant(m.submatrix(rs, cs)));
    if (g.is_zero()) {
      for (; s <= r; ++s) out.emplace_back(f);
      break;
    }
    out.push_back(exact_div(g, prev));
    prev = g;
  }
  return out;
}

bool is_unimodular(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("is_unimodular needs a square matrix");
  const Poly d = determinant(m);
  return d.degree() == 0;
}

PolyMatrix unimodular_inverse(const PolyMatrix& m) {
  if (!is_unimodular(m)) throw InvalidArgument("matrix is not unimodular");
  return echelon(m).U;
}

bool is_left_prime(const PolyMatrix& m) {
  if (m.rows() > m.cols()) return false;
  if (rank(m) != m.rows()) return false;
  Poly g(m.field());
  for (const auto& p : full_size_minors(m)) g = gcd(g, p);
  const bool by_minors = g.degree() == 0;
  const auto s = smith_form(m);
  const bool by_smith =
      std::all_of(s.invariants.begin(), s.invariants.end(), [](const Poly& p) { return p.degree() == 0; });
  if (by_minors != by_smith) throw Error("left-primeness tests disagree");
  return by_minors;
}

PolyMatrix right_inverse(const PolyMatrix& m) {
  if (!is_left_prime(m)) throw InvalidArgument("right_inverse: matrix is not left prime");
  const auto s = smith_form(m);
  const std::size_t k = m.rows(), n = m.cols();
  // m = U^{-1} [I 0] V^{-1}, so P = V [I; 0] U
  PolyMatrix left = s.V.block(0, 0, n, k);
  return left * s.U;
}

PolyMatrix complete_to_unimodular(const PolyMatrix& m) {
  if (m.rows() >= m.cols()) throw InvalidArgument("complete_to_unimodular needs rows < cols");
  if (!is_left_prime(m)) throw InvalidArgument("complete_to_unimodular: matrix is not left prime");
  const auto s = smith_form(m);
  const std::size_t k = m.rows(), n = m.cols();
  return s.V_inverse.block(k, 0, n - k, n);
}

std::string format_poly_matrix(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " ; " : "") << format_poly_literal(m(i, j));
    os << '\n';
  }
  return os.str();
}

PolyMatrix parse_poly_matrix(const FieldPtr& field, std::string_view text) {
  std::vector<PolyVector> rows;
  std::string s(text);
  std::replace(s.begin(), s.end(), '|', '\n');
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    PolyVector row;
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find(';', start);
      row.push_back(parse_poly_literal(field, line.substr(start, pos == std::string::npos ? pos : pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty polynomial matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("ragged polynomial matrix");
  return PolyMatrix::from_rows(field, rows);
}

}  // namespace convkit
