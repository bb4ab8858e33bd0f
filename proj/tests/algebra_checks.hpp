#pragma once

#include <random>
#include <string>

#include "convkit/poly_matrix.hpp"
#include "oracles.hpp"

namespace checks {

using convkit::Poly;
using convkit::PolyMatrix;

inline bool is_diagonal_form(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

/// Column and row Hermite identities for a matrix of full row rank.
inline std::string hermite_identities(const PolyMatrix& m) {
  using namespace convkit;
  const auto f = m.field();
  const ColumnHermite ch = column_hermite_form(m);
  if (ch.transform * m != ch.form) return "column Hermite: U m != form";
  if (!is_unimodular(ch.transform)) return "column Hermite: transform not unimodular";
  if (ch.transform * ch.transform_inverse != PolyMatrix::identity(f, m.rows())) return "column Hermite: bad inverse";
  for (std::size_t i = 0; i < ch.pivot_columns.size(); ++i) {
    const Poly& piv = ch.form(i, ch.pivot_columns[i]);
    if (piv.leading() != 1) return "column Hermite: pivot not monic";
    for (std::size_t a = 0; a < m.rows(); ++a)
      if (a != i && !ch.form(a, ch.pivot_columns[i]).is_zero() &&
          ch.form(a, ch.pivot_columns[i]).degree() >= piv.degree())
        return "column Hermite: pivot column not reduced";
  }

  const RowHermite rh = row_hermite_form(m);
  if (m * rh.transform != rh.form) return "row Hermite: m U != form";
  if (!is_unimodular(rh.transform)) return "row Hermite: transform not unimodular";
  if (rh.transform * rh.transform_inverse != PolyMatrix::identity(f, m.cols())) return "row Hermite: bad inverse";

  return "";
}

/// Hermite, Smith and row-reduction identities for one matrix. Returns an empty string on success,
/// otherwise a description of the first failed identity.
inline std::string algebra_identities(const PolyMatrix& m) {
  using namespace convkit;
  const std::size_t r = rank(m);

  if (r == m.rows()) {
    const std::string hermite = hermite_identities(m);
    if (!hermite.empty()) return hermite;
  }

  const SmithForm s = smith_form(m);
  if (s.U * m * s.V != s.form) return "Smith: U m V != form";
  if (!is_unimodular(s.U) || !is_unimodular(s.V)) return "Smith: transform not unimodular";
  if (s.U_inverse * s.form * s.V_inverse != m) return "Smith: reconstruction failed";
  if (!is_diagonal_form(s.form)) return "Smith: form not diagonal";
  if (s.invariants.size() != m.rows()) return "Smith: one invariant per row expected";
  const auto nonzero = static_cast<std::size_t>(
      std::count_if(s.invariants.begin(), s.invariants.end(), [](const Poly& p) { return !p.is_zero(); }));
  if (nonzero != r) return "Smith: nonzero invariant count differs from rank";
  for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
    if (s.invariants[i + 1].is_zero()) {
      if (!s.invariants[i].is_zero()) return "Smith: divisibility chain broken";
      continue;
    }
    if (!divmod(s.invariants[i], s.invariants[i + 1]).second.is_zero()) return "Smith: divisibility chain broken";
  }
  auto ascending = s.invariants;
  std::reverse(ascending.begin(), ascending.end());
  if (ascending != invariant_factors_from_minors(m)) return "Smith: invariants differ from minor gcds";

  if (r == m.rows()) {
    const RowReduction red = row_reduce(m);
    if (red.transform * m != red.reduced) return "row reduce: T m != reduced";
    if (!is_unimodular(red.transform)) return "row reduce: transform not unimodular";
    if (!is_row_reduced(red.reduced)) return "row reduce: result not row reduced";
    int external = 0;
    for (int d : red.reduced.row_degrees()) external += d;
    if (external != internal_degree(m)) return "row reduce: external degree differs from internal degree";
  }
  return "";
}

/// Full-size minors of U m equal det(U) times those of m; returns whether one constant relates all.
inline bool minors_share_constant(const PolyMatrix& a, const PolyMatrix& b) {
  using namespace convkit;
  const auto ma = full_size_minors(a), mb = full_size_minors(b);
  if (ma.size() != mb.size()) return false;
  const auto& f = *a.field();
  Elem c = 0;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (ma[i].is_zero() != mb[i].is_zero()) return false;
    if (ma[i].is_zero()) continue;
    if (ma[i].degree() != mb[i].degree()) return false;
    const Elem ratio = f.div(mb[i].leading(), ma[i].leading());
    if (c == 0) c = ratio;
    if (ratio != c || ma[i].scaled(c) != mb[i]) return false;
  }
  return c != 0;
}

}  // namespace checks
