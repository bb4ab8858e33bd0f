#include "convkit/code.hpp"

#include <numeric>

namespace convkit {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

ConvolutionalCode ConvolutionalCode::from_generator(const PolyMatrix& G) {
  if (!G.field()) throw InvalidArgument("generator without a field");
  if (G.rows() == 0) throw InvalidArgument("generator needs at least one row");
  if (G.rows() >= G.cols()) throw InvalidArgument("generator needs k < n");
  if (rank(G) != G.rows()) throw InvalidArgument("generator is not of full row rank");

  ConvolutionalCode c;
  c.generator_ = row_reduce(G).reduced;
  const auto nu = c.generator_.row_degrees();
  c.degree_ = std::accumulate(nu.begin(), nu.end(), 0);
  c.noncatastrophic_ = is_left_prime(c.generator_);
  c.smith_ = std::make_shared<const SmithForm>(smith_form(c.generator_));
  if (c.noncatastrophic_) {
    const std::size_t k = c.k(), n = c.n();
    PolyMatrix Q(G.field(), n, n);
    Q.set_block(0, 0, c.generator_);
    Q.set_block(k, 0, complete_to_unimodular(c.generator_));
    const PolyMatrix Qinv = unimodular_inverse(Q);
    PolyMatrix H = Qinv.block(0, k, n, n - k).transpose();
    H = row_reduce(H).reduced;
    if (!(H * c.generator_.transpose()).is_zero()) throw Error("parity check does not annihilate the generator");
    c.parity_check_ = std::move(H);
  }
  return c;
}

ConvolutionalCode ConvolutionalCode::from_parity_check(const PolyMatrix& H) {
  if (!H.field()) throw InvalidArgument("parity check without a field");
  if (H.rows() == 0 || H.rows() >= H.cols()) throw InvalidArgument("parity check needs 0 < n - k < n");
  if (rank(H) != H.rows()) throw InvalidArgument("parity check is not of full row rank");
  const auto rh = row_hermite_form(H);
  const std::size_t r = H.rows(), n = H.cols();
  PolyMatrix G = rh.transform.block(0, r, n, n - r).transpose();
  return from_generator(G);
}

int ConvolutionalCode::L() const {
  const int k = static_cast<int>(this->k()), r = static_cast<int>(n() - this->k());
  return degree_ / k + degree_ / r;
}

int ConvolutionalCode::M() const {
  const int k = static_cast<int>(this->k()), r = static_cast<int>(n() - this->k());
  return degree_ / k + (degree_ + r - 1) / r;
}

const PolyMatrix& ConvolutionalCode::require_parity_check() const {
  if (!parity_check_) throw InvalidArgument("catastrophic code has no parity check");
  return *parity_check_;
}

PolyVector ConvolutionalCode::encode(const PolyVector& u) const {
  if (u.size() != k()) throw InvalidArgument("message length must equal k");
  for (const auto& p : u)
    if (p.field()) require_same_field(p.field(), field());
  return vec_mul(u, generator_);
}

Membership ConvolutionalCode::contains(const PolyVector& c) const {
  if (c.size() != n()) throw InvalidArgument("word length must equal n");
  for (const auto& p : c)
    if (p.field()) require_same_field(p.field(), field());
  PolyVector word(c.size(), Poly(field()));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) word[i] = c[i];

  if (parity_check_) {
    const auto syndrome = mat_vec(*parity_check_, word);
    for (const auto& s : syndrome)
      if (!s.is_zero()) return {false, std::nullopt};
  }
  // solve x S = c V over F_q[z], then u = x U
  const SmithForm& s = *smith_;
  const PolyVector w = vec_mul(word, s.V);
  for (std::size_t i = k(); i < n(); ++i)
    if (!w[i].is_zero()) return {false, std::nullopt};
  PolyVector x(k(), Poly(field()));
  for (std::size_t i = 0; i < k(); ++i) {
    auto [q, r] = divmod(w[i], s.form(i, i));
    if (!r.is_zero()) return {false, std::nullopt};
    x[i] = q;
  }
  PolyVector u = vec_mul(x, s.U);
  if (vec_mul(u, generator_) != word) throw Error("membership witness does not reproduce the word");
  return {true, std::move(u)};
}

ConvolutionalCode dual_code(const ConvolutionalCode& C) {
  if (!C.noncatastrophic()) throw InvalidArgument("dual of a catastrophic code is not defined");
  return ConvolutionalCode::from_generator(*C.parity_check());
}

ConvolutionalCode reverse_code(const ConvolutionalCode& C) {
  if (!C.noncatastrophic()) throw InvalidArgument("reverse of a catastrophic code is not defined");
  return ConvolutionalCode::from_generator(C.generator().row_reversed());
}

ConvolutionalCode noncatastrophic_envelope(const ConvolutionalCode& C) {
  if (C.noncatastrophic()) return C;
  const auto rh = row_hermite_form(C.generator());
  return ConvolutionalCode::from_generator(rh.transform_inverse.block(0, 0, C.k(), C.n()));
}

bool complementary_minors_check(const ConvolutionalCode& C, bool signed_minors) {
  const PolyMatrix& H = C.require_parity_check();
  const PolyMatrix& G = C.generator();
  const std::size_t k = C.k(), n = C.n();
  const auto g_rows = iota_vec(k), h_rows = iota_vec(n - k);
  const FieldPtr& f = C.field();
  std::optional<Elem> ratio;
  for (const auto& I : combinations(n, k)) {
    std::vector<std::size_t> Ic;
    std::size_t index_sum = 0;
    for (std::size_t j = 0, p = 0; j < n; ++j) {
      if (p < I.size() && I[p] == j) {
        index_sum += j + 1;
        ++p;
      } else {
        Ic.push_back(j);
      }
    }
    const Poly mg = determinant(G.submatrix(g_rows, I));
    Poly mh = determinant(H.submatrix(h_rows, Ic));
    if (signed_minors && index_sum % 2 == 1) mh = -mh;
    if (mg.is_zero() != mh.is_zero()) return false;
    if (mg.is_zero()) continue;
    if (!ratio) {
      auto [q, r] = divmod(mg, mh);
      if (!r.is_zero() || q.degree() != 0) return false;
      ratio = q.coeff(0);
    }
    if (mg != mh.scaled(*ratio)) return false;
  }
  return ratio.has_value() && f->contains(*ratio);
}

bool same_code(const ConvolutionalCode& a, const ConvolutionalCode& b) {
  if (!same_field(a.field(), b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
  return column_hermite_form(a.generator()).form == column_hermite_form(b.generator()).form;
}

}  // namespace convkit
