#include "convkit/sysrep.hpp"

#include <algorithm>
#include <set>

namespace convkit {

namespace {

Matrix mat_power_step(const Matrix& base, const Matrix& A, std::size_t times) {
  Matrix m = base;
  for (std::size_t i = 0; i < times; ++i) m = m * A;
  return m;
}

PolyMatrix shifted_identity_minus(const Matrix& A) {
  // w I - A
  const FieldPtr& f = A.field();
  PolyMatrix m(f, A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      std::vector<Elem> c{f->neg(A(i, j))};
      if (i == j) c.push_back(1);
      m(i, j) = Poly(f, c);
    }
  return m;
}

}  // namespace

void IsoRep::validate() const {
  if (!D.field()) throw InvalidArgument("system without a field");
  const std::size_t s_ = A.rows(), k_ = D.rows(), p_ = D.cols();
  if (A.cols() != s_) throw InvalidArgument("A must be square");
  if (B.rows() != k_ || B.cols() != s_) throw InvalidArgument("B must be k x s");
  if (C.rows() != s_ || C.cols() != p_) throw InvalidArgument("C must be s x (n-k)");
  if (k_ == 0 || p_ == 0) throw InvalidArgument("system needs k >= 1 and n - k >= 1");
}

Trajectory encode_iso(const IsoRep& sys, const std::vector<Vec>& inputs, std::size_t horizon_cap) {
  sys.validate();
  const FieldPtr& f = sys.field();
  Trajectory tr;
  Vec x(sys.s(), 0);
  const Vec zero_u(sys.k(), 0);
  for (std::size_t t = 0;; ++t) {
    const bool zero_state = std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
    if (t >= inputs.size() && zero_state) {
      tr.returned_to_zero = true;
      break;
    }
    if (t >= horizon_cap) break;
    const Vec& u = t < inputs.size() ? inputs[t] : zero_u;
    if (u.size() != sys.k()) throw InvalidArgument("input length must equal k");
    Vec y = vec_mul(f, x, sys.C);
    const Vec uD = vec_mul(f, u, sys.D);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = f->add(y[i], uD[i]);
    Vec c = y;
    c.insert(c.end(), u.begin(), u.end());
    tr.states.push_back(x);
    tr.codewords.push_back(std::move(c));
    Vec nx = vec_mul(f, x, sys.A);
    const Vec uB = vec_mul(f, u, sys.B);
    for (std::size_t i = 0; i < nx.size(); ++i) nx[i] = f->add(nx[i], uB[i]);
    x = std::move(nx);
  }
  tr.states.push_back(x);
  return tr;
}

PolyMatrix system_matrix(const IsoRep& sys) {
  sys.validate();
  const FieldPtr& f = sys.field();
  const std::size_t s = sys.s(), k = sys.k(), p = sys.n() - sys.k();
  PolyMatrix E(f, s + k + p, s + p);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      E(i, j) = Poly(f, {i == j ? Elem{1} : Elem{0}, f->neg(sys.A(i, j))});
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < p; ++j) E(i, s + j) = Poly::constant(f, f->neg(sys.C(i, j)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s; ++j) E(s + i, j) = Poly(f, {0, f->neg(sys.B(i, j))});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < p; ++j) E(s + i, s + j) = Poly::constant(f, f->neg(sys.D(i, j)));
  for (std::size_t i = 0; i < p; ++i) E(s + k + i, s + i) = Poly::constant(f, 1);
  return E;
}

Matrix reachability_matrix(const IsoRep& sys) {
  sys.validate();
  const std::size_t s = sys.s(), k = sys.k();
  Matrix phi(sys.field(), s * k, s);
  Matrix block = sys.B;
  for (std::size_t i = 0; i < s; ++i) {
    phi.set_block(i * k, 0, block);
    block = block * sys.A;
  }
  return phi;
}

Matrix observability_matrix(const IsoRep& sys) {
  sys.validate();
  const std::size_t s = sys.s(), p = sys.n() - sys.k();
  Matrix omega(sys.field(), s, s * p);
  Matrix block = sys.C;
  for (std::size_t i = 0; i < s; ++i) {
    omega.set_block(0, i * p, block);
    block = sys.A * block;
  }
  return omega;
}

ReachObs reachability_observability(const IsoRep& sys) {
  ReachObs r;
  r.reachability_rank = rank(reachability_matrix(sys));
  r.observability_rank = rank(observability_matrix(sys));
  r.reachable = r.reachability_rank == sys.s();
  r.observable = r.observability_rank == sys.s();
  return r;
}

bool pbh_reachable(const IsoRep& sys) {
  sys.validate();
  if (sys.s() == 0) return true;
  const PolyMatrix wA = shifted_identity_minus(sys.A.transpose());
  PolyMatrix m(sys.field(), sys.s(), sys.s() + sys.k());
  m.set_block(0, 0, wA);
  m.set_block(0, sys.s(), PolyMatrix::from_constant(sys.B.transpose()));
  return is_left_prime(m);
}

bool pbh_observable(const IsoRep& sys) {
  sys.validate();
  if (sys.s() == 0) return true;
  const std::size_t p = sys.n() - sys.k();
  PolyMatrix m(sys.field(), sys.s(), sys.s() + p);
  m.set_block(0, 0, shifted_identity_minus(sys.A));
  m.set_block(0, sys.s(), PolyMatrix::from_constant(sys.C));
  return is_left_prime(m);
}

KalmanForm kalman_form(const IsoRep& sys) {
  sys.validate();
  const std::size_t s = sys.s();
  const FieldPtr& f = sys.field();
  KalmanForm out;
  if (s == 0) {
    out.system = sys;
    out.S = Matrix(f, 0, 0);
    return out;
  }
  const Rref r = rref(reachability_matrix(sys));
  const std::size_t rk = r.pivots.size();
  // T = [basis of the reachable row space; unit vectors at the non-pivot columns]
  Matrix T(f, s, s);
  T.set_block(0, 0, r.reduced.block(0, 0, rk, s));
  std::size_t row = rk;
  for (std::size_t j = 0, p = 0; j < s; ++j) {
    if (p < rk && r.pivots[p] == j) {
      ++p;
      continue;
    }
    T(row++, j) = 1;
  }
  const auto S = inverse(T);
  if (!S) throw Error("Kalman basis change is singular");
  out.S = *S;
  out.system = IsoRep{T * sys.A * out.S, sys.B * out.S, T * sys.C, sys.D};
  out.reachable_dimension = rk;
  return out;
}

IsoRep minimal_iso(const IsoRep& sys) {
  const auto kf = kalman_form(sys);
  const std::size_t r = kf.reachable_dimension;
  const IsoRep& t = kf.system;
  return IsoRep{t.A.block(0, 0, r, r), t.B.block(0, 0, t.B.rows(), r), t.C.block(0, 0, r, t.C.cols()), t.D};
}

ConvolutionalCode code_from_iso(const IsoRep& sys) {
  const IsoRep m = minimal_iso(sys);
  const std::size_t s = m.s(), k = m.k(), n = m.n();
  const PolyMatrix K = left_kernel(system_matrix(m));
  if (K.rows() != k) throw Error("trajectory kernel has unexpected rank");
  PolyMatrix G(m.field(), k, n);
  G.set_block(0, 0, K.block(0, s + k, k, n - k));
  G.set_block(0, n - k, K.block(0, s, k, k));
  return ConvolutionalCode::from_generator(G);
}

Realization iso_from_code(const ConvolutionalCode& code) {
  const PolyMatrix& G = code.generator();
  const FieldPtr& f = code.field();
  const std::size_t k = code.k(), n = code.n();
  const auto nu = G.row_degrees();
  const Matrix G0 = G.coefficient(0);
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;

  auto subsets = combinations(n, k);
  std::vector<std::size_t> info;
  for (auto it = subsets.rbegin(); it != subsets.rend(); ++it)
    if (determinant(G0.submatrix(all_rows, *it)) != 0) {
      info = *it;
      break;
    }
  if (info.empty()) throw InvalidArgument("generator has no invertible constant k x k block; no realization");
  std::vector<std::size_t> parity;
  for (std::size_t j = 0; j < n; ++j)
    if (!std::binary_search(info.begin(), info.end(), j)) parity.push_back(j);

  // controller form driven by the message v: slot (i, l) holds v_{i, t-l}
  std::size_t s = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i] = s;
    s += static_cast<std::size_t>(std::max(nu[i], 0));
  }
  Matrix Av(f, s, s), Bv(f, k, s), Cv(f, s, n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t len = static_cast<std::size_t>(std::max(nu[i], 0));
    if (len == 0) continue;
    Bv(i, offset[i]) = 1;
    for (std::size_t l = 0; l + 1 < len; ++l) Av(offset[i] + l, offset[i] + l + 1) = 1;
    for (std::size_t l = 0; l < len; ++l)
      for (std::size_t j = 0; j < n; ++j) Cv(offset[i] + l, j) = G(i, j).coeff(static_cast<int>(l + 1));
  }
  // eliminate v_t = (u_t - x_t Cv_I) Q0^{-1}
  const auto Q0inv = inverse(G0.submatrix(all_rows, info));
  std::vector<std::size_t> all_s(s);
  for (std::size_t i = 0; i < s; ++i) all_s[i] = i;
  const Matrix CvI = Cv.submatrix(all_s, info);
  const Matrix CvP = Cv.submatrix(all_s, parity);
  const Matrix G0P = G0.submatrix(all_rows, parity);
  IsoRep sys;
  sys.B = *Q0inv * Bv;
  sys.A = Av - CvI * sys.B;
  sys.D = *Q0inv * G0P;
  sys.C = CvP - CvI * sys.D;
  Realization out{sys, parity};
  out.columns.insert(out.columns.end(), info.begin(), info.end());
  return out;
}

ConvolutionalCode permute_columns(const ConvolutionalCode& code, const std::vector<std::size_t>& order) {
  if (order.size() != code.n()) throw InvalidArgument("column order has the wrong length");
  std::vector<std::size_t> rows(code.k());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return ConvolutionalCode::from_generator(code.generator().submatrix(rows, order));
}

SystemConstruction mds_from_system(std::size_t n, std::size_t delta, const FieldPtr& field) {
  if (n < 2) throw InvalidArgument("mds_from_system needs n >= 2");
  if (delta == 0) throw InvalidArgument("mds_from_system needs delta >= 1");
  const std::uint64_t q = field->order();
  if (q < n * delta + 1) throw InvalidArgument("mds_from_system needs q >= n delta + 1");
  const Field& f = *field;

  std::vector<Elem> lambda(delta);
  std::set<Elem> taken;
  for (std::size_t j = 0; j < delta; ++j) {
    lambda[j] = f.alpha_pow(static_cast<std::int64_t>(j) + 1);
    taken.insert(lambda[j]);
  }
  Matrix A(field, delta, delta);
  for (std::size_t j = 0; j < delta; ++j) A(j, j) = lambda[j];
  Matrix B(field, 1, delta);
  for (std::size_t j = 0; j < delta; ++j) B(0, j) = 1;
  Matrix D(field, 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) D(0, j) = 1;
  Matrix Cm(field, delta, n - 1);

  std::vector<int> residues;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int chosen = -1;
    std::vector<Elem> spectrum;
    for (int r = 1; r + 1 < static_cast<int>(q) && chosen < 0; ++r) {
      std::set<Elem> cand;
      for (std::size_t m = 1; m <= delta; ++m) cand.insert(f.alpha_pow(r + static_cast<int>(m)));
      if (cand.size() != delta) continue;
      if (std::any_of(cand.begin(), cand.end(), [&](Elem e) { return taken.count(e) > 0; })) continue;
      chosen = r;
      spectrum.assign(cand.begin(), cand.end());
    }
    if (chosen < 0) throw InvalidArgument("no disjoint spectrum left in the field");
    residues.push_back(chosen);
    taken.insert(spectrum.begin(), spectrum.end());
    // target characteristic polynomial prod (s - mu)
    Poly target = Poly::constant(field, 1);
    for (auto mu : spectrum) target = target * Poly(field, {f.neg(mu), 1});
    // det(sI - A + cB) = prod(s - lambda) + sum_j c_j prod_{l != j}(s - lambda_l); evaluate at lambda_j
    for (std::size_t j = 0; j < delta; ++j) {
      Elem denom = 1;
      for (std::size_t l = 0; l < delta; ++l)
        if (l != j) denom = f.mul(denom, f.sub(lambda[j], lambda[l]));
      Cm(j, i) = f.div(target.eval(lambda[j]), denom);
    }
    // exact check of the placed spectrum
    Matrix col(field, delta, 1);
    for (std::size_t j = 0; j < delta; ++j) col(j, 0) = Cm(j, i);
    const Matrix closed = A - col * B;
    if (determinant(shifted_identity_minus(closed)) != target) throw Error("pole placement failed");
  }
  IsoRep sys{A, B, Cm, D};
  return {code_from_iso(sys), sys, residues};
}

Matrix markov_parameter_matrix(const IsoRep& sys, int L) {
  sys.validate();
  if (L < 0) throw InvalidArgument("negative L");
  const std::size_t k = sys.k(), p = sys.n() - sys.k(), blocks = static_cast<std::size_t>(L) + 1;
  std::vector<Matrix> F;
  F.push_back(sys.D);
  Matrix BA = sys.B;
  for (int i = 1; i <= L; ++i) {
    F.push_back(sys.s() == 0 ? Matrix(sys.field(), k, p) : BA * sys.C);
    if (sys.s() > 0) BA = mat_power_step(BA, sys.A, 1);
  }
  Matrix out(sys.field(), blocks * k, blocks * p);
  for (std::size_t a = 0; a < blocks; ++a)
    for (std::size_t b = a; b < blocks; ++b) out.set_block(a * k, b * p, F[b - a]);
  return out;
}

Verdict mdp_criterion_FL(const IsoRep& sys, const Budgets& budgets) {
  const IsoRep m = minimal_iso(sys);
  const int delta = static_cast<int>(m.s());
  const int k = static_cast<int>(m.k()), p = static_cast<int>(m.n() - m.k());
  const int L = delta / k + delta / p;
  const Matrix F = markov_parameter_matrix(m, L);
  Pattern pattern(F.rows() * F.cols());
  for (std::size_t r = 0; r < F.rows(); ++r)
    for (std::size_t c = 0; c < F.cols(); ++c)
      pattern[r * F.cols() + c] = (c / static_cast<std::size_t>(p)) >= (r / static_cast<std::size_t>(k));
  return nontrivial_minors_nonzero(F, pattern, budgets.minors);
}

}  // namespace convkit
