#pragma once

// Independent reference computations used to check the library. Everything here works on raw
// coefficient arrays with naive loops and never calls the routine it is compared against.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "convkit/code.hpp"
#include "convkit/field.hpp"
#include "convkit/poly_matrix.hpp"

namespace oracle {

using convkit::Elem;
using convkit::Field;
using convkit::FieldPtr;
using convkit::Poly;
using convkit::PolyMatrix;
using convkit::PolyVector;

using Grid = std::vector<std::vector<Elem>>;

/// Schoolbook product in F_p[x] / (modulus) on base-p digits.
inline Elem naive_mul(const Field& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic();
  const std::size_t N = f.extension_degree();
  std::vector<std::uint64_t> da(N), db(N);
  for (std::size_t i = 0; i < N; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  std::vector<std::uint64_t> prod(2 * N, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = 2 * N - 1; d >= N; --d) {
    const std::uint64_t c = prod[d];
    if (c)
      for (std::size_t i = 0; i <= N; ++i) prod[d - N + i] = (prod[d - N + i] + (p - c) * m[i]) % p;
  }
  Elem out = 0;
  for (std::size_t i = N; i-- > 0;) out = static_cast<Elem>(out * p + prod[i]);
  return out;
}

inline Elem naive_add(const Field& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic();
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < f.extension_degree(); ++i, a /= p, b /= p, scale *= p)
    out += static_cast<Elem>(((a % p) + (b % p)) % p) * scale;
  return out;
}

/// Irreducibility of a monic polynomial over F_p by trial division with every monic polynomial of
/// degree at most half its degree.
inline bool irreducible_by_trial(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t n = poly.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> div(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) div[i] = static_cast<std::int64_t>(c % p);
      div[d] = 1;
      std::vector<std::int64_t> rem(poly.begin(), poly.end());
      for (std::size_t top = n; top >= d; --top) {
        const std::int64_t lead = ((rem[top] % p) + p) % p;
        for (std::size_t i = 0; i <= d; ++i) rem[top - d + i] = ((rem[top - d + i] - lead * div[i]) % p + p) % p;
        if (top == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && rem[i] % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

/// Determinant by the Leibniz expansion over all permutations.
inline Elem leibniz_det(const Field& f, const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Elem term = 1;
    for (std::size_t i = 0; i < n && term; ++i) term = f.mul(term, m[i][perm[i]]);
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Polynomial determinant by the Leibniz expansion.
inline Poly leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  Poly total(m.field());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term = Poly::constant(m.field(), 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Whether some permutation of the chosen rows and columns runs through allowed positions only.
inline bool structurally_nonzero(const std::vector<std::vector<bool>>& allowed, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) ok = allowed[rows[i]][cols[perm[i]]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(r), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// Every square minor not forced to vanish by the allowed pattern is nonzero.
inline bool superregular_by_leibniz(const Field& f, const Grid& m, const std::vector<std::vector<bool>>& allowed) {
  const std::size_t R = m.size(), Cn = m.empty() ? 0 : m[0].size();
  for (std::size_t r = 1; r <= std::min(R, Cn); ++r)
    for (const auto& rows : subsets(R, r))
      for (const auto& cols : subsets(Cn, r)) {
        if (!structurally_nonzero(allowed, rows, cols)) continue;
        Grid sub(r, std::vector<Elem>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sub[i][j] = m[rows[i]][cols[j]];
        if (leibniz_det(f, sub) == 0) return false;
      }
  return true;
}

inline std::size_t gauss_rank(const Field& f, Grid m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const Elem inv = f.inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Elem factor = f.mul(m[r][c], inv);
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// Coefficients G_d as [d][row][col].
inline std::vector<Grid> coefficient_grids(const PolyMatrix& G) {
  const int deg = std::max(G.degree(), 0);
  std::vector<Grid> out(static_cast<std::size_t>(deg) + 1, Grid(G.rows(), std::vector<Elem>(G.cols(), 0)));
  for (int d = 0; d <= deg; ++d)
    for (std::size_t i = 0; i < G.rows(); ++i)
      for (std::size_t j = 0; j < G.cols(); ++j) out[d][i][j] = G(i, j).coeff(d);
  return out;
}

/// Codeword coefficients c_0 .. c_{steps-1} of the message u_0 .. u_{len-1} by direct convolution.
inline Grid convolve(const Field& f, const std::vector<Grid>& Gd, const Grid& u, std::size_t steps) {
  const std::size_t n = Gd[0][0].size();
  Grid c(steps, std::vector<Elem>(n, 0));
  for (std::size_t t = 0; t < steps; ++t)
    for (std::size_t l = 0; l <= t && l < u.size(); ++l) {
      const std::size_t d = t - l;
      if (d >= Gd.size()) continue;
      for (std::size_t i = 0; i < u[l].size(); ++i) {
        if (!u[l][i]) continue;
        for (std::size_t j = 0; j < n; ++j) c[t][j] = f.add(c[t][j], f.mul(u[l][i], Gd[d][i][j]));
      }
    }
  return c;
}

inline std::size_t grid_weight(const Grid& g) {
  std::size_t w = 0;
  for (const auto& row : g)
    for (Elem e : row) w += e != 0;
  return w;
}

/// Calls fn on every message u_0 .. u_{len-1} in F_q^k (odometer order).
template <class Fn>
void for_each_message(std::uint32_t q, std::size_t k, std::size_t len, Fn&& fn) {
  Grid u(len, std::vector<Elem>(k, 0));
  while (true) {
    fn(u);
    std::size_t pos = 0;
    while (pos < len * k) {
      Elem& e = u[pos / k][pos % k];
      if (++e < q) break;
      e = 0;
      ++pos;
    }
    if (pos == len * k) return;
  }
}

/// d_j^c by exhaustive enumeration of u_0 != 0, u_1, .., u_j.
inline long column_distance(const convkit::ConvolutionalCode& C, int j) {
  const Field& f = *C.field();
  const auto Gd = coefficient_grids(C.generator());
  long best = std::numeric_limits<long>::max();
  for_each_message(f.order(), C.k(), static_cast<std::size_t>(j) + 1, [&](const Grid& u) {
    if (std::all_of(u[0].begin(), u[0].end(), [](Elem e) { return e == 0; })) return;
    best = std::min(best, static_cast<long>(grid_weight(convolve(f, Gd, u, static_cast<std::size_t>(j) + 1))));
  });
  return best;
}

/// Minimum codeword weight over nonzero messages of degree at most cap.
inline long bounded_free_distance(const convkit::ConvolutionalCode& C, int cap) {
  const Field& f = *C.field();
  const auto Gd = coefficient_grids(C.generator());
  const std::size_t len = static_cast<std::size_t>(cap) + 1;
  long best = std::numeric_limits<long>::max();
  for_each_message(f.order(), C.k(), len, [&](const Grid& u) {
    if (grid_weight(u) == 0) return;
    best = std::min(best, static_cast<long>(grid_weight(convolve(f, Gd, u, len + Gd.size()))));
  });
  return best;
}

/// Minimum Hamming distance between the received steps (zero beyond their end) and the codewords
/// of all messages of degree at most cap.
inline long nearest_codeword_distance(const convkit::ConvolutionalCode& C, const Grid& received, int cap) {
  const Field& f = *C.field();
  const auto Gd = coefficient_grids(C.generator());
  const std::size_t len = static_cast<std::size_t>(cap) + 1;
  const std::size_t steps = std::max(received.size(), len + Gd.size());
  long best = std::numeric_limits<long>::max();
  for_each_message(f.order(), C.k(), len, [&](const Grid& u) {
    const Grid c = convolve(f, Gd, u, steps);
    long d = 0;
    for (std::size_t t = 0; t < steps; ++t)
      for (std::size_t i = 0; i < C.n(); ++i) d += c[t][i] != (t < received.size() ? received[t][i] : 0);
    best = std::min(best, d);
  });
  return best;
}

inline Poly random_poly(const FieldPtr& f, int max_degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& e : c) e = static_cast<Elem>(rng() % f->order());
  return Poly(f, c);
}

inline PolyMatrix random_poly_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, int max_degree,
                                     std::mt19937_64& rng) {
  PolyMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(f, max_degree, rng);
  return m;
}

/// Product of random elementary row operations with polynomial multipliers.
inline PolyMatrix random_unimodular(const FieldPtr& f, std::size_t n, int ops, std::mt19937_64& rng) {
  PolyMatrix U = PolyMatrix::identity(f, n);
  if (n < 2) {
    U(0, 0) = Poly::constant(f, static_cast<Elem>(1 + rng() % (f->order() - 1)));
    return U;
  }
  for (int s = 0; s < ops; ++s) {
    const std::size_t a = rng() % n;
    std::size_t b = rng() % (n - 1);
    if (b >= a) ++b;
    const Poly mult = random_poly(f, 1, rng);
    for (std::size_t j = 0; j < n; ++j) U(a, j) = U(a, j) + mult * U(b, j);
  }
  return U;
}

/// Random noncatastrophic code of the given parameters with row degrees spread as evenly as possible.
inline convkit::ConvolutionalCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, int delta,
                                              std::mt19937_64& rng) {
  std::vector<int> degs(k, delta / static_cast<int>(k));
  for (int i = 0; i < delta % static_cast<int>(k); ++i) ++degs[k - 1 - static_cast<std::size_t>(i)];
  for (int attempt = 0;; ++attempt) {
    PolyMatrix G(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) G(i, j) = random_poly(f, degs[i], rng);
    try {
      auto C = convkit::ConvolutionalCode::from_generator(G);
      if (C.noncatastrophic() && C.degree() == delta) return C;
    } catch (const convkit::Error&) {
    }
    if (attempt > 10000) throw convkit::Error("no random code found");
  }
}

}  // namespace oracle
