#include "convkit/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "convkit/sysrep.hpp"

namespace convkit {

namespace {

constexpr long kInfinite = std::numeric_limits<long>::max();

std::uint64_t power_saturating(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    acc *= base;
  }
  return acc;
}

/// All vectors of F_q^len, index i holding the base-q digits of i.
std::vector<Vec> all_vectors(std::size_t q, std::size_t len) {
  const std::size_t count = static_cast<std::size_t>(power_saturating(q, len));
  std::vector<Vec> out(count, Vec(len, 0));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t x = i;
    for (std::size_t d = 0; d < len; ++d) {
      out[i][d] = static_cast<Elem>(x % q);
      x /= q;
    }
  }
  return out;
}

std::size_t index_of(const Vec& v, std::size_t q) {
  std::size_t idx = 0;
  for (std::size_t d = v.size(); d-- > 0;) idx = idx * q + v[d];
  return idx;
}

/// Products u G_i for every message symbol u and every coefficient G_i.
struct ProductTable {
  std::vector<std::vector<Vec>> rows;  // rows[i][u] = u G_i
};

ProductTable product_table(const PolyMatrix& G, const std::vector<Vec>& symbols, int terms) {
  ProductTable t;
  const FieldPtr& f = G.field();
  for (int i = 0; i < terms; ++i) {
    const Matrix Gi = G.coefficient(i);
    std::vector<Vec> r;
    r.reserve(symbols.size());
    for (const auto& u : symbols) r.push_back(vec_mul(f, u, Gi));
    t.rows.push_back(std::move(r));
  }
  return t;
}

/// Weight of c_t = sum_i u_{t-i} G_i over the chosen history (indices into the symbol list).
long step_weight(const Field& f, const ProductTable& t, const std::vector<std::size_t>& hist, int time, int last,
                 std::size_t n) {
  Vec acc(n, 0);
  const int terms = static_cast<int>(t.rows.size());
  for (int i = 0; i < terms; ++i) {
    const int src = time - i;
    if (src < 0) break;
    if (src > last) continue;
    const Vec& p = t.rows[i][hist[static_cast<std::size_t>(src)]];
    for (std::size_t c = 0; c < n; ++c) acc[c] = f.add(acc[c], p[c]);
  }
  return static_cast<long>(hamming_weight(acc));
}

/// Minimum over messages u_0 != 0, u_1..u_last of the weight of c_0..c_horizon.
long min_weight_search(const PolyMatrix& G, int last, int horizon) {
  const FieldPtr& field = G.field();
  const std::size_t q = field->order(), k = G.rows(), n = G.cols();
  const int m = std::max(G.degree(), 0);
  const auto symbols = all_vectors(q, k);
  const ProductTable table = product_table(G, symbols, std::min(m, horizon) + 1);
  std::vector<std::size_t> hist(static_cast<std::size_t>(last) + 1, 0);
  long best = kInfinite;
  std::function<void(int, long)> rec = [&](int t, long acc) {
    for (std::size_t u = (t == 0 ? 1 : 0); u < symbols.size(); ++u) {
      hist[static_cast<std::size_t>(t)] = u;
      long w = acc + step_weight(*field, table, hist, t, last, n);
      if (w >= best) continue;
      if (t < last) {
        rec(t + 1, w);
        continue;
      }
      for (int s = last + 1; s <= horizon && w < best; ++s) w += step_weight(*field, table, hist, s, last, n);
      best = std::min(best, w);
    }
  };
  rec(0, 0);
  return best;
}

FreeDistance state_graph_distance(const ConvolutionalCode& C, const Budgets& budgets) {
  if (!C.noncatastrophic()) throw InvalidArgument("state-graph free distance needs a noncatastrophic code");
  const Realization real = iso_from_code(C);
  const IsoRep& sys = real.system;
  const FieldPtr& field = C.field();
  const std::size_t q = field->order(), s = sys.s(), k = sys.k();
  const std::uint64_t states = power_saturating(q, s);
  const std::uint64_t inputs = power_saturating(q, k);
  if (states > budgets.trellis || states * inputs > budgets.trellis)
    throw BudgetExceeded("trellis exceeds the edge budget");
  const auto state_vecs = all_vectors(q, s);
  const auto input_vecs = all_vectors(q, k);
  std::vector<Vec> uB, uD;
  for (const auto& u : input_vecs) {
    uB.push_back(vec_mul(field, u, sys.B));
    uD.push_back(vec_mul(field, u, sys.D));
  }
  auto step = [&](std::size_t x, std::size_t u, long& w) {
    const Vec& xv = state_vecs[x];
    Vec nx = vec_mul(field, xv, sys.A);
    Vec y = vec_mul(field, xv, sys.C);
    for (std::size_t i = 0; i < s; ++i) nx[i] = field->add(nx[i], uB[u][i]);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = field->add(y[i], uD[u][i]);
    w = static_cast<long>(hamming_weight(y) + hamming_weight(input_vecs[u]));
    return index_of(nx, q);
  };

  long best = kInfinite;
  std::vector<long> dist(static_cast<std::size_t>(states), kInfinite);
  using Item = std::pair<long, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t u = 1; u < input_vecs.size(); ++u) {
    long w = 0;
    const std::size_t nx = step(0, u, w);
    if (nx == 0) {
      best = std::min(best, w);
    } else if (w < dist[nx]) {
      dist[nx] = w;
      pq.push({w, nx});
    }
  }
  while (!pq.empty()) {
    const auto [d, x] = pq.top();
    pq.pop();
    if (d >= best) break;
    if (d > dist[x]) continue;
    for (std::size_t u = 0; u < input_vecs.size(); ++u) {
      long w = 0;
      const std::size_t nx = step(x, u, w);
      const long nd = d + w;
      if (nx == 0) {
        best = std::min(best, nd);
      } else if (nd < dist[nx]) {
        dist[nx] = nd;
        pq.push({nd, nx});
      }
    }
  }
  if (best == kInfinite) throw Error("no path returns to the zero state");
  FreeDistance fd;
  fd.value = best;
  fd.certified = true;
  fd.method = FreeDistanceMethod::StateGraph;
  return fd;
}

Matrix block_toeplitz(const PolyMatrix& P, std::size_t block_rows, std::size_t block_cols,
                      const std::function<int(std::size_t, std::size_t)>& index) {
  const std::size_t r = P.rows(), c = P.cols();
  Matrix out(P.field(), block_rows * r, block_cols * c);
  const int deg = P.degree();
  for (std::size_t a = 0; a < block_rows; ++a)
    for (std::size_t b = 0; b < block_cols; ++b) {
      const int i = index(a, b);
      if (i < 0 || i > deg) continue;
      out.set_block(a * r, b * c, P.coefficient(i));
    }
  return out;
}

void require_nonnegative(int j) {
  if (j < 0) throw InvalidArgument("index must be nonnegative");
}

Verdict distance_verdict(long found, long target, int index) {
  Verdict v;
  v.examined = 1;
  v.holds = found == target;
  if (!v.holds) v.witness = Witness{{}, {}, index, found};
  return v;
}

}  // namespace

Matrix sliding_generator(const PolyMatrix& G, int j) {
  require_nonnegative(j);
  const std::size_t b = static_cast<std::size_t>(j) + 1;
  return block_toeplitz(G, b, b, [](std::size_t a, std::size_t c) {
    return c >= a ? static_cast<int>(c - a) : -1;
  });
}

Matrix sliding_parity_check(const PolyMatrix& H, int j) {
  require_nonnegative(j);
  const std::size_t b = static_cast<std::size_t>(j) + 1;
  return block_toeplitz(H, b, b, [](std::size_t a, std::size_t c) {
    return a >= c ? static_cast<int>(a - c) : -1;
  });
}

Matrix partial_parity_check(const PolyMatrix& H, int L) {
  require_nonnegative(L);
  const int nu = std::max(H.degree(), 0);
  const std::size_t rows = static_cast<std::size_t>(L) + 1, cols = static_cast<std::size_t>(nu + L) + 1;
  return block_toeplitz(H, rows, cols, [nu](std::size_t a, std::size_t b) {
    const long i = static_cast<long>(a) + nu - static_cast<long>(b);
    return b >= a && i >= 0 ? static_cast<int>(i) : -1;
  });
}

Matrix reversed_sliding_parity_check(const PolyMatrix& H, int L) {
  require_nonnegative(L);
  const int nu = std::max(H.degree(), 0);
  const std::size_t b = static_cast<std::size_t>(L) + 1;
  return block_toeplitz(H, b, b, [nu](std::size_t a, std::size_t c) {
    return c >= a ? nu - static_cast<int>(c - a) : -1;
  });
}

Bounds bounds(std::size_t n, std::size_t k, int delta) {
  if (k == 0 || k >= n || delta < 0) throw InvalidArgument("bounds need 0 < k < n and delta >= 0");
  Bounds b;
  b.n = n;
  b.k = k;
  b.singleton = static_cast<long>(n - k) * (delta / static_cast<long>(k) + 1) + delta + 1;
  return b;
}

Bounds bounds(const ConvolutionalCode& C) { return bounds(C.n(), C.k(), C.degree()); }

FreeDistance free_distance(const ConvolutionalCode& C, FreeDistanceMethod method, int cap, const Budgets& budgets) {
  if (method == FreeDistanceMethod::StateGraph) return state_graph_distance(C, budgets);
  if (cap < 0) throw InvalidArgument("brute-force free distance needs a message-degree cap >= 0");
  const std::uint64_t total =
      power_saturating(C.field()->order(), static_cast<std::uint64_t>(C.k()) * (static_cast<std::uint64_t>(cap) + 1));
  if (total > budgets.enumeration) throw BudgetExceeded("message enumeration exceeds budget");
  const PolyMatrix& G = C.generator();
  FreeDistance fd;
  fd.value = min_weight_search(G, cap, cap + std::max(G.degree(), 0));
  fd.certified = false;
  fd.cap = cap;
  fd.method = FreeDistanceMethod::BruteForce;
  return fd;
}

long column_distance(const ConvolutionalCode& C, int j, const Budgets& budgets) {
  require_nonnegative(j);
  if (!C.noncatastrophic()) throw InvalidArgument("column distances need a noncatastrophic code");
  const std::uint64_t total =
      power_saturating(C.field()->order(), static_cast<std::uint64_t>(C.k()) * (static_cast<std::uint64_t>(j) + 1));
  if (total > budgets.enumeration) throw BudgetExceeded("column distance enumeration exceeds budget");
  return min_weight_search(C.generator(), j, j);
}

DistanceProfile distance_profile(const ConvolutionalCode& C, int j_max, const Budgets& budgets) {
  require_nonnegative(j_max);
  DistanceProfile p;
  const Bounds b = bounds(C);
  p.singleton = b.singleton;
  p.d_free = free_distance(C, FreeDistanceMethod::StateGraph, -1, budgets);
  for (int j = 0; j <= j_max; ++j) {
    p.d_col.push_back(column_distance(C, j, budgets));
    p.column_bounds.push_back(b.column(j));
  }
  return p;
}

Verdict is_mds(const ConvolutionalCode& C, const Budgets& budgets) {
  const long d = free_distance(C, FreeDistanceMethod::StateGraph, -1, budgets).value;
  return distance_verdict(d, bounds(C).singleton, -1);
}

Verdict is_smds(const ConvolutionalCode& C, const Budgets& budgets) {
  const int M = C.M();
  return distance_verdict(column_distance(C, M, budgets), bounds(C).singleton, M);
}

Verdict is_mdp(const ConvolutionalCode& C, MdpMethod method, const Budgets& budgets) {
  const int L = C.L();
  if (method == MdpMethod::Distances) return distance_verdict(column_distance(C, L, budgets), bounds(C).column(L), L);
  const PolyMatrix& H = C.require_parity_check();
  const Matrix Hc = sliding_parity_check(H, L);
  const std::size_t n = C.n(), p = n - C.k();
  IndexBounds ib(Hc.rows(), Hc.cols());
  for (std::size_t s = 1; s <= static_cast<std::size_t>(L); ++s) ib.upper[s * p] = s * n;
  return admissible_full_minors_nonzero(Hc, ib, budgets.minors);
}

Verdict is_reverse_mdp(const ConvolutionalCode& C, const Budgets& budgets) {
  if (!is_mdp(C, MdpMethod::Distances, budgets).holds) throw InvalidArgument("reverse MDP is defined for MDP codes only");
  return is_mdp(reverse_code(C), MdpMethod::Distances, budgets);
}

Verdict reverse_mdp_minor_criterion(const ConvolutionalCode& C, const Budgets& budgets) {
  const PolyMatrix& H = C.require_parity_check();
  const auto deg = H.row_degrees();
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
    throw InvalidArgument("reverse MDP minor test needs equal parity-check row degrees");
  const int L = C.L();
  const Matrix R = reversed_sliding_parity_check(H, L);
  const std::size_t n = C.n(), p = n - C.k();
  IndexBounds ib(R.rows(), R.cols());
  for (std::size_t s = 1; s <= static_cast<std::size_t>(L); ++s) ib.lower[s * p + 1] = s * n + 1;
  return admissible_full_minors_nonzero(R, ib, budgets.minors);
}

Verdict is_complete_mdp(const ConvolutionalCode& C, const Budgets& budgets) {
  const std::size_t n = C.n(), p = n - C.k();
  if (C.degree() % static_cast<int>(p) != 0) throw InvalidArgument("complete MDP needs (n-k) to divide delta");
  const PolyMatrix& H = C.require_parity_check();
  const int L = C.L();
  const std::size_t nu = static_cast<std::size_t>(std::max(H.degree(), 0));
  const Matrix P = partial_parity_check(H, L);
  IndexBounds ib(P.rows(), P.cols());
  for (std::size_t s = 1; s <= static_cast<std::size_t>(L); ++s) {
    ib.lower[s * p + 1] = s * n + 1;
    ib.upper[s * p] = s * n + nu * n;
  }
  return admissible_full_minors_nonzero(P, ib, budgets.minors);
}

Verdict is_superregular(const Matrix& A, SuperregularShape shape, const Budgets& budgets) {
  if (A.rows() != A.cols()) throw InvalidArgument("superregularity needs a square matrix");
  if (shape == SuperregularShape::General) return nontrivial_minors_nonzero(A, entry_pattern(A), budgets.minors);
  const std::size_t b = A.rows();
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const bool ok = j > i ? A(i, j) == 0 : A(i, j) == A(i - j, 0);
      if (!ok) throw InvalidArgument("matrix is not lower triangular Toeplitz");
    }
  Pattern pattern(b * b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j <= i; ++j) pattern[i * b + j] = 1;
  return nontrivial_minors_nonzero(A, pattern, budgets.minors);
}

std::string to_string(FreeDistanceMethod m) { return m == FreeDistanceMethod::StateGraph ? "stategraph" : "bruteforce"; }

std::string to_string(MdpMethod m) { return m == MdpMethod::Distances ? "distances" : "minors"; }

}  // namespace convkit
