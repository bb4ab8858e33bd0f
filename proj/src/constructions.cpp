#include "convkit/constructions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "convkit/metrics.hpp"

namespace convkit {

namespace {

using boost::multiprecision::cpp_int;

void require_rate(std::size_t n, std::size_t k, int delta) {
  if (k == 0 || k >= n) throw InvalidArgument("parameters need 0 < k < n");
  if (delta < 0) throw InvalidArgument("delta must be nonnegative");
}

void require_divisible(std::size_t n, std::size_t k, int delta) {
  if (delta % static_cast<int>(n - k) != 0) throw InvalidArgument("(n-k) must divide delta");
}

int memory_L(std::size_t n, std::size_t k, int delta) {
  return delta / static_cast<int>(k) + delta / static_cast<int>(n - k);
}

std::vector<std::pair<std::string, std::string>> nkd_params(std::size_t n, std::size_t k, int delta) {
  return {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"delta", std::to_string(delta)}};
}

/// 2^e when it fits below 2^62, otherwise nothing.
std::optional<std::uint64_t> small_power_of_two(long e) {
  if (e < 0 || e >= 62) return std::nullopt;
  return std::uint64_t{1} << e;
}

PolyMatrix from_blocks(const FieldPtr& f, const std::vector<Matrix>& blocks) {
  return PolyMatrix::from_coefficients(f, blocks);
}

}  // namespace

Elem alpha_power_of_two(const Field& f, std::uint64_t e) {
  const std::uint64_t mod = f.order() - 1;
  if (mod == 1) return 1;
  std::uint64_t result = 1 % mod, base = 2 % mod;
  while (e > 0) {
    if (e & 1) result = result * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return f.alpha_pow(static_cast<std::int64_t>(result));
}

ConstructionResult justesen_mds(std::size_t n, const FieldPtr& field) {
  const std::uint64_t q = field->order();
  if (n < 2) throw InvalidArgument("justesen_mds needs n >= 2");
  if (q < n + 1) throw InvalidArgument("justesen_mds needs q >= n + 1");
  const int delta = static_cast<int>(n == 2 ? 2 * q / 9 : (n <= 5 ? q / 3 : q / 2));
  const Field& f = *field;
  Poly g1 = Poly::constant(field, 1);
  for (int i = 1; i <= delta; ++i) g1 = g1 * Poly(field, {f.neg(f.alpha_pow(i)), 1});
  PolyMatrix G(field, 1, n);
  G(0, 0) = g1;
  for (std::size_t j = 2; j <= n; ++j) {
    const std::int64_t s = static_cast<std::int64_t>(((j - 1) * (q - 1) + n - 1) / n);
    G(0, j - 1) = g1.scaled_argument(f.alpha_pow(-s));
  }
  auto params = nkd_params(n, 1, delta);
  params.emplace_back("field", field->literal());
  return {ConvolutionalCode::from_generator(G), "justesen-mds", params, true};
}

ConstructionResult gll_mds(std::size_t n, int delta, const FieldPtr& field) {
  if (n < 2) throw InvalidArgument("gll_mds needs n >= 2");
  if (field->order() < n + 1) throw InvalidArgument("gll_mds needs q >= n + 1");
  if (delta < 0 || delta > static_cast<int>(n) - 1) throw InvalidArgument("gll_mds needs 0 <= delta <= n - 1");
  const Field& f = *field;
  PolyMatrix G(field, 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elem> c(static_cast<std::size_t>(delta) + 1);
    for (int i = 0; i <= delta; ++i) c[static_cast<std::size_t>(i)] = f.alpha_pow(static_cast<std::int64_t>(j) * i);
    G(0, j) = Poly(field, c);
  }
  auto params = nkd_params(n, 1, delta);
  params.emplace_back("field", field->literal());
  return {ConvolutionalCode::from_generator(G), "gll-mds", params, true};
}

std::vector<Poly> polyphase_split(const Poly& g, std::size_t n) {
  if (n == 0) throw InvalidArgument("phase count must be positive");
  std::vector<std::vector<Elem>> c(n);
  const auto& coeffs = g.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto& v = c[i % n];
    v.resize(i / n + 1, 0);
    v[i / n] = coeffs[i];
  }
  std::vector<Poly> out;
  for (auto& v : c) out.emplace_back(g.field(), v);
  return out;
}

ConstructionResult smith_mds(std::size_t n, std::size_t k, int delta, std::uint32_t a, std::uint32_t p,
                             std::uint32_t r) {
  require_rate(n, k, delta);
  if (!is_prime(p) || r == 0) throw InvalidArgument("smith_mds needs a prime p and r >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw InvalidArgument("field order too large");
  }
  if (static_cast<std::uint64_t>(a) * n != q - 1) throw InvalidArgument("smith_mds needs a n = p^r - 1");
  // a >= floor(delta/k) + 1 + delta/(n-k), compared without rounding
  const std::uint64_t lhs = static_cast<std::uint64_t>(a) * (n - k);
  const std::uint64_t rhs = (static_cast<std::uint64_t>(delta) / k + 1) * (n - k) + static_cast<std::uint64_t>(delta);
  if (lhs < rhs) throw InvalidArgument("smith_mds parameter a is below its bound");
  const FieldPtr field = Field::make(p, r);
  const Field& f = *field;
  const std::size_t N = static_cast<std::size_t>(a) * n;
  const std::size_t red = (n - k) * (static_cast<std::size_t>(delta) / k + 1) + static_cast<std::size_t>(delta);
  if (red > N) throw InvalidArgument("smith_mds redundancy exceeds the length");
  Poly g = Poly::constant(field, 1);
  for (std::size_t i = 0; i < red; ++i) g = g * Poly(field, {f.neg(f.alpha_pow(static_cast<std::int64_t>(i))), 1});
  const auto phases = polyphase_split(g, n);
  PolyMatrix G(field, k, n);
  const Poly z = Poly::monomial(field, 1, 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = j >= i ? phases[j - i] : z * phases[n + j - i];
  auto params = nkd_params(n, k, delta);
  params.emplace_back("a", std::to_string(a));
  params.emplace_back("field", field->literal());
  return {ConvolutionalCode::from_generator(G), "smith-mds", params, true};
}

std::vector<std::vector<std::uint64_t>> binomial_toeplitz(std::size_t b) {
  if (b == 0) throw InvalidArgument("binomial matrix needs b >= 1");
  if (b > 60) throw InvalidArgument("binomial matrix size too large");
  std::vector<std::vector<std::uint64_t>> m(b, std::vector<std::uint64_t>(b, 0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j <= i; ++j) m[i][j] = binomial_saturating(b - 1, i - j);
  return m;
}

BinomialSuperregular binomial_superregular(std::size_t b, const Budgets& budgets) {
  const auto ints = binomial_toeplitz(b);
  for (std::uint32_t p = 2; p <= kMaxFieldOrder; ++p) {
    if (!is_prime(p)) continue;
    const FieldPtr field = Field::make(p, 1);
    Matrix m(field, b, b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) m(i, j) = static_cast<Elem>(ints[i][j] % p);
    if (is_superregular(m, SuperregularShape::LowerTriangularToeplitz, budgets).holds) return {m, p};
  }
  throw Error("no prime field up to the supported order makes the binomial matrix superregular");
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> superregular_selection(std::size_t n, std::size_t k,
                                                                                     int delta) {
  require_rate(n, k, delta);
  const std::size_t L = static_cast<std::size_t>(delta) / (n - k);
  std::vector<std::size_t> rows, cols;
  for (std::size_t j = 0; j <= L; ++j) {
    for (std::size_t i = (j + 1) * n + j * (n - k - 1); i <= (j + 1) * (2 * n - k - 1); ++i) rows.push_back(i);
    for (std::size_t i = j * n + j * (n - k - 1) + 1; i <= (j + 1) * n + j * (n - k - 1); ++i) cols.push_back(i);
  }
  return {rows, cols};
}

ConstructionResult mdp_from_superregular(std::size_t n, std::size_t k, int delta, const Matrix& T,
                                         const Budgets& budgets) {
  require_rate(n, k, delta);
  require_divisible(n, k, delta);
  if (static_cast<int>(k) <= delta) throw InvalidArgument("mdp_from_superregular needs k > delta");
  const std::size_t L = static_cast<std::size_t>(delta) / (n - k);
  const std::size_t r = (L + 1) * (2 * n - k - 1);
  if (T.rows() != r || T.cols() != r) throw InvalidArgument("superregular matrix has the wrong size");
  if (!is_superregular(T, SuperregularShape::LowerTriangularToeplitz, budgets).holds)
    throw InvalidArgument("matrix is not lower triangular superregular");
  auto [rows, cols] = superregular_selection(n, k, delta);
  for (auto& i : rows) --i;
  for (auto& j : cols) --j;
  const Matrix Hc = T.submatrix(rows, cols);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i <= L; ++i) blocks.push_back(Hc.block(i * (n - k), 0, n - k, n));
  const PolyMatrix H = from_blocks(T.field(), blocks);
  auto params = nkd_params(n, k, delta);
  params.emplace_back("field", T.field()->literal());
  return {ConvolutionalCode::from_parity_check(H), "mdp-superregular", params, true};
}

BlockSuperregular anp_superregular(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N) {
  require_rate(n, k, delta);
  const FieldPtr field = Field::make(p, N);
  BlockSuperregular out;
  out.m = std::max(n - k, k);
  out.L = memory_L(n, k, delta);
  const std::size_t m = out.m, blocks = static_cast<std::size_t>(out.L) + 1;
  for (std::size_t i = 0; i < blocks; ++i) {
    Matrix Ti(field, m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) Ti(a, b) = alpha_power_of_two(*field, i * m + a + b);
    out.blocks.push_back(Ti);
  }
  out.matrix = Matrix(field, blocks * m, blocks * m);
  for (std::size_t a = 0; a < blocks; ++a)
    for (std::size_t b = 0; b <= a; ++b) out.matrix.set_block(a * m, b * m, out.blocks[a - b]);
  const auto bound = small_power_of_two(static_cast<long>(m) * (out.L + 2) - 1);
  out.guaranteed = bound && N >= *bound;
  return out;
}

ConstructionResult anp_mdp(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N) {
  require_rate(n, k, delta);
  require_divisible(n, k, delta);
  const BlockSuperregular T = anp_superregular(n, k, delta, p, N);
  const FieldPtr& field = T.matrix.field();
  const std::size_t c = n - k;
  const std::size_t nu = static_cast<std::size_t>(delta) / c;
  const std::size_t L = static_cast<std::size_t>(T.L);
  std::vector<Matrix> Hbar;
  for (const auto& Tl : T.blocks) Hbar.push_back(Tl.block(0, 0, c, k));

  // [A_nu ... A_1] M = -[Hbar_L ... Hbar_{nu+1}], block (row j, column i) of M equal to Hbar_{i-j}
  std::vector<Matrix> A(nu + 1, Matrix(field, c, c));
  A[0] = Matrix::identity(field, c);
  if (nu > 0 && L > nu) {
    Matrix M(field, nu * c, (L - nu) * k);
    Matrix R(field, c, (L - nu) * k);
    for (std::size_t jr = 0; jr < nu; ++jr)
      for (std::size_t ic = 0; ic < L - nu; ++ic) {
        const std::size_t j = nu - jr, i = L - ic;
        M.set_block(jr * c, ic * k, Hbar[i - j]);
      }
    for (std::size_t ic = 0; ic < L - nu; ++ic) R.set_block(0, ic * k, -Hbar[L - ic]);
    const Matrix Mt = M.transpose();
    for (std::size_t row = 0; row < c; ++row) {
      const auto x = solve(Mt, R.row(row));
      if (!x) throw Error("Hankel system for the A_j blocks is inconsistent");
      for (std::size_t jr = 0; jr < nu; ++jr)
        for (std::size_t col = 0; col < c; ++col) A[nu - jr](row, col) = (*x)[jr * c + col];
    }
  }
  std::vector<Matrix> B;
  for (std::size_t i = 0; i <= nu; ++i) {
    Matrix Bi(field, c, k);
    for (std::size_t j = 0; j <= i; ++j) Bi = Bi + A[j] * Hbar[i - j];
    B.push_back(Bi);
  }
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i <= nu; ++i) blocks.push_back(hstack(A[i], B[i]));
  const PolyMatrix H = from_blocks(field, blocks);
  auto params = nkd_params(n, k, delta);
  params.emplace_back("field", field->literal());
  const bool guaranteed = static_cast<std::uint64_t>(N) >= 2 * T.m * (L + 1) + n - 2;
  return {ConvolutionalCode::from_parity_check(H), "anp-mdp", params, guaranteed};
}

namespace {

struct BinomialBound {
  cpp_int squared;  // C(nu n + k, floor)^{2e} e^e
};

BinomialBound binomial_bound(std::size_t n, std::size_t k, int delta) {
  const std::size_t top = static_cast<std::size_t>(delta) / (n - k) * n + k;
  cpp_int B = 1;
  const std::size_t half = top / 2;
  for (std::size_t i = 1; i <= half; ++i) B = B * (top - half + i) / i;
  const unsigned e = static_cast<unsigned>((n - k) * (static_cast<std::size_t>(memory_L(n, k, delta)) + 1));
  return {boost::multiprecision::pow(B, 2 * e) * boost::multiprecision::pow(cpp_int(e), e)};
}

}  // namespace

bool exceeds_characteristic_bound(std::size_t n, std::size_t k, int delta, std::uint64_t p) {
  require_rate(n, k, delta);
  require_divisible(n, k, delta);
  const cpp_int pp = cpp_int(p) * p;
  return pp > binomial_bound(n, k, delta).squared;
}

BinomialCompleteResult complete_mdp_binomial(std::size_t n, std::size_t k, int delta, std::uint32_t p) {
  require_rate(n, k, delta);
  require_divisible(n, k, delta);
  if (!is_prime(p)) throw InvalidArgument("complete_mdp_binomial needs a prime field");
  const FieldPtr field = Field::make(p, 1);
  const std::size_t c = n - k, nu = static_cast<std::size_t>(delta) / c, top = nu * n + k;
  // Pascal row of top modulo p
  std::vector<std::uint64_t> row(top + 1, 0);
  row[0] = 1 % p;
  for (std::size_t t = 1; t <= top; ++t)
    for (std::size_t i = t; i > 0; --i) row[i] = (row[i] + row[i - 1]) % p;
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i <= nu; ++i) {
    Matrix Hi(field, c, n);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const long idx = static_cast<long>(i * n + k + a) - static_cast<long>(b);
        if (idx >= 0 && idx <= static_cast<long>(top)) Hi(a, b) = static_cast<Elem>(row[static_cast<std::size_t>(idx)]);
      }
    blocks.push_back(Hi);
  }
  const BinomialBound bound = binomial_bound(n, k, delta);
  auto params = nkd_params(n, k, delta);
  params.emplace_back("field", field->literal());
  BinomialCompleteResult out{{ConvolutionalCode::from_parity_check(from_blocks(field, blocks)), "complete-mdp-binomial",
                              params, cpp_int(p) * p > bound.squared},
                             boost::multiprecision::sqrt(bound.squared).str()};
  out.result.params.emplace_back("characteristic_bound", out.characteristic_bound);
  return out;
}

ConstructionResult complete_mdp_alpha(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N) {
  require_rate(n, k, delta);
  require_divisible(n, k, delta);
  const FieldPtr field = Field::make(p, N);
  const std::size_t c = n - k, nu = static_cast<std::size_t>(delta) / c;
  const int L = memory_L(n, k, delta);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i <= nu; ++i) {
    Matrix Hi(field, c, n);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = 0; b < n; ++b) Hi(a, b) = alpha_power_of_two(*field, i * n + a + b);
    blocks.push_back(Hi);
  }
  const auto pw = small_power_of_two(static_cast<long>((nu + 2) * n - k - 1));
  const bool guaranteed = pw && *pw < (std::uint64_t{1} << 40) && N > static_cast<std::uint64_t>(L + 1) * *pw;
  auto params = nkd_params(n, k, delta);
  params.emplace_back("field", field->literal());
  return {ConvolutionalCode::from_parity_check(from_blocks(field, blocks)), "complete-mdp-alpha", params, guaranteed};
}

}  // namespace convkit
