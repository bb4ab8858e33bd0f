#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "convkit/code.hpp"
#include "convkit/minors.hpp"

namespace convkit {

/// A built code together with the recipe that produced it.
struct ConstructionResult {
  ConvolutionalCode code;
  std::string recipe;
  std::vector<std::pair<std::string, std::string>> params;
  /// Whether the recipe's field-size condition holds, so optimality is guaranteed without checking.
  bool guaranteed = true;
};

/// Rate 1/n MDS code with g_j(z) = g_1(z alpha^{-s_j}) and g_1 = prod_{i=1..delta} (z - alpha^i).
/// delta is floor(2q/9), floor(q/3) or floor(q/2) for n = 2, 3 <= n <= 5, n >= 6. Requires q >= n + 1.
ConstructionResult justesen_mds(std::size_t n, const FieldPtr& field);

/// G(z) = sum_{i=0..delta} z^i [1, alpha^i, ..., alpha^{(n-1)i}]. Requires q >= n + 1 and delta <= n - 1.
ConstructionResult gll_mds(std::size_t n, int delta, const FieldPtr& field);

/// Generator polynomial g(z) = prod_{i < N-K} (z - alpha^i) of length N = an cyclic code, split into
/// n phases and arranged as a k x n circulant with z on the wrapped entries. Requires an = p^r - 1 and
/// a >= floor(delta/k) + 1 + delta/(n-k).
ConstructionResult smith_mds(std::size_t n, std::size_t k, int delta, std::uint32_t a, std::uint32_t p,
                             std::uint32_t r);
/// Phases g_0..g_{n-1} with g(z) = sum_i g_i(z^n) z^i.
std::vector<Poly> polyphase_split(const Poly& g, std::size_t n);

/// b x b lower triangular Toeplitz matrix with entries C(b-1, i-j) over the integers.
std::vector<std::vector<std::uint64_t>> binomial_toeplitz(std::size_t b);
struct BinomialSuperregular {
  Matrix matrix;
  std::uint32_t prime = 0;
};
/// The binomial Toeplitz matrix over the smallest prime field where it is superregular.
BinomialSuperregular binomial_superregular(std::size_t b, const Budgets& budgets = {});

/// Rows and columns of a lower triangular superregular T of size (L+1)(2n-k-1) selected into the
/// sliding parity check H_L^c; the code has parity check H(z) = sum H_i z^i. Requires (n-k) | delta
/// and k > delta.
ConstructionResult mdp_from_superregular(std::size_t n, std::size_t k, int delta, const Matrix& T,
                                         const Budgets& budgets = {});
/// 1-based row and column indices used by mdp_from_superregular.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> superregular_selection(std::size_t n, std::size_t k,
                                                                                     int delta);

struct BlockSuperregular {
  /// Block lower-triangular Toeplitz matrix of the T_i.
  Matrix matrix;
  /// T_i[a][b] = alpha^{2^{im + a + b}}, i = 0..L.
  std::vector<Matrix> blocks;
  std::size_t m = 0;
  int L = 0;
  /// N >= 2^{m(L+2)-1}
  bool guaranteed = false;
};
BlockSuperregular anp_superregular(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N);

/// Code ker [A(z) B(z)] with A_0 = I, A_1..A_nu solving the block Hankel system built from the
/// leading (n-k) x k blocks of the T_l, and B_i = sum_j A_j Hbar_{i-j}. Requires (n-k) | delta.
ConstructionResult anp_mdp(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N);

struct BinomialCompleteResult {
  ConstructionResult result;
  /// floor of C(nu n + k, floor((nu n + k)/2))^e * e^{e/2} with e = (n-k)(L+1), in decimal.
  std::string characteristic_bound;
};
/// H_i[a][b] = C(nu n + k, i n + k + a - b) over F_p. Guaranteed when p exceeds the bound.
BinomialCompleteResult complete_mdp_binomial(std::size_t n, std::size_t k, int delta, std::uint32_t p);
/// Whether p exceeds the characteristic bound for these parameters.
bool exceeds_characteristic_bound(std::size_t n, std::size_t k, int delta, std::uint64_t p);

/// H_i[a][b] = alpha^{2^{in + a + b}} over F_{p^N}. Guaranteed when N > (L+1) 2^{(nu+2)n-k-1}.
ConstructionResult complete_mdp_alpha(std::size_t n, std::size_t k, int delta, std::uint32_t p, std::uint32_t N);

/// alpha^{2^e} computed with the exponent reduced modulo q - 1.
Elem alpha_power_of_two(const Field& f, std::uint64_t e);

}  // namespace convkit
