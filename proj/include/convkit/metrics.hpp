#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "convkit/code.hpp"
#include "convkit/minors.hpp"

namespace convkit {

/// Truncated sliding generator G_j^c: (j+1)k x (j+1)n, block (a, b) = G_{b-a} for b >= a.
Matrix sliding_generator(const PolyMatrix& G, int j);
/// Truncated sliding parity check H_j^c: (j+1)(n-k) x (j+1)n, block (a, b) = H_{a-b} for a >= b.
Matrix sliding_parity_check(const PolyMatrix& H, int j);
/// Partial parity check: L+1 block rows, row a holding [H_nu ... H_0] from block column a.
/// nu is the degree of H; the size is (L+1)(n-k) x (nu+L+1)n.
Matrix partial_parity_check(const PolyMatrix& H, int L);
/// Block upper-triangular matrix with H_nu on the diagonal and H_{nu-i} on the i-th superdiagonal.
Matrix reversed_sliding_parity_check(const PolyMatrix& H, int L);

struct Bounds {
  long singleton = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  /// (n-k)(j+1)+1
  long column(int j) const { return static_cast<long>(n - k) * (j + 1) + 1; }
};
/// Generalized Singleton bound (n-k)(floor(delta/k)+1)+delta+1 and the column bounds.
Bounds bounds(std::size_t n, std::size_t k, int delta);
Bounds bounds(const ConvolutionalCode& C);

enum class FreeDistanceMethod { StateGraph, BruteForce };

struct FreeDistance {
  long value = 0;
  /// True for the state-graph search on a noncatastrophic code. A brute-force value is the minimum
  /// over messages of bounded degree and therefore only an upper bound on d_free.
  bool certified = false;
  /// Message-degree cap of a brute-force search, -1 otherwise.
  int cap = -1;
  FreeDistanceMethod method = FreeDistanceMethod::StateGraph;
};

/// State graph: shortest zero-to-zero path over the controller-form trellis. Brute force: all
/// messages u with u_0 != 0 and deg u_i <= cap.
FreeDistance free_distance(const ConvolutionalCode& C, FreeDistanceMethod method = FreeDistanceMethod::StateGraph,
                           int cap = -1, const Budgets& budgets = {});

/// d_j^c: minimum weight of [c_0 ... c_j] over messages with u_0 != 0.
long column_distance(const ConvolutionalCode& C, int j, const Budgets& budgets = {});

struct DistanceProfile {
  FreeDistance d_free;
  std::vector<long> d_col;
  long singleton = 0;
  std::vector<long> column_bounds;
};
DistanceProfile distance_profile(const ConvolutionalCode& C, int j_max, const Budgets& budgets = {});

Verdict is_mds(const ConvolutionalCode& C, const Budgets& budgets = {});
Verdict is_smds(const ConvolutionalCode& C, const Budgets& budgets = {});

enum class MdpMethod { Distances, Minors };
/// Distances: d_L^c meets its bound. Minors: full-size minors of H_L^c with j_{s(n-k)} <= sn.
Verdict is_mdp(const ConvolutionalCode& C, MdpMethod method = MdpMethod::Distances, const Budgets& budgets = {});
/// Whether the reverse code is MDP. Throws InvalidArgument when C itself is not MDP.
Verdict is_reverse_mdp(const ConvolutionalCode& C, const Budgets& budgets = {});
/// Minor test on the reversed sliding parity check with j_{s(n-k)+1} > sn. Requires every row of the
/// parity check to have the same degree.
Verdict reverse_mdp_minor_criterion(const ConvolutionalCode& C, const Budgets& budgets = {});
/// Full-size minors of the partial parity check with j_{(n-k)s+1} > sn and j_{(n-k)s} <= sn + nu n.
/// Throws InvalidArgument unless (n-k) divides delta.
Verdict is_complete_mdp(const ConvolutionalCode& C, const Budgets& budgets = {});

enum class SuperregularShape { General, LowerTriangularToeplitz };
/// Every minor that the zero pattern does not force to vanish is nonzero.
Verdict is_superregular(const Matrix& A, SuperregularShape shape = SuperregularShape::General,
                        const Budgets& budgets = {});

std::string to_string(FreeDistanceMethod m);
std::string to_string(MdpMethod m);

}  // namespace convkit
