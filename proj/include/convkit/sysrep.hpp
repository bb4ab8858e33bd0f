#pragma once

#include <cstddef>
#include <vector>

#include "convkit/code.hpp"
#include "convkit/minors.hpp"

namespace convkit {

/// Input-state-output system x_{t+1} = x_t A + u_t B, y_t = x_t C + u_t D with codeword c_t = [y_t u_t].
struct IsoRep {
  Matrix A;  ///< s x s
  Matrix B;  ///< k x s
  Matrix C;  ///< s x (n-k)
  Matrix D;  ///< k x (n-k)

  const FieldPtr& field() const { return D.field(); }
  std::size_t s() const { return A.rows(); }
  std::size_t k() const { return D.rows(); }
  std::size_t n() const { return D.rows() + D.cols(); }
  /// Throws InvalidArgument on incompatible shapes.
  void validate() const;
};

struct Trajectory {
  std::vector<Vec> states;     ///< x_0, x_1, ...
  std::vector<Vec> codewords;  ///< c_t = [y_t u_t]
  bool returned_to_zero = false;
};

/// Runs the recursion over the inputs, then with zero inputs until the state is zero or the cap is hit.
Trajectory encode_iso(const IsoRep& sys, const std::vector<Vec>& inputs, std::size_t horizon_cap = 4096);

/// E(z) = [[I - Az, -C], [-Bz, -D], [0, I]].
PolyMatrix system_matrix(const IsoRep& sys);

/// [B; BA; ...; BA^{s-1}]
Matrix reachability_matrix(const IsoRep& sys);
/// [C AC ... A^{s-1}C]
Matrix observability_matrix(const IsoRep& sys);

struct ReachObs {
  bool reachable = false;
  bool observable = false;
  std::size_t reachability_rank = 0;
  std::size_t observability_rank = 0;
};
ReachObs reachability_observability(const IsoRep& sys);
/// Primeness tests in w = 1/z: [wI - A; B] right prime and [wI - A, C] left prime.
bool pbh_reachable(const IsoRep& sys);
bool pbh_observable(const IsoRep& sys);

struct KalmanForm {
  IsoRep system;  ///< S^{-1} A S = [[A1, 0], [A2, A3]], B S = [B1 0], S^{-1} C
  Matrix S;
  std::size_t reachable_dimension = 0;
};
KalmanForm kalman_form(const IsoRep& sys);
/// Reachable part (A1, B1, C1, D) of the Kalman form.
IsoRep minimal_iso(const IsoRep& sys);

/// Code of finite-weight trajectories, coordinates ordered [y u].
ConvolutionalCode code_from_iso(const IsoRep& sys);

/// Realization of a code; ISO coordinate i corresponds to code column columns[i].
struct Realization {
  IsoRep system;
  std::vector<std::size_t> columns;
};
/// Controller-form realization of dimension delta. The information set is the first k-subset,
/// in reverse lexicographic order, whose columns of G_0 are independent.
Realization iso_from_code(const ConvolutionalCode& C);
/// Code with its columns reordered so that new column i is old column order[i].
ConvolutionalCode permute_columns(const ConvolutionalCode& C, const std::vector<std::size_t>& order);

struct SystemConstruction {
  ConvolutionalCode code;
  IsoRep system;
  /// Residues r_i; column i of C places the spectrum {alpha^{r_i + 1}, ..., alpha^{r_i + delta}}.
  std::vector<int> residues;
};
/// (n, 1, delta) code from diagonal A = diag(alpha, ..., alpha^delta), all-ones B and D, and
/// columns of C placing disjoint spectra. Requires q >= n delta + 1.
SystemConstruction mds_from_system(std::size_t n, std::size_t delta, const FieldPtr& field);

/// Block upper-triangular Toeplitz matrix with D on the diagonal and B A^{i-1} C on the i-th superdiagonal.
Matrix markov_parameter_matrix(const IsoRep& sys, int L);
/// All minors of the Markov-parameter matrix not forced to vanish by its block-triangular shape are nonzero;
/// L is taken from the minimal realization.
Verdict mdp_criterion_FL(const IsoRep& sys, const Budgets& budgets = {});

}  // namespace convkit
