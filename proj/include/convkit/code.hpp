#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "convkit/poly_matrix.hpp"

namespace convkit {

/// Result of a membership query.
struct Membership {
  bool member = false;
  /// Message u with u * G_min = c when member.
  std::optional<PolyVector> message;
};

/// Rank-k submodule of F_q[z]^n given by a row-reduced generator.
class ConvolutionalCode {
 public:
  /// G must be of full row rank with k < n.
  static ConvolutionalCode from_generator(const PolyMatrix& G);
  /// The noncatastrophic code {c : H~ c^T = 0} where H~ is the left-prime factor of H.
  static ConvolutionalCode from_parity_check(const PolyMatrix& H);

  const FieldPtr& field() const { return generator_.field(); }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  int degree() const { return degree_; }
  /// floor(delta/k) + floor(delta/(n-k))
  int L() const;
  /// floor(delta/k) + ceil(delta/(n-k))
  int M() const;
  bool noncatastrophic() const { return noncatastrophic_; }

  /// Row-reduced generator.
  const PolyMatrix& generator() const { return generator_; }
  std::vector<int> row_degrees() const { return generator_.row_degrees(); }
  /// Row-reduced left-prime parity check; present iff the code is noncatastrophic.
  const std::optional<PolyMatrix>& parity_check() const { return parity_check_; }
  /// Parity check or an exception for catastrophic codes.
  const PolyMatrix& require_parity_check() const;

  PolyVector encode(const PolyVector& u) const;
  Membership contains(const PolyVector& c) const;

 private:
  ConvolutionalCode() = default;

  PolyMatrix generator_;
  int degree_ = 0;
  bool noncatastrophic_ = false;
  std::optional<PolyMatrix> parity_check_;
  std::shared_ptr<const SmithForm> smith_;
};

/// Code generated by the parity check of a noncatastrophic code.
ConvolutionalCode dual_code(const ConvolutionalCode& C);
/// Code generated by z^{nu_i} g_ij(1/z).
ConvolutionalCode reverse_code(const ConvolutionalCode& C);
/// Smallest noncatastrophic code containing C (same rank, left-prime factor of the generator).
ConvolutionalCode noncatastrophic_envelope(const ConvolutionalCode& C);

/// Whether one constant a in F_q^* relates every k x k minor M_I(G) of the generator to the
/// complementary minor of the parity check: M_I(G) = a * sign(I) * M_{I^c}(H), with
/// sign(I) = (-1)^{sum of the 1-based indices in I}. With signed = false the sign factor is dropped,
/// which is only valid in characteristic 2.
bool complementary_minors_check(const ConvolutionalCode& C, bool signed_minors = true);

/// Module equality, decided by comparing column Hermite forms of the generators.
bool same_code(const ConvolutionalCode& a, const ConvolutionalCode& b);

}  // namespace convkit
