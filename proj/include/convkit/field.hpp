#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "convkit/errors.hpp"

namespace convkit {

/// Field element in integer encoding: coefficient c_i of x^i contributes c_i * p^i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/// Finite field F_{p^N} = F_p[x]/(m(x)) with a fixed primitive element.
///
/// Elements are plain integers in [0, q). Arithmetic goes through the owning
/// Field object, which is immutable once built.
class Field {
 public:
  /// Builds F_{p^N} with the lowest-encoding monic irreducible modulus.
  static FieldPtr make(std::uint32_t p, std::uint32_t N);
  /// Builds F_{p^N} with the given modulus (ascending coefficients, monic, degree N).
  static FieldPtr make(std::uint32_t p, std::uint32_t N, const std::vector<std::uint32_t>& modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return N_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// First primitive element in encoding order.
  Elem primitive() const { return alpha_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// alpha^e for any integer e; negative exponents wrap modulo q - 1.
  Elem alpha_pow(std::int64_t e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t v) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  bool contains(Elem a) const { return a < q_; }
  /// Two fields are equal when p, N and the modulus coincide.
  bool operator==(const Field& other) const;

  /// Literal of the form `field p N [m_0 ... m_N]`.
  std::string literal() const;

 private:
  Field() = default;
  Elem slow_mul(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t N_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  Elem alpha_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Irreducibility over F_p of a monic polynomial given in ascending coefficients.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Parses `field p N [m_0 ... m_N]`; the bracketed modulus may be omitted.
FieldPtr parse_field_literal(std::string_view text);

/// Value-semantic element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coefficients() const { return field_->digits(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;

 private:
  FieldPtr field_;
  Elem value_;
};

}  // namespace convkit
