#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convkit/field.hpp"

namespace convkit {

/// Degree of the zero polynomial. Never added to other degrees.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Univariate polynomial over F_q with ascending coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  /// c * z^d
  static Poly monomial(FieldPtr field, Elem c, int d);

  const FieldPtr& field() const { return field_; }
  /// Ascending coefficients without trailing zeros.
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Elem coeff(int i) const;
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  /// Number of nonzero coefficients.
  std::size_t weight() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem a) const;
  /// Multiplies by z^d; d may be negative only when the low coefficients vanish.
  Poly shifted(int d) const;
  Poly monic() const;
  Elem eval(Elem x) const;
  /// z^d p(1/z) for d >= degree.
  Poly reversed(int d) const;
  /// p(c z)
  Poly scaled_argument(Elem c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Exact quotient a / b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Space-separated ascending coefficients as integer encodings; "0" is the zero polynomial.
Poly parse_poly_literal(const FieldPtr& field, std::string_view text);
std::string format_poly_literal(const Poly& p);
/// Human-readable form such as 1+z+2z^3.
std::string format_poly(const Poly& p);

}  // namespace convkit
