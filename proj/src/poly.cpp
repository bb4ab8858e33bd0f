#include "convkit/poly.hpp"

#include <sstream>

namespace convkit {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_->contains(c)) throw InvalidArgument("polynomial coefficient outside the field");
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, int d) {
  if (d < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Elem> v(static_cast<std::size_t>(d) + 1, 0);
  v.back() = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::size_t Poly::weight() const {
  std::size_t w = 0;
  for (auto c : coeffs_) w += c != 0;
  return w;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(field_, o.field_);
  const Field& f = *field_;
  Poly r(field_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    const Elem a = i < coeffs_.size() ? coeffs_[i] : 0;
    const Elem b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    r.coeffs_[i] = f.add(a, b);
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_field(field_, o.field_);
  Poly r(field_);
  if (is_zero() || o.is_zero()) return r;
  const Field& f = *field_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(Elem a) const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_->mul(a, c);
  r.trim();
  return r;
}

Poly Poly::shifted(int d) const {
  if (is_zero()) return *this;
  Poly r(field_);
  if (d >= 0) {
    r.coeffs_.assign(static_cast<std::size_t>(d), 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  } else {
    const std::size_t s = static_cast<std::size_t>(-d);
    for (std::size_t i = 0; i < s && i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) throw InvalidArgument("negative shift would drop nonzero coefficients");
    if (s < coeffs_.size()) r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(s), coeffs_.end());
  }
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Elem Poly::eval(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::reversed(int d) const {
  if (is_zero()) return *this;
  if (d < degree()) throw InvalidArgument("reversal degree below polynomial degree");
  std::vector<Elem> v(static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(d) - i] = coeffs_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::scaled_argument(Elem c) const {
  Poly r = *this;
  Elem pw = 1;
  for (auto& a : r.coeffs_) {
    a = field_->mul(a, pw);
    pw = field_->mul(pw, c);
  }
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (coeffs_ != o.coeffs_) return false;
  return coeffs_.empty() || same_field(field_, o.field_);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = *a.field();
  std::vector<Elem> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Elem inv_lead = f.inv(b.leading());
  std::vector<Elem> quot;
  if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Elem factor = f.mul(c, inv_lead);
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = f.sub(slot, f.mul(factor, bc[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

Poly parse_poly_literal(const FieldPtr& field, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<Elem> coeffs;
  std::string tok;
  while (is >> tok) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad polynomial coefficient '" + tok + "'");
    }
    if (pos != tok.size() || tok[0] == '-') throw ParseError("bad polynomial coefficient '" + tok + "'");
    if (v >= field->order()) throw ParseError("polynomial coefficient outside the field: " + tok);
    coeffs.push_back(static_cast<Elem>(v));
  }
  if (coeffs.empty()) throw ParseError("empty polynomial literal");
  return Poly(field, std::move(coeffs));
}

std::string format_poly_literal(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? " " : "") << p.coeffs()[i];
  return os.str();
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Elem c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace convkit
