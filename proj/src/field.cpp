#include "convkit/field.hpp"

#include <algorithm>
#include <sstream>

namespace convkit {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Remainder of a by monic b over F_p, both ascending.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                      std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::uint32_t n = static_cast<std::uint32_t>(poly.size() - 1);
  if (n == 1) return true;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> div(d + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[d] = 1;
      auto r = poly_mod_p(poly, div, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t N) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (N == 0) throw InvalidArgument("field extension degree must be at least 1");
  const std::uint64_t q = ipow(p, N);
  if (q > kMaxFieldOrder) throw InvalidArgument("field order exceeds 2^20");
  const std::uint64_t lower = ipow(p, N);
  for (std::uint64_t code = 0; code < lower; ++code) {
    std::vector<std::uint32_t> m(N + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < N; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[N] = 1;
    if (is_irreducible_mod_p(m, p)) return make(p, N, m);
  }
  throw Error("no irreducible polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t N, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (N == 0) throw InvalidArgument("field extension degree must be at least 1");
  const std::uint64_t q = ipow(p, N);
  if (q > kMaxFieldOrder) throw InvalidArgument("field order exceeds 2^20");
  if (modulus.size() != N + 1) throw InvalidArgument("modulus must have N + 1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw InvalidArgument("modulus is reducible");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->N_ = N;
  f->q_ = static_cast<std::uint32_t>(q);
  f->modulus_ = modulus;
  f->build_tables();
  return f;
}

void Field::build_tables() {
  const auto factors = prime_factors(q_ - 1);
  alpha_ = 0;
  if (q_ == 2) {
    alpha_ = 1;
  } else {
    for (Elem a = 1; a < q_ && alpha_ == 0; ++a) {
      bool primitive = true;
      for (auto r : factors) {
        // square-and-multiply with the slow product
        std::uint64_t e = (q_ - 1) / r;
        Elem acc = 1, base = a;
        while (e) {
          if (e & 1) acc = slow_mul(acc, base);
          base = slow_mul(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) alpha_ = a;
    }
  }
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Elem e = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = e;
    exp_[i + q_ - 1] = e;
    log_[e] = i;
    e = slow_mul(e, alpha_);
  }
}

Elem Field::slow_mul(Elem a, Elem b) const {
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint32_t> prod(2 * N_ - 1, 0);
  for (std::uint32_t i = 0; i < N_; ++i)
    for (std::uint32_t j = 0; j < N_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  auto r = poly_mod_p(prod, modulus_, p_);
  r.resize(N_, 0);
  return from_digits(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(N_);
  for (std::uint32_t i = 0; i < N_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return v;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (N_ == 1) return (a + b) % p_;
  Elem r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (N_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, scale = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (N_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw DivisionByZero("division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Elem Field::alpha_pow(std::int64_t e) const {
  const std::int64_t m = q_ - 1;
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (auto r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

bool Field::operator==(const Field& other) const {
  return p_ == other.p_ && N_ == other.N_ && modulus_ == other.modulus_;
}

std::string Field::literal() const {
  std::ostringstream os;
  os << "field " << p_ << ' ' << N_;
  if (N_ == 1) return os.str();
  os << " [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? " " : "") << modulus_[i];
  os << ']';
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw FieldMismatch("operands belong to different fields");
}

FieldPtr parse_field_literal(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::istringstream is(s);
  std::string kw;
  if (!(is >> kw) || kw != "field") throw ParseError("field literal must start with 'field'");
  long long p = 0, N = 0;
  if (!(is >> p >> N) || p <= 1 || N <= 0) throw ParseError("field literal needs positive p and N");
  std::vector<std::uint32_t> m;
  long long v;
  while (is >> v) {
    if (v < 0) throw ParseError("negative modulus coefficient");
    m.push_back(static_cast<std::uint32_t>(v));
  }
  if (!is.eof()) throw ParseError("unexpected token in field literal");
  if (m.empty()) return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(N));
  return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(N), m);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw InvalidArgument("null field");
  if (!field_->contains(value_)) throw InvalidArgument("element encoding out of range");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(field_, o.field_) && value_ == o.value_;
}

}  // namespace convkit
