#include "trigeom/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "trigeom/errors.hpp"

namespace trigeom {

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::string trim_lower(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return s;
}

bool perfect_power(const mpz_class& v, unsigned k) {
  if (v < 0 && k % 2 == 0) return false;
  const mpz_class a = abs(v);
  mpz_class root, back;
  mpz_root(root.get_mpz_t(), a.get_mpz_t(), k);
  mpz_pow_ui(back.get_mpz_t(), root.get_mpz_t(), k);
  return back == a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw InvalidArgument("field characteristic too large: " + std::to_string(p));
  if (!trigeom::is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  const std::string s = trim_lower(text);
  if (s == "q") return rationals();
  if (s.size() > 4 && s.rfind("gf(", 0) == 0 && s.back() == ')') {
    const std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 12)
      return prime(std::stoull(digits));
  }
  throw ParseError("bad field spec '" + std::string(text) + "' (expected gf(p) or q)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "gf(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const FieldSpec& field, long long value) : field_(field) {
  if (field.is_prime()) {
    const long long p = field.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  } else {
    value_ = mpq_class(mpz_class(std::to_string(value)));
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    const std::uint32_t p = field.characteristic();
    mpq_class v = value;
    v.canonicalize();
    const std::uint32_t den = reduce_mod(v.get_den(), p);
    if (den == 0) throw DivisionByZero();
    const std::uint64_t num = reduce_mod(v.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
  } else {
    mpq_class v = value;
    v.canonicalize();
    value_ = v;
  }
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  const std::string s = trim_lower(text);
  const auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<long>(i), t.end(), ::isdigit);
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("bad scalar literal '" + std::string(text) + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw DivisionByZero();
  return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw InvalidArgument("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw InvalidArgument("rational() on a prime-field scalar");
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto v = std::get_if<std::uint32_t>(&r.value_)) {
    if (*v != 0) *v = field_.characteristic() - *v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r = *this;
  if (auto v = std::get_if<std::uint32_t>(&r.value_)) {
    *v = inverse_mod(*v, field_.characteristic());
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field_), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto v = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = static_cast<std::uint64_t>(*v) + std::get<std::uint32_t>(o.value_);
    *v = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto v = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = static_cast<std::uint64_t>(*v) * std::get<std::uint32_t>(o.value_);
    *v = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (auto v = std::get_if<std::uint32_t>(&value_)) return std::to_string(*v);
  return std::get<mpq_class>(value_).get_str();
}

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string to_string(const Vector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].to_string();
  out << ')';
  return out.str();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvalidArgument("unknown arithmetic op");
}

bool is_square(const Scalar& x) {
  const FieldSpec& f = x.field();
  if (f.is_prime()) {
    for (std::uint32_t t = 0; t < f.characteristic(); ++t) {
      const Scalar s(f, static_cast<long long>(t));
      if (s * s == x) return true;
    }
    return false;
  }
  const mpq_class& q = x.rational();
  if (q < 0) return false;
  return perfect_power(q.get_num(), 2) && perfect_power(q.get_den(), 2);
}

bool is_cube(const Scalar& x) {
  const FieldSpec& f = x.field();
  if (f.is_prime()) {
    for (std::uint32_t t = 0; t < f.characteristic(); ++t) {
      const Scalar s(f, static_cast<long long>(t));
      if (s * s * s == x) return true;
    }
    return false;
  }
  const mpq_class& q = x.rational();
  return perfect_power(q.get_num(), 3) && perfect_power(q.get_den(), 3);
}

bool quadratic_irreducible(const FieldSpec& field, QuadraticKind kind, const Scalar& lambda) {
  if (lambda.field() != field) throw FieldMismatch();
  if (kind == QuadraticKind::minus_lambda) return !is_square(lambda);
  if (field.is_prime()) {
    // t^2 + lambda t + 1: direct root search (also valid in characteristic 2).
    for (std::uint32_t t = 0; t < field.characteristic(); ++t) {
      const Scalar s(field, static_cast<long long>(t));
      if ((s * s + lambda * s + Scalar::one(field)).is_zero()) return false;
    }
    return true;
  }
  // Over Q a root exists iff the discriminant lambda^2 - 4 is a square.
  return !is_square(lambda * lambda - Scalar(field, 4LL));
}

bool cubic_irreducible(const FieldSpec& field, const Scalar& mu) {
  if (mu.field() != field) throw FieldMismatch();
  return !is_cube(mu);
}

}  // namespace trigeom
