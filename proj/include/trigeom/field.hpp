#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trigeom {

bool is_prime(std::uint64_t n);

// A prime field GF(p) or the rationals. Primality is validated on
// construction; p is limited to 31 bits.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(); }
  // Accepts "gf(p)" or "q" (case-insensitive, surrounding blanks ignored).
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  // Number of elements; 0 for the rationals.
  std::uint32_t order() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// Exact field element in canonical form: a residue in [0,p) for GF(p),
// a reduced fraction with positive denominator for the rationals.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0LL); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1LL); }
  // Integer or fraction literal, e.g. "3", "-2", "5/6".
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Residue for prime fields; throws for the rationals.
  std::uint32_t residue() const;
  // Rational value; throws for prime fields.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Structural equality; elements of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "3", "-1/2"; prime-field residues print in [0,p).
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);
std::string to_string(const Vector& v);

enum class ArithOp { add, sub, mul, div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

enum class QuadraticKind {
  minus_lambda,   // t^2 - lambda
  lambda_linear,  // t^2 + lambda t + 1
};

bool is_square(const Scalar& x);
bool is_cube(const Scalar& x);

// True iff the quadratic has no root in the field.
bool quadratic_irreducible(const FieldSpec& field, QuadraticKind kind, const Scalar& lambda);
// True iff t^3 - mu has no root in the field.
bool cubic_irreducible(const FieldSpec& field, const Scalar& mu);

}  // namespace trigeom
