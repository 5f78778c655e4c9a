#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigeom/field.hpp"

namespace trigeom {

using Exponent = std::vector<std::uint16_t>;

// Graded-lexicographic order with u1 > u2 > ... > un; "greater" sorts the
// leading term first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

// Named parameters accepted by the parser, e.g. {"L", lambda}.
using ParamBindings = std::map<std::string, Scalar, std::less<>>;

// Sparse polynomial in K[u1..un]. Zero coefficients are never stored, so
// equal polynomials have identical term maps.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  MultiPoly(std::size_t nvars, const FieldSpec& field);

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  // The variable u_{i+1} (i is 0-based).
  static MultiPoly variable(std::size_t nvars, const FieldSpec& field, std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Scalar& c);

  // Grammar: sums/differences of products of factors; a factor is a number,
  // a variable (letter prefix + 1-based index, e.g. u3, x7, u_3), a bound
  // parameter name, or a parenthesised expression, optionally raised to ^k.
  static MultiPoly parse(std::string_view text, std::size_t nvars, const FieldSpec& field,
                         const ParamBindings& params = {});

  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  Scalar coefficient(const Exponent& e) const;
  // Leading term under grlex; throws on zero.
  const std::pair<const Exponent, Scalar>& leading_term() const;

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

  Scalar evaluate(const Vector& point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // "u1*u3^2 - 2*u2 + 1"; terms in decreasing grlex order.
  std::string to_string(std::string_view var = "u") const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t nvars_;
  FieldSpec field_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// q with a = q*b, or nullopt when b does not divide a. Throws on b = 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

struct StrippedPower {
  unsigned exponent;
  MultiPoly cofactor;
};

// a = u_{i+1}^exponent * cofactor with u_{i+1} not dividing cofactor.
StrippedPower strip_variable_power(const MultiPoly& a, std::size_t i);

// c != 0 with a = c*b; (0,0) gives c = 1.
std::optional<Scalar> equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b);

}  // namespace trigeom
