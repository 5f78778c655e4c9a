#include "doctest.h"
#include "trigeom/errors.hpp"
#include "trigeom/multipoly.hpp"

using namespace trigeom;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MultiPoly P(const char* s, std::size_t n = 7, const FieldSpec& f = Q) { return MultiPoly::parse(s, n, f); }

}  // namespace

TEST_CASE("poly arithmetic") {
  CHECK(poly_arith(P("u1+u2"), P("u1-u2"), PolyOp::mul) == P("u1^2-u2^2"));
  CHECK(poly_arith(P("u1*u3+2"), MultiPoly(7, Q), PolyOp::add) == P("u1*u3+2"));
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(poly_arith(P("u1+u2", 7, f2), P("u1+u2", 7, f2), PolyOp::mul) == P("u1^2+u2^2", 7, f2));
  CHECK((P("u1") - P("u1")).is_zero());
  CHECK_THROWS_AS(P("u1", 3) + P("u1", 4), DimensionError);
  CHECK_THROWS_AS(P("u1") + P("u1", 7, f2), FieldMismatch);
}

TEST_CASE("exact division") {
  CHECK(*exact_divide(P("u1^2*u3"), P("u1")) == P("u1*u3"));
  CHECK(*exact_divide(P("u1^2-u2^2"), P("u1+u2")) == P("u1-u2"));
  CHECK_FALSE(exact_divide(P("u1+u2"), P("u3")).has_value());
  CHECK_THROWS_AS(exact_divide(P("u1"), MultiPoly(7, Q)), DivisionByZero);
  CHECK(exact_divide(MultiPoly(7, Q), P("u2"))->is_zero());
}

TEST_CASE("strip variable power") {
  auto r = strip_variable_power(P("u3^2*(u1+u2)"), 2);
  CHECK(r.exponent == 2);
  CHECK(r.cofactor == P("u1+u2"));
  r = strip_variable_power(P("u1+u2"), 2);
  CHECK(r.exponent == 0);
  CHECK(r.cofactor == P("u1+u2"));
  r = strip_variable_power(P("u3*u3*u3"), 2);
  CHECK(r.exponent == 3);
  CHECK(r.cofactor == P("1"));
  CHECK_THROWS(strip_variable_power(MultiPoly(7, Q), 0));
}

TEST_CASE("evaluation") {
  const MultiPoly g = P("x7^2-x3*x6-x2*x5-x1*x4");
  Vector e7 = zero_vector(Q, 7), e1 = zero_vector(Q, 7);
  e7[6] = Scalar::one(Q);
  e1[0] = Scalar::one(Q);
  CHECK(g.evaluate(e7).is_one());
  CHECK(g.evaluate(e1).is_zero());
  Vector x;
  for (long long v : {1, 1, 0, 1, 1}) x.emplace_back(Q, v);
  CHECK(P("u3", 5).evaluate(x).is_zero());
  CHECK_THROWS_AS(P("u3", 5).evaluate(e7), DimensionError);
}

TEST_CASE("equal up to scalar") {
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(*equal_up_to_scalar(P("2*u1*u2", 7, f5), P("u1*u2", 7, f5)) == Scalar(f5, 2LL));
  CHECK_FALSE(equal_up_to_scalar(P("u1"), P("u2")).has_value());
  CHECK(*equal_up_to_scalar(P("u3*u5"), P("3*u3*u5")) == Scalar::parse(Q, "1/3"));
  CHECK(equal_up_to_scalar(MultiPoly(7, Q), MultiPoly(7, Q))->is_one());
  CHECK_FALSE(equal_up_to_scalar(P("u1"), MultiPoly(7, Q)).has_value());
  CHECK_FALSE(equal_up_to_scalar(P("u1+u2"), P("u1-u2")).has_value());
}

TEST_CASE("parsing and printing") {
  CHECK(P("u3^2*u1 + 2*u2").to_string() == "u1*u3^2 + 2*u2");
  CHECK(P("-(u1+u2)^2").to_string() == "-u1^2 - 2*u1*u2 - u2^2");
  CHECK(P("u_3").to_string() == "u3");
  CHECK(P("x1*x4").to_string("x") == "x1*x4");
  CHECK(P("0").to_string() == "0");
  ParamBindings b{{"L", Scalar(Q, 3LL)}};
  CHECK(MultiPoly::parse("(L^2+1)*u6", 7, Q, b) == P("10*u6"));
  CHECK_THROWS_AS(P("u8"), ParseError);
  CHECK_THROWS_AS(P("u1+"), ParseError);
  CHECK_THROWS_AS(P("L*u1"), ParseError);
  CHECK_THROWS_AS(P("(u1"), ParseError);
}

TEST_CASE("grlex order puts the leading term first") {
  const MultiPoly f = P("u2 + u1^2 + u1*u2 + u3^3");
  CHECK(f.leading_term().first == Exponent{0, 0, 3, 0, 0, 0, 0});
  CHECK(f.total_degree() == 3);
  CHECK(MultiPoly(7, Q).total_degree() == -1);
}
