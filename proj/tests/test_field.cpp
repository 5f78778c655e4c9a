#include "doctest.h"
#include "trigeom/errors.hpp"
#include "trigeom/field.hpp"

using namespace trigeom;

TEST_CASE("arith examples") {
  const FieldSpec f7 = FieldSpec::prime(7), q = FieldSpec::rationals(), f2 = FieldSpec::prime(2);
  CHECK(arith(Scalar(f7, 1LL), Scalar(f7, 3LL), ArithOp::div) == Scalar(f7, 5LL));
  CHECK(arith(Scalar::parse(q, "1/2"), Scalar::parse(q, "1/3"), ArithOp::add) == Scalar::parse(q, "5/6"));
  CHECK(arith(Scalar(f2, 1LL), Scalar(f2, 1LL), ArithOp::mul) == Scalar(f2, 1LL));
}

TEST_CASE("arith errors") {
  const FieldSpec f5 = FieldSpec::prime(5), q = FieldSpec::rationals();
  CHECK_THROWS_AS(arith(Scalar(f5, 1LL), Scalar(f5, 0LL), ArithOp::div), DivisionByZero);
  CHECK_THROWS_AS(Scalar(q, 0LL).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(f5, 1LL) + Scalar(q, 1LL), FieldMismatch);
  CHECK_FALSE(Scalar(f5, 1LL) == Scalar(q, 1LL));
}

TEST_CASE("canonical representatives") {
  const FieldSpec f7 = FieldSpec::prime(7), q = FieldSpec::rationals();
  CHECK(Scalar(f7, -1LL).residue() == 6);
  CHECK(Scalar(f7, 15LL) == Scalar(f7, 1LL));
  CHECK(Scalar::parse(q, "-4/2").to_string() == "-2");
  CHECK_THROWS_AS(Scalar::parse(q, "4/-2"), ParseError);
  CHECK(Scalar::parse(q, "6/4").to_string() == "3/2");
  CHECK(Scalar::parse(f7, "1/3") == Scalar(f7, 5LL));
  CHECK(Scalar::parse(q, "-10/4") == Scalar::parse(q, "-5/2"));
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("gf(7)") == FieldSpec::prime(7));
  CHECK(FieldSpec::parse(" GF(2) ").characteristic() == 2);
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::prime(3).to_string() == "gf(3)");
  CHECK_THROWS(FieldSpec::prime(9));
  CHECK_THROWS(FieldSpec::prime(1));
  CHECK_THROWS(FieldSpec::parse("gf(4)"));
  CHECK_THROWS(FieldSpec::parse("r"));
}

TEST_CASE("quadratic irreducibility") {
  const FieldSpec f2 = FieldSpec::prime(2), f7 = FieldSpec::prime(7), q = FieldSpec::rationals();
  CHECK(quadratic_irreducible(f2, QuadraticKind::lambda_linear, Scalar(f2, 1LL)));
  CHECK(quadratic_irreducible(f7, QuadraticKind::minus_lambda, Scalar(f7, 3LL)));
  CHECK_FALSE(quadratic_irreducible(q, QuadraticKind::minus_lambda, Scalar(q, 4LL)));
  CHECK(quadratic_irreducible(q, QuadraticKind::minus_lambda, Scalar(q, 2LL)));
  CHECK_FALSE(quadratic_irreducible(q, QuadraticKind::minus_lambda, Scalar::parse(q, "9/4")));
  // t^2 + 3t + 1 has discriminant 5, not a rational square.
  CHECK(quadratic_irreducible(q, QuadraticKind::lambda_linear, Scalar(q, 3LL)));
  // t^2 + 2t + 1 = (t + 1)^2.
  CHECK_FALSE(quadratic_irreducible(q, QuadraticKind::lambda_linear, Scalar(q, 2LL)));
}

TEST_CASE("cubic irreducibility") {
  const FieldSpec f2 = FieldSpec::prime(2), f7 = FieldSpec::prime(7), q = FieldSpec::rationals();
  CHECK(cubic_irreducible(f7, Scalar(f7, 2LL)));
  CHECK_FALSE(cubic_irreducible(f2, Scalar(f2, 1LL)));
  CHECK_FALSE(cubic_irreducible(q, Scalar(q, 8LL)));
  CHECK(cubic_irreducible(q, Scalar(q, 2LL)));
  CHECK_FALSE(cubic_irreducible(q, Scalar::parse(q, "-27/8")));
}

TEST_CASE("field axioms over small prime fields") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldSpec f = FieldSpec::prime(p);
    std::vector<Scalar> all;
    for (long long a = 0; a < static_cast<long long>(p); ++a) all.emplace_back(f, a);
    for (const auto& a : all) {
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      for (const auto& b : all)
        for (const auto& c : all) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
    }
  }
}

TEST_CASE("squares never give irreducible t^2 - lambda") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (long long t = 0; t < static_cast<long long>(p); ++t) {
      const Scalar sq = Scalar(f, t) * Scalar(f, t);
      CHECK(is_square(sq));
      CHECK_FALSE(quadratic_irreducible(f, QuadraticKind::minus_lambda, sq));
    }
  }
}

TEST_CASE("powers") {
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar(f7, 3LL).pow(6).is_one());
  CHECK(Scalar(f7, 3LL).pow(0).is_one());
  CHECK(Scalar::parse(FieldSpec::rationals(), "2/3").pow(3).to_string() == "8/27");
}
