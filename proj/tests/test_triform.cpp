#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "trigeom/errors.hpp"
#include "trigeom/triform.hpp"

using namespace trigeom;
using support::cat;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3);

Vector e(const FieldSpec& f, int n, int i) { return unit_vector(f, static_cast<std::size_t>(n), static_cast<std::size_t>(i)); }

LinearMap random_gl(int n, const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<long long> d(0, static_cast<long long>(f.characteristic()) - 1);
  for (;;) {
    ScalarMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(f, d(rng));
    if (!determinant(m).is_zero()) return LinearMap(m);
  }
}

}  // namespace

TEST_CASE("catalog forms") {
  const TriForm t1 = cat("T1", F2, 6);
  REQUIRE(t1.coeffs().size() == 1);
  CHECK(t1.coeffs().begin()->first == Triple{0, 1, 2});
  CHECK(t1.label() == std::optional<std::string>("T1"));

  // 126+153+234+(l^2+1)456+l(156+345+426) with l = 1 over GF(2).
  const TriForm t10 = cat("T10_2", F2, 6, 1);
  TriForm expected(6, F2);
  for (Triple t : {Triple{0, 1, 5}, {0, 4, 2}, {1, 2, 3}, {0, 4, 5}, {2, 3, 4}, {3, 1, 5}})
    expected.add_term(t[0], t[1], t[2], Scalar::one(F2));
  CHECK(t10 == expected);
  CHECK(t10.coeffs().count({3, 4, 5}) == 0);

  CHECK_THROWS_AS(cat("T10_1", F3, 6, 1), ConditionViolation);
  CHECK_THROWS_AS(cat("T9", Q, 6), DimensionError);
  CHECK_NOTHROW(cat("T10_1", F3, 6, 2));
  CHECK_THROWS_AS(cat("T12", F2, 7, 1), ConditionViolation);
}

TEST_CASE("catalog ranks match the table") {
  for (CatalogType t : all_catalog_types()) {
    const FieldSpec f = (t == CatalogType::T10_2 || t == CatalogType::T11_2) ? F2
                        : t == CatalogType::T12                             ? FieldSpec::prime(7)
                                                                             : F3;
    std::optional<Scalar> param;
    if (t == CatalogType::T10_2 || t == CatalogType::T11_2) param = Scalar(f, 1LL);
    if (t == CatalogType::T10_1 || t == CatalogType::T11_1) param = Scalar(f, 2LL);
    if (t == CatalogType::T12) param = Scalar(f, 2LL);
    const CatalogEntry entry(t, param);
    CHECK(radical_and_rank(catalog_form(entry, 7, f)).rank == catalog_rank(t));
  }
}

TEST_CASE("evaluation") {
  const TriForm t1 = cat("T1", Q, 3);
  CHECK(evaluate_form(t1, e(Q, 3, 0), e(Q, 3, 1), e(Q, 3, 2)).is_one());
  CHECK(evaluate_form(t1, e(Q, 3, 1), e(Q, 3, 0), e(Q, 3, 2)) == Scalar(Q, -1LL));
  const TriForm t9 = cat("T9", Q);
  Vector x, z;
  for (long long v : {1, 2, 0, -1, 3, 0, 1}) x.emplace_back(Q, v);
  for (long long v : {0, 1, 1, 1, -2, 5, 0}) z.emplace_back(Q, v);
  CHECK(evaluate_form(t9, x, x, z).is_zero());
  CHECK_THROWS_AS(evaluate_form(t9, e(Q, 3, 0), x, z), DimensionError);
}

TEST_CASE("evaluation matches the direct definition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-3, 3);
  const TriForm h = cat("T7", Q);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x, y, z;
    for (int i = 0; i < 7; ++i) x.emplace_back(Q, d(rng)), y.emplace_back(Q, d(rng)), z.emplace_back(Q, d(rng));
    mpq_class direct = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k)
          direct += oracle::coeff_q(h, i, j, k) * x[static_cast<std::size_t>(i)].rational() *
                    y[static_cast<std::size_t>(j)].rational() * z[static_cast<std::size_t>(k)].rational();
    CHECK(evaluate_form(h, x, y, z).rational() == direct);
  }
}

TEST_CASE("radical and rank") {
  auto r = radical_and_rank(cat("T2", Q, 6));
  CHECK(r.rank == 5);
  REQUIRE(r.radical_basis.size() == 1);
  CHECK(r.radical_basis[0] == e(Q, 6, 5));

  r = radical_and_rank(cat("T9", Q, 7));
  CHECK(r.rank == 7);
  CHECK(r.radical_basis.empty());

  r = radical_and_rank(cat("T1", Q, 6));
  CHECK(r.rank == 3);
  CHECK(r.radical_basis == std::vector<Vector>{e(Q, 6, 3), e(Q, 6, 4), e(Q, 6, 5)});
  CHECK_THROWS(radical_and_rank(TriForm(5, Q)));
}

TEST_CASE("pullback") {
  const TriForm t1 = cat("T1", Q, 6);
  CHECK(pullback(t1, LinearMap(ScalarMatrix::identity(6, Q))) == t1);

  ScalarMatrix swap = ScalarMatrix::identity(6, Q);
  swap(0, 0) = swap(3, 3) = Scalar::zero(Q);
  swap(0, 3) = swap(3, 0) = Scalar::one(Q);
  const TriForm s = pullback(t1, LinearMap(swap));
  REQUIRE(s.coeffs().size() == 1);
  CHECK(s.coeffs().begin()->first == Triple{1, 2, 3});
  // h'(e2, e3, e4) = h(e2, e3, e1) = 1.
  CHECK(s.coeffs().begin()->second.is_one());

  CHECK_THROWS(LinearMap(ScalarMatrix(6, 6, Q)));

  std::mt19937 rng(5);
  for (const char* t : {"T3", "T5", "T9"}) {
    const TriForm h = cat(t, F3, 7);
    for (int trial = 0; trial < 10; ++trial) {
      const LinearMap g = random_gl(7, F3, rng);
      const TriForm p = pullback(h, g);
      CHECK(radical_and_rank(p).rank == radical_and_rank(h).rank);
      // Evaluation identity on a basis triple.
      CHECK(evaluate_form(p, e(F3, 7, 0), e(F3, 7, 1), e(F3, 7, 2)) ==
            evaluate_form(h, g.apply(e(F3, 7, 0)), g.apply(e(F3, 7, 1)), g.apply(e(F3, 7, 2))));
    }
  }
}

TEST_CASE("scale") {
  const FieldSpec f7 = FieldSpec::prime(7);
  const TriForm t9 = cat("T9", f7);
  const TriForm s = scale(t9, Scalar(f7, 2LL));
  CHECK(s.coeffs().size() == t9.coeffs().size());
  for (const auto& [t, c] : t9.coeffs()) CHECK(s.coeffs().count(t) == 1);
  CHECK(scale(t9, Scalar::one(f7)) == t9);
  CHECK(scale(scale(t9, Scalar(f7, 3LL)), Scalar(f7, 3LL).inverse()) == t9);
  CHECK(cat("T12", f7, 7, 2) == s);
  CHECK_THROWS(scale(t9, Scalar::zero(f7)));
}

TEST_CASE("wedge coordinates") {
  Vector w = wedge2_coordinates(e(Q, 4, 0), e(Q, 4, 1));
  CHECK(w[pair_index(4, 0, 1)].is_one());
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i].is_zero());

  Vector x, y;
  for (long long v : {1, 1, 0}) x.emplace_back(Q, v);
  for (long long v : {0, 1, 1}) y.emplace_back(Q, v);
  w = wedge2_coordinates(x, y);
  for (const auto& c : w) CHECK(c.is_one());
  const Vector w2 = wedge2_coordinates(y, x);
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w2[i] == -w[i]);
  CHECK_THROWS(wedge2_coordinates(x, x));
}

TEST_CASE("form file round trip") {
  const TriForm h = cat("T11_1", F3, 7, 2);
  const std::string text = form_to_text(h);
  std::istringstream in(text);
  const TriForm back = read_form(in);
  CHECK(back == h);
  CHECK(form_to_text(back) == text);

  std::istringstream bad("n = 5\nfield = gf(2)\n1 1 2 1\n");
  CHECK_THROWS(read_form(bad));
  std::istringstream missing("1 2 3 1\n");
  CHECK_THROWS_AS(read_form(missing), ParseError);
  std::istringstream q("# chained\nn = 5\nfield = q\n1 2 3 1/2\n3 4 5 -1\n");
  const TriForm r = read_form(q);
  CHECK(r.coefficient(2, 3, 4) == Scalar(Q, -1LL));
  CHECK(r.coefficient(1, 0, 2) == Scalar::parse(Q, "-1/2"));
}

TEST_CASE("rank gap on GF(2)^4") {
  // All 15 nonzero forms on a 4-dimensional space have rank 3.
  const std::vector<Triple> triples{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::set<int> ranks;
  for (int mask = 1; mask < 16; ++mask) {
    TriForm h(4, F2);
    for (int b = 0; b < 4; ++b)
      if (mask >> b & 1) h.add_term(triples[b][0], triples[b][1], triples[b][2], Scalar::one(F2));
    ranks.insert(radical_and_rank(h).rank);
  }
  CHECK(ranks == std::set<int>{3});
}
