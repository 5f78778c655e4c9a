#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "trigeom/poles.hpp"
#include "trigeom/tables.hpp"

using namespace trigeom;
using support::cat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const RadicalFixture& radical_row(int table, CatalogType t) {
  const auto& all = radical_fixtures();
  return *std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.table == table && r.type == t; });
}

}  // namespace

TEST_CASE("every table reproduces without diffs") {
  for (int t = 2; t <= 5; ++t) {
    const TableReport r = check_table(t);
    CHECK(r.table == t);
    CHECK(r.rows_checked > 0);
    CHECK(r.comparisons >= r.rows_checked);
    for (const auto& d : r.diffs) MESSAGE(d.row << " " << d.context << " " << d.cell << ": " << d.expected << " vs " << d.actual);
    CHECK(r.diffs.empty());
  }
  CHECK_THROWS(check_table(1));
  CHECK_THROWS(check_table(6));
}

TEST_CASE("fixture coverage") {
  std::set<CatalogType> matrix, radical;
  for (const auto& m : matrix_fixtures()) {
    matrix.insert(m.type);
    CHECK(m.rows.size() == static_cast<std::size_t>(m.n));
  }
  for (const auto& r : radical_fixtures()) radical.insert(r.type);
  // Every type except T12, which shares the rows of T9.
  const auto types = all_catalog_types();
  std::set<CatalogType> expected(types.begin(), types.end());
  expected.erase(CatalogType::T12);
  CHECK(matrix == expected);
  CHECK(radical == expected);
}

TEST_CASE("Table 2 row T4 equals the symbolic matrix") {
  const auto& all = matrix_fixtures();
  const auto it = std::find_if(all.begin(), all.end(), [](const auto& m) { return m.type == CatalogType::T4; });
  REQUIRE(it != all.end());
  const PolyMatrix m = symbolic_matrix(cat("T4", Q, it->n));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      CHECK(m(i, j) == MultiPoly::parse(it->rows[i][j], static_cast<std::size_t>(it->n), Q));
}

TEST_CASE("Table 5 row T11 (1)") {
  const auto& row = radical_row(5, CatalogType::T11_1);
  CHECK(row.poles == "L*x4^2-x1^2");
  CHECK(std::find(row.equations.begin(), row.equations.end(), "w14") != row.equations.end());

  const FieldSpec f3 = FieldSpec::prime(3);
  const Scalar lambda(f3, 2LL);
  const auto v = pole_variety(cat("T11_1", f3, 7, 2));
  REQUIRE(v.kind == VarietyKind::hypersurface);
  CHECK(equal_up_to_scalar(*v.g, MultiPoly::parse("2*x4^2-x1^2", 7, f3)));

  // The system spans the computed upper-radical equations.
  const auto sys = upper_radical_system(cat("T11_1", f3, 7, 2));
  ScalarMatrix fixture(row.equations.size(), 21, f3);
  for (std::size_t i = 0; i < row.equations.size(); ++i) {
    const Vector e = parse_plucker_equation(row.equations[i], 7, f3, lambda);
    for (std::size_t j = 0; j < 21; ++j) fixture(i, j) = e[j];
  }
  CHECK(same_row_space(sys.reduced, fixture));
}

TEST_CASE("Table 4 row T10 (1)") {
  const auto& row = radical_row(4, CatalogType::T10_1);
  CHECK(row.equations.size() == 6);
  CHECK(row.equations[0] == "w23+L*w56");
  CHECK(row.poles == "PG(V)");
}

TEST_CASE("Plücker equations") {
  const Vector e = parse_plucker_equation("w23+L*w56", 6, Q, Scalar(Q, 3LL));
  CHECK(e.size() == 15);
  CHECK(e[pair_index(6, 1, 2)].is_one());
  CHECK(e[pair_index(6, 4, 5)] == Scalar(Q, 3LL));
  std::size_t nonzero = 0;
  for (const auto& c : e) nonzero += !c.is_zero();
  CHECK(nonzero == 2);

  const Vector neg = parse_plucker_equation("-w16+w34", 6, Q, std::nullopt);
  CHECK(neg[pair_index(6, 0, 5)] == Scalar(Q, -1LL));
  CHECK_THROWS(parse_plucker_equation("w77", 6, Q, std::nullopt));
  CHECK_THROWS(parse_plucker_equation("w12*w13", 6, Q, std::nullopt));
}

TEST_CASE("contexts and rendering") {
  CHECK(table_contexts(CatalogType::T5).size() == 1);
  CHECK(table_contexts(CatalogType::T10_1).size() == 2);
  for (const auto& c : table_contexts(CatalogType::T12)) CHECK(c.field == FieldSpec::prime(7));
  const std::string text = render_table(5);
  CHECK(text.find("T9") != std::string::npos);
  CHECK(text.find("w14+w25+w36") != std::string::npos);
}
