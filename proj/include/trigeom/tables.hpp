#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/triform.hpp"

namespace trigeom {

// Transcribed reference tables. Tables 2-3 are stated at n = rank and
// Tables 4-5 at n = 6 and n = 7. Matrix entries are polynomials in u1..un,
// Plücker coordinates |x,y|_jk are written wjk, pole equations use x1..xn,
// and L stands for the row's parameter.
struct MatrixFixture {
  int table;  // 2 or 3
  CatalogType type;
  int n;
  std::vector<std::vector<std::string>> rows;
};

struct RadicalFixture {
  int table;  // 4 or 5
  CatalogType type;
  int n;
  std::string poles;  // "PG(V)" or an equation
  std::vector<std::string> equations;
};

const std::vector<MatrixFixture>& matrix_fixtures();
const std::vector<RadicalFixture>& radical_fixtures();

// A field and parameter at which a row is compared. Rows whose special
// condition fails in the context are compared formally (coefficients only).
struct TableContext {
  FieldSpec field;
  std::optional<Scalar> parameter;
};
std::vector<TableContext> table_contexts(CatalogType t);
std::string to_string(const TableContext& c);

struct CellDiff {
  int table;
  std::string row;
  std::string context;
  std::string cell;
  std::string expected;
  std::string actual;
};

struct TableReport {
  int table;
  int rows_checked = 0;
  int comparisons = 0;
  std::vector<CellDiff> diffs;
};

// Recomputes a table (2, 3, 4 or 5) and diffs it against the transcription.
TableReport check_table(int which);
// Plain-text rendering of a transcribed table.
std::string render_table(int which);

// Coefficient vector of a linear form in wjk over C(n, 2) Plücker coordinates.
Vector parse_plucker_equation(const std::string& text, int n, const FieldSpec& field,
                              const std::optional<Scalar>& parameter);

}  // namespace trigeom
