#include "trigeom/tables.hpp"

#include <cctype>
#include <sstream>

#include "trigeom/errors.hpp"
#include "trigeom/multipoly.hpp"
#include "trigeom/poles.hpp"
#include "trigeom/skewlinalg.hpp"

namespace trigeom {

namespace {

using Rows = std::vector<std::vector<std::string>>;

const Rows kT10Block = {
    {"0", "u3", "-u2", "0", "L*u6", "-L*u5"},
    {"-u3", "0", "u1", "-L*u6", "0", "L*u4"},
    {"u2", "-u1", "0", "L*u5", "-L*u4", "0"},
    {"0", "L*u6", "-L*u5", "0", "L*u3", "-L*u2"},
    {"-L*u6", "0", "L*u4", "-L*u3", "0", "L*u1"},
    {"L*u5", "-L*u4", "0", "L*u2", "-L*u1", "0"},
};

const Rows kT10Block2 = {
    {"0", "u6", "-u5", "0", "L*u6+u3", "-L*u5-u2"},
    {"-u6", "0", "u4", "-L*u6-u3", "0", "L*u4+u1"},
    {"u5", "-u4", "0", "L*u5+u2", "-L*u4-u1", "0"},
    {"0", "L*u6+u3", "-L*u5-u2", "0", "(L^2+1)*u6+L*u3", "(-L^2-1)*u5-L*u2"},
    {"-L*u6-u3", "0", "L*u4+u1", "-(L^2+1)*u6-L*u3", "0", "(L^2+1)*u4+L*u1"},
    {"L*u5+u2", "-L*u4-u1", "0", "(L^2+1)*u5+L*u2", "-(L^2+1)*u4-L*u1", "0"},
};

std::vector<MatrixFixture> build_matrix_fixtures() {
  std::vector<MatrixFixture> f;
  f.push_back({2, CatalogType::T1, 3, {{"0", "u3", "-u2"}, {"-u3", "0", "u1"}, {"u2", "-u1", "0"}}});
  f.push_back({2, CatalogType::T2, 5,
               {{"0", "u3", "-u2", "u5", "-u4"},
                {"-u3", "0", "u1", "0", "0"},
                {"u2", "-u1", "0", "0", "0"},
                {"-u5", "0", "0", "0", "u1"},
                {"u4", "0", "0", "-u1", "0"}}});
  f.push_back({2, CatalogType::T3, 6,
               {{"0", "u3", "-u2", "0", "0", "0"},
                {"-u3", "0", "u1", "0", "0", "0"},
                {"u2", "-u1", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "u6", "-u5"},
                {"0", "0", "0", "-u6", "0", "u4"},
                {"0", "0", "0", "u5", "-u4", "0"}}});
  f.push_back({2, CatalogType::T4, 6,
               {{"0", "-u6", "u5", "0", "-u3", "u2"},
                {"u6", "0", "-u4", "u3", "0", "-u1"},
                {"-u5", "u4", "0", "-u2", "u1", "0"},
                {"0", "-u3", "u2", "0", "0", "0"},
                {"u3", "0", "-u1", "0", "0", "0"},
                {"-u2", "u1", "0", "0", "0", "0"}}});
  f.push_back({2, CatalogType::T10_1, 6, kT10Block});
  f.push_back({2, CatalogType::T10_2, 6, kT10Block2});
  f.push_back({3, CatalogType::T5, 7,
               {{"0", "u3", "-u2", "u7", "0", "0", "-u4"},
                {"-u3", "0", "u1", "0", "0", "0", "0"},
                {"u2", "-u1", "0", "0", "0", "0", "0"},
                {"-u7", "0", "0", "0", "u6", "-u5", "u1"},
                {"0", "0", "0", "-u6", "0", "u4", "0"},
                {"0", "0", "0", "u5", "-u4", "0", "0"},
                {"u4", "0", "0", "-u1", "0", "0", "0"}}});
  f.push_back({3, CatalogType::T6, 7,
               {{"0", "-u5", "-u6", "-u7", "u2", "u3", "u4"},
                {"u5", "0", "-u4", "u3", "-u1", "0", "0"},
                {"u6", "u4", "0", "-u2", "0", "-u1", "0"},
                {"u7", "-u3", "u2", "0", "0", "0", "-u1"},
                {"-u2", "u1", "0", "0", "0", "0", "0"},
                {"-u3", "0", "u1", "0", "0", "0", "0"},
                {"-u4", "0", "0", "u1", "0", "0", "0"}}});
  f.push_back({3, CatalogType::T7, 7,
               {{"0", "0", "0", "u6", "u7", "-u4", "-u5"},
                {"0", "0", "0", "u5", "-u4", "0", "0"},
                {"0", "0", "0", "0", "0", "u7", "-u6"},
                {"-u6", "-u5", "0", "0", "u2", "u1", "0"},
                {"-u7", "u4", "0", "-u2", "0", "0", "u1"},
                {"u4", "0", "-u7", "-u1", "0", "0", "u3"},
                {"u5", "0", "u6", "0", "-u1", "-u3", "0"}}});
  f.push_back({3, CatalogType::T8, 7,
               {{"0", "u3", "-u2", "u5", "-u4", "u7", "-u6"},
                {"-u3", "0", "u1", "0", "0", "0", "0"},
                {"u2", "-u1", "0", "0", "0", "0", "0"},
                {"-u5", "0", "0", "0", "u1", "0", "0"},
                {"u4", "0", "0", "-u1", "0", "0", "0"},
                {"-u7", "0", "0", "0", "0", "0", "u1"},
                {"u6", "0", "0", "0", "0", "-u1", "0"}}});
  f.push_back({3, CatalogType::T9, 7,
               {{"0", "u3", "-u2", "u7", "0", "0", "-u4"},
                {"-u3", "0", "u1", "0", "u7", "0", "-u5"},
                {"u2", "-u1", "0", "0", "0", "u7", "-u6"},
                {"-u7", "0", "0", "0", "u6", "-u5", "u1"},
                {"0", "-u7", "0", "-u6", "0", "u4", "u2"},
                {"0", "0", "-u7", "u5", "-u4", "0", "u3"},
                {"u4", "u5", "u6", "-u1", "-u2", "-u3", "0"}}});
  f.push_back({3, CatalogType::T11_1, 7,
               {{"0", "u3", "-u2", "u7", "L*u6", "-L*u5", "-u4"},
                {"-u3", "0", "u1", "-L*u6", "0", "L*u4", "0"},
                {"u2", "-u1", "0", "L*u5", "-L*u4", "0", "0"},
                {"-u7", "L*u6", "-L*u5", "0", "L*u3", "-L*u2", "u1"},
                {"-L*u6", "0", "L*u4", "-L*u3", "0", "L*u1", "0"},
                {"L*u5", "-L*u4", "0", "L*u2", "-L*u1", "0", "0"},
                {"u4", "0", "0", "-u1", "0", "0", "0"}}});
  f.push_back({3, CatalogType::T11_2, 7,
               {{"0", "u6", "-u5", "u7", "L*u6+u3", "-L*u5-u2", "-u4"},
                {"-u6", "0", "u4", "-L*u6-u3", "0", "L*u4+u1", "0"},
                {"u5", "-u4", "0", "L*u5+u2", "-L*u4-u1", "0", "0"},
                {"-u7", "L*u6+u3", "-L*u5-u2", "0", "(L^2+1)*u6+L*u3", "(-L^2-1)*u5-L*u2", "u1"},
                {"-L*u6-u3", "0", "L*u4+u1", "-(L^2+1)*u6-L*u3", "0", "(L^2+1)*u4+L*u1", "0"},
                {"L*u5+u2", "-L*u4-u1", "0", "(L^2+1)*u5+L*u2", "-(L^2+1)*u4-L*u1", "0", "0"},
                {"u4", "0", "0", "-u1", "0", "0", "0"}}});
  return f;
}

std::vector<RadicalFixture> build_radical_fixtures() {
  std::vector<RadicalFixture> f;
  f.push_back({4, CatalogType::T1, 6, "PG(V)", {"w12", "w13", "w23"}});
  f.push_back({4, CatalogType::T2, 6, "PG(V)", {"w12", "w13", "w15", "w14", "w23+w45"}});
  f.push_back({4, CatalogType::T3, 6, "PG(V)", {"w12", "w13", "w23", "w45", "w46", "w56"}});
  f.push_back({4, CatalogType::T4, 6, "PG(V)", {"w26-w35", "w16-w34", "w24-w15", "w23", "w13", "w12"}});
  f.push_back({4, CatalogType::T10_1, 6, "PG(V)",
               {"w23+L*w56", "w26-w35", "w13+L*w46", "w16-w34", "w12+L*w45", "w15-w24"}});
  f.push_back({4, CatalogType::T10_2, 6, "PG(V)",
               {"w26-w35+L*w56", "-w16+w34-L*w46", "w15-w24+L*w45",
                "w23+L*w26-L*w35+(L^2+1)*w56", "-w13-L*w16+L*w34-(1+L^2)*w46",
                "w12+L*w15-L*w24+(1+L^2)*w45"}});
  f.push_back({5, CatalogType::T5, 7, "x1*x4",
               {"w23+w47", "w13", "w12", "w56-w17", "w14", "w45", "w46"}});
  f.push_back({5, CatalogType::T6, 7, "x1^2",
               {"w25+w36+w47", "w14", "w15-w34", "w16+w24", "w17-w23", "w12", "w13"}});
  f.push_back({5, CatalogType::T7, 7, "x5*x7+x4*x6",
               {"w46+w57", "w45", "w67", "w16+w25", "w24-w17", "w14-w37", "w15+w36"}});
  f.push_back({5, CatalogType::T8, 7, "x1^2",
               {"w23+w45+w67", "w13", "w12", "w14", "w15", "w16", "w17"}});
  f.push_back({5, CatalogType::T9, 7, "x7^2-x3*x6-x2*x5-x1*x4",
               {"w23+w47", "w57-w13", "w12+w67", "w56-w17", "w27+w46", "w45-w37", "w14+w25+w36"}});
  f.push_back({5, CatalogType::T11_1, 7, "L*x4^2-x1^2",
               {"w13+L*w46", "w12+L*w45", "w23+w47+L*w56", "w14", "-w17+L*(w26-w35)", "w15-w24",
                "w16-w34"}});
  f.push_back({5, CatalogType::T11_2, 7, "x4^2+L*x1*x4+x1^2",
               {"w26-w35+w47+L*w56", "w16-w34+L*w46", "w14", "w15-w24+L*w45",
                "w17-w23-L*(w26-w35)-(L^2+1)*w56", "w13+L*(w16-w34)+(L^2+1)*w46",
                "w12+L*w15-L*w24+(L^2+1)*w45"}});
  return f;
}

ParamBindings bindings(const std::optional<Scalar>& parameter) {
  ParamBindings b;
  if (parameter) b.emplace("L", *parameter);
  return b;
}

TriForm context_form(CatalogType t, int n, const TableContext& c) {
  return catalog_terms(CatalogEntry(t, c.parameter), n, c.field);
}

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_matrix(const MatrixFixture& fx, const TableContext& ctx, TableReport& report) {
  const TriForm h = context_form(fx.type, fx.n, ctx);
  const PolyMatrix m = symbolic_matrix(h);
  const auto n = static_cast<std::size_t>(fx.n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++report.comparisons;
      const MultiPoly expected = MultiPoly::parse(fx.rows[i][j], n, ctx.field, bindings(ctx.parameter));
      if (expected != m(i, j))
        report.diffs.push_back({fx.table, catalog_name(fx.type), to_string(ctx), "entry " + cell_name(i, j),
                                expected.to_string(), m(i, j).to_string()});
    }
}

std::string vector_text(const Vector& v, int n) {
  std::string out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const Scalar& c = v[pair_index(n, j, k)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += c.to_string() + "*";
      out += "w" + std::to_string(j + 1) + std::to_string(k + 1);
    }
  return out.empty() ? "0" : out;
}

bool in_row_space(const std::vector<Vector>& basis, const Vector& v, std::size_t width, const FieldSpec& field) {
  std::vector<Vector> rows = basis;
  rows.push_back(v);
  return row_space_basis(rows, width, field).size() == row_space_basis(basis, width, field).size();
}

void check_radical(const RadicalFixture& fx, const TableContext& ctx, TableReport& report) {
  const TriForm h = context_form(fx.type, fx.n, ctx);
  const int n = fx.n;
  const std::size_t width = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::string row = catalog_name(fx.type), where = to_string(ctx);

  std::vector<Vector> expected;
  for (const auto& eq : fx.equations) expected.push_back(parse_plucker_equation(eq, n, ctx.field, ctx.parameter));
  const UpperRadicalSystem sys = upper_radical_system(h);
  std::vector<Vector> computed;
  for (std::size_t i = 0; i < sys.equations.rows(); ++i) computed.push_back(sys.equations.row(i));
  ++report.comparisons;
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (!in_row_space(computed, expected[k], width, ctx.field))
      report.diffs.push_back({fx.table, row, where, "equation " + std::to_string(k + 1), vector_text(expected[k], n),
                              "not implied by the computed system"});
  for (std::size_t i = 0; i < computed.size(); ++i)
    if (!in_row_space(expected, computed[i], width, ctx.field))
      report.diffs.push_back({fx.table, row, where, "computed equation " + std::to_string(i + 1),
                              "not implied by the transcribed system", vector_text(computed[i], n)});

  // Pole equations of rows defined only in characteristic 2 are sign-free;
  // they are compared only where the row's condition holds.
  if (!catalog_condition_holds(CatalogEntry(fx.type, ctx.parameter), ctx.field)) return;
  ++report.comparisons;
  VarietyOptions opts;
  const VarietyResult v = pole_variety(h, opts);
  if (fx.poles == "PG(V)") {
    if (v.kind != VarietyKind::all_points)
      report.diffs.push_back({fx.table, row, where, "poles", "PG(V)", v.g ? v.g->to_string("x") : "?"});
    return;
  }
  const MultiPoly expected_poles =
      MultiPoly::parse(fx.poles, static_cast<std::size_t>(n), ctx.field, bindings(ctx.parameter));
  if (v.kind != VarietyKind::hypersurface || !equal_up_to_scalar(*v.g, expected_poles))
    report.diffs.push_back({fx.table, row, where, "poles", expected_poles.to_string("x"),
                            v.g ? v.g->to_string("x") : "PG(V)"});
}

}  // namespace

const std::vector<MatrixFixture>& matrix_fixtures() {
  static const std::vector<MatrixFixture> f = build_matrix_fixtures();
  return f;
}

const std::vector<RadicalFixture>& radical_fixtures() {
  static const std::vector<RadicalFixture> f = build_radical_fixtures();
  return f;
}

std::vector<TableContext> table_contexts(CatalogType t) {
  const FieldSpec q = FieldSpec::rationals();
  switch (t) {
    case CatalogType::T10_1:
    case CatalogType::T11_1:
      return {{q, Scalar(q, 2LL)}, {FieldSpec::prime(3), Scalar(FieldSpec::prime(3), 2LL)}};
    case CatalogType::T10_2:
    case CatalogType::T11_2:
      return {{FieldSpec::prime(2), Scalar(FieldSpec::prime(2), 1LL)}, {q, Scalar(q, 3LL)}};
    case CatalogType::T12: return {{FieldSpec::prime(7), Scalar(FieldSpec::prime(7), 2LL)}};
    default: return {{q, std::nullopt}};
  }
}

std::string to_string(const TableContext& c) {
  std::string out = c.field.to_string();
  if (c.parameter) out += ", L=" + c.parameter->to_string();
  return out;
}

Vector parse_plucker_equation(const std::string& text, int n, const FieldSpec& field,
                              const std::optional<Scalar>& parameter) {
  // wjk becomes the variable p<index> of a linear polynomial in C(n, 2) unknowns.
  std::string rewritten;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'w' && i + 2 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
        std::isdigit(static_cast<unsigned char>(text[i + 2]))) {
      const int j = text[i + 1] - '1', k = text[i + 2] - '1';
      if (j < 0 || k <= j || k >= n) throw ParseError("bad Plücker coordinate in '" + text + "'");
      rewritten += "p" + std::to_string(pair_index(n, j, k) + 1);
      i += 2;
    } else {
      rewritten += text[i];
    }
  }
  const std::size_t width = static_cast<std::size_t>(n * (n - 1) / 2);
  const MultiPoly f = MultiPoly::parse(rewritten, width, field, bindings(parameter));
  Vector out = zero_vector(field, width);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != 1) throw ParseError("Plücker equation is not linear: '" + text + "'");
    for (std::size_t v = 0; v < width; ++v)
      if (e[v]) out[v] = c;
  }
  return out;
}

TableReport check_table(int which) {
  TableReport report{which, 0, 0, {}};
  if (which == 2 || which == 3) {
    for (const auto& fx : matrix_fixtures()) {
      if (fx.table != which) continue;
      ++report.rows_checked;
      for (const auto& ctx : table_contexts(fx.type)) check_matrix(fx, ctx, report);
    }
  } else if (which == 4 || which == 5) {
    for (const auto& fx : radical_fixtures()) {
      if (fx.table != which) continue;
      ++report.rows_checked;
      for (const auto& ctx : table_contexts(fx.type)) check_radical(fx, ctx, report);
    }
  } else {
    throw InvalidArgument("tables are numbered 2 to 5");
  }
  return report;
}

std::string render_table(int which) {
  std::ostringstream out;
  if (which == 2 || which == 3) {
    for (const auto& fx : matrix_fixtures()) {
      if (fx.table != which) continue;
      out << catalog_name(fx.type) << " (n = " << fx.n << ")\n";
      for (const auto& row : fx.rows) {
        out << " ";
        for (const auto& cell : row) out << " " << cell;
        out << "\n";
      }
    }
  } else if (which == 4 || which == 5) {
    for (const auto& fx : radical_fixtures()) {
      if (fx.table != which) continue;
      out << catalog_name(fx.type) << " (n = " << fx.n << ")  poles: " << fx.poles << "\n";
      for (const auto& eq : fx.equations) out << "  " << eq << " = 0\n";
    }
  } else {
    throw InvalidArgument("tables are numbered 2 to 5");
  }
  return out.str();
}

}  // namespace trigeom
