#include "trigeom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "trigeom/constructions.hpp"
#include "trigeom/errors.hpp"
#include "trigeom/geomcheck.hpp"
#include "trigeom/poles.hpp"
#include "trigeom/report.hpp"
#include "trigeom/tables.hpp"
#include "trigeom/triform.hpp"

namespace trigeom {

TriForm parse_terms(const std::string& text, int n, const FieldSpec& field) {
  TriForm h(n, field);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty term list");
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Scalar c = Scalar::one(field);
    std::string digits = s.substr(i, j - i);
    if (j < s.size() && s[j] == '*') {
      c = Scalar::parse(field, digits);
      i = ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      digits = s.substr(i, j - i);
    }
    if (digits.size() != 3) throw ParseError("bad term '" + digits + "' in '" + text + "'");
    int idx[3];
    for (int k = 0; k < 3; ++k) {
      idx[k] = digits[static_cast<std::size_t>(k)] - '1';
      if (idx[k] < 0 || idx[k] >= n) throw DimensionError("index in term '" + digits + "' exceeds n = " + std::to_string(n));
    }
    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
      throw ParseError("repeated index in term '" + digits + "'");
    h.add_term(idx[0], idx[1], idx[2], negative ? -c : c);
    i = j;
  }
  return h;
}

namespace {

struct FormArgs {
  std::string catalog;
  std::string file;
  std::string terms;
  std::string param;
  std::string field;
  int dim = 0;
};

struct Common {
  FormArgs form;
  std::uint64_t budget = 0;
  std::string output = "text";
  unsigned threads = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_form_options(CLI::App* app, FormArgs& f) {
  app->add_option("--catalog", f.catalog, "Catalog type (T1 ... T12)");
  app->add_option("--file", f.file, "Form file");
  app->add_option("--terms", f.terms, "Term list such as 123+345");
  app->add_option("--param", f.param, "Catalog parameter (lambda or mu) as a field element");
  app->add_option("--field", f.field, "gf(p) or q");
  app->add_option("--dim", f.dim, "Dimension n");
}

void add_common(CLI::App* app, Common& c) {
  add_form_options(app, c.form);
  app->add_option("--budget", c.budget, "Maximum p^n for exhaustive enumeration")->check(CLI::PositiveNumber);
  app->add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

FieldSpec field_of(const FormArgs& f) { return FieldSpec::parse(f.field.empty() ? "q" : f.field); }

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct LoadedForm {
  TriForm h;
  std::string name;
  std::optional<std::string> parameter;
};

LoadedForm load_form(const FormArgs& f) {
  const int sources = !f.catalog.empty() + !f.file.empty() + !f.terms.empty();
  if (sources != 1) throw UsageError("give exactly one of --catalog, --file, --terms");
  if (!f.param.empty() && f.catalog.empty()) throw UsageError("--param applies to catalog forms only");
  if (!f.file.empty()) {
    std::istringstream in(file_text(f.file));
    TriForm h = read_form(in);
    if (!f.field.empty() && FieldSpec::parse(f.field) != h.field())
      throw UsageError("--field disagrees with the field in " + f.file);
    if (f.dim && f.dim != h.dim()) throw UsageError("--dim disagrees with the dimension in " + f.file);
    std::string name = h.label() ? *h.label() : h.to_string();
    return {h, name, std::nullopt};
  }
  const FieldSpec field = field_of(f);
  if (!f.terms.empty()) {
    int n = f.dim;
    if (!n)
      for (char c : f.terms)
        if (std::isdigit(static_cast<unsigned char>(c))) n = std::max(n, c - '0');
    TriForm h = parse_terms(f.terms, n, field);
    return {h, h.to_string(), std::nullopt};
  }
  const CatalogType t = parse_catalog_type(f.catalog);
  std::optional<Scalar> param;
  if (catalog_needs_parameter(t)) {
    if (f.param.empty()) throw UsageError(catalog_name(t) + " needs --param");
    param = Scalar::parse(field, f.param);
  } else if (!f.param.empty()) {
    throw UsageError(catalog_name(t) + " takes no parameter");
  }
  const CatalogEntry entry(t, param);
  const int n = f.dim ? f.dim : catalog_rank(t);
  TriForm h = catalog_form(entry, n, field);
  return {h, catalog_name(t), param ? std::optional<std::string>(param->to_string()) : std::nullopt};
}

EnumOptions enum_options(const Common& c) {
  EnumOptions o;
  if (c.budget) o.budget = c.budget;
  o.threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  return o;
}

void require_finite(const TriForm& h, const char* what) {
  if (!h.field().is_prime()) throw UsageError(std::string(what) + " needs a finite field (--field gf(p))");
}

Vector parse_vector(const std::string& text, int n, const FieldSpec& field) {
  Vector v;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) v.push_back(Scalar::parse(field, item));
  if (static_cast<int>(v.size()) != n)
    throw UsageError("vector '" + text + "' needs " + std::to_string(n) + " coordinates");
  return v;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
  if (c.output == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

Json with_parameter(Json j, const LoadedForm& f) {
  if (f.parameter) j["parameter"] = *f.parameter;
  return j;
}

// Subcommands.

int cmd_catalog(const Common& c, std::ostream& out) {
  if (!c.form.catalog.empty()) {
    const LoadedForm f = load_form(c.form);
    Json j{{"form", f.name}, {"n", f.h.dim()}, {"field", f.h.field().to_string()}, {"terms", f.h.to_string()}};
    emit(out, c, with_parameter(j, f), form_to_text(f.h));
    return exit_ok;
  }
  Json j = Json::array();
  std::ostringstream text;
  for (CatalogType t : all_catalog_types()) {
    const std::string cond = catalog_condition(t);
    j.push_back({{"type", catalog_name(t)}, {"rank", catalog_rank(t)}, {"form", catalog_description(t)},
                 {"condition", cond.empty() ? Json(nullptr) : Json(cond)}});
    text << catalog_name(t) << "  rank " << catalog_rank(t) << "  " << catalog_description(t);
    if (!cond.empty()) text << "  [" << cond << "]";
    text << "\n";
  }
  emit(out, c, j, text.str());
  return exit_ok;
}

int cmd_eval(const Common& c, const std::array<std::string, 3>& xyz, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  std::array<Vector, 3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (xyz[i].empty()) throw UsageError("eval needs --x, --y and --z");
    v[i] = parse_vector(xyz[i], f.h.dim(), f.h.field());
  }
  const Scalar r = evaluate_form(f.h, v[0], v[1], v[2]);
  emit(out, c, with_parameter({{"form", f.name}, {"field", f.h.field().to_string()}, {"value", r.to_string()}}, f),
       r.to_string() + "\n");
  return exit_ok;
}

int cmd_radical(const Common& c, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  const RadicalRank r = radical_and_rank(f.h);
  Json basis = Json::array();
  std::string text = "rank " + std::to_string(r.rank) + "\n";
  for (const auto& v : r.radical_basis) {
    basis.push_back(vector_json(v));
    text += "radical " + vector_text(v) + "\n";
  }
  emit(out, c,
       with_parameter({{"form", f.name}, {"field", f.h.field().to_string()}, {"n", f.h.dim()}, {"rank", r.rank},
                       {"radical", basis}},
                      f),
       text);
  return exit_ok;
}

int cmd_matrix(const Common& c, const std::string& point, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  Json j{{"form", f.name}, {"field", f.h.field().to_string()}};
  if (point.empty()) {
    const PolyMatrix m = symbolic_matrix(f.h);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k).to_string());
      rows.push_back(row);
    }
    j["matrix"] = rows;
    emit(out, c, with_parameter(j, f), m.to_string() + "\n");
    return exit_ok;
  }
  const Vector u = parse_vector(point, f.h.dim(), f.h.field());
  if (is_zero_vector(u)) throw UsageError("the point must be nonzero");
  const ScalarMatrix m = contraction_matrix(f.h, u);
  const PointDegree d = point_degree(f.h, u);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  j["point"] = vector_json(u);
  j["matrix"] = rows;
  j["rank"] = rank(m);
  j["degree"] = d.degree;
  emit(out, c, with_parameter(j, f),
       m.to_string() + "\nrank " + std::to_string(rank(m)) + ", degree " + std::to_string(d.degree) + "\n");
  return exit_ok;
}

int cmd_poles(const Common& c, bool list, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  require_finite(f.h, "poles");
  const EnumOptions opts = enum_options(c);
  const PoleReport report = enumerate_poles(f.h, opts);
  const FpForm ff(f.h);
  const auto lines = upper_radical_from_poles(ff, report, opts.threads);
  std::optional<VarietyResult> variety;
  VarietyOptions vo;
  vo.budget = opts.budget;
  variety = pole_variety(f.h, vo);
  emit(out, c, with_parameter(poles_json(f.name, ff.space(), report, lines, variety), f),
       poles_text(f.name, ff.space(), report, lines, variety, list));
  return exit_ok;
}

int cmd_variety(const Common& c, int index, int grid, const std::string& verify, bool all, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  VarietyOptions vo;
  if (index > 0) vo.index = static_cast<std::size_t>(index - 1);
  vo.grid = grid;
  if (!verify.empty()) vo.verify_field = FieldSpec::parse(verify);
  vo.all_candidates = all;
  if (c.budget) vo.budget = c.budget;
  const VarietyResult v = pole_variety(f.h, vo);
  Json j{{"form", f.name}, {"field", f.h.field().to_string()}, {"n", f.h.dim()}};
  j["variety"] = variety_json(v);
  emit(out, c, with_parameter(j, f), variety_text(v));
  return exit_ok;
}

int cmd_radical_lines(const Common& c, const std::string& point, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  Json lines = Json::array();
  std::ostringstream text;
  if (!point.empty()) {
    const Vector u = parse_vector(point, f.h.dim(), f.h.field());
    if (is_zero_vector(u)) throw UsageError("the point must be nonzero");
    if (f.h.field().is_rational()) {
      // Infinitely many lines: report the pencil [u, y], y in Rad(chi_u).
      const PointDegree d = point_degree(f.h, u);
      Json basis = Json::array();
      text << "degree " << d.degree << "; lines [u,y] with y in the span of";
      for (const auto& y : d.radical_basis) {
        basis.push_back(vector_json(y));
        text << " " << vector_text(y);
      }
      text << "\n";
      emit(out, c,
           with_parameter({{"form", f.name}, {"field", f.h.field().to_string()}, {"n", f.h.dim()},
                           {"point", vector_json(u)}, {"degree", d.degree}, {"radical", basis}},
                          f),
           text.str());
      return exit_ok;
    }
    for (const auto& l : lines_through_point(f.h, u)) {
      lines.push_back({{"basis", {vector_json(l.x), vector_json(l.y)}}, {"plucker", vector_json(l.wedge)}});
      text << "[" << vector_text(l.x) << "," << vector_text(l.y) << "]\n";
    }
  } else {
    require_finite(f.h, "radical-lines without --point");
    const ProjectiveSpace space(f.h.dim(), f.h.field().characteristic());
    for (const auto& l : enumerate_upper_radical(f.h, enum_options(c))) {
      const PluckerLine pl = plucker_line(space, l);
      lines.push_back({{"basis", {vector_json(pl.x), vector_json(pl.y)}}, {"plucker", vector_json(pl.wedge)}});
      text << describe_line(space, l) << "\n";
    }
  }
  Json j{{"form", f.name}, {"field", f.h.field().to_string()}, {"n", f.h.dim()}, {"count", lines.size()},
         {"lines", lines}};
  text << lines.size() << " lines\n";
  emit(out, c, with_parameter(j, f), text.str());
  return exit_ok;
}

struct ConstructArgs {
  std::string kind;
  int extra = 0;
  std::string bilinear;
  int direction = 0;
  std::string second;
  std::string alpha = "1", beta = "1";
};

TriForm load_second(const std::string& spec, const TriForm& first) {
  if (spec.empty()) throw UsageError("this construction needs --second");
  std::ifstream probe(spec);
  if (probe) {
    TriForm h = read_form(probe);
    return h;
  }
  return parse_terms(spec, first.dim(), first.field());
}

int cmd_construct(const Common& c, const ConstructArgs& a, std::ostream& out) {
  std::optional<TriForm> built;
  if (a.kind == "cch") {
    if (!c.form.dim) throw UsageError("cch needs --dim");
    built = cch_hyperplane(c.form.dim, field_of(c.form));
  } else if (a.kind == "expansion") {
    if (!c.form.dim || a.bilinear.empty() || !a.direction)
      throw UsageError("expansion needs --dim, --bilinear and --direction");
    const FieldSpec field = field_of(c.form);
    built = expansion(BilinearAltForm::parse(a.bilinear, c.form.dim, field), a.direction - 1);
  } else {
    const LoadedForm f = load_form(c.form);
    if (a.kind == "extend") {
      built = trivial_extension(f.h, a.extra);
    } else if (a.kind == "join") {
      built = reducible_join(f.h, load_second(a.second, f.h));
    } else if (a.kind == "sum") {
      const FieldSpec field = f.h.field();
      built = block_decompose(f.h, load_second(a.second, f.h), Scalar::parse(field, a.alpha), Scalar::parse(field, a.beta));
    } else {
      throw UsageError("unknown construction '" + a.kind + "'");
    }
  }
  const TriForm& h = *built;
  Json terms = Json::array();
  for (const auto& [t, s] : h.coeffs()) terms.push_back({t[0] + 1, t[1] + 1, t[2] + 1, s.to_string()});
  emit(out, c, {{"n", h.dim()}, {"field", h.field().to_string()}, {"form", h.to_string()}, {"terms", terms}},
       form_to_text(h));
  return exit_ok;
}

Verdict spread_verdict(const IncidenceStructure& g) {
  Verdict v;
  v.check = "spread";
  v.form = g.form;
  v.field = g.report.field.to_string();
  const SpreadResult s = spread_check(g);
  for (const auto& r : g.report.records) {
    const std::int64_t pos = g.position(r.index);
    const std::size_t count = pos < 0 ? 0 : g.point_lines[static_cast<std::size_t>(pos)].size();
    if (count != 1)
      v.fail("point " + describe_point(g.space, r.index) + " lies on " + std::to_string(count) + " lines");
  }
  if (v.pass != s.is_spread) v.fail("spread test disagrees with the cover count");
  v.stats.emplace_back("points", static_cast<std::int64_t>(g.report.records.size()));
  v.stats.emplace_back("lines", static_cast<std::int64_t>(g.lines.size()));
  return v;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"lines-are-poles", "spread", "normal-spread", "polar",   "cone",
                                              "residue",         "swap",   "radical-lines", "summands", "hexagon"};
  return names;
}

int cmd_check(const Common& c, const std::string& name, std::ostream& out) {
  if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
    throw UsageError("unknown check '" + name + "'");
  const LoadedForm f = load_form(c.form);
  require_finite(f.h, "check");
  const EnumOptions opts = enum_options(c);
  const IncidenceStructure g = build_geometry(f.h, opts);
  Verdict v;
  if (name == "lines-are-poles") v = lines_are_poles_check(g);
  else if (name == "spread") v = spread_verdict(g);
  else if (name == "normal-spread") {
    v = spread_verdict(g);
    if (v.pass) v = normal_spread_check(g);
    else v.check = "normal-spread";
  } else if (name == "polar") v = polar_space_check(g);
  else if (name == "cone") v = cone_structure_check(g);
  else if (name == "residue") v = residue_partition_check(g);
  else if (name == "swap") v = swap_line_check(g);
  else if (name == "radical-lines") v = radical_lines_check(g);
  else if (name == "summands") v = summand_lines_check(g);
  else v = hexagon_check(g, opts.threads);
  std::string text = verdict_text(v);
  if (f.parameter) text.insert(text.find(':'), " (parameter " + *f.parameter + ")");
  emit(out, c, with_parameter(verdict_json(v), f), text);
  return v.pass ? exit_ok : exit_check_failed;
}

int cmd_fingerprint(const Common& c, std::ostream& out) {
  const LoadedForm f = load_form(c.form);
  require_finite(f.h, "fingerprint");
  const Fingerprint fp = fingerprint(f.h, enum_options(c));
  Json j{{"form", f.name}, {"field", f.h.field().to_string()}, {"n", f.h.dim()}};
  j["fingerprint"] = fingerprint_json(fp);
  emit(out, c, with_parameter(j, f), to_string(fp) + "\n");
  return exit_ok;
}

int cmd_tables(const Common& c, int which, bool render, std::ostream& out) {
  std::vector<int> tables;
  if (which) tables.push_back(which);
  else tables = {2, 3, 4, 5};
  Json j = Json::array();
  std::string text;
  bool pass = true;
  for (int t : tables) {
    const TableReport r = check_table(t);
    pass = pass && r.diffs.empty();
    Json tj = table_json(r);
    if (render) {
      tj["transcription"] = render_table(t);
      text += render_table(t);
    }
    j.push_back(tj);
    text += table_text(r);
  }
  emit(out, c, j, text);
  return pass ? exit_ok : exit_check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with alternating trilinear forms and their geometries of poles", "trigeom"};
  app.require_subcommand(1);
  Common c;

  auto* catalog = app.add_subcommand("catalog", "List catalog types, or print one catalog form");
  auto* eval = app.add_subcommand("eval", "Evaluate h(x, y, z)");
  auto* radical = app.add_subcommand("radical", "Rank and radical of the form");
  auto* matrix = app.add_subcommand("matrix", "Symbolic matrix M_u, or M_u at a point");
  auto* poles = app.add_subcommand("poles", "Enumerate poles, degrees, upper radical and pole variety");
  auto* variety = app.add_subcommand("variety", "Equation of the pole variety");
  auto* rlines = app.add_subcommand("radical-lines", "Lines of the upper radical");
  auto* construct = app.add_subcommand("construct", "Build a form: cch, extend, expansion, join, sum");
  auto* check = app.add_subcommand("check", "Run a geometry check");
  auto* fp = app.add_subcommand("fingerprint", "Geometry fingerprint");
  auto* tables = app.add_subcommand("tables", "Recompute the reference tables and diff them");
  for (auto* s : {catalog, eval, radical, matrix, poles, variety, rlines, construct, check, fp, tables})
    add_common(s, c);

  std::array<std::string, 3> xyz;
  eval->add_option("--x", xyz[0]);
  eval->add_option("--y", xyz[1]);
  eval->add_option("--z", xyz[2]);
  std::string point;
  matrix->add_option("--point", point, "Evaluate at this point, e.g. 1,0,0");
  rlines->add_option("--point", point, "Only lines through this point");
  bool list = false;
  poles->add_flag("--list", list, "List every pole and line in text output");
  int index = 0, grid = 1;
  std::string verify;
  bool all = false;
  variety->add_option("--index", index, "Use d_i for this i (1-based)");
  variety->add_option("--grid", grid, "Rational verification grid radius");
  variety->add_option("--verify-field", verify, "Also verify after reduction to gf(p)");
  variety->add_flag("--all", all, "Report every candidate i");
  ConstructArgs ca;
  construct->add_option("kind", ca.kind, "cch, extend, expansion, join or sum")->required();
  construct->add_option("--extra", ca.extra, "Added dimensions for extend");
  construct->add_option("--bilinear", ca.bilinear, "Bilinear form such as 23+45");
  construct->add_option("--direction", ca.direction, "Expansion direction (1-based)");
  construct->add_option("--second", ca.second, "Second form: file or term list");
  construct->add_option("--alpha", ca.alpha);
  construct->add_option("--beta", ca.beta);
  std::string check_name;
  check->add_option("name", check_name, "lines-are-poles, spread, normal-spread, polar, cone, residue, swap, "
                                        "radical-lines, summands or hexagon")
      ->required();
  int table = 0;
  bool render = false;
  tables->add_option("--table", table, "2, 3, 4 or 5 (default all)")->check(CLI::Range(2, 5));
  tables->add_flag("--render", render, "Print the transcription as well");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    if (*catalog) return cmd_catalog(c, out);
    if (*eval) return cmd_eval(c, xyz, out);
    if (*radical) return cmd_radical(c, out);
    if (*matrix) return cmd_matrix(c, point, out);
    if (*poles) return cmd_poles(c, list, out);
    if (*variety) return cmd_variety(c, index, grid, verify, all, out);
    if (*rlines) return cmd_radical_lines(c, point, out);
    if (*construct) return cmd_construct(c, ca, out);
    if (*check) return cmd_check(c, check_name, out);
    if (*fp) return cmd_fingerprint(c, out);
    if (*tables) return cmd_tables(c, table, render, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ConditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_usage;
}

}  // namespace trigeom
