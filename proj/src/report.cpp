#include "trigeom/report.hpp"

#include <sstream>

namespace trigeom {

namespace {

Json coords(const ProjectiveSpace& space, const FpVector& v) {
  Json a = Json::array();
  for (int i = 0; i < space.dim(); ++i) a.push_back(v.c[static_cast<std::size_t>(i)]);
  return a;
}

std::string coords_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

}  // namespace

Json point_json(const ProjectiveSpace& space, const FpVector& v) { return coords(space, v); }

Json variety_json(const VarietyResult& v) {
  Json j;
  if (v.kind == VarietyKind::all_points) {
    j["i"] = nullptr;
    j["g"] = nullptr;
  } else {
    j["i"] = v.index + 1;
    j["g"] = v.g->to_string("x");
  }
  j["verified"] = v.verified_over ? Json(v.verified_over->to_string()) : Json(nullptr);
  if (v.kind == VarietyKind::hypersurface) {
    j["d"] = v.d->to_string("x");
    j["alpha"] = v.alpha;
  }
  if (v.candidates.size() > 1) {
    Json c = Json::array();
    for (const auto& cand : v.candidates)
      c.push_back({{"i", cand.index + 1},
                   {"g", cand.g.to_string("x")},
                   {"accepted", cand.accepted},
                   {"reason", cand.reason}});
    j["candidates"] = c;
  }
  return j;
}

std::string variety_text(const VarietyResult& v) {
  std::ostringstream out;
  if (v.kind == VarietyKind::all_points) {
    out << "poles: all points of PG(V)\n";
  } else {
    out << "i = " << v.index + 1 << "\n";
    out << "d_i = " << v.d->to_string("x") << "\n";
    out << "u_i power stripped: " << v.alpha << "\n";
    out << "g = " << v.g->to_string("x") << "\n";
  }
  if (v.verified_over) out << "verified over " << v.verified_over->to_string() << "\n";
  if (v.candidates.size() > 1)
    for (const auto& c : v.candidates)
      out << "  candidate i = " << c.index + 1 << ": " << (c.accepted ? "accepted" : "rejected")
          << (c.reason.empty() ? "" : " (" + c.reason + ")") << "\n";
  return out.str();
}

Json poles_json(const std::string& form, const ProjectiveSpace& space, const PoleReport& report,
                const std::vector<FpLine>& lines, const std::optional<VarietyResult>& variety) {
  Json j;
  j["form"] = form;
  j["field"] = report.field.to_string();
  j["n"] = report.n;
  Json poles = Json::array();
  for (const auto& r : report.records)
    if (r.degree > 0) poles.push_back({{"point", coords(space, r.point)}, {"degree", r.degree}});
  j["poles"] = poles;
  Json hist = Json::object();
  for (const auto& [d, c] : report.histogram) hist[std::to_string(d)] = c;
  j["histogram"] = hist;
  Json ur = Json::array();
  for (const auto& l : lines) {
    const PluckerLine pl = plucker_line(space, l);
    Json w = Json::array();
    for (const auto& s : pl.wedge) w.push_back(std::stoll(s.to_string()));
    ur.push_back({{"basis", Json::array({coords(space, space.point(l.first)), coords(space, space.point(l.second))})},
                  {"plucker", w}});
  }
  j["upper_radical"] = ur;
  j["variety"] = variety ? variety_json(*variety) : Json(nullptr);
  return j;
}

std::string poles_text(const std::string& form, const ProjectiveSpace& space, const PoleReport& report,
                       const std::vector<FpLine>& lines, const std::optional<VarietyResult>& variety,
                       bool list) {
  std::ostringstream out;
  std::uint64_t poles = 0;
  for (const auto& [d, c] : report.histogram)
    if (d > 0) poles += c;
  out << "form " << form << " over " << report.field.to_string() << ", n = " << report.n << "\n";
  out << "points " << report.records.size() << ", poles " << poles << ", lines " << lines.size() << "\n";
  out << "degree histogram:";
  for (const auto& [d, c] : report.histogram) out << " " << d << ":" << c;
  out << "\n";
  if (variety) out << variety_text(*variety);
  if (list) {
    for (const auto& r : report.records)
      if (r.degree > 0) out << "pole " << coords_text(space.to_scalars(r.point)) << " degree " << r.degree << "\n";
    for (const auto& l : lines) out << "line " << describe_line(space, l) << "\n";
  }
  return out.str();
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["form"] = v.form;
  j["field"] = v.field;
  j["pass"] = v.pass;
  j["witnesses"] = v.witnesses;
  Json stats = Json::object();
  for (const auto& [k, x] : v.stats) stats[k] = x;
  j["stats"] = stats;
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << v.check << " " << v.form << " " << v.field << ": " << (v.pass ? "pass" : "FAIL") << "\n";
  for (const auto& [k, x] : v.stats) out << "  " << k << " = " << x << "\n";
  for (const auto& w : v.witnesses) out << "  witness: " << w << "\n";
  return out.str();
}

Json fingerprint_json(const Fingerprint& f) {
  Json j;
  j["rank"] = f.rank;
  j["poles"] = f.pole_count;
  Json d = Json::object();
  for (const auto& [k, c] : f.degree_histogram) d[std::to_string(k)] = c;
  j["degree_histogram"] = d;
  j["lines"] = f.line_count;
  Json l = Json::object();
  for (const auto& [k, c] : f.lines_per_point_histogram) l[std::to_string(k)] = c;
  j["lines_per_point_histogram"] = l;
  j["variety_degree"] = f.variety_degree;
  return j;
}

Json table_json(const TableReport& r) {
  Json j;
  j["table"] = r.table;
  j["rows"] = r.rows_checked;
  j["comparisons"] = r.comparisons;
  j["pass"] = r.diffs.empty();
  Json diffs = Json::array();
  for (const auto& d : r.diffs)
    diffs.push_back({{"row", d.row}, {"context", d.context}, {"cell", d.cell}, {"expected", d.expected},
                     {"actual", d.actual}});
  j["diffs"] = diffs;
  return j;
}

std::string table_text(const TableReport& r) {
  std::ostringstream out;
  out << "table " << r.table << ": " << r.rows_checked << " rows, " << r.comparisons << " comparisons, "
      << r.diffs.size() << " differences\n";
  for (const auto& d : r.diffs)
    out << "  " << d.row << " [" << d.context << "] " << d.cell << ": table has " << d.expected << ", computed "
        << d.actual << "\n";
  return out.str();
}

}  // namespace trigeom
