#include "trigeom/geomcheck.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "trigeom/errors.hpp"

namespace trigeom {

std::int64_t IncidenceStructure::position(std::uint64_t index) const {
  return index < position_.size() ? position_[index] : -1;
}

bool IncidenceStructure::has_line(const FpLine& l) const {
  return std::binary_search(lines.begin(), lines.end(), l);
}

IncidenceStructure build_geometry(const TriForm& h, const EnumOptions& opts) {
  PoleReport report = enumerate_poles(h, opts);
  const FpForm f(h);
  IncidenceStructure g(f.space());
  g.form = h.label() ? *h.label() : h.to_string();
  g.label = h.label();
  g.lines = upper_radical_from_poles(f, report, opts.threads);
  g.report = std::move(report);
  g.points = g.report.pole_indices();
  g.position_.assign(g.space.point_count(), -1);
  for (std::size_t i = 0; i < g.points.size(); ++i) g.position_[g.points[i]] = static_cast<std::int64_t>(i);
  g.point_lines.resize(g.points.size());
  g.line_points.reserve(g.lines.size());
  for (std::size_t li = 0; li < g.lines.size(); ++li) {
    g.line_points.push_back(g.space.points_on_line(g.lines[li]));
    for (std::uint64_t p : g.line_points.back()) {
      const std::int64_t pos = g.position_[p];
      if (pos >= 0) g.point_lines[pos].push_back(static_cast<std::uint32_t>(li));
    }
  }
  return g;
}

void Verdict::fail(std::string witness) {
  pass = false;
  if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
}

std::optional<std::int64_t> Verdict::stat(const std::string& key) const {
  for (const auto& [k, v] : stats)
    if (k == key) return v;
  return std::nullopt;
}

std::string describe_point(const ProjectiveSpace& space, std::uint64_t index) {
  const FpVector v = space.point(index);
  std::string out = "(";
  for (int i = 0; i < space.dim(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.c[i]);
  }
  return out + ")";
}

std::string describe_line(const ProjectiveSpace& space, const FpLine& l) {
  return "[" + describe_point(space, l.first) + "," + describe_point(space, l.second) + "]";
}

namespace {

Verdict make_verdict(const IncidenceStructure& g, std::string check) {
  Verdict v;
  v.check = std::move(check);
  v.form = g.form;
  v.field = g.report.field.to_string();
  return v;
}

void require_label(const IncidenceStructure& g, std::initializer_list<const char*> allowed, const char* check) {
  if (g.label)
    for (const char* a : allowed)
      if (*g.label == a) return;
  throw InvalidArgument(std::string(check) + " does not apply to form " + g.form);
}

std::vector<std::uint64_t> span_points(const ProjectiveSpace& space, const std::vector<FpVector>& basis) {
  return space.points_of_span(basis);
}

FpVector unit(int i) {
  FpVector v;
  v.c[i] = 1;
  return v;
}

bool meets(const ProjectiveSpace& space, const std::vector<FpVector>& sub_rref, const FpVector& a, const FpVector& b) {
  std::vector<FpVector> rows = sub_rref;
  rows.push_back(a);
  rows.push_back(b);
  return space.rank(rows) < sub_rref.size() + 2;
}

}  // namespace

Verdict lines_are_poles_check(const IncidenceStructure& g) {
  Verdict v = make_verdict(g, "lines-are-poles");
  for (std::size_t li = 0; li < g.lines.size(); ++li)
    for (std::uint64_t p : g.line_points[li])
      if (g.position(p) < 0) v.fail("point " + describe_point(g.space, p) + " of line " + describe_line(g.space, g.lines[li]) + " is not a pole");
  v.stats = {{"lines", static_cast<std::int64_t>(g.lines.size())}};
  return v;
}

SpreadResult spread_check(const ProjectiveSpace& space, const std::vector<FpLine>& lines) {
  std::vector<std::uint64_t> cover(space.point_count(), 0);
  for (const auto& l : lines)
    for (std::uint64_t p : space.points_on_line(l)) ++cover[p];
  SpreadResult r{true, {}};
  for (std::uint64_t c : cover) {
    ++r.cover_histogram[c];
    if (c != 1) r.is_spread = false;
  }
  return r;
}

SpreadResult spread_check(const IncidenceStructure& g) { return spread_check(g.space, g.lines); }

Verdict normal_spread_check(const ProjectiveSpace& space, const std::vector<FpLine>& lines) {
  if (!spread_check(space, lines).is_spread) throw InvalidArgument("normality is only defined for spreads");
  Verdict v;
  v.check = "normal-spread";
  v.field = FieldSpec::prime(space.field().p()).to_string();
  const std::size_t count = lines.size();
  std::vector<std::int64_t> line_of(space.point_count(), -1);
  for (std::size_t i = 0; i < count; ++i)
    for (std::uint64_t p : space.points_on_line(lines[i])) line_of[p] = static_cast<std::int64_t>(i);
  std::vector<bool> done(count * count, false);
  std::int64_t spans = 0;
  for (std::size_t i = 0; i < count && v.pass; ++i)
    for (std::size_t j = i + 1; j < count && v.pass; ++j) {
      if (done[i * count + j]) continue;
      const auto a = space.line_basis(lines[i]), b = space.line_basis(lines[j]);
      const auto sigma = space.rref({a[0], a[1], b[0], b[1]});
      ++spans;
      // The spread lines through the points of sigma must all lie in sigma.
      std::vector<std::size_t> inside;
      for (std::uint64_t p : span_points(space, sigma)) {
        const auto l = static_cast<std::size_t>(line_of[p]);
        const auto lb = space.line_basis(lines[l]);
        if (!space.in_span(sigma, lb[0]) || !space.in_span(sigma, lb[1])) {
          v.fail("span of " + describe_line(space, lines[i]) + " and " + describe_line(space, lines[j]) +
                 " contains " + describe_point(space, p) + " whose spread line " + describe_line(space, lines[l]) +
                 " leaves it");
          break;
        }
        inside.push_back(l);
      }
      std::sort(inside.begin(), inside.end());
      inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
      for (std::size_t x : inside)
        for (std::size_t y : inside) done[x * count + y] = true;
    }
  v.stats = {{"lines", static_cast<std::int64_t>(count)}, {"solids", spans}};
  return v;
}

Verdict normal_spread_check(const IncidenceStructure& g) {
  Verdict v = normal_spread_check(g.space, g.lines);
  v.form = g.form;
  return v;
}

Verdict line_set_check(const IncidenceStructure& g, std::vector<FpLine> expected, std::string name) {
  Verdict v = make_verdict(g, std::move(name));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::vector<FpLine> missing, extra;
  std::set_difference(expected.begin(), expected.end(), g.lines.begin(), g.lines.end(), std::back_inserter(missing));
  std::set_difference(g.lines.begin(), g.lines.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  for (const auto& l : missing) v.fail("expected line " + describe_line(g.space, l) + " is not in the upper radical");
  for (const auto& l : extra) v.fail("line " + describe_line(g.space, l) + " of the upper radical is not expected");
  v.stats = {{"expected", static_cast<std::int64_t>(expected.size())},
             {"lines", static_cast<std::int64_t>(g.lines.size())},
             {"missing", static_cast<std::int64_t>(missing.size())},
             {"extra", static_cast<std::int64_t>(extra.size())}};
  return v;
}

std::vector<FpLine> lines_meeting(const ProjectiveSpace& space, const std::vector<std::vector<FpVector>>& subspaces) {
  std::vector<std::vector<FpVector>> reduced;
  for (const auto& s : subspaces) reduced.push_back(space.rref(s));
  std::vector<FpLine> out;
  for (std::uint64_t i = 0; i < space.line_count(); ++i) {
    const FpLine l = space.line(i);
    const auto b = space.line_basis(l);
    if (std::all_of(reduced.begin(), reduced.end(), [&](const auto& s) { return meets(space, s, b[0], b[1]); }))
      out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpVector> coordinate_subspace(const ProjectiveSpace& space, const std::vector<int>& zero) {
  std::vector<FpVector> basis;
  for (int i = 0; i < space.dim(); ++i)
    if (std::find(zero.begin(), zero.end(), i) == zero.end()) basis.push_back(unit(i));
  return basis;
}

std::vector<FpLine> polar_lines(const ProjectiveSpace& space, const PolarComponent& c) {
  const PrimeField& f = space.field();
  if (c.beta.dim() != space.dim()) throw DimensionError("bilinear form dimension does not match the space");
  if (c.beta.field() != FieldSpec::prime(f.p())) throw FieldMismatch();
  const auto carrier = space.rref(c.carrier);
  if (carrier.size() != c.carrier.size()) throw InvalidArgument("carrier basis is dependent");
  std::optional<std::vector<FpVector>> apex;
  if (c.apex) apex = space.rref(*c.apex);
  std::vector<std::pair<std::array<int, 2>, std::uint32_t>> beta;
  for (const auto& [p, s] : c.beta.coeffs()) beta.emplace_back(p, s.residue());
  auto isotropic = [&](const FpVector& x, const FpVector& y) {
    std::uint32_t s = 0;
    for (const auto& [p, coef] : beta)
      s = f.add(s, f.mul(coef, f.sub(f.mul(x.c[p[0]], y.c[p[1]]), f.mul(x.c[p[1]], y.c[p[0]]))));
    return s == 0;
  };
  const int k = static_cast<int>(carrier.size());
  std::vector<FpLine> out;
  if (k < 2) return out;
  const ProjectiveSpace sub(k, f.p());
  auto lift = [&](const FpVector& r) {
    FpVector v;
    for (int t = 0; t < k; ++t)
      if (r.c[t])
        for (int j = 0; j < space.dim(); ++j)
          v.c[j] = static_cast<std::uint16_t>(f.add(v.c[j], f.mul(r.c[t], carrier[t].c[j])));
    return v;
  };
  for (std::uint64_t i = 0; i < sub.line_count(); ++i) {
    const auto b = sub.line_basis(sub.line(i));
    const FpVector x = lift(b[0]), y = lift(b[1]);
    if (!isotropic(x, y)) continue;
    if (apex && !meets(space, *apex, x, y)) continue;
    out.push_back(space.line_through(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict polar_space_check(const IncidenceStructure& g, const std::vector<PolarComponent>& components) {
  std::vector<FpLine> expected;
  for (const auto& c : components) {
    const auto part = polar_lines(g.space, c);
    expected.insert(expected.end(), part.begin(), part.end());
  }
  return line_set_check(g, std::move(expected), "polar-space");
}

std::vector<PolarComponent> catalog_polar_components(const ProjectiveSpace& space, const std::string& label) {
  if (space.dim() != 7) throw DimensionError("the polar descriptions need n = 7");
  const FieldSpec field = FieldSpec::prime(space.field().p());
  if (label == "T5")
    return {{BilinearAltForm::parse("23+47+56", 7, field), coordinate_subspace(space, {0}),
             coordinate_subspace(space, {0, 3, 4, 5})},
            {BilinearAltForm::parse("-17+23+56", 7, field), coordinate_subspace(space, {3}),
             coordinate_subspace(space, {0, 1, 2, 3})}};
  if (label == "T6")
    return {{BilinearAltForm::parse("25+36+47", 7, field), coordinate_subspace(space, {0}),
             coordinate_subspace(space, {0, 1, 2, 3})}};
  if (label == "T8")
    return {{BilinearAltForm::parse("23+45+67", 7, field), coordinate_subspace(space, {0}), std::nullopt}};
  throw InvalidArgument("no polar description for form " + label);
}

Verdict polar_space_check(const IncidenceStructure& g) {
  require_label(g, {"T5", "T6", "T8"}, "the polar space check");
  Verdict v = polar_space_check(g, catalog_polar_components(g.space, *g.label));
  if (*g.label == "T8")
    for (std::uint64_t p : g.points)
      if (g.report.records[p].degree != 4)
        v.fail("pole " + describe_point(g.space, p) + " has degree " + std::to_string(g.report.records[p].degree));
  return v;
}

Verdict radical_lines_check(const IncidenceStructure& g) {
  require_label(g, {"T1"}, "the radical line check");
  if (g.space.dim() < 4) throw DimensionError("the radical line check needs n >= 4");
  std::vector<int> zero{0, 1, 2};
  return line_set_check(g, lines_meeting(g.space, {coordinate_subspace(g.space, zero)}), "radical-lines");
}

Verdict summand_lines_check(const IncidenceStructure& g) {
  require_label(g, {"T3"}, "the summand line check");
  if (g.space.dim() != 6) throw DimensionError("the summand line check needs n = 6");
  return line_set_check(
      g, lines_meeting(g.space, {coordinate_subspace(g.space, {0, 1, 2}), coordinate_subspace(g.space, {3, 4, 5})}),
      "summand-lines");
}

Verdict cone_structure_check(const IncidenceStructure& g) {
  require_label(g, {"T7"}, "the cone check");
  if (g.space.dim() != 7) throw DimensionError("the cone check needs n = 7");
  Verdict v = make_verdict(g, "cone");
  const ProjectiveSpace& space = g.space;
  const PrimeField& f = space.field();
  const auto vertex = coordinate_subspace(space, {3, 4, 5, 6});
  std::vector<std::uint64_t> conic;
  for (std::uint64_t p : span_points(space, vertex)) {
    const FpVector u = space.point(p);
    if (f.mul(u.c[0], u.c[0]) == f.mul(u.c[1], u.c[2])) conic.push_back(p);
  }
  const auto vertex_points = span_points(space, vertex);
  auto is_conic = [&](std::uint64_t p) { return std::binary_search(conic.begin(), conic.end(), p); };
  auto in_vertex = [&](std::uint64_t p) { return std::binary_search(vertex_points.begin(), vertex_points.end(), p); };

  // (a) poles are the zero set of x5 x7 + x4 x6.
  std::int64_t degree4 = 0;
  for (const auto& r : g.report.records) {
    const FpVector& u = r.point;
    const bool on_cone = f.add(f.mul(u.c[4], u.c[6]), f.mul(u.c[3], u.c[5])) == 0;
    if (on_cone != (r.degree >= 1))
      v.fail("point " + describe_point(space, r.index) + (on_cone ? " on the cone is not a pole" : " off the cone is a pole"));
    // (b) degree-4 points are the conic points.
    if (r.degree == 4) ++degree4;
    if ((r.degree == 4) != is_conic(r.index))
      v.fail("point " + describe_point(space, r.index) + " has degree " + std::to_string(r.degree) +
             (is_conic(r.index) ? " but lies on the conic" : " but is off the conic"));
    // (d) poles off the vertex plane have degree 2 and their plane meets the conic.
    if (r.degree >= 1 && !in_vertex(r.index)) {
      if (r.degree != 2) {
        v.fail("pole " + describe_point(space, r.index) + " off the vertex plane has degree " + std::to_string(r.degree));
        continue;
      }
      // pi_p = [Rad(chi_p)] meets the vertex plane in a single conic point.
      std::vector<std::uint64_t> meet;
      for (std::uint64_t q : span_points(space, r.radical))
        if (in_vertex(q)) meet.push_back(q);
      if (meet.size() != 1 || !is_conic(meet[0]))
        v.fail("plane of pole " + describe_point(space, r.index) + " does not meet the vertex plane in one conic point");
    }
  }

  // (c) lines of the upper radical lie in the vertex plane or in the plane
  // pi_p of one of their poles p off the vertex plane; every line of the
  // vertex plane is present.
  for (std::size_t a = 0; a < vertex_points.size(); ++a)
    for (std::size_t b = a + 1; b < vertex_points.size(); ++b) {
      const FpLine l = space.line_through(space.point(vertex_points[a]), space.point(vertex_points[b]));
      if (!g.has_line(l)) v.fail("line " + describe_line(space, l) + " of the vertex plane is not in the upper radical");
    }
  for (std::size_t li = 0; li < g.lines.size(); ++li) {
    const auto& pts = g.line_points[li];
    const auto off = std::find_if(pts.begin(), pts.end(), [&](std::uint64_t p) { return !in_vertex(p); });
    if (off == pts.end()) continue;
    const auto& rad = g.report.records[*off].radical;
    const auto basis = space.line_basis(g.lines[li]);
    if (!space.in_span(rad, basis[0]) || !space.in_span(rad, basis[1]))
      v.fail("line " + describe_line(space, g.lines[li]) + " leaves the plane of its pole " + describe_point(space, *off));
  }
  v.stats = {{"poles", static_cast<std::int64_t>(g.points.size())},
             {"conic_points", static_cast<std::int64_t>(conic.size())},
             {"degree4_points", degree4},
             {"lines", static_cast<std::int64_t>(g.lines.size())}};
  return v;
}

Verdict residue_partition_check(const IncidenceStructure& g) {
  require_label(g, {"T11_1", "T11_2"}, "the residue partition check");
  if (g.space.dim() != 7) throw DimensionError("the residue partition check needs n = 7");
  Verdict v = make_verdict(g, "residue-partition");
  const ProjectiveSpace& space = g.space;
  const std::uint64_t apex = space.index_of(unit(6));
  std::int64_t degree4 = 0;
  std::map<std::vector<std::uint64_t>, std::int64_t> planes;
  for (const auto& r : g.report.records) {
    const bool expected_pole = r.point.c[0] == 0 && r.point.c[3] == 0;
    if (expected_pole != (r.degree >= 1))
      v.fail("point " + describe_point(space, r.index) + (expected_pole ? " with u1=u4=0 is not a pole" : " is a pole off u1=u4=0"));
    if (r.degree == 4) {
      ++degree4;
      if (r.index != apex) v.fail("point " + describe_point(space, r.index) + " has degree 4");
    }
    if (r.degree < 1 || r.index == apex) continue;
    const auto plane = span_points(space, r.radical);
    if (plane.size() != space.field().p() * space.field().p() + space.field().p() + 1 ||
        !std::binary_search(plane.begin(), plane.end(), apex)) {
      v.fail("pole " + describe_point(space, r.index) + " does not span a plane through [e7]");
      continue;
    }
    ++planes[plane];
  }
  if (g.report.records[apex].degree != 4) v.fail("[e7] has degree " + std::to_string(g.report.records[apex].degree));
  // Each plane must be reported by exactly its own p^2 + p residue points.
  const std::int64_t per_plane = static_cast<std::int64_t>(space.field().p()) * (space.field().p() + 1);
  std::int64_t covered = 0;
  for (const auto& [plane, count] : planes) {
    covered += count;
    if (count != per_plane) {
      std::string pts;
      for (std::uint64_t p : plane) pts += describe_point(space, p);
      v.fail("plane " + pts + " is the plane of " + std::to_string(count) + " poles instead of " + std::to_string(per_plane));
    }
  }
  v.stats = {{"poles", static_cast<std::int64_t>(g.points.size())},
             {"degree4_points", degree4},
             {"planes", static_cast<std::int64_t>(planes.size())},
             {"residue_points", covered}};
  return v;
}

Verdict swap_line_check(const IncidenceStructure& g) {
  require_label(g, {"T4"}, "the swap line check");
  if (g.space.dim() != 6) throw DimensionError("the swap line check needs n = 6");
  const ProjectiveSpace& space = g.space;
  const PrimeField& f = space.field();
  const std::uint32_t p = f.p();
  std::vector<FpLine> expected;
  const auto v1 = coordinate_subspace(space, {0, 1, 2});
  const auto v1_points = span_points(space, v1);
  for (std::size_t a = 0; a < v1_points.size(); ++a)
    for (std::size_t b = a + 1; b < v1_points.size(); ++b)
      expected.push_back(space.line_through(space.point(v1_points[a]), space.point(v1_points[b])));
  const std::uint32_t cube = p * p * p;
  for (std::uint32_t ca = 1; ca < cube; ++ca)
    for (std::uint32_t cb = 0; cb < cube; ++cb) {
      FpVector x, w;
      for (int i = 0, a = static_cast<int>(ca), b = static_cast<int>(cb); i < 3; ++i, a /= p, b /= p) {
        x.c[i] = static_cast<std::uint16_t>(a % p);
        x.c[i + 3] = static_cast<std::uint16_t>(b % p);
        w.c[i + 3] = static_cast<std::uint16_t>(a % p);
      }
      expected.push_back(space.line_through(x, w));
    }
  Verdict v = line_set_check(g, std::move(expected), "swap-lines");
  std::int64_t deg3 = 0, deg1 = 0;
  for (const auto& r : g.report.records) {
    const bool in_v1 = std::binary_search(v1_points.begin(), v1_points.end(), r.index);
    if (r.degree != (in_v1 ? 3 : 1))
      v.fail("point " + describe_point(space, r.index) + " has degree " + std::to_string(r.degree));
    (r.degree == 3 ? deg3 : deg1) += 1;
  }
  v.stats.emplace_back("degree1_points", deg1);
  v.stats.emplace_back("degree3_points", deg3);
  return v;
}

HexagonStats incidence_stats(const IncidenceStructure& g, unsigned threads) {
  HexagonStats s{g.points.size(), g.lines.size(), -1, -1, -1, -1};
  const std::size_t np = g.points.size(), nl = g.lines.size(), nv = np + nl;
  // Compressed adjacency of the bipartite incidence graph: points first.
  std::vector<std::uint32_t> offset(nv + 1, 0), adj;
  for (std::size_t i = 0; i < np; ++i) {
    adj.insert(adj.end(), g.point_lines[i].begin(), g.point_lines[i].end());
    for (std::size_t k = offset[i]; k < adj.size(); ++k) adj[k] += static_cast<std::uint32_t>(np);
    offset[i + 1] = static_cast<std::uint32_t>(adj.size());
  }
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::uint64_t p : g.line_points[l]) adj.push_back(static_cast<std::uint32_t>(g.position(p)));
    offset[np + l + 1] = static_cast<std::uint32_t>(adj.size());
  }
  auto constant_degree = [&](std::size_t from, std::size_t to) -> std::int64_t {
    if (from == to) return -1;
    const std::uint32_t d = offset[from + 1] - offset[from];
    for (std::size_t v = from; v < to; ++v)
      if (offset[v + 1] - offset[v] != d) return -1;
    return d;
  };
  s.lines_per_point = constant_degree(0, np);
  s.points_per_line = constant_degree(np, nv);
  if (nv == 0) return s;

  struct Partial {
    std::int64_t girth = -1;
    std::int64_t diameter = 0;
    bool connected = true;
  };
  // Breadth-first search from 64 sources at once, one bit per source. The
  // graph is bipartite, so a vertex first reached at level L along two
  // distinct edges closes a cycle of length 2L, and the shortest cycle
  // through a source is found this way.
  auto bfs_batches = [&](std::size_t first_batch, std::size_t last_batch, Partial& out) {
    std::vector<std::uint64_t> visited(nv), frontier(nv), next(nv);
    for (std::size_t batch = first_batch; batch < last_batch; ++batch) {
      const std::size_t begin = batch * 64, end = std::min(nv, begin + 64);
      const std::uint64_t all = end - begin == 64 ? ~0ULL : ((1ULL << (end - begin)) - 1);
      std::fill(visited.begin(), visited.end(), 0);
      std::fill(frontier.begin(), frontier.end(), 0);
      for (std::size_t s = begin; s < end; ++s) visited[s] = frontier[s] = 1ULL << (s - begin);
      for (std::int64_t level = 1;; ++level) {
        bool grew = false;
        for (std::size_t v = 0; v < nv; ++v) {
          std::uint64_t ones = 0, twos = 0;
          for (std::uint32_t k = offset[v]; k < offset[v + 1]; ++k) {
            const std::uint64_t f = frontier[adj[k]];
            twos |= ones & f;
            ones |= f;
          }
          const std::uint64_t fresh = ones & ~visited[v];
          next[v] = fresh;
          if (fresh) grew = true;
          if ((twos & fresh) && (out.girth < 0 || 2 * level < out.girth)) out.girth = 2 * level;
        }
        if (!grew) break;
        out.diameter = std::max(out.diameter, level);
        for (std::size_t v = 0; v < nv; ++v) visited[v] |= next[v];
        frontier.swap(next);
      }
      for (std::size_t v = 0; v < nv; ++v)
        if (visited[v] != all) out.connected = false;
    }
  };
  const std::size_t batches = (nv + 63) / 64;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batches)));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    bfs_batches(0, batches, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (batches + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t b = std::min(batches, t * chunk), e = std::min(batches, b + chunk);
      pool.emplace_back([&, t, b, e] { bfs_batches(b, e, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  bool connected = true;
  for (const auto& p : parts) {
    if (p.girth >= 0 && (s.girth < 0 || p.girth < s.girth)) s.girth = p.girth;
    s.diameter = std::max(s.diameter, p.diameter);
    connected = connected && p.connected;
  }
  if (!connected) s.diameter = -1;
  return s;
}

Verdict hexagon_check(const IncidenceStructure& g, unsigned threads) {
  require_label(g, {"T9", "T12"}, "the hexagon check");
  Verdict v = make_verdict(g, "hexagon");
  const HexagonStats s = incidence_stats(g, threads);
  const std::int64_t q = g.space.field().p();
  const std::int64_t count = (1 + q) * (1 + q * q + q * q * q * q);
  v.stats = {{"points", static_cast<std::int64_t>(s.points)},
             {"lines", static_cast<std::int64_t>(s.lines)},
             {"points_per_line", s.points_per_line},
             {"lines_per_point", s.lines_per_point},
             {"girth", s.girth},
             {"diameter", s.diameter}};
  auto expect = [&](const char* what, std::int64_t got, std::int64_t want) {
    if (got != want) v.fail(std::string(what) + " is " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  expect("point count", static_cast<std::int64_t>(s.points), count);
  expect("line count", static_cast<std::int64_t>(s.lines), count);
  expect("points per line", s.points_per_line, q + 1);
  expect("lines per point", s.lines_per_point, q + 1);
  expect("girth", s.girth, 12);
  expect("diameter", s.diameter, 6);
  return v;
}

Fingerprint fingerprint(const TriForm& h, const EnumOptions& opts) {
  const IncidenceStructure g = build_geometry(h, opts);
  Fingerprint fp{radical_and_rank(h).rank, g.points.size(), g.report.histogram, g.lines.size(), {}, -1};
  for (const auto& pl : g.point_lines) ++fp.lines_per_point_histogram[pl.size()];
  if (h.dim() % 2 == 1) {
    const PolyMatrix m = symbolic_matrix(h);
    for (std::size_t i = 0; i < static_cast<std::size_t>(h.dim()); ++i) {
      const MultiPoly d = pfaffian(principal_delete(m, i));
      if (!d.is_zero()) {
        fp.variety_degree = d.total_degree() - 1;
        break;
      }
    }
  }
  return fp;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream out;
  out << "rank=" << f.rank << " poles=" << f.pole_count << " degrees={";
  bool first = true;
  for (const auto& [d, c] : f.degree_histogram) out << (first ? "" : ",") << d << ":" << c, first = false;
  out << "} lines=" << f.line_count << " lines_per_point={";
  first = true;
  for (const auto& [d, c] : f.lines_per_point_histogram) out << (first ? "" : ",") << d << ":" << c, first = false;
  out << "} variety_degree=" << f.variety_degree;
  return out.str();
}

}  // namespace trigeom
