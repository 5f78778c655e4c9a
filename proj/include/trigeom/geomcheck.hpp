#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigeom/constructions.hpp"
#include "trigeom/poles.hpp"

namespace trigeom {

// The geometry of poles over GF(p): poles as points, upper-radical lines.
struct IncidenceStructure {
  explicit IncidenceStructure(ProjectiveSpace s) : space(std::move(s)) {}

  ProjectiveSpace space;
  std::string form;        // catalog label, or the form's term list
  std::optional<std::string> label;
  PoleReport report;       // every projective point with its degree
  std::vector<std::uint64_t> points;  // pole indices, ascending
  std::vector<FpLine> lines;          // sorted
  std::vector<std::vector<std::uint64_t>> line_points;  // point indices on each line
  std::vector<std::vector<std::uint32_t>> point_lines;  // by position in `points`

  // Position of a point index in `points`, or -1 when it is not a pole.
  std::int64_t position(std::uint64_t index) const;
  bool has_line(const FpLine& l) const;

 private:
  friend IncidenceStructure build_geometry(const TriForm& h, const EnumOptions& opts);
  std::vector<std::int64_t> position_;
};

IncidenceStructure build_geometry(const TriForm& h, const EnumOptions& opts = {});

struct Verdict {
  std::string check;
  std::string form;
  std::string field;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::int64_t>> stats;

  void fail(std::string witness);
  std::optional<std::int64_t> stat(const std::string& key) const;
};

std::string describe_point(const ProjectiveSpace& space, std::uint64_t index);
std::string describe_line(const ProjectiveSpace& space, const FpLine& l);

// Every point of every line is a pole.
Verdict lines_are_poles_check(const IncidenceStructure& g);

struct SpreadResult {
  bool is_spread;
  std::map<std::uint64_t, std::uint64_t> cover_histogram;  // lines per point -> points
};
SpreadResult spread_check(const IncidenceStructure& g);
SpreadResult spread_check(const ProjectiveSpace& space, const std::vector<FpLine>& lines);
// Requires a spread; throws InvalidArgument otherwise.
Verdict normal_spread_check(const IncidenceStructure& g);
Verdict normal_spread_check(const ProjectiveSpace& space, const std::vector<FpLine>& lines);

// Exact equality of the line set with an expected set.
Verdict line_set_check(const IncidenceStructure& g, std::vector<FpLine> expected, std::string name);
// Lines of PG(n-1, p) meeting every given subspace (each given by a basis).
std::vector<FpLine> lines_meeting(const ProjectiveSpace& space, const std::vector<std::vector<FpVector>>& subspaces);
// Basis of the subspace u_i = 0 for i in `zero` (0-based).
std::vector<FpVector> coordinate_subspace(const ProjectiveSpace& space, const std::vector<int>& zero);

struct PolarComponent {
  BilinearAltForm beta;               // on the whole space
  std::vector<FpVector> carrier;      // basis
  std::optional<std::vector<FpVector>> apex;
};
// Lines in a carrier, totally isotropic for beta, meeting the apex when
// given; the union over components must equal the upper radical.
std::vector<FpLine> polar_lines(const ProjectiveSpace& space, const PolarComponent& c);
Verdict polar_space_check(const IncidenceStructure& g, const std::vector<PolarComponent>& components);

// The carriers, forms and apexes describing the lines for T5, T6 and T8 (n = 7).
std::vector<PolarComponent> catalog_polar_components(const ProjectiveSpace& space, const std::string& label);
// Uses catalog_polar_components; for T8 also requires every pole to have degree 4.
Verdict polar_space_check(const IncidenceStructure& g);
// T1: the lines meeting [Rad(h)] = [<e_4, ..., e_n>].
Verdict radical_lines_check(const IncidenceStructure& g);
// T3 (n = 6): the lines meeting both [<e_1, e_2, e_3>] and [<e_4, e_5, e_6>].
Verdict summand_lines_check(const IncidenceStructure& g);

// T7: cone with plane vertex over a hyperbolic quadric.
Verdict cone_structure_check(const IncidenceStructure& g);
// T11: poles u_1 = u_4 = 0, one point of degree 4 at [e_7], planes through it
// partitioning the remaining poles.
Verdict residue_partition_check(const IncidenceStructure& g);
// T4 (n = 6): lines {[a+b, w(a)]} together with the lines of <e_4, e_5, e_6>.
Verdict swap_line_check(const IncidenceStructure& g);

struct HexagonStats {
  std::uint64_t points;
  std::uint64_t lines;
  std::int64_t points_per_line;  // -1 when not constant
  std::int64_t lines_per_point;
  std::int64_t girth;            // -1 when acyclic
  std::int64_t diameter;         // -1 when disconnected
};
HexagonStats incidence_stats(const IncidenceStructure& g, unsigned threads = 1);
// T9 / T12 only; passes when the statistics are those of a generalized
// hexagon of order (p, p).
Verdict hexagon_check(const IncidenceStructure& g, unsigned threads = 1);

struct Fingerprint {
  int rank;
  std::uint64_t pole_count;
  std::map<int, std::uint64_t> degree_histogram;
  std::uint64_t line_count;
  std::map<std::uint64_t, std::uint64_t> lines_per_point_histogram;
  // Degree of the common cofactor of the sub-Pfaffians for odd n; -1 when
  // every point is a pole.
  int variety_degree;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const TriForm& h, const EnumOptions& opts = {});
std::string to_string(const Fingerprint& f);

}  // namespace trigeom
