#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/multipoly.hpp"
#include "trigeom/projective.hpp"
#include "trigeom/skewlinalg.hpp"
#include "trigeom/triform.hpp"

namespace trigeom {

// M_u with entry (j, k) = sum_i u_i h(e_i, e_j, e_k), in variables u_1..u_n.
PolyMatrix symbolic_matrix(const TriForm& h);
// The same matrix at a concrete u.
ScalarMatrix contraction_matrix(const TriForm& h, const Vector& u);

struct PointDegree {
  int degree;
  std::vector<Vector> radical_basis;  // Rad(chi_u), reduced row echelon
};
PointDegree point_degree(const TriForm& h, const Vector& u);

// Budget on p^n for exhaustive enumeration. The default is 10^7, or the
// value of TRIGEOM_BUDGET when set.
std::uint64_t default_budget();
void check_budget(const FieldSpec& field, int n, std::uint64_t budget);

struct EnumOptions {
  std::uint64_t budget = default_budget();
  unsigned threads = 1;
};

// Form over GF(p) with a dense coefficient cube, for the enumeration loops.
class FpForm {
 public:
  explicit FpForm(const TriForm& h);

  const ProjectiveSpace& space() const { return space_; }
  int dim() const { return n_; }
  std::uint32_t coeff(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }

  std::vector<FpVector> contraction(const FpVector& u) const;
  int degree(const FpVector& u) const;
  std::vector<FpVector> radical(const FpVector& u) const;
  // h(e_i, x, y) = 0 for every i.
  bool annihilates(const FpVector& x, const FpVector& y) const;

 private:
  int n_;
  ProjectiveSpace space_;
  std::vector<std::uint32_t> c_;
};

struct PoleRecord {
  std::uint64_t index;
  FpVector point;
  int degree;
  std::vector<FpVector> radical;
};

struct PoleReport {
  FieldSpec field;
  int n = 0;
  std::vector<PoleRecord> records;  // every projective point, by index
  std::map<int, std::uint64_t> histogram;

  std::vector<std::uint64_t> pole_indices() const;
};

PoleReport enumerate_poles(const TriForm& h, const EnumOptions& opts = {});

struct PluckerLine {
  Vector x;
  Vector y;
  Vector wedge;

  friend bool operator==(const PluckerLine& a, const PluckerLine& b) {
    return a.x == b.x && a.y == b.y;
  }
};
PluckerLine plucker_line(const ProjectiveSpace& space, const FpLine& l);
// Canonical line through two independent vectors over any field.
PluckerLine plucker_line(const Vector& a, const Vector& b);

// The n linear equations sum_{j<k} h(e_i, e_j, e_k) w_jk = 0 on C(n, 2)
// Plücker variables and a basis of their solution space.
struct UpperRadicalSystem {
  ScalarMatrix equations;
  ScalarMatrix reduced;  // nonzero rows of the reduced echelon form
  std::vector<Vector> solutions;
};
UpperRadicalSystem upper_radical_system(const TriForm& h);

// Lines [u, y] with y in Rad(chi_u), one per point of Rad(chi_u)/<u>.
std::vector<FpLine> lines_through_point(const FpForm& f, const FpVector& u);
std::vector<PluckerLine> lines_through_point(const TriForm& h, const Vector& u);

// Every line of the upper radical, sorted canonically.
std::vector<FpLine> enumerate_upper_radical(const TriForm& h, const EnumOptions& opts = {});
std::vector<FpLine> upper_radical_from_poles(const FpForm& f, const PoleReport& report,
                                             unsigned threads = 1);

enum class VarietyKind { hypersurface, all_points };

struct VarietyCandidate {
  std::size_t index;  // 0-based
  MultiPoly d;
  unsigned alpha;
  MultiPoly g;
  bool accepted;
  std::string reason;
};

struct VarietyResult {
  VarietyKind kind;
  std::size_t index;  // 0-based, meaningful for hypersurfaces
  std::optional<MultiPoly> d;
  unsigned alpha = 0;
  std::optional<MultiPoly> g;
  std::optional<FieldSpec> verified_over;
  std::vector<VarietyCandidate> candidates;
};

struct VarietyOptions {
  std::optional<std::size_t> index;  // 0-based; default tries all in order
  // Extra prime to reduce a rational form to before verifying.
  std::optional<FieldSpec> verify_field;
  int grid = 1;  // rational forms: check integer points in [-grid, grid]^n
  bool all_candidates = false;
  std::uint64_t budget = default_budget();
};

VarietyResult pole_variety(const TriForm& h, const VarietyOptions& opts = {});

// Copy of a rational form reduced modulo p; throws if a denominator
// vanishes mod p.
TriForm reduce_form(const TriForm& h, const FieldSpec& target);
MultiPoly reduce_poly(const MultiPoly& f, const FieldSpec& target);

// Pole set over GF(p) compared pointwise with the zero set of g; returns
// the first disagreeing point index, if any.
std::optional<std::uint64_t> variety_mismatch(const TriForm& h, const MultiPoly& g,
                                              std::uint64_t budget = default_budget());

}  // namespace trigeom
