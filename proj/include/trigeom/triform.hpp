#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/skewlinalg.hpp"

namespace trigeom {

// Strictly increasing 0-based index triple i < j < k.
using Triple = std::array<int, 3>;

inline constexpr int kMaxFormDim = 12;

// Alternating trilinear form on K^n, stored on the basis e_i^e_j^e_k with
// i < j < k. Signed permutations are resolved at evaluation time.
class TriForm {
 public:
  TriForm(int n, const FieldSpec& field);

  int dim() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Triple, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Catalog type name ("T9", "T10_1", ...) when the form was built from the
  // catalog; preserved by pullback and scale.
  const std::optional<std::string>& label() const { return label_; }
  void set_label(std::optional<std::string> label) { label_ = std::move(label); }

  // Adds c * e^i ^ e^j ^ e^k for any distinct (i, j, k), sorting with sign.
  void add_term(int i, int j, int k, const Scalar& c);
  // h(e_i, e_j, e_k) for arbitrary indices.
  Scalar coefficient(int i, int j, int k) const;
  // Indices touched by some nonzero term.
  std::vector<int> support() const;

  // Compact "123+456+147"-style text with explicit coefficients where != 1.
  std::string to_string() const;

  friend bool operator==(const TriForm& a, const TriForm& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TriForm& a, const TriForm& b) { return !(a == b); }

 private:
  int n_;
  FieldSpec field_;
  std::map<Triple, Scalar> coeffs_;
  std::optional<std::string> label_;
};

enum class CatalogType { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10_1, T10_2, T11_1, T11_2, T12 };

std::string catalog_name(CatalogType t);
CatalogType parse_catalog_type(std::string_view name);
std::vector<CatalogType> all_catalog_types();
bool catalog_needs_parameter(CatalogType t);
int catalog_rank(CatalogType t);
// Human-readable row of the classification table.
std::string catalog_description(CatalogType t);
std::string catalog_condition(CatalogType t);

struct CatalogEntry {
  CatalogType type;
  std::optional<Scalar> parameter;
  int expected_rank;

  CatalogEntry(CatalogType t, std::optional<Scalar> param = std::nullopt);
};

// Whether (field, parameter) satisfies the entry's special condition.
bool catalog_condition_holds(const CatalogEntry& entry, const FieldSpec& field);

// The row's coefficient list embedded in dimension n without checking the
// special conditions (used to compare against formal transcriptions).
TriForm catalog_terms(const CatalogEntry& entry, int n, const FieldSpec& field);
// As catalog_terms, but throws ConditionViolation when the special condition
// fails and DimensionError when n is below the rank.
TriForm catalog_form(const CatalogEntry& entry, int n, const FieldSpec& field);

Scalar evaluate_form(const TriForm& h, const Vector& x, const Vector& y, const Vector& z);

struct RadicalRank {
  std::vector<Vector> radical_basis;
  int rank;
};
RadicalRank radical_and_rank(const TriForm& h);

// Invertible n x n matrix; column j is the image of e_j.
class LinearMap {
 public:
  explicit LinearMap(ScalarMatrix m);
  const ScalarMatrix& matrix() const { return m_; }
  Vector apply(const Vector& v) const { return m_.apply(v); }

 private:
  ScalarMatrix m_;
};

// h'(x, y, z) = h(g x, g y, g z).
TriForm pullback(const TriForm& h, const LinearMap& g);
TriForm scale(const TriForm& h, const Scalar& c);

// Index of the pair (j, k), j < k, in lexicographic order of C(n, 2) pairs.
std::size_t pair_index(int n, int j, int k);
std::vector<std::array<int, 2>> all_pairs(int n);
// |x,y|_{jk} = x_j y_k - x_k y_j over pairs j < k. Throws on dependent input.
Vector wedge2_coordinates(const Vector& x, const Vector& y);

// Text format: "n = <dim>", "field = gf(p)|q", then one "i j k coeff" line
// per term (1-based, i < j < k). '#' starts a comment.
TriForm read_form(std::istream& in);
void write_form(std::ostream& out, const TriForm& h);
std::string form_to_text(const TriForm& h);

}  // namespace trigeom
