#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/multipoly.hpp"
#include "trigeom/triform.hpp"

namespace trigeom {

// Alternating bilinear form on K^n stored on pairs j < k (0-based).
class BilinearAltForm {
 public:
  BilinearAltForm(int n, const FieldSpec& field);
  // "23+45-67": 1-based index pairs with coefficient +1 or -1.
  static BilinearAltForm parse(std::string_view text, int n, const FieldSpec& field);

  int dim() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::map<std::array<int, 2>, Scalar>& coeffs() const { return coeffs_; }

  void add_term(int j, int k, const Scalar& c);
  Scalar coefficient(int j, int k) const;
  Scalar evaluate(const Vector& x, const Vector& y) const;
  std::vector<int> support() const;

 private:
  int n_;
  FieldSpec field_;
  std::map<std::array<int, 2>, Scalar> coeffs_;
};

// Coordinate split of {0..n-1} into disjoint parts covering every index.
struct Decomposition {
  int n;
  std::vector<std::vector<int>> parts;
};
void validate(const Decomposition& d);

// h0 embedded in dimension h0.dim() + extra; no term touches the new indices.
TriForm trivial_extension(const TriForm& h0, int extra);

// h(e_a, e_b, e_dir) = h0(e_a, e_b); the direction must not be in h0's support.
TriForm expansion(const BilinearAltForm& h0, int direction);

// alpha h0 + beta h1 for forms with disjoint supports.
TriForm block_decompose(const TriForm& h0, const TriForm& h1, const Scalar& alpha, const Scalar& beta);
// Supports of h0 and h1, plus the untouched indices as a third part when any.
Decomposition block_decomposition(const TriForm& h0, const TriForm& h1);

// h1 + h2 where h1 lives on indices 0..s and h2 on s..n-1, sharing only s.
TriForm reducible_join(const TriForm& h1, const TriForm& h2);
// The shared index s of a valid join.
int join_index(const TriForm& h1, const TriForm& h2);

// 123 + 345 + 567 + ... for odd n >= 5.
TriForm cch_hyperplane(int n, const FieldSpec& field);
// u_3 u_5 ... u_{n-2}.
MultiPoly cch_variety(int n, const FieldSpec& field);

}  // namespace trigeom
