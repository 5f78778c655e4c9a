#include "trigeom/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "trigeom/errors.hpp"

namespace trigeom {

BilinearAltForm::BilinearAltForm(int n, const FieldSpec& field) : n_(n), field_(field) {
  if (n < 2 || n > kMaxFormDim) throw DimensionError("bilinear form dimension out of range");
}

BilinearAltForm BilinearAltForm::parse(std::string_view text, int n, const FieldSpec& field) {
  BilinearAltForm b(n, field);
  std::string digits;
  bool negative = false;
  auto flush = [&] {
    if (digits.size() != 2) throw ParseError("expected two indices per term in '" + std::string(text) + "'");
    const Scalar one = Scalar::one(field);
    b.add_term(digits[0] - '1', digits[1] - '1', negative ? -one : one);
    digits.clear();
    negative = false;
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+' || ch == '-') {
      if (!digits.empty()) flush();
      if (ch == '-') negative = !negative;
    } else if (ch >= '1' && ch <= '9') {
      digits.push_back(ch);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in bilinear form");
    }
  }
  flush();
  return b;
}

void BilinearAltForm::add_term(int j, int k, const Scalar& c) {
  if (j < 0 || k < 0 || j >= n_ || k >= n_ || j == k) throw DimensionError("bad bilinear index pair");
  if (c.field() != field_) throw FieldMismatch();
  Scalar v = j < k ? c : -c;
  const std::array<int, 2> key{std::min(j, k), std::max(j, k)};
  auto it = coeffs_.find(key);
  if (it != coeffs_.end()) v += it->second;
  if (v.is_zero()) {
    if (it != coeffs_.end()) coeffs_.erase(it);
  } else {
    coeffs_[key] = v;
  }
}

Scalar BilinearAltForm::coefficient(int j, int k) const {
  if (j == k) return Scalar::zero(field_);
  auto it = coeffs_.find({std::min(j, k), std::max(j, k)});
  if (it == coeffs_.end()) return Scalar::zero(field_);
  return j < k ? it->second : -it->second;
}

Scalar BilinearAltForm::evaluate(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) throw DimensionError("vector length");
  Scalar s = Scalar::zero(field_);
  for (const auto& [p, c] : coeffs_) s += c * (x[p[0]] * y[p[1]] - x[p[1]] * y[p[0]]);
  return s;
}

std::vector<int> BilinearAltForm::support() const {
  std::set<int> s;
  for (const auto& [p, c] : coeffs_) s.insert(p.begin(), p.end());
  return {s.begin(), s.end()};
}

void validate(const Decomposition& d) {
  std::vector<int> seen(static_cast<std::size_t>(d.n), 0);
  for (const auto& part : d.parts)
    for (int i : part) {
      if (i < 0 || i >= d.n) throw DimensionError("decomposition index out of range");
      if (seen[i]++) throw InvalidArgument("decomposition parts overlap");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidArgument("decomposition misses an index");
}

TriForm trivial_extension(const TriForm& h0, int extra) {
  if (extra < 1) throw InvalidArgument("extension needs at least one new dimension");
  TriForm h(h0.dim() + extra, h0.field());
  for (const auto& [t, c] : h0.coeffs()) h.add_term(t[0], t[1], t[2], c);
  h.set_label(h0.label());
  return h;
}

TriForm expansion(const BilinearAltForm& h0, int direction) {
  if (direction < 0 || direction >= h0.dim()) throw DimensionError("expansion direction out of range");
  const auto s = h0.support();
  if (std::binary_search(s.begin(), s.end(), direction))
    throw InvalidArgument("expansion direction lies in the bilinear form's support");
  TriForm h(h0.dim(), h0.field());
  for (const auto& [p, c] : h0.coeffs()) h.add_term(p[0], p[1], direction, c);
  return h;
}

namespace {

void require_same_space(const TriForm& a, const TriForm& b) {
  if (a.dim() != b.dim()) throw DimensionError("forms live in different dimensions");
  if (a.field() != b.field()) throw FieldMismatch();
}

std::vector<int> common(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TriForm block_decompose(const TriForm& h0, const TriForm& h1, const Scalar& alpha, const Scalar& beta) {
  require_same_space(h0, h1);
  if (alpha.is_zero() || beta.is_zero()) throw InvalidArgument("block scalars must be nonzero");
  if (!common(h0.support(), h1.support()).empty()) throw InvalidArgument("block supports overlap");
  TriForm h(h0.dim(), h0.field());
  for (const auto& [t, c] : h0.coeffs()) h.add_term(t[0], t[1], t[2], alpha * c);
  for (const auto& [t, c] : h1.coeffs()) h.add_term(t[0], t[1], t[2], beta * c);
  return h;
}

Decomposition block_decomposition(const TriForm& h0, const TriForm& h1) {
  require_same_space(h0, h1);
  Decomposition d{h0.dim(), {h0.support(), h1.support()}};
  std::vector<int> rest;
  for (int i = 0; i < d.n; ++i)
    if (!std::binary_search(d.parts[0].begin(), d.parts[0].end(), i) &&
        !std::binary_search(d.parts[1].begin(), d.parts[1].end(), i))
      rest.push_back(i);
  if (!rest.empty()) d.parts.push_back(rest);
  validate(d);
  return d;
}

int join_index(const TriForm& h1, const TriForm& h2) {
  require_same_space(h1, h2);
  const auto s1 = h1.support(), s2 = h2.support();
  const auto shared = common(s1, s2);
  if (shared.size() != 1) throw InvalidArgument("joined forms must share exactly one index");
  const int s = shared[0];
  if (s1.back() != s || s2.front() != s)
    throw InvalidArgument("joined forms must sit on either side of the shared index");
  return s;
}

TriForm reducible_join(const TriForm& h1, const TriForm& h2) {
  join_index(h1, h2);
  TriForm h(h1.dim(), h1.field());
  for (const auto& [t, c] : h1.coeffs()) h.add_term(t[0], t[1], t[2], c);
  for (const auto& [t, c] : h2.coeffs()) h.add_term(t[0], t[1], t[2], c);
  return h;
}

TriForm cch_hyperplane(int n, const FieldSpec& field) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("the chained hyperplane needs odd n >= 5");
  TriForm h(n, field);
  for (int a = 0; a + 2 < n; a += 2) h.add_term(a, a + 1, a + 2, Scalar::one(field));
  return h;
}

MultiPoly cch_variety(int n, const FieldSpec& field) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("the chained hyperplane needs odd n >= 5");
  const auto nn = static_cast<std::size_t>(n);
  MultiPoly f = MultiPoly::constant(nn, Scalar::one(field));
  for (int i = 2; i <= n - 3; i += 2) f *= MultiPoly::variable(nn, field, static_cast<std::size_t>(i));
  return f;
}

}  // namespace trigeom
