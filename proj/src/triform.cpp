#include "trigeom/triform.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "trigeom/errors.hpp"

namespace trigeom {

namespace {

// Sorts (i, j, k) ascending and returns the parity of the sorting permutation.
bool sort_with_sign(int& i, int& j, int& k) {
  bool odd = false;
  if (i > j) std::swap(i, j), odd = !odd;
  if (j > k) std::swap(j, k), odd = !odd;
  if (i > j) std::swap(i, j), odd = !odd;
  return odd;
}

}  // namespace

TriForm::TriForm(int n, const FieldSpec& field) : n_(n), field_(field) {
  if (n < 3 || n > kMaxFormDim)
    throw DimensionError("form dimension must lie in [3, " + std::to_string(kMaxFormDim) + "]");
}

void TriForm::add_term(int i, int j, int k, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch();
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
    throw DimensionError("form index out of range");
  if (i == j || j == k || i == k) throw InvalidArgument("repeated index in a trilinear term");
  const bool odd = sort_with_sign(i, j, k);
  if (c.is_zero()) return;
  const Triple t{i, j, k};
  auto [it, inserted] = coeffs_.try_emplace(t, odd ? -c : c);
  if (!inserted) {
    it->second += odd ? -c : c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Scalar TriForm::coefficient(int i, int j, int k) const {
  if (i == j || j == k || i == k) return Scalar::zero(field_);
  const bool odd = sort_with_sign(i, j, k);
  auto it = coeffs_.find(Triple{i, j, k});
  if (it == coeffs_.end()) return Scalar::zero(field_);
  return odd ? -it->second : it->second;
}

std::vector<int> TriForm::support() const {
  std::set<int> s;
  for (const auto& [t, c] : coeffs_) s.insert(t.begin(), t.end());
  return {s.begin(), s.end()};
}

std::string TriForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : coeffs_) {
    std::string coeff = c.to_string();
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    out << (first ? (negative ? "-" : "") : (negative ? "-" : "+"));
    first = false;
    if (coeff != "1") out << coeff << '*';
    if (n_ <= 9)
      out << t[0] + 1 << t[1] + 1 << t[2] + 1;
    else
      out << '(' << t[0] + 1 << ',' << t[1] + 1 << ',' << t[2] + 1 << ')';
  }
  return out.str();
}

std::string catalog_name(CatalogType t) {
  switch (t) {
    case CatalogType::T1: return "T1";
    case CatalogType::T2: return "T2";
    case CatalogType::T3: return "T3";
    case CatalogType::T4: return "T4";
    case CatalogType::T5: return "T5";
    case CatalogType::T6: return "T6";
    case CatalogType::T7: return "T7";
    case CatalogType::T8: return "T8";
    case CatalogType::T9: return "T9";
    case CatalogType::T10_1: return "T10_1";
    case CatalogType::T10_2: return "T10_2";
    case CatalogType::T11_1: return "T11_1";
    case CatalogType::T11_2: return "T11_2";
    case CatalogType::T12: return "T12";
  }
  return "?";
}

std::vector<CatalogType> all_catalog_types() {
  return {CatalogType::T1,    CatalogType::T2,    CatalogType::T3,    CatalogType::T4,
          CatalogType::T5,    CatalogType::T6,    CatalogType::T7,    CatalogType::T8,
          CatalogType::T9,    CatalogType::T10_1, CatalogType::T10_2, CatalogType::T11_1,
          CatalogType::T11_2, CatalogType::T12};
}

CatalogType parse_catalog_type(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), ::toupper);
  for (CatalogType t : all_catalog_types())
    if (catalog_name(t) == s) return t;
  throw ParseError("unknown catalog type '" + std::string(name) + "'");
}

bool catalog_needs_parameter(CatalogType t) {
  return t == CatalogType::T10_1 || t == CatalogType::T10_2 || t == CatalogType::T11_1 ||
         t == CatalogType::T11_2 || t == CatalogType::T12;
}

int catalog_rank(CatalogType t) {
  switch (t) {
    case CatalogType::T1: return 3;
    case CatalogType::T2: return 5;
    case CatalogType::T3:
    case CatalogType::T4:
    case CatalogType::T10_1:
    case CatalogType::T10_2: return 6;
    default: return 7;
  }
}

std::string catalog_description(CatalogType t) {
  switch (t) {
    case CatalogType::T1: return "123";
    case CatalogType::T2: return "123+145";
    case CatalogType::T3: return "123+456";
    case CatalogType::T4: return "162+243+135";
    case CatalogType::T5: return "123+456+147";
    case CatalogType::T6: return "152+174+163+243";
    case CatalogType::T7: return "146+157+245+367";
    case CatalogType::T8: return "123+145+167";
    case CatalogType::T9: return "123+456+147+257+367";
    case CatalogType::T10_1: return "123+L(156+345+426)";
    case CatalogType::T10_2: return "126+153+234+(L^2+1)456+L(156+345+426)";
    case CatalogType::T11_1: return "123+L(156+345+426)+147";
    case CatalogType::T11_2: return "126+153+234+(L^2+1)456+L(156+345+426)+147";
    case CatalogType::T12: return "M(123+456+147+257+367)";
  }
  return "";
}

std::string catalog_condition(CatalogType t) {
  switch (t) {
    case CatalogType::T10_1:
    case CatalogType::T11_1: return "t^2-L irreducible";
    case CatalogType::T10_2:
    case CatalogType::T11_2: return "char 2 and t^2+L*t+1 irreducible";
    case CatalogType::T12: return "t^3-M irreducible";
    default: return "";
  }
}

CatalogEntry::CatalogEntry(CatalogType t, std::optional<Scalar> param)
    : type(t), parameter(std::move(param)), expected_rank(catalog_rank(t)) {
  if (catalog_needs_parameter(t) != parameter.has_value())
    throw InvalidArgument(catalog_name(t) + (parameter ? " takes no parameter" : " needs a parameter"));
}

bool catalog_condition_holds(const CatalogEntry& entry, const FieldSpec& field) {
  if (!entry.parameter) return true;
  const Scalar& p = *entry.parameter;
  if (p.field() != field) throw FieldMismatch();
  switch (entry.type) {
    case CatalogType::T10_1:
    case CatalogType::T11_1: return quadratic_irreducible(field, QuadraticKind::minus_lambda, p);
    case CatalogType::T10_2:
    case CatalogType::T11_2:
      return field.characteristic() == 2 &&
             quadratic_irreducible(field, QuadraticKind::lambda_linear, p);
    case CatalogType::T12: return cubic_irreducible(field, p);
    default: return true;
  }
}

TriForm catalog_terms(const CatalogEntry& entry, int n, const FieldSpec& field) {
  TriForm h(n, field);
  const Scalar one = Scalar::one(field);
  // 1-based index triples as in the classification table.
  auto add = [&](int a, int b, int c, const Scalar& s) {
    if (std::max({a, b, c}) > n) throw DimensionError("dimension below the form's rank");
    h.add_term(a - 1, b - 1, c - 1, s);
  };
  auto hexagonal = [&](const Scalar& s) {
    add(1, 2, 3, s), add(4, 5, 6, s), add(1, 4, 7, s), add(2, 5, 7, s), add(3, 6, 7, s);
  };
  auto spread1 = [&](const Scalar& l) {
    add(1, 2, 3, one), add(1, 5, 6, l), add(3, 4, 5, l), add(4, 2, 6, l);
  };
  auto spread2 = [&](const Scalar& l) {
    add(1, 2, 6, one), add(1, 5, 3, one), add(2, 3, 4, one);
    add(4, 5, 6, l * l + one);
    add(1, 5, 6, l), add(3, 4, 5, l), add(4, 2, 6, l);
  };
  if (n < entry.expected_rank) throw DimensionError("dimension below the form's rank");
  if (entry.parameter && entry.parameter->field() != field) throw FieldMismatch();
  switch (entry.type) {
    case CatalogType::T1: add(1, 2, 3, one); break;
    case CatalogType::T2: add(1, 2, 3, one), add(1, 4, 5, one); break;
    case CatalogType::T3: add(1, 2, 3, one), add(4, 5, 6, one); break;
    case CatalogType::T4: add(1, 6, 2, one), add(2, 4, 3, one), add(1, 3, 5, one); break;
    case CatalogType::T5: add(1, 2, 3, one), add(4, 5, 6, one), add(1, 4, 7, one); break;
    case CatalogType::T6:
      add(1, 5, 2, one), add(1, 7, 4, one), add(1, 6, 3, one), add(2, 4, 3, one);
      break;
    case CatalogType::T7:
      add(1, 4, 6, one), add(1, 5, 7, one), add(2, 4, 5, one), add(3, 6, 7, one);
      break;
    case CatalogType::T8: add(1, 2, 3, one), add(1, 4, 5, one), add(1, 6, 7, one); break;
    case CatalogType::T9: hexagonal(one); break;
    case CatalogType::T10_1: spread1(*entry.parameter); break;
    case CatalogType::T10_2: spread2(*entry.parameter); break;
    case CatalogType::T11_1: spread1(*entry.parameter), add(1, 4, 7, one); break;
    case CatalogType::T11_2: spread2(*entry.parameter), add(1, 4, 7, one); break;
    case CatalogType::T12: hexagonal(*entry.parameter); break;
  }
  h.set_label(catalog_name(entry.type));
  return h;
}

TriForm catalog_form(const CatalogEntry& entry, int n, const FieldSpec& field) {
  if (n < entry.expected_rank)
    throw DimensionError(catalog_name(entry.type) + " needs dimension >= " +
                         std::to_string(entry.expected_rank));
  if (!catalog_condition_holds(entry, field))
    throw ConditionViolation(catalog_name(entry.type) + " with parameter " +
                             entry.parameter->to_string() + " over " + field.to_string() +
                             " violates: " + catalog_condition(entry.type));
  return catalog_terms(entry, n, field);
}

namespace {

void check_vector(const TriForm& h, const Vector& v) {
  if (static_cast<int>(v.size()) != h.dim()) throw DimensionError("vector length does not match form dimension");
  for (const auto& s : v)
    if (s.field() != h.field()) throw FieldMismatch();
}

}  // namespace

Scalar evaluate_form(const TriForm& h, const Vector& x, const Vector& y, const Vector& z) {
  check_vector(h, x), check_vector(h, y), check_vector(h, z);
  Scalar sum = Scalar::zero(h.field());
  for (const auto& [t, c] : h.coeffs()) {
    const auto [i, j, k] = t;
    // 3x3 determinant of the (i, j, k) coordinates of x, y, z.
    const Scalar det = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                       x[k] * (y[i] * z[j] - y[j] * z[i]);
    if (!det.is_zero()) sum += c * det;
  }
  return sum;
}

RadicalRank radical_and_rank(const TriForm& h) {
  if (h.is_zero()) throw InvalidArgument("radical of the zero form");
  const int n = h.dim();
  const auto pairs = all_pairs(n);
  ScalarMatrix m(pairs.size(), static_cast<std::size_t>(n), h.field());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (int c = 0; c < n; ++c) m(r, static_cast<std::size_t>(c)) = h.coefficient(pairs[r][0], pairs[r][1], c);
  RankKernel rk = rank_and_kernel(m);
  return {std::move(rk.kernel), static_cast<int>(rk.rank)};
}

LinearMap::LinearMap(ScalarMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("linear map must be square");
  if (determinant(m_).is_zero()) throw InvalidArgument("linear map is singular");
}

TriForm pullback(const TriForm& h, const LinearMap& g) {
  const int n = h.dim();
  if (static_cast<int>(g.matrix().rows()) != n) throw DimensionError("linear map dimension mismatch");
  if (g.matrix().field() != h.field()) throw FieldMismatch();
  std::vector<Vector> images;
  for (int j = 0; j < n; ++j) images.push_back(g.matrix().column(static_cast<std::size_t>(j)));
  TriForm out(n, h.field());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.add_term(i, j, k, evaluate_form(h, images[i], images[j], images[k]));
  out.set_label(h.label());
  return out;
}

TriForm scale(const TriForm& h, const Scalar& c) {
  if (c.is_zero()) throw InvalidArgument("scaling by zero");
  if (c.field() != h.field()) throw FieldMismatch();
  TriForm out(h.dim(), h.field());
  for (const auto& [t, v] : h.coeffs()) out.add_term(t[0], t[1], t[2], v * c);
  out.set_label(h.label());
  return out;
}

std::size_t pair_index(int n, int j, int k) {
  if (j > k) std::swap(j, k);
  if (j < 0 || k >= n || j == k) throw DimensionError("bad pair index");
  // Pairs with first element < j come first.
  const int before = j * (2 * n - j - 1) / 2;
  return static_cast<std::size_t>(before + (k - j - 1));
}

std::vector<std::array<int, 2>> all_pairs(int n) {
  std::vector<std::array<int, 2>> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.push_back({j, k});
  return out;
}

Vector wedge2_coordinates(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.empty()) throw DimensionError("wedge of vectors of different lengths");
  const int n = static_cast<int>(x.size());
  Vector w;
  w.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) w.push_back(x[j] * y[k] - x[k] * y[j]);
  if (is_zero_vector(w)) throw InvalidArgument("wedge of linearly dependent vectors");
  return w;
}

TriForm read_form(std::istream& in) {
  std::optional<int> n;
  std::optional<FieldSpec> field;
  std::optional<std::string> label;
  std::vector<std::pair<std::array<int, 3>, std::string>> terms;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("form file line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto eq = line.find('='); eq != std::string::npos) {
      std::istringstream key_in(line.substr(0, eq)), val_in(line.substr(eq + 1));
      std::string key, value, extra;
      key_in >> key;
      val_in >> value;
      if (key.empty() || value.empty() || (val_in >> extra)) fail("malformed header");
      if (key == "n") {
        try {
          n = std::stoi(value);
        } catch (const std::exception&) {
          fail("bad dimension '" + value + "'");
        }
      } else if (key == "field") {
        field = FieldSpec::parse(value);
      } else if (key == "type") {
        label = value;
      } else {
        fail("unknown header '" + key + "'");
      }
      continue;
    }
    std::istringstream tin(line);
    std::array<int, 3> idx{};
    std::string coeff, extra;
    if (!(tin >> idx[0] >> idx[1] >> idx[2] >> coeff) || (tin >> extra)) fail("expected 'i j k coeff'");
    terms.emplace_back(idx, coeff);
  }
  if (!n) throw ParseError("form file: missing 'n = <dim>' header");
  if (!field) throw ParseError("form file: missing 'field = ...' header");
  TriForm h(*n, *field);
  for (const auto& [idx, coeff] : terms) {
    for (int v : idx)
      if (v < 1 || v > *n) throw ParseError("form file: index " + std::to_string(v) + " out of range");
    h.add_term(idx[0] - 1, idx[1] - 1, idx[2] - 1, Scalar::parse(*field, coeff));
  }
  h.set_label(label);
  return h;
}

void write_form(std::ostream& out, const TriForm& h) {
  out << "n = " << h.dim() << '\n';
  out << "field = " << h.field().to_string() << '\n';
  if (h.label()) out << "type = " << *h.label() << '\n';
  for (const auto& [t, c] : h.coeffs())
    out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << ' ' << c.to_string() << '\n';
}

std::string form_to_text(const TriForm& h) {
  std::ostringstream out;
  write_form(out, h);
  return out.str();
}

}  // namespace trigeom
