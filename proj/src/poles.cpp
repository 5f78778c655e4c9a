#include "trigeom/poles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "trigeom/errors.hpp"

namespace trigeom {

namespace {

// Runs fn(begin, end, out) over `threads` contiguous slices of [0, count) and
// concatenates the outputs in slice order.
template <typename T, typename Fn>
std::vector<T> parallel_collect(std::uint64_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count < 2 * threads) {
    std::vector<T> out;
    fn(std::uint64_t{0}, count, out);
    return out;
  }
  std::vector<std::vector<T>> parts(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(count, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
    workers.emplace_back([&, t, begin, end] { fn(begin, end, parts[t]); });
  }
  for (auto& w : workers) w.join();
  std::vector<T> out;
  for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()),
                                      std::make_move_iterator(part.end()));
  return out;
}

void require_nonzero(const TriForm& h) {
  if (h.is_zero()) throw InvalidArgument("zero form");
}

}  // namespace

PolyMatrix symbolic_matrix(const TriForm& h) {
  require_nonzero(h);
  const int n = h.dim();
  const auto nn = static_cast<std::size_t>(n);
  PolyMatrix m(nn, nn, h.field());
  for (int i = 0; i < n; ++i) {
    const MultiPoly ui = MultiPoly::variable(nn, h.field(), static_cast<std::size_t>(i));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar c = h.coefficient(i, j, k);
        if (!c.is_zero()) m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) += ui * c;
      }
  }
  return m;
}

ScalarMatrix contraction_matrix(const TriForm& h, const Vector& u) {
  const int n = h.dim();
  if (static_cast<int>(u.size()) != n) throw DimensionError("vector length does not match form");
  ScalarMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), h.field());
  for (const auto& [t, c] : h.coeffs()) {
    const auto [i, j, k] = t;
    // h(e_a, e_b, e_c) over the six permutations of (i, j, k).
    const Scalar ui = u[i] * c, uj = u[j] * c, uk = u[k] * c;
    m(j, k) += ui;
    m(k, j) -= ui;
    m(k, i) += uj;
    m(i, k) -= uj;
    m(i, j) += uk;
    m(j, i) -= uk;
  }
  return m;
}

PointDegree point_degree(const TriForm& h, const Vector& u) {
  if (is_zero_vector(u)) throw InvalidArgument("zero vector");
  auto rk = rank_and_kernel(contraction_matrix(h, u));
  return {h.dim() - 1 - static_cast<int>(rk.rank), std::move(rk.kernel)};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TRIGEOM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

void check_budget(const FieldSpec& field, int n, std::uint64_t budget) {
  if (field.is_rational()) throw InvalidArgument("enumeration needs a finite field");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= field.order();
    if (size > budget) {
      std::ostringstream msg;
      msg << field.order() << "^" << n << " exceeds the enumeration budget " << budget;
      throw BudgetExceeded(msg.str());
    }
  }
}

FpForm::FpForm(const TriForm& h)
    : n_(h.dim()), space_(h.dim(), [&] {
        if (h.field().is_rational()) throw InvalidArgument("enumeration needs a finite field");
        return h.field().order();
      }()) {
  c_.assign(static_cast<std::size_t>(n_ * n_ * n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) c_[(i * n_ + j) * n_ + k] = h.coefficient(i, j, k).residue();
}

std::vector<FpVector> FpForm::contraction(const FpVector& u) const {
  const PrimeField& f = space_.field();
  std::vector<FpVector> rows(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    if (!u.c[i]) continue;
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        const std::uint32_t c = coeff(i, j, k);
        if (c) rows[j].c[k] = static_cast<std::uint16_t>(f.add(rows[j].c[k], f.mul(u.c[i], c)));
      }
  }
  return rows;
}

int FpForm::degree(const FpVector& u) const {
  return n_ - 1 - fp_rank(space_.field(), contraction(u), n_);
}

std::vector<FpVector> FpForm::radical(const FpVector& u) const {
  return fp_kernel(space_.field(), contraction(u), n_);
}

bool FpForm::annihilates(const FpVector& x, const FpVector& y) const {
  const PrimeField& f = space_.field();
  for (int i = 0; i < n_; ++i) {
    std::uint32_t s = 0;
    for (int j = 0; j < n_; ++j) {
      if (!x.c[j]) continue;
      for (int k = 0; k < n_; ++k) {
        const std::uint32_t c = coeff(i, j, k);
        if (c && y.c[k]) s = f.add(s, f.mul(c, f.mul(x.c[j], y.c[k])));
      }
    }
    if (s) return false;
  }
  return true;
}

std::vector<std::uint64_t> PoleReport::pole_indices() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : records)
    if (r.degree >= 1) out.push_back(r.index);
  return out;
}

PoleReport enumerate_poles(const TriForm& h, const EnumOptions& opts) {
  require_nonzero(h);
  check_budget(h.field(), h.dim(), opts.budget);
  const FpForm f(h);
  PoleReport report;
  report.field = h.field();
  report.n = h.dim();
  report.records = parallel_collect<PoleRecord>(
      f.space().point_count(), opts.threads,
      [&](std::uint64_t begin, std::uint64_t end, std::vector<PoleRecord>& out) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          const FpVector u = f.space().point(idx);
          auto rad = f.radical(u);
          const int degree = static_cast<int>(rad.size()) - 1;
          out.push_back({idx, u, degree, std::move(rad)});
        }
      });
  for (const auto& r : report.records) ++report.histogram[r.degree];
  return report;
}

PluckerLine plucker_line(const ProjectiveSpace& space, const FpLine& l) {
  PluckerLine out;
  out.x = space.to_scalars(space.point(l.first));
  out.y = space.to_scalars(space.point(l.second));
  out.wedge = wedge2_coordinates(out.x, out.y);
  return out;
}

PluckerLine plucker_line(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw DimensionError("line basis vectors differ in length");
  const ScalarMatrix r = rref(ScalarMatrix::from_rows({a, b}));
  PluckerLine out;
  out.x = r.row(0);
  out.y = r.row(1);
  if (is_zero_vector(out.y)) throw InvalidArgument("line through dependent vectors");
  out.wedge = wedge2_coordinates(out.x, out.y);
  return out;
}

UpperRadicalSystem upper_radical_system(const TriForm& h) {
  const int n = h.dim();
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  ScalarMatrix eq(static_cast<std::size_t>(n), pairs, h.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) eq(static_cast<std::size_t>(i), pair_index(n, j, k)) = h.coefficient(i, j, k);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < eq.rows(); ++i) rows.push_back(eq.row(i));
  const auto basis = row_space_basis(rows, pairs, h.field());
  ScalarMatrix reduced(basis.size(), pairs, h.field());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < pairs; ++j) reduced(i, j) = basis[i][j];
  auto rk = rank_and_kernel(eq);
  return {eq, reduced, std::move(rk.kernel)};
}

std::vector<FpLine> lines_through_point(const FpForm& f, const FpVector& raw) {
  const ProjectiveSpace& space = f.space();
  if (space.is_zero(raw)) throw InvalidArgument("zero vector");
  const FpVector u = space.normalize(raw);
  const auto rad = f.radical(u);
  if (rad.size() < 2) return {};
  int lead = 0;
  while (u.c[lead] == 0) ++lead;
  // Rad(chi_u) = <u> + span of the rows whose pivot is not u's leading index.
  std::vector<FpVector> complement;
  for (const auto& r : rad) {
    int piv = 0;
    while (r.c[piv] == 0) ++piv;
    if (piv != lead) complement.push_back(r);
  }
  if (complement.size() != rad.size() - 1) throw Error("radical does not contain its point");
  std::vector<FpLine> out;
  for (std::uint64_t v : space.points_of_span(complement)) out.push_back(space.line_through(u, space.point(v)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PluckerLine> lines_through_point(const TriForm& h, const Vector& u) {
  const FpForm f(h);
  std::vector<PluckerLine> out;
  for (const auto& l : lines_through_point(f, f.space().from_scalars(u))) out.push_back(plucker_line(f.space(), l));
  return out;
}

std::vector<FpLine> upper_radical_from_poles(const FpForm& f, const PoleReport& report, unsigned threads) {
  const auto& recs = report.records;
  auto lines = parallel_collect<FpLine>(
      recs.size(), threads, [&](std::uint64_t begin, std::uint64_t end, std::vector<FpLine>& out) {
        for (std::uint64_t r = begin; r < end; ++r) {
          if (recs[r].degree < 1) continue;
          for (const auto& l : lines_through_point(f, recs[r].point)) {
            const auto pts = f.space().points_on_line(l);
            if (pts.front() == recs[r].index) out.push_back(l);
          }
        }
      });
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<FpLine> enumerate_upper_radical(const TriForm& h, const EnumOptions& opts) {
  const PoleReport report = enumerate_poles(h, opts);
  const FpForm f(h);
  return upper_radical_from_poles(f, report, opts.threads);
}

TriForm reduce_form(const TriForm& h, const FieldSpec& target) {
  if (h.field() == target) return h;
  if (!h.field().is_rational() || target.is_rational()) throw FieldMismatch();
  TriForm out(h.dim(), target);
  for (const auto& [t, c] : h.coeffs()) out.add_term(t[0], t[1], t[2], Scalar(target, c.rational()));
  out.set_label(h.label());
  return out;
}

MultiPoly reduce_poly(const MultiPoly& f, const FieldSpec& target) {
  if (f.field() == target) return f;
  if (!f.field().is_rational() || target.is_rational()) throw FieldMismatch();
  MultiPoly out(f.nvars(), target);
  for (const auto& [e, c] : f.terms()) out.add_term(e, Scalar(target, c.rational()));
  return out;
}

std::optional<std::uint64_t> variety_mismatch(const TriForm& h, const MultiPoly& g, std::uint64_t budget) {
  check_budget(h.field(), h.dim(), budget);
  if (g.field() != h.field()) throw FieldMismatch();
  const FpForm f(h);
  const PrimeField& pf = f.space().field();
  const int n = h.dim();
  std::vector<std::pair<std::uint32_t, Exponent>> terms;
  for (const auto& [e, c] : g.terms()) terms.emplace_back(c.residue(), e);
  for (std::uint64_t idx = 0; idx < f.space().point_count(); ++idx) {
    const FpVector u = f.space().point(idx);
    std::uint32_t value = 0;
    for (const auto& [c, e] : terms) {
      std::uint32_t t = c;
      for (int i = 0; i < n && t; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = pf.mul(t, u.c[i]);
      value = pf.add(value, t);
    }
    if ((value == 0) != (f.degree(u) >= 1)) return idx;
  }
  return std::nullopt;
}

namespace {

// Pointwise check over integer points of [-grid, grid]^n (projectively
// deduplicated by a positive first nonzero coordinate).
bool grid_agrees(const TriForm& h, const MultiPoly& g, int grid) {
  const int n = h.dim();
  const int side = 2 * grid + 1;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    int carry = n - 1;
    while (carry >= 0 && ++digits[carry] == side) digits[carry--] = 0;
    if (carry < 0) break;
    Vector u;
    int first = 0;
    for (int i = 0; i < n; ++i) {
      const int v = digits[i] - grid;
      if (!first && v) first = v;
      u.emplace_back(h.field(), static_cast<long long>(v));
    }
    if (first <= 0) continue;
    const bool pole = point_degree(h, u).degree >= 1;
    if (pole != g.evaluate(u).is_zero()) return false;
  }
  return true;
}

}  // namespace

VarietyResult pole_variety(const TriForm& h, const VarietyOptions& opts) {
  require_nonzero(h);
  const int n = h.dim();
  VarietyResult result{VarietyKind::all_points, 0, std::nullopt, 0, std::nullopt, std::nullopt, {}};
  if (n % 2 == 0) return result;
  if (opts.index && *opts.index >= static_cast<std::size_t>(n)) throw DimensionError("variety index out of range");

  const PolyMatrix m = symbolic_matrix(h);
  auto verify = [&](const MultiPoly& g) -> std::optional<FieldSpec> {
    if (h.field().is_prime()) {
      if (variety_mismatch(h, g, opts.budget)) return std::nullopt;
      return h.field();
    }
    if (!grid_agrees(h, g, opts.grid)) return std::nullopt;
    if (opts.verify_field) {
      if (variety_mismatch(reduce_form(h, *opts.verify_field), reduce_poly(g, *opts.verify_field), opts.budget))
        return std::nullopt;
      return *opts.verify_field;
    }
    return h.field();
  };

  bool any_nonzero = false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (opts.index && i != *opts.index) continue;
    MultiPoly d = pfaffian(principal_delete(m, i));
    if (d.is_zero()) {
      result.candidates.push_back({i, d, 0, d, false, "d vanishes identically"});
      continue;
    }
    any_nonzero = true;
    auto stripped = strip_variable_power(d, i);
    const auto verified = verify(stripped.cofactor);
    result.candidates.push_back({i, d, stripped.exponent, stripped.cofactor, verified.has_value(),
                                 verified ? "zero set equals the pole set" : "zero set differs from the pole set"});
    if (verified && !result.g) {
      result.kind = VarietyKind::hypersurface;
      result.index = i;
      result.d = d;
      result.alpha = stripped.exponent;
      result.g = stripped.cofactor;
      result.verified_over = verified;
      if (!opts.all_candidates) break;
    }
  }
  if (result.g) return result;
  if (!any_nonzero) {
    bool all_zero = true;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) && all_zero; ++i)
      all_zero = pfaffian(principal_delete(m, i)).is_zero();
    if (all_zero) return result;
  }
  std::ostringstream msg;
  msg << "no index gives a verified pole equation:";
  for (const auto& c : result.candidates) msg << " i=" << c.index + 1 << " (" << c.reason << ")";
  throw Error(msg.str());
}

}  // namespace trigeom
