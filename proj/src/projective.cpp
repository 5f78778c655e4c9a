#include "trigeom/projective.hpp"

#include <algorithm>

#include "trigeom/errors.hpp"

namespace trigeom {

PrimeField::PrimeField(std::uint32_t p) : p_(p), inverse_(p, 0) {
  if (!is_prime(p) || p > 65521) throw InvalidArgument("enumeration needs a prime below 2^16");
  for (std::uint32_t a = 1; a < p; ++a) {
    std::uint32_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    inverse_[a] = r;
  }
}

ProjectiveSpace::ProjectiveSpace(int n, std::uint32_t p)
    : n_(n), field_(p), spec_(FieldSpec::prime(p)) {
  if (n < 1 || n > kMaxDim) throw DimensionError("projective dimension out of range");
  pow_.resize(static_cast<std::size_t>(2 * n + 1));
  pow_[0] = 1;
  for (std::size_t i = 1; i < pow_.size(); ++i) {
    if (pow_[i - 1] > (UINT64_MAX / p)) throw BudgetExceeded("vector space too large to index");
    pow_[i] = pow_[i - 1] * p;
  }
  point_count_ = first_index_with_tail(n);
  std::uint64_t start = 0;
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      line_blocks_.push_back({static_cast<std::uint64_t>(c1), static_cast<std::uint64_t>(c2), start});
      start += pow_[static_cast<std::size_t>((n - 2 - c1) + (n - 1 - c2))];
    }
  line_count_ = start;
}

std::uint64_t ProjectiveSpace::first_index_with_tail(int m) const {
  return (pow_[static_cast<std::size_t>(m)] - 1) / (field_.p() - 1);
}

bool ProjectiveSpace::is_zero(const FpVector& v) const {
  for (int i = 0; i < n_; ++i)
    if (v.c[i]) return false;
  return true;
}

FpVector ProjectiveSpace::normalize(FpVector v) const {
  int l = 0;
  while (l < n_ && v.c[l] == 0) ++l;
  if (l == n_) throw InvalidArgument("zero vector has no projective point");
  const std::uint32_t inv = field_.inv(v.c[l]);
  for (int i = l; i < n_; ++i) v.c[i] = static_cast<std::uint16_t>(field_.mul(v.c[i], inv));
  return v;
}

std::uint64_t ProjectiveSpace::index_of(const FpVector& raw) const {
  const FpVector v = normalize(raw);
  int l = 0;
  while (v.c[l] == 0) ++l;
  const int m = n_ - 1 - l;
  std::uint64_t code = 0;
  for (int i = l; i < n_; ++i) code = code * field_.p() + v.c[i];
  return first_index_with_tail(m) + (code - pow_[static_cast<std::size_t>(m)]);
}

FpVector ProjectiveSpace::point(std::uint64_t index) const {
  if (index >= point_count_) throw DimensionError("point index out of range");
  int m = 0;
  while (first_index_with_tail(m + 1) <= index) ++m;
  std::uint64_t code = pow_[static_cast<std::size_t>(m)] + (index - first_index_with_tail(m));
  FpVector v;
  for (int i = n_ - 1; i >= 0; --i) {
    v.c[i] = static_cast<std::uint16_t>(code % field_.p());
    code /= field_.p();
  }
  return v;
}

std::vector<FpVector> ProjectiveSpace::rref(std::vector<FpVector> rows) const {
  std::size_t lead = 0;
  for (int col = 0; col < n_ && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot].c[col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead]);
    const std::uint32_t inv = field_.inv(rows[lead].c[col]);
    for (int j = col; j < n_; ++j) rows[lead].c[j] = static_cast<std::uint16_t>(field_.mul(rows[lead].c[j], inv));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i].c[col] == 0) continue;
      const std::uint32_t f = rows[i].c[col];
      for (int j = col; j < n_; ++j)
        rows[i].c[j] = static_cast<std::uint16_t>(field_.sub(rows[i].c[j], field_.mul(f, rows[lead].c[j])));
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t ProjectiveSpace::rank(const std::vector<FpVector>& rows) const { return rref(rows).size(); }

FpLine ProjectiveSpace::line_through(const FpVector& a, const FpVector& b) const {
  const auto r = rref({a, b});
  if (r.size() != 2) throw InvalidArgument("line through dependent vectors");
  return {index_of(r[0]), index_of(r[1])};
}

FpLine ProjectiveSpace::line(std::uint64_t index) const {
  if (index >= line_count_) throw DimensionError("line index out of range");
  auto it = std::upper_bound(line_blocks_.begin(), line_blocks_.end(), index,
                             [](std::uint64_t v, const std::array<std::uint64_t, 3>& b) { return v < b[2]; });
  const auto& block = *(it - 1);
  const int c1 = static_cast<int>(block[0]), c2 = static_cast<int>(block[1]);
  std::uint64_t offset = index - block[2];
  const std::uint32_t p = field_.p();
  FpVector r1, r2;
  r1.c[c1] = 1;
  r2.c[c2] = 1;
  for (int j = n_ - 1; j > c2; --j) {
    r2.c[j] = static_cast<std::uint16_t>(offset % p);
    offset /= p;
  }
  for (int j = n_ - 1; j > c1; --j) {
    if (j == c2) continue;
    r1.c[j] = static_cast<std::uint16_t>(offset % p);
    offset /= p;
  }
  return {index_of(r1), index_of(r2)};
}

std::vector<std::uint64_t> ProjectiveSpace::points_on_line(const FpLine& l) const {
  const FpVector a = point(l.first), b = point(l.second);
  std::vector<std::uint64_t> out{l.second};
  for (std::uint32_t t = 0; t < field_.p(); ++t) {
    FpVector v = a;
    for (int i = 0; i < n_; ++i) v.c[i] = static_cast<std::uint16_t>(field_.add(a.c[i], field_.mul(t, b.c[i])));
    out.push_back(index_of(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> ProjectiveSpace::points_of_span(const std::vector<FpVector>& basis) const {
  const auto r = rref(basis);
  std::vector<std::uint64_t> out;
  const std::uint32_t p = field_.p();
  for (std::size_t lead = 0; lead < r.size(); ++lead) {
    const std::size_t tail = r.size() - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      FpVector v = r[lead];
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < r.size(); ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(c % p);
        c /= p;
        if (!a) continue;
        for (int j = 0; j < n_; ++j) v.c[j] = static_cast<std::uint16_t>(field_.add(v.c[j], field_.mul(a, r[i].c[j])));
      }
      out.push_back(index_of(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ProjectiveSpace::in_span(const std::vector<FpVector>& rref_basis, const FpVector& v) const {
  FpVector w = v;
  for (const auto& r : rref_basis) {
    int piv = 0;
    while (r.c[piv] == 0) ++piv;
    const std::uint32_t f = w.c[piv];
    if (!f) continue;
    for (int j = 0; j < n_; ++j) w.c[j] = static_cast<std::uint16_t>(field_.sub(w.c[j], field_.mul(f, r.c[j])));
  }
  return is_zero(w);
}

Vector ProjectiveSpace::to_scalars(const FpVector& v) const {
  Vector out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out.emplace_back(spec_, static_cast<long long>(v.c[i]));
  return out;
}

FpVector ProjectiveSpace::from_scalars(const Vector& v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionError("vector length does not match space");
  FpVector out;
  for (int i = 0; i < n_; ++i) {
    if (v[i].field() != spec_) throw FieldMismatch();
    out.c[i] = static_cast<std::uint16_t>(v[i].residue());
  }
  return out;
}

namespace {

int fp_rref_in_place(const PrimeField& f, std::vector<FpVector>& rows, int cols, std::vector<int>& pivots) {
  std::size_t lead = 0;
  for (int col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot].c[col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead]);
    const std::uint32_t inv = f.inv(rows[lead].c[col]);
    for (int j = col; j < cols; ++j) rows[lead].c[j] = static_cast<std::uint16_t>(f.mul(rows[lead].c[j], inv));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i].c[col] == 0) continue;
      const std::uint32_t g = rows[i].c[col];
      for (int j = col; j < cols; ++j)
        rows[i].c[j] = static_cast<std::uint16_t>(f.sub(rows[i].c[j], f.mul(g, rows[lead].c[j])));
    }
    pivots.push_back(col);
    ++lead;
  }
  return static_cast<int>(lead);
}

}  // namespace

int fp_rank(const PrimeField& f, std::vector<FpVector> rows, int cols) {
  std::vector<int> pivots;
  return fp_rref_in_place(f, rows, cols, pivots);
}

std::vector<FpVector> fp_kernel(const PrimeField& f, std::vector<FpVector> rows, int cols) {
  std::vector<int> pivots;
  fp_rref_in_place(f, rows, cols, pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<FpVector> kernel;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    FpVector v;
    v.c[fc] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v.c[pivots[k]] = static_cast<std::uint16_t>(f.neg(rows[k].c[fc]));
    kernel.push_back(v);
  }
  std::vector<int> kp;
  fp_rref_in_place(f, kernel, cols, kp);
  return kernel;
}

}  // namespace trigeom
