#include "trigeom/skewlinalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "trigeom/errors.hpp"

namespace trigeom {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, const FieldSpec& field) {
  ScalarMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows[0].empty()) throw DimensionError("matrix needs at least one row and column");
  const FieldSpec field = rows[0][0].field();
  ScalarMatrix m(rows.size(), rows[0].size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].field() != field) throw FieldMismatch();
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(i, j);
}

const Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(i, j);
}

Vector ScalarMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector ScalarMatrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector ScalarMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match matrix columns");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch();
  ScalarMatrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

namespace {

std::string aligned(const std::vector<std::string>& cells, std::size_t rows, std::size_t cols) {
  std::size_t width = 1;
  for (const auto& c : cells) width = std::max(width, c.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < rows; ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string& c = cells[i * cols + j];
      out << std::string(width - c.size(), ' ') << c << (j + 1 < cols ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace

std::string ScalarMatrix::to_string() const {
  std::vector<std::string> cells;
  for (const auto& s : data_) cells.push_back(s.to_string());
  return aligned(cells, rows_, cols_);
}

PolyMatrix::PolyMatrix(std::size_t n, std::size_t nvars, const FieldSpec& field)
    : n_(n), nvars_(nvars), field_(field), data_(n * n, MultiPoly(nvars, field)) {}

ScalarMatrix PolyMatrix::evaluate(const Vector& point) const {
  ScalarMatrix m(n_, n_, field_);
  for (std::size_t i = 0; i < n_ * n_; ++i) m(i / n_, i % n_) = data_[i].evaluate(point);
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string(std::string_view var) const {
  std::vector<std::string> cells;
  for (const auto& p : data_) {
    std::string s = p.to_string(var);
    // Strip spaces so aligned cells stay compact.
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    cells.push_back(s);
  }
  return aligned(cells, n_, n_);
}

ScalarMatrix rref(const ScalarMatrix& m, std::vector<std::size_t>* pivots) {
  ScalarMatrix r = m;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot, j), r(lead, j));
    const Scalar inv = r(lead, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      const Scalar f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return r;
}

std::size_t rank(const ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

RankKernel rank_and_kernel(const ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  const ScalarMatrix r = rref(m, &pivots);
  const FieldSpec& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(field, m.cols());
    v[f] = Scalar::one(field);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    kernel.push_back(std::move(v));
  }
  if (!kernel.empty()) kernel = row_space_basis(kernel, m.cols(), field);
  return {pivots.size(), kernel};
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& rows, std::size_t width,
                                    const FieldSpec& field) {
  if (rows.empty()) return {};
  ScalarMatrix m(rows.size(), width, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw DimensionError("row has wrong length");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  std::vector<std::size_t> pivots;
  const ScalarMatrix r = rref(m, &pivots);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row(i));
  return out;
}

bool same_row_space(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field()) return false;
  std::vector<Vector> ra, rb;
  for (std::size_t i = 0; i < a.rows(); ++i) ra.push_back(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) rb.push_back(b.row(i));
  return row_space_basis(ra, a.cols(), a.field()) == row_space_basis(rb, b.cols(), b.field());
}

PolyMatrix principal_delete(const PolyMatrix& m, std::size_t i) {
  if (i >= m.size()) throw DimensionError("principal_delete index out of range");
  PolyMatrix r(m.size() - 1, m.nvars(), m.field());
  for (std::size_t a = 0, ra = 0; a < m.size(); ++a) {
    if (a == i) continue;
    for (std::size_t b = 0, rb = 0; b < m.size(); ++b) {
      if (b == i) continue;
      r(ra, rb++) = m(a, b);
    }
    ++ra;
  }
  return r;
}

ScalarMatrix principal_delete(const ScalarMatrix& m, std::size_t i) {
  if (m.rows() != m.cols()) throw DimensionError("principal_delete needs a square matrix");
  if (i >= m.rows()) throw DimensionError("principal_delete index out of range");
  ScalarMatrix r(m.rows() - 1, m.cols() - 1, m.field());
  for (std::size_t a = 0, ra = 0; a < m.rows(); ++a) {
    if (a == i) continue;
    for (std::size_t b = 0, rb = 0; b < m.cols(); ++b) {
      if (b == i) continue;
      r(ra, rb++) = m(a, b);
    }
    ++ra;
  }
  return r;
}

bool is_alternating(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (!m(j, j).is_zero()) return false;
    for (std::size_t k = j + 1; k < m.cols(); ++k)
      if (m(j, k) != -m(k, j)) return false;
  }
  return true;
}

bool is_alternating(const PolyMatrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!m(j, j).is_zero()) return false;
    for (std::size_t k = j + 1; k < m.size(); ++k)
      if (m(j, k) != -m(k, j)) return false;
  }
  return true;
}

namespace {

// Pf over the index set `mask`: expand along its smallest index s0,
// Pf(S) = sum_k (-1)^(k+1) a(s0, s_k) Pf(S \ {s0, s_k}).
template <typename T, typename Entry>
T pfaffian_subset(std::uint32_t mask, const Entry& entry, const T& zero, const T& one,
                  std::unordered_map<std::uint32_t, T>& memo) {
  if (mask == 0) return one;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int s0 = __builtin_ctz(mask);
  const std::uint32_t rest = mask & ~(1U << s0);
  T sum = zero;
  int k = 0;
  for (std::uint32_t bits = rest; bits; bits &= bits - 1) {
    const int sk = __builtin_ctz(bits);
    ++k;
    const T& a = entry(s0, sk);
    if (a.is_zero()) continue;
    T term = a * pfaffian_subset(rest & ~(1U << sk), entry, zero, one, memo);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace

Scalar pfaffian(const ScalarMatrix& m) {
  if (!is_alternating(m)) throw InvalidArgument("pfaffian of a non-alternating matrix");
  const std::size_t n = m.rows();
  if (n > 31) throw DimensionError("pfaffian size limit exceeded");
  if (n % 2 == 1) return Scalar::zero(m.field());
  std::unordered_map<std::uint32_t, Scalar> memo;
  auto entry = [&](int i, int j) -> const Scalar& { return m(i, j); };
  return pfaffian_subset<Scalar>((n == 0) ? 0U : ((1U << n) - 1), entry, Scalar::zero(m.field()),
                                 Scalar::one(m.field()), memo);
}

MultiPoly pfaffian(const PolyMatrix& m) {
  if (!is_alternating(m)) throw InvalidArgument("pfaffian of a non-alternating matrix");
  const std::size_t n = m.size();
  if (n > 31) throw DimensionError("pfaffian size limit exceeded");
  const MultiPoly zero(m.nvars(), m.field());
  if (n % 2 == 1) return zero;
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  auto entry = [&](int i, int j) -> const MultiPoly& { return m(i, j); };
  return pfaffian_subset<MultiPoly>((n == 0) ? 0U : ((1U << n) - 1), entry, zero,
                                    MultiPoly::constant(m.nvars(), Scalar::one(m.field())), memo);
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldSpec& field = m.field();
  if (n == 0) return Scalar::one(field);
  ScalarMatrix a = m;
  Scalar prev = Scalar::one(field);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && a(i, k).is_zero()) ++i;
      if (i == n) return Scalar::zero(field);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Scalar::zero(field);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace {

// det of rows [row, n) restricted to the columns in `mask`.
MultiPoly cofactor_det(const PolyMatrix& m, std::size_t row, std::uint32_t mask,
                       std::unordered_map<std::uint32_t, MultiPoly>& memo) {
  if (mask == 0) return MultiPoly::constant(m.nvars(), Scalar::one(m.field()));
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  MultiPoly sum(m.nvars(), m.field());
  int k = 0;
  for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++k) {
    const int col = __builtin_ctz(bits);
    const MultiPoly& a = m(row, static_cast<std::size_t>(col));
    if (a.is_zero()) continue;
    MultiPoly term = a * cofactor_det(m, row + 1, mask & ~(1U << col), memo);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > 31) throw DimensionError("determinant size limit exceeded");
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  return cofactor_det(m, 0, n == 0 ? 0U : ((1U << n) - 1), memo);
}

}  // namespace trigeom
