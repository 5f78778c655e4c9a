#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/triform.hpp"

namespace trigeom {

inline constexpr int kMaxDim = kMaxFormDim;

// Small prime field with table-driven inverses, used by the enumeration
// kernels. Elements are residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverse_;
};

struct FpVector {
  std::array<std::uint16_t, kMaxDim> c{};

  friend bool operator==(const FpVector& a, const FpVector& b) { return a.c == b.c; }
  friend bool operator<(const FpVector& a, const FpVector& b) { return a.c < b.c; }
};

// A projective line, stored as the point indices of the two rows of its
// reduced row echelon basis.
struct FpLine {
  std::uint64_t first;
  std::uint64_t second;

  friend bool operator==(const FpLine& a, const FpLine& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator<(const FpLine& a, const FpLine& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  }
};

// PG(n-1, p) with canonical point representatives (first nonzero
// coordinate 1) indexed by a closed-form bijection onto [0, point_count).
class ProjectiveSpace {
 public:
  ProjectiveSpace(int n, std::uint32_t p);

  int dim() const { return n_; }
  const PrimeField& field() const { return field_; }
  std::uint64_t point_count() const { return point_count_; }
  std::uint64_t line_count() const { return line_count_; }

  FpVector point(std::uint64_t index) const;
  // Index of [v]; v must be nonzero.
  std::uint64_t index_of(const FpVector& v) const;
  FpVector normalize(FpVector v) const;
  bool is_zero(const FpVector& v) const;

  // Canonical line through two independent vectors; throws if dependent.
  FpLine line_through(const FpVector& a, const FpVector& b) const;
  // The index-th line in pivot-pair order; lines are enumerated exactly once.
  FpLine line(std::uint64_t index) const;
  std::vector<std::uint64_t> points_on_line(const FpLine& l) const;
  std::array<FpVector, 2> line_basis(const FpLine& l) const { return {point(l.first), point(l.second)}; }

  // Reduced row echelon basis of the span (zero rows dropped).
  std::vector<FpVector> rref(std::vector<FpVector> rows) const;
  std::size_t rank(const std::vector<FpVector>& rows) const;
  // Sorted indices of the projective points of span(basis).
  std::vector<std::uint64_t> points_of_span(const std::vector<FpVector>& basis) const;
  bool in_span(const std::vector<FpVector>& rref_basis, const FpVector& v) const;

  Vector to_scalars(const FpVector& v) const;
  FpVector from_scalars(const Vector& v) const;

 private:
  std::uint64_t first_index_with_tail(int m) const;  // (p^m - 1) / (p - 1)

  int n_;
  PrimeField field_;
  FieldSpec spec_;
  std::vector<std::uint64_t> pow_;
  std::uint64_t point_count_;
  std::uint64_t line_count_;
  // Lines grouped by pivot pair (c1, c2): starting offset of each block.
  std::vector<std::array<std::uint64_t, 3>> line_blocks_;  // {c1, c2, start}
};

// Kernel of a matrix (rows over GF(p), `cols` meaningful columns); returned
// in reduced row echelon form.
std::vector<FpVector> fp_kernel(const PrimeField& f, std::vector<FpVector> rows, int cols);
int fp_rank(const PrimeField& f, std::vector<FpVector> rows, int cols);

}  // namespace trigeom
