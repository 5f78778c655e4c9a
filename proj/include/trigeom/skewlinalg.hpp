#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trigeom/field.hpp"
#include "trigeom/multipoly.hpp"

namespace trigeom {

class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static ScalarMatrix identity(std::size_t n, const FieldSpec& field);
  // Rows must be non-empty, of equal length and over one field.
  static ScalarMatrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;
  ScalarMatrix transpose() const;
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

// Square matrix with polynomial entries in K[u1..u_nvars].
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t nvars, const FieldSpec& field);

  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  ScalarMatrix evaluate(const Vector& point) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string(std::string_view var = "u") const;

 private:
  std::size_t n_, nvars_;
  FieldSpec field_;
  std::vector<MultiPoly> data_;
};

struct RankKernel {
  std::size_t rank;
  // Basis of {v : Mv = 0}, in reduced row echelon form.
  std::vector<Vector> kernel;
};

// Reduced row echelon form; pivot columns are appended to *pivots if given.
ScalarMatrix rref(const ScalarMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const ScalarMatrix& m);
RankKernel rank_and_kernel(const ScalarMatrix& m);
// Nonzero rows of rref; a canonical basis of the row space.
std::vector<Vector> row_space_basis(const std::vector<Vector>& rows, std::size_t width,
                                    const FieldSpec& field);
bool same_row_space(const ScalarMatrix& a, const ScalarMatrix& b);

// Delete row and column i (0-based).
PolyMatrix principal_delete(const PolyMatrix& m, std::size_t i);
ScalarMatrix principal_delete(const ScalarMatrix& m, std::size_t i);

// Zero diagonal and m(j,k) = -m(k,j); in characteristic 2 this is the
// zero-diagonal symmetric condition.
bool is_alternating(const ScalarMatrix& m);
bool is_alternating(const PolyMatrix& m);

// First-row expansion memoised on index subsets. Odd sizes give 0; the empty
// matrix gives 1. Throws on non-alternating input.
Scalar pfaffian(const ScalarMatrix& m);
MultiPoly pfaffian(const PolyMatrix& m);

// Fraction-free (Bareiss) elimination.
Scalar determinant(const ScalarMatrix& m);
// Cofactor expansion memoised on column subsets.
MultiPoly determinant(const PolyMatrix& m);

}  // namespace trigeom
