#pragma once

#include <vector>

#include "ty/rational.hpp"

namespace ty {

using RatVec = std::vector<Rational>;

// Dense matrix over exact rationals. Small sizes only (basis-sized linear
// algebra: eigenspaces, form inversion, change of basis).
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatMat transposed() const;
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  RatVec apply(const RatVec& v) const;  // matrix * column vector

  // In-place reduced row echelon form; returns the rank.
  int rref();
  // Basis of the null space, each vector normalized so that its first
  // nonzero coordinate is 1; ordered by position of the free column.
  std::vector<RatVec> kernel() const;
  RatMat inverse() const;  // throws on singular input
  bool is_zero() const;

  // Solve A x = b; throws if inconsistent or underdetermined.
  RatVec solve(const RatVec& b) const;

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Express each of the given vectors in the span of `basis` (columns);
// throws if a vector is outside the span.
std::vector<RatVec> coordinates_in_basis(const std::vector<RatVec>& basis,
                                         const std::vector<RatVec>& vectors);

}  // namespace ty
