#include "ty/ratmat.hpp"

#include <algorithm>

#include "ty/error.hpp"

namespace ty {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  require(a.cols_ == b.rows_, "RatMat: shape mismatch in product");
  RatMat p(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        p.at(r, c) += a.at(r, k) * b.at(k, c);
      }
    }
  return p;
}

RatVec RatMat::apply(const RatVec& v) const {
  require(static_cast<int>(v.size()) == cols_, "RatMat: vector size mismatch");
  RatVec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

int RatMat::rref() {
  int lead = 0;
  for (int r = 0; r < rows_ && lead < cols_; ++r) {
    int pivot = -1;
    while (lead < cols_) {
      for (int i = r; i < rows_; ++i)
        if (!at(i, lead).is_zero()) { pivot = i; break; }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) return r;
    if (pivot != r)
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(r, c));
    Rational inv = at(r, lead).inverse();
    for (int c = lead; c < cols_; ++c) at(r, c) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, lead).is_zero()) continue;
      Rational f = at(i, lead);
      for (int c = lead; c < cols_; ++c) at(i, c) -= f * at(r, c);
    }
    ++lead;
  }
  int rank = 0;
  for (int r = 0; r < rows_; ++r) {
    bool nonzero = false;
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) { nonzero = true; break; }
    if (nonzero) ++rank;
  }
  return rank;
}

std::vector<RatVec> RatMat::kernel() const {
  RatMat m = *this;
  int rank = m.rref();
  std::vector<int> pivot_col;
  pivot_col.reserve(rank);
  {
    int c = 0;
    for (int r = 0; r < rank; ++r) {
      while (c < cols_ && m.at(r, c).is_zero()) ++c;
      pivot_col.push_back(c);
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols_);
    v[c] = Rational(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, c);
    // normalize: first nonzero coordinate 1
    for (int i = 0; i < cols_; ++i) {
      if (!v[i].is_zero()) {
        Rational inv = v[i].inverse();
        for (auto& x : v) x *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat RatMat::inverse() const {
  require(rows_ == cols_, "RatMat: inverse of non-square matrix");
  int n = rows_;
  RatMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = Rational(1);
  }
  int rank = aug.rref();
  require(rank == n, "RatMat: singular matrix has no inverse");
  RatMat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RatVec RatMat::solve(const RatVec& b) const {
  require(static_cast<int>(b.size()) == rows_, "RatMat: rhs size mismatch");
  RatMat aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  aug.rref();
  RatVec x(cols_);
  std::vector<bool> determined(cols_, false);
  for (int r = 0; r < rows_; ++r) {
    int lead = -1;
    for (int c = 0; c <= cols_; ++c)
      if (!aug.at(r, c).is_zero()) { lead = c; break; }
    if (lead < 0) continue;
    require(lead != cols_, "RatMat: inconsistent linear system");
    for (int c = lead + 1; c < cols_; ++c)
      require(aug.at(r, c).is_zero(), "RatMat: underdetermined linear system");
    x[lead] = aug.at(r, cols_);
    determined[lead] = true;
  }
  (void)determined;
  return x;
}

std::vector<RatVec> coordinates_in_basis(const std::vector<RatVec>& basis,
                                         const std::vector<RatVec>& vectors) {
  require(!basis.empty(), "coordinates_in_basis: empty basis");
  int dim = static_cast<int>(basis[0].size());
  int k = static_cast<int>(basis.size());
  RatMat m(dim, k);
  for (int c = 0; c < k; ++c) {
    require(static_cast<int>(basis[c].size()) == dim, "coordinates_in_basis: ragged basis");
    for (int r = 0; r < dim; ++r) m.at(r, c) = basis[c][r];
  }
  std::vector<RatVec> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(m.solve(v));
  return out;
}

}  // namespace ty
