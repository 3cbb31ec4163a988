#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ty/rational.hpp"

namespace ty {

enum class Variance : uint8_t { Up, Down };

// Index tuple, fixed storage. Slots beyond the rank stay zero so that the
// lexicographic byte order of the array equals the lexicographic order of
// the tuple.
constexpr int kMaxRank = 16;
using Index = std::array<uint8_t, kMaxRank>;

inline Index make_index(std::initializer_list<int> v) {
  Index idx{};
  int i = 0;
  for (int x : v) idx[i++] = static_cast<uint8_t>(x);
  return idx;
}

// Sparse multi-index array of exact rationals with a per-slot variance
// signature. Zero entries are never stored; equality is entrywise.
// Immutable in spirit: operations return new tensors.
class SparseTensor {
public:
  using EntryMap = std::map<Index, Rational>;

  SparseTensor() = default;
  SparseTensor(std::vector<int> dims, std::vector<Variance> variance);

  static SparseTensor scalar(const Rational& value);
  // Identity delta with one upper and one lower slot.
  static SparseTensor delta(int dim);
  // Diagonal rank-2 tensor (one up, one down) with the given diagonal.
  static SparseTensor diagonal(const std::vector<Rational>& diag);

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Variance>& variance() const { return variance_; }
  const EntryMap& entries() const { return entries_; }
  size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  const Rational& at(const Index& idx) const;  // zero if absent
  const Rational& at(std::initializer_list<int> idx) const { return at(make_index(idx)); }
  // Adds into an entry, pruning if the result is zero.
  void add_at(const Index& idx, const Rational& value);
  void set_at(const Index& idx, const Rational& value);

  SparseTensor& operator+=(const SparseTensor& o);
  SparseTensor& operator-=(const SparseTensor& o);
  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  SparseTensor operator-() const;
  SparseTensor scaled(const Rational& c) const;

  friend bool operator==(const SparseTensor& a, const SparseTensor& b);
  friend bool operator!=(const SparseTensor& a, const SparseTensor& b) { return !(a == b); }

  // Relabel slots: result slot i is input slot perm[i].
  SparseTensor permuted(const std::vector<int>& perm) const;

  std::string describe() const;  // rank/dims/variance summary for messages

private:
  void check_index(const Index& idx) const;

  std::vector<int> dims_;
  std::vector<Variance> variance_;
  EntryMap entries_;
};

// Einstein contraction of tensor pairs: each pair (slot of a, slot of b)
// must match one upper with one lower slot of equal range. The result
// carries a's uncontracted slots followed by b's.
SparseTensor contract(const SparseTensor& a, const SparseTensor& b,
                      const std::vector<std::pair<int, int>>& pairs);

// Outer product (no contraction).
SparseTensor outer(const SparseTensor& a, const SparseTensor& b);

// Average over all permutations of the listed slots (factor 1/m!).
SparseTensor symmetrize(const SparseTensor& t, const std::vector<int>& slots);

// Sum (no averaging factor) over cyclic permutations of the listed slots.
SparseTensor cyclic_sum(const SparseTensor& t, const std::vector<int>& slots);

// Canonical accumulation over the listed slots: every entry is moved to
// the index tuple with those slots sorted ascending. Two tensors have
// equal symmetrizations over the slots iff their accumulations are equal,
// at a fraction of the cost of symmetrize().
SparseTensor symmetric_accumulation(const SparseTensor& t, const std::vector<int>& slots);

// Fix one slot to a value and drop it.
SparseTensor slice(const SparseTensor& t, int slot, int value);

// Contraction written with single-letter slot labels, e.g.
//   einsum("ail,bjm,ckn,lmn->abcijk", {&a1, &a2, &a3, &a0})
// A label appearing twice across inputs is summed over (one slot upper,
// one lower); a label appearing once must appear in the output.
SparseTensor einsum(const std::string& spec, const std::vector<const SparseTensor*>& operands);

}  // namespace ty
