#include "ty/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ty/error.hpp"

namespace ty {

namespace {
const Rational kZero;

std::string idx_str(const Index& idx, int rank) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank; ++i) os << (i ? "," : "") << int(idx[i]);
  os << ")";
  return os.str();
}
}  // namespace

SparseTensor::SparseTensor(std::vector<int> dims, std::vector<Variance> variance)
    : dims_(std::move(dims)), variance_(std::move(variance)) {
  require(dims_.size() == variance_.size(), "SparseTensor: dims/variance size mismatch");
  require(static_cast<int>(dims_.size()) <= kMaxRank, "SparseTensor: rank too large");
  for (int d : dims_) require(d >= 0 && d < 256, "SparseTensor: dimension out of range");
}

SparseTensor SparseTensor::scalar(const Rational& value) {
  SparseTensor t({}, {});
  if (!value.is_zero()) t.entries_[Index{}] = value;
  return t;
}

SparseTensor SparseTensor::delta(int dim) {
  SparseTensor t({dim, dim}, {Variance::Up, Variance::Down});
  for (int i = 0; i < dim; ++i) t.entries_[make_index({i, i})] = Rational(1);
  return t;
}

SparseTensor SparseTensor::diagonal(const std::vector<Rational>& diag) {
  int n = static_cast<int>(diag.size());
  SparseTensor t({n, n}, {Variance::Up, Variance::Down});
  for (int i = 0; i < n; ++i)
    if (!diag[i].is_zero()) t.entries_[make_index({i, i})] = diag[i];
  return t;
}

void SparseTensor::check_index(const Index& idx) const {
  for (int i = 0; i < rank(); ++i)
    require(idx[i] < dims_[i], "SparseTensor: index " + idx_str(idx, rank()) +
                                   " out of range for dims");
  for (int i = rank(); i < kMaxRank; ++i)
    require(idx[i] == 0, "SparseTensor: stray index beyond rank");
}

const Rational& SparseTensor::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? kZero : it->second;
}

void SparseTensor::add_at(const Index& idx, const Rational& value) {
  if (value.is_zero()) return;
  check_index(idx);
  auto [it, inserted] = entries_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseTensor::set_at(const Index& idx, const Rational& value) {
  check_index(idx);
  if (value.is_zero())
    entries_.erase(idx);
  else
    entries_[idx] = value;
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& o) {
  require(dims_ == o.dims_ && variance_ == o.variance_,
          "SparseTensor: sum of incompatible tensors " + describe() + " vs " + o.describe());
  for (const auto& [idx, v] : o.entries_) add_at(idx, v);
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& o) {
  require(dims_ == o.dims_ && variance_ == o.variance_,
          "SparseTensor: difference of incompatible tensors");
  for (const auto& [idx, v] : o.entries_) add_at(idx, -v);
  return *this;
}

SparseTensor SparseTensor::operator-() const {
  SparseTensor t(dims_, variance_);
  for (const auto& [idx, v] : entries_) t.entries_[idx] = -v;
  return t;
}

SparseTensor SparseTensor::scaled(const Rational& c) const {
  SparseTensor t(dims_, variance_);
  if (c.is_zero()) return t;
  for (const auto& [idx, v] : entries_) t.entries_[idx] = v * c;
  return t;
}

bool operator==(const SparseTensor& a, const SparseTensor& b) {
  return a.dims_ == b.dims_ && a.variance_ == b.variance_ && a.entries_ == b.entries_;
}

SparseTensor SparseTensor::permuted(const std::vector<int>& perm) const {
  require(static_cast<int>(perm.size()) == rank(), "permuted: bad permutation size");
  std::vector<int> ndims(rank());
  std::vector<Variance> nvar(rank());
  for (int i = 0; i < rank(); ++i) {
    ndims[i] = dims_[perm[i]];
    nvar[i] = variance_[perm[i]];
  }
  SparseTensor t(std::move(ndims), std::move(nvar));
  for (const auto& [idx, v] : entries_) {
    Index nidx{};
    for (int i = 0; i < rank(); ++i) nidx[i] = idx[perm[i]];
    t.entries_[nidx] = v;
  }
  return t;
}

std::string SparseTensor::describe() const {
  std::ostringstream os;
  os << "tensor[";
  for (int i = 0; i < rank(); ++i) {
    os << (i ? "," : "") << dims_[i] << (variance_[i] == Variance::Up ? "^" : "_");
  }
  os << "]";
  return os.str();
}

SparseTensor contract(const SparseTensor& a, const SparseTensor& b,
                      const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> a_used(a.rank(), false), b_used(b.rank(), false);
  for (const auto& [ia, ib] : pairs) {
    std::ostringstream tag;
    tag << "contract: pair (" << ia << "," << ib << ")";
    require(ia >= 0 && ia < a.rank() && ib >= 0 && ib < b.rank(), tag.str() + " out of range");
    require(!a_used[ia] && !b_used[ib], tag.str() + " repeats a slot");
    require(a.dims()[ia] == b.dims()[ib],
            tag.str() + " dimension mismatch " + std::to_string(a.dims()[ia]) + " vs " +
                std::to_string(b.dims()[ib]));
    require(a.variance()[ia] != b.variance()[ib],
            tag.str() + " variance mismatch (must pair one upper with one lower)");
    a_used[ia] = true;
    b_used[ib] = true;
  }

  std::vector<int> a_free, b_free;
  for (int i = 0; i < a.rank(); ++i)
    if (!a_used[i]) a_free.push_back(i);
  for (int i = 0; i < b.rank(); ++i)
    if (!b_used[i]) b_free.push_back(i);

  std::vector<int> dims;
  std::vector<Variance> var;
  for (int i : a_free) { dims.push_back(a.dims()[i]); var.push_back(a.variance()[i]); }
  for (int i : b_free) { dims.push_back(b.dims()[i]); var.push_back(b.variance()[i]); }
  require(static_cast<int>(dims.size()) <= kMaxRank, "contract: result rank too large");
  SparseTensor out(std::move(dims), std::move(var));

  // Bucket b's entries by the contracted sub-index.
  auto key_of_b = [&](const Index& idx) {
    Index k{};
    int i = 0;
    for (const auto& [ia, ib] : pairs) { (void)ia; k[i++] = idx[ib]; }
    return k;
  };
  std::map<Index, std::vector<const SparseTensor::EntryMap::value_type*>> buckets;
  for (const auto& e : b.entries()) buckets[key_of_b(e.first)].push_back(&e);

  for (const auto& [aidx, av] : a.entries()) {
    Index k{};
    int i = 0;
    for (const auto& [ia, ib] : pairs) { (void)ib; k[i++] = aidx[ia]; }
    auto it = buckets.find(k);
    if (it == buckets.end()) continue;
    for (const auto* be : it->second) {
      Index oidx{};
      int o = 0;
      for (int s : a_free) oidx[o++] = aidx[s];
      for (int s : b_free) oidx[o++] = be->first[s];
      out.add_at(oidx, av * be->second);
    }
  }
  return out;
}

SparseTensor outer(const SparseTensor& a, const SparseTensor& b) {
  return contract(a, b, {});
}

namespace {
std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_slot_group(const SparseTensor& t, const std::vector<int>& slots, const char* who) {
  require(!slots.empty(), std::string(who) + ": empty slot list");
  for (int s : slots)
    require(s >= 0 && s < t.rank(), std::string(who) + ": slot out of range");
  for (size_t i = 1; i < slots.size(); ++i) {
    require(t.dims()[slots[i]] == t.dims()[slots[0]],
            std::string(who) + ": slots have different ranges");
    require(t.variance()[slots[i]] == t.variance()[slots[0]],
            std::string(who) + ": variance mismatch among slots");
  }
}

SparseTensor sum_over_slot_arrangements(const SparseTensor& t, const std::vector<int>& slots,
                                        const std::vector<std::vector<int>>& arrangements) {
  SparseTensor out(t.dims(), t.variance());
  for (const auto& arr : arrangements) {
    for (const auto& [idx, v] : t.entries()) {
      Index nidx = idx;
      for (size_t i = 0; i < slots.size(); ++i) nidx[slots[i]] = idx[slots[arr[i]]];
      out.add_at(nidx, v);
    }
  }
  return out;
}
}  // namespace

SparseTensor symmetrize(const SparseTensor& t, const std::vector<int>& slots) {
  check_slot_group(t, slots, "symmetrize");
  int m = static_cast<int>(slots.size());
  auto perms = all_permutations(m);
  SparseTensor sum = sum_over_slot_arrangements(t, slots, perms);
  Rational factorial(1);
  for (int i = 2; i <= m; ++i) factorial *= Rational(i);
  return sum.scaled(factorial.inverse());
}

SparseTensor cyclic_sum(const SparseTensor& t, const std::vector<int>& slots) {
  check_slot_group(t, slots, "cyclic_sum");
  int m = static_cast<int>(slots.size());
  std::vector<std::vector<int>> cycles;
  for (int shift = 0; shift < m; ++shift) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = (i + shift) % m;
    cycles.push_back(std::move(p));
  }
  return sum_over_slot_arrangements(t, slots, cycles);
}

SparseTensor symmetric_accumulation(const SparseTensor& t, const std::vector<int>& slots) {
  check_slot_group(t, slots, "symmetric_accumulation");
  SparseTensor out(t.dims(), t.variance());
  std::vector<uint8_t> vals(slots.size());
  for (const auto& [idx, v] : t.entries()) {
    for (size_t i = 0; i < slots.size(); ++i) vals[i] = idx[slots[i]];
    std::sort(vals.begin(), vals.end());
    Index nidx = idx;
    for (size_t i = 0; i < slots.size(); ++i) nidx[slots[i]] = vals[i];
    out.add_at(nidx, v);
  }
  return out;
}

SparseTensor slice(const SparseTensor& t, int slot, int value) {
  require(slot >= 0 && slot < t.rank(), "slice: slot out of range");
  require(value >= 0 && value < t.dims()[slot], "slice: value out of range");
  std::vector<int> dims;
  std::vector<Variance> var;
  for (int i = 0; i < t.rank(); ++i) {
    if (i == slot) continue;
    dims.push_back(t.dims()[i]);
    var.push_back(t.variance()[i]);
  }
  SparseTensor out(std::move(dims), std::move(var));
  for (const auto& [idx, v] : t.entries()) {
    if (idx[slot] != value) continue;
    Index nidx{};
    int o = 0;
    for (int i = 0; i < t.rank(); ++i)
      if (i != slot) nidx[o++] = idx[i];
    out.set_at(nidx, v);
  }
  return out;
}

SparseTensor einsum(const std::string& spec, const std::vector<const SparseTensor*>& operands) {
  auto arrow = spec.find("->");
  require(arrow != std::string::npos, "einsum: spec needs '->'");
  std::string lhs = spec.substr(0, arrow);
  std::string out_labels = spec.substr(arrow + 2);

  std::vector<std::string> in_labels;
  {
    std::string cur;
    for (char ch : lhs) {
      if (ch == ',') { in_labels.push_back(cur); cur.clear(); }
      else if (!isspace(static_cast<unsigned char>(ch))) cur.push_back(ch);
    }
    in_labels.push_back(cur);
  }
  require(in_labels.size() == operands.size(), "einsum: operand count mismatch in '" + spec + "'");

  struct Occ { int op; int slot; };
  std::map<char, std::vector<Occ>> occ;
  for (size_t i = 0; i < operands.size(); ++i) {
    require(static_cast<int>(in_labels[i].size()) == operands[i]->rank(),
            "einsum: label count does not match rank of operand " + std::to_string(i) + " in '" +
                spec + "'");
    for (int s = 0; s < operands[i]->rank(); ++s)
      occ[in_labels[i][s]].push_back({static_cast<int>(i), s});
  }

  // validate labels
  for (auto& [label, v] : occ) {
    bool in_out = out_labels.find(label) != std::string::npos;
    if (v.size() == 2 && !in_out) {
      require(v[0].op != v[1].op,
              std::string("einsum: label '") + label + "' repeated within one operand");
      const auto& a = *operands[v[0].op];
      const auto& b = *operands[v[1].op];
      require(a.dims()[v[0].slot] == b.dims()[v[1].slot],
              std::string("einsum: dimension mismatch on label '") + label + "' in '" + spec + "'");
      require(a.variance()[v[0].slot] != b.variance()[v[1].slot],
              std::string("einsum: variance mismatch on label '") + label + "' in '" + spec + "'");
    } else if (v.size() == 1) {
      require(in_out, std::string("einsum: dangling label '") + label + "' in '" + spec + "'");
    } else {
      fail(std::string("einsum: label '") + label + "' used more than twice in '" + spec + "'");
    }
  }
  for (char label : out_labels) {
    auto it = occ.find(label);
    require(it != occ.end() && it->second.size() == 1,
            std::string("einsum: output label '") + label + "' must appear exactly once on inputs");
  }

  // Pairwise left fold: contract accumulated tensor with the next operand.
  // Active labels of the accumulator are tracked in acc_labels.
  std::string acc_labels = in_labels[0];
  SparseTensor acc = *operands[0];
  for (size_t i = 1; i < operands.size(); ++i) {
    const std::string& bl = in_labels[i];
    std::vector<std::pair<int, int>> pairs;
    for (int sa = 0; sa < static_cast<int>(acc_labels.size()); ++sa) {
      auto pos = bl.find(acc_labels[sa]);
      if (pos != std::string::npos) pairs.push_back({sa, static_cast<int>(pos)});
    }
    // labels contracted later (with a future operand) or kept must survive; contract()
    // keeps free slots in order, so rebuild the label string the same way.
    std::string next;
    for (int sa = 0; sa < static_cast<int>(acc_labels.size()); ++sa) {
      bool used = false;
      for (auto& [pa, pb] : pairs) used |= (pa == sa);
      if (!used) next.push_back(acc_labels[sa]);
    }
    for (int sb = 0; sb < static_cast<int>(bl.size()); ++sb) {
      bool used = false;
      for (auto& [pa, pb] : pairs) used |= (pb == sb);
      if (!used) next.push_back(bl[sb]);
    }
    acc = contract(acc, *operands[i], pairs);
    acc_labels = std::move(next);
  }

  // Sum out labels that are repeated within a single operand never occur
  // (validated above), so what remains is a permutation to output order.
  require(acc_labels.size() == out_labels.size(),
          "einsum: internal label bookkeeping error in '" + spec + "'");
  std::vector<int> perm(out_labels.size());
  for (size_t i = 0; i < out_labels.size(); ++i) {
    auto pos = acc_labels.find(out_labels[i]);
    require(pos != std::string::npos, "einsum: output label missing after contraction");
    perm[i] = static_cast<int>(pos);
  }
  return acc.permuted(perm);
}

}  // namespace ty
