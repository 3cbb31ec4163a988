#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ty/pair.hpp"
#include "ty/report.hpp"

namespace ty {

// Context for the polynomial current algebra: either a plain algebra over
// its own basis, or a symmetric pair over the adapted basis (X's first,
// then Y's). Basis index i refers to that ordered basis.
class LoopCtx {
public:
  explicit LoopCtx(const LieAlgebra& L);
  explicit LoopCtx(const SymmetricPair& P);

  int dim() const { return dim_; }
  bool has_pair() const { return pair_ != nullptr; }
  const SymmetricPair& pair() const;
  const LieAlgebra& algebra() const { return *alg_; }
  int h_dim() const;  // 0 for plain algebras

  // structure constants in the context basis
  const SparseTensor& structure() const { return structure_; }
  // invariant form in the context basis (restriction for pairs)
  const SparseTensor& form() const { return form_; }
  std::string label(int i) const;

private:
  const LieAlgebra* alg_;
  const SymmetricPair* pair_;
  int dim_;
  SparseTensor structure_;
  SparseTensor form_;
};

// Finitely supported element of the current algebra: coefficient per
// (basis index, degree). Negative degrees appear only in pairing checks.
struct LoopElement {
  std::map<std::pair<int, int>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(int basis, int degree, const Rational& c);
  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  LoopElement scaled(const Rational& c) const;
  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return a.terms == b.terms;
  }
  std::string str(const LoopCtx& ctx) const;
};

LoopElement loop_term(int basis, int degree, Rational c = Rational(1));

// Graded bracket: degree of every product term is the sum of the degrees.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y, const LoopCtx& ctx);

// The involution extended to currents with the sign (-1)^degree.
LoopElement theta_extended(const LoopElement& x, const SymmetricPair& P);

// Invariant pairing of currents: form(x,y) when the degrees sum to -1.
Rational loop_pairing(const LoopElement& x, const LoopElement& y, const LoopCtx& ctx);

// Level-n generators built by the bracket recursion from levels 0 and 1;
// in this realization they must reproduce the single graded term x_a u^n.
LoopElement drinfeld_J(int n, int a, const LieAlgebra& L);

// Twisted generators: odd levels attached to m-indices, even levels to
// h-indices, built by the two alternating recursions. Rejects rank-one
// parents and identity involutions.
LoopElement drinfeld_B(int level, int idx, const SymmetricPair& P);

// Exact verification, in the current realization, of the classical limits
// of the defining relations: the level-2/3 relations of the untwisted
// algebra, the level-2/3 relations of the twisted algebra, and the even
// subalgebra relation with the level-2 generator substitution.
Report check_classical_relations(const LieAlgebra& L);
Report check_classical_relations(const SymmetricPair& P);

// Drinfel'd generator recursions against the graded basis, plus the
// bracket closure of the recursion-built generators, up to max_degree.
Report check_drinfeld_basis(const LieAlgebra& L, int max_degree);
Report check_drinfeld_basis(const SymmetricPair& P, int max_degree);

}  // namespace ty
