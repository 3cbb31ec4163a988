#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ty/coeffs.hpp"
#include "ty/pair.hpp"
#include "ty/report.hpp"

namespace ty {

// Generator kinds of the quantized current algebras and their coideal
// subalgebras. X carries the level-0 parent basis, J the level-1
// generators, G the level-2 generators of the even twisted algebra;
// TX/TB are the level-0/1 generators of a proper twisted algebra over
// the adapted h/m bases. Free is an abstract symbol with no relations.
enum class GenKind : uint8_t { X = 0, J = 1, G = 2, TX = 3, TB = 4, Free = 5 };

int gen_grade(GenKind k);

// One generator occurrence inside a word: tensor slot, kind, basis index.
struct Gen {
  uint8_t slot;
  GenKind kind;
  uint8_t index;
};

uint32_t pack_gen(int slot, GenKind kind, int index);
Gen unpack_gen(uint32_t g);

using Word = std::vector<uint32_t>;

// Bracket data for the normal form: the parent algebra always, plus the
// blocked constants when twisted level-0/1 generators appear. A default
// constructed context treats every pair as irreducible (free algebra).
class NcContext {
public:
  NcContext() : L_(nullptr), P_(nullptr) {}
  explicit NcContext(const LieAlgebra& L) : L_(&L), P_(nullptr) {}
  NcContext(const LieAlgebra& L, const SymmetricPair& P) : L_(&L), P_(&P) {}

  const LieAlgebra* algebra() const { return L_; }
  const SymmetricPair* pair() const { return P_; }

  // Lie bracket of two generators when one of them has grade 0 within the
  // same side; empty optional marks an irreducible pair.
  struct BracketTerm {
    GenKind kind;
    int index;
    Rational coeff;
  };
  bool bracket(const Gen& a, const Gen& b, std::vector<BracketTerm>& out) const;

private:
  const LieAlgebra* L_;
  const SymmetricPair* P_;
};

// hbar-graded noncommutative polynomial: exact coefficients per
// (hbar power, word). Words are kept in normal order: slots ascending;
// within a slot, grade-0 generators sorted to the left via the Lie
// relations; products of two generators of grade >= 1 are irreducible and
// keep their original order.
class NcPoly {
public:
  NcPoly() : nslots_(1) {}
  explicit NcPoly(int nslots) : nslots_(nslots) {}

  static NcPoly zero(int nslots) { return NcPoly(nslots); }
  static NcPoly one(int nslots);
  static NcPoly generator(int nslots, int slot, GenKind kind, int index,
                          Rational coeff = Rational(1), int hbar = 0);

  int nslots() const { return nslots_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::pair<int, Word>, Rational>& terms() const { return terms_; }

  void add_term(int hbar, const Word& w, const Rational& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly scaled(const Rational& c) const;
  NcPoly with_hbar_shift(int k) const;  // multiply by hbar^k

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.nslots_ == b.nslots_ && a.terms_ == b.terms_;
  }

  std::string str(const NcContext& ctx) const;

private:
  int nslots_;
  std::map<std::pair<int, Word>, Rational> terms_;
};

// Rewrites every term into normal order using the Lie relations of the
// context; terminates and is idempotent.
NcPoly normal_form(const NcPoly& p, const NcContext& ctx);

NcPoly multiply(const NcPoly& a, const NcPoly& b, const NcContext& ctx);
NcPoly bracket(const NcPoly& a, const NcPoly& b, const NcContext& ctx);

// (1/m!) sum over all orderings of the product.
NcPoly symmetrized_product(const std::vector<NcPoly>& factors, const NcContext& ctx);

// Linear combination of generators of one kind on one slot.
NcPoly vector_poly(int nslots, int slot, GenKind kind, const RatVec& coeffs);

// Canonical quadratic elements.
NcPoly casimir_poly(const LieAlgebra& L, int nslots, int slot);         // eta^{ab} x_a x_b
NcPoly omega_poly(const LieAlgebra& L, int nslots, int slot_l, int slot_r);  // eta^{ab} x_a (x) x_b
// Casimir of h embedded in the parent coordinates (kind X words).
NcPoly casimir_h_poly(const SymmetricPair& P, int nslots, int slot);
// Omega of h: left factor embedded in parent coordinates, right factor
// twisted level-0 (kind TX) when `right_twisted`, else also embedded.
NcPoly omega_h_poly(const SymmetricPair& P, int nslots, int slot_l, int slot_r,
                    bool right_twisted);

// Coproduct applied to the generators of slot `slot`, splitting it into
// slots (slot, slot+1); later slots shift right by one.
NcPoly coproduct_slot(const NcPoly& p, int slot, const LieAlgebra& L);
NcPoly coproduct(const NcPoly& p, const LieAlgebra& L);  // slot 0 of a 1-slot poly

// Coaction of the proper twisted algebra applied at a twisted slot
// (TX/TB generators), splitting it into (untwisted, twisted).
NcPoly coaction_proper_slot(const NcPoly& p, int slot, const SymmetricPair& P);
NcPoly coaction_proper(const NcPoly& p, const SymmetricPair& P);

// Coaction of the even twisted algebra (x/G generators). When
// `remark_form` is set the quadratic tail is written through the h/hbar
// coefficient tensors instead of the nested Omega brackets.
NcPoly coaction_even_slot(const NcPoly& p, int slot, const LieAlgebra& L, bool remark_form);
NcPoly coaction_even(const NcPoly& p, const LieAlgebra& L, bool remark_form = false);

// Natural embeddings into the untwisted algebra, applied to the twisted
// generators found at `slot`.
NcPoly embed_proper_slot(const NcPoly& p, int slot, const SymmetricPair& P);
NcPoly embed_even_slot(const NcPoly& p, int slot, const LieAlgebra& L);

// phi images of single twisted generators (1-slot polynomials).
NcPoly phi_of_B(const SymmetricPair& P, int p);
NcPoly phi_of_G(const LieAlgebra& L, int a);

// Level-0 coaction tail of the even case: the two-factor element whose
// coefficients are the h/hbar tensors.
NcPoly w0_element(const LieAlgebra& L, int a, int nslots, int slot_l, int slot_r);

// Antipode of the untwisted algebra on a 1-slot polynomial.
NcPoly antipode(const NcPoly& p, const LieAlgebra& L);

// Counit: polynomial in hbar and the free central parameter c; key is
// (hbar power, c power).
std::map<std::pair<int, int>, Rational> counit_eval(const NcPoly& p, const SymmetricPair* P);

// --- verification suites -------------------------------------------------

// Bracket expansion identities for the Casimir 2-tensor (rank >= 2), plus
// the tensor-level rearrangement identity.
Report check_omega_bracket_identities(const LieAlgebra& L);

// Rearrangement identities of symmetrized products in a free algebra.
Report check_symmetrizer_identities();

// Coproduct homomorphism on the level-0/1 Lie relations, and
// coassociativity on the level-1 generators.
Report check_coproduct_axioms(const LieAlgebra& L);

// Coideal coassociativity and coinvariance for the proper twisted
// coaction on every generator, plus the coaction homomorphism on the
// twisted Lie relations.
Report check_coideal_proper(const SymmetricPair& P);

// Same for the even twisted coaction, plus the equality of its two forms
// and the level-0 coaction-tail constraint.
Report check_coideal_even(const LieAlgebra& L);

// Antipode antiautomorphism on the Lie relations, counit annihilation
// (with a symbolic central parameter on pairs with a centre), Casimir
// centrality, and grading homogeneity of the coproduct.
Report check_antipode_counit(const LieAlgebra& L, const SymmetricPair* P);

}  // namespace ty
