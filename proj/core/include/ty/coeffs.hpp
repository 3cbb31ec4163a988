#pragma once

#include <optional>

#include "ty/pair.hpp"
#include "ty/report.hpp"

namespace ty {

// Coefficient tensors of the quantized defining relations.
//
// Untwisted algebra (level-2/3 closure):
//   beta[a,b,c; i,j,k], gamma[a,b,c,d; i,j,k]
// Twisted algebra of a proper pair (level-2/3 closure):
//   lambda[p,q; l,m,n] over m,m; h,h,h
//   upsilon[p,q,r; l,m,u] over m,m,m; h,h,m
// Even twisted algebra (level-4 closure) and its coaction data:
//   h_t, hbar_t, phi_t, psi_t:  [i; a,b,c], symmetric in (b,c)
//   Psi[a,b,c; i,j,k], Phi[a,b,c; i,j,k], PhiBar[a,b,c; i,j,k,l,m],
//   W[c,d; i,j,k]
struct CoeffBundle {
  std::optional<SparseTensor> beta, gamma;
  std::optional<SparseTensor> lambda, upsilon;
  std::optional<SparseTensor> h_t, hbar_t, phi_t, psi_t;
  std::optional<SparseTensor> Psi, Phi, PhiBar, W;
  std::optional<Rational> counit_center;
};

// beta_{abc}^{ijk} and gamma_{abcd}^{ijk} of the untwisted closure relations.
std::pair<SparseTensor, SparseTensor> yangian_closure_coeffs(const LieAlgebra& L);

// Coefficient tensor of the symmetric cube on the right-hand side of the
// level-2 twisted closure relation. Requires a proper pair of rank >= 2.
SparseTensor twisted_closure_lambda(const SymmetricPair& P);

// Coefficient tensor of the level-3 twisted closure relation. Computes the
// two equivalent contraction routes independently and throws if they
// disagree (internal consistency of the blocked identities).
SparseTensor twisted_closure_upsilon(const SymmetricPair& P);

// The two routes separately, already combined with their correction terms;
// used by the verification suite.
std::pair<SparseTensor, SparseTensor> upsilon_routes(const SymmetricPair& P);

// Second, independently contracted route to lambda (coefficient matching
// through the coaction); only the fully symmetrized parts are determined.
SparseTensor lambda_coaction_route(const SymmetricPair& P);

// The quadratic coaction tails (cheap, rank 4):
//   phi = symmetrized four-fold contraction / (4 c_g), psi the double
//   contraction, h = phi + 2 psi, hbar = phi - psi.
struct CoactionTails {
  SparseTensor h_t, hbar_t, phi_t, psi_t;
};
CoactionTails coaction_tails(const LieAlgebra& L);

struct EvenCoeffs {
  SparseTensor h_t, hbar_t, phi_t, psi_t;
  SparseTensor Psi, Phi, PhiBar, W;
};

// How the doubly-nested cyclic index group inside the cubic coefficient is
// expanded: a cyclic sum over all five slots with a nested cyclic sum over
// the inner triple (15 arrangements), or a cyclic sum over the three outer
// items with the inner triple moving as a block (9 arrangements). The
// rank-2 special-case identities pin outer5; outer3 is kept for the
// cross-check in the test suite.
enum class NestedReading { outer5, outer3 };

EvenCoeffs even_closure_coeffs(const LieAlgebra& L,
                               NestedReading reading = NestedReading::outer5);

// Simplified forms of Psi/Phi/PhiBar valid for sl3, stated via beta and
// phi; they agree with the general formulas on the symmetrized parts.
SparseTensor simplified_psi_sl3(const LieAlgebra& L, const SparseTensor& beta,
                                const SparseTensor& phi_t);
SparseTensor simplified_phi_sl3(const SparseTensor& beta);
SparseTensor simplified_phibar_sl3(const LieAlgebra& L, const SparseTensor& beta);

// The tensor identities used by the closure-relation proofs: the
// co-Jacobi combination of the coaction coefficients, the symmetrized
// contraction rearrangement and its two auxiliary identities, the
// reduction identities for the twisted combinations, and the equality of
// the two upsilon routes. Pass a pair for the blocked identities, or
// nullptr to run only the algebra-level ones.
Report verify_proof_identities(const LieAlgebra& L, const SymmetricPair* P);

CoeffBundle bundle_for_pair(const SymmetricPair& P);
CoeffBundle bundle_for_even(const LieAlgebra& L);

}  // namespace ty
