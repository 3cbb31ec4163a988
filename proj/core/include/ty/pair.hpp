#pragma once

#include <string>
#include <vector>

#include "ty/lie.hpp"
#include "ty/report.hpp"

namespace ty {

// Involution of a Lie algebra, stored as the matrix theta_a^b with
// theta(x_a) = theta_a^b x_b; slots (Down, Up).
struct Involution {
  SparseTensor matrix;
};

Involution identity_involution(int dim);
// Validates theta^2 = id and the automorphism property against L.
void validate_involution(const LieAlgebra& L, const Involution& theta);

struct Block {
  std::string name;   // "a", "b", ... and "k" for the centre
  bool central = false;
  int offset = 0;     // first index of the block in the adapted h-basis
  int size = 0;
  Rational casimir;      // block Casimir eigenvalue c_(block)
  Rational casimir_bar;  // c_g - c_(block)
};

// Symmetric-pair decomposition g = h (+) m for an involution theta, over
// an adapted basis {X_alpha} of h (blocked: simple ideals first, centre
// last) and {Y_p} of m, with the blocked structure constants and forms.
struct SymmetricPair {
  LieAlgebra parent;
  Involution theta;
  std::vector<RatVec> h_basis;  // parent coordinates
  std::vector<RatVec> m_basis;
  std::vector<Block> blocks;
  std::vector<int> block_of;    // h-index -> position in blocks

  SparseTensor f;  // f_{alpha beta}^gamma, slots (h Down, h Down, h Up)
  SparseTensor g;  // g_{alpha p}^q,      slots (h Down, m Down, m Up)
  SparseTensor w;  // w_{pq}^alpha,       slots (m Down, m Down, h Up)

  SparseTensor kappa_h, kappa_h_inv;  // restricted form on h (block diagonal)
  SparseTensor kappa_m, kappa_m_inv;

  int hdim() const { return static_cast<int>(h_basis.size()); }
  int mdim() const { return static_cast<int>(m_basis.size()); }
  bool identity_theta() const { return m_basis.empty(); }
  const Rational& cg() const { return parent.casimir_adjoint; }

  // Raised constants; slot orders as stored here, not as typeset:
  //   f_up[alpha, lambda, beta] = kappa_h^{lambda rho} f[alpha, rho, beta]
  //   g_up[p, alpha, q]         = kappa_h^{alpha rho}  g[rho, p, q]
  //   w_up[alpha, p, q]         = kappa_m^{p r}        g[alpha, r, q]
  SparseTensor f_up() const;
  SparseTensor g_up() const;
  SparseTensor w_up() const;
  // Diagonal (h Up, h Down) tensor with 1/casimir_bar(block) on the diagonal.
  SparseTensor cbar_inv_diag() const;

  std::string h_label(int alpha) const;  // e.g. "e1-e2"
  std::string m_label(int p) const;
  int h_index_of(const std::string& label) const;
  int m_index_of(const std::string& label) const;
};

// Computes the +1/-1 eigenspace split, identifies the simple ideals and
// centre of h, extracts the blocked constants and forms, computes the
// block Casimir data, and runs the full identity suite (throws on any
// failure, with witness indices).
SymmetricPair decompose(const LieAlgebra& L, const Involution& theta);

// The full identity suite over the blocked data: (anti)symmetries,
// homogeneous and mixed Jacobi identities, cross-block identities,
// contracted Casimir identities per block, and the half-Casimir identity
// for the m-side action.
Report verify_pair_identities(const SymmetricPair& P);

// Cocommutator of the level-one current generator attached to x_a, as the
// rank-2 coefficient tensor of x_k (x) x_l over g (x) g.
SparseTensor cocommutator(const LieAlgebra& L, int a);

// Coideal map of the level-one twisted generator attached to Y_p, as the
// rank-2 coefficient tensor of Y_s (x) X_alpha over m (x) h.
// Rejects identity-involution pairs.
SparseTensor bi_ideal_tau(const SymmetricPair& P, int p);

// Human-readable combination label such as "h1+2*h2" for witnesses.
std::string combo_label(const RatVec& v, const std::vector<std::string>& labels);

}  // namespace ty
