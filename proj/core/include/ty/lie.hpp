#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ty/ratmat.hpp"
#include "ty/tensor.hpp"

namespace ty {

// Finite-dimensional simple Lie algebra as validated structure-constant
// data over a fixed ordered basis, together with a chosen invariant form,
// its inverse, and the adjoint eigenvalue of the quadratic Casimir.
struct LieAlgebra {
  std::vector<std::string> labels;
  SparseTensor structure;     // alpha_{ab}^c, slots (Down, Down, Up)
  SparseTensor form;          // eta_{ab}
  SparseTensor form_inverse;  // eta^{ab}
  Rational casimir_adjoint;   // eigenvalue of eta^{ab}{x_a,x_b} in the adjoint

  int dim() const { return static_cast<int>(labels.size()); }
  // sl2 is the only simple algebra of dimension 3; higher-level twisted
  // constructions require rank >= 2, i.e. dimension > 3.
  bool rank_one() const { return dim() == 3; }

  int label_index(const std::string& name) const;  // throws if unknown

  // alpha_{abc} = alpha_{ab}^d eta_{dc}; totally antisymmetric.
  SparseTensor alpha_lowered() const;
  // alpha_a^{bc}: both lower slots of alpha_{abc} after the first raised.
  SparseTensor alpha_raised() const;

  RatVec bracket(const RatVec& x, const RatVec& y) const;
  RatMat ad(const RatVec& x) const;  // matrix of [x, .] in the basis
};

struct FormChoice {
  // Killing form computed from the structure constants.
  static FormChoice killing() { return {}; }
  // Explicitly supplied symmetric invariant tensor (e.g. a trace form).
  static FormChoice explicit_form(SparseTensor t) {
    FormChoice f;
    f.explicit_tensor = std::move(t);
    return f;
  }
  std::optional<SparseTensor> explicit_tensor;
};

// Validates antisymmetry, the Jacobi identity, invariance and
// non-degeneracy of the form, and proportionality of the contracted
// square of the structure constants to the identity; computes the form
// (if Killing was requested), its inverse, and the Casimir eigenvalue.
// Throws ty::Error with a witness on any failure.
LieAlgebra build_lie_algebra(std::vector<std::string> labels, SparseTensor structure,
                             const FormChoice& form_choice);

enum class Family { sl, so, sp };
enum class FormKind { Killing, Trace };

// Matrix realizations of the classical families over a fixed documented
// basis ordering. Throws on unsupported sizes (desk scale: dim <= 64).
LieAlgebra classical_algebra(Family family, int n, FormKind form);

// The 8-dimensional algebra on labels (e1,e2,e3,f1,f2,f3,h1,h2) in the
// Cartan-Chevalley basis, with the defining-representation trace form
// (normalized so the adjoint Casimir eigenvalue is 6).
LieAlgebra sl3_chevalley();

struct CasimirCheck {
  bool pass;
  Rational value;
  std::string witness;  // empty when pass
};

// Verifies alpha_a^{bc} alpha_{cb}^d = c delta_a^d exactly and reports c.
CasimirCheck casimir_identity_check(const LieAlgebra& L);

}  // namespace ty
