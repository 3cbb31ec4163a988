#pragma once

#include "ty/coeffs.hpp"
#include "ty/report.hpp"

namespace ty {

// Reference suite for the three twisted constructions over sl3. Rebuilds
// every displayed numeric coefficient of the closure relations from the
// general coefficient tensors, after translating between the adapted
// eigenbasis and the displayed generators (the translation dictionary is
// pinned by the classical current-algebra limit).
Report sl3_golden_suite();

// Equality of the general coefficient tensors with their simplified sl3
// forms on the observable (symmetrized) parts.
Report sl3_remark_equivalence();
Report remark_equivalence_checks(const LieAlgebra& L, const EvenCoeffs& E);

}  // namespace ty
