#pragma once

#include <string>

#include "ty/pair.hpp"

namespace ty {
namespace fixtures {

// Named algebras: "sl2", "sl3", "sl4", "so5", "sp4", "sl3-chevalley".
// Classical names take the trace form by default; append ":killing" for
// the Killing form (e.g. "sl3:killing").
LieAlgebra algebra(const std::string& name);
bool is_algebra_name(const std::string& name);

// Named involutions of the matching fixture algebras.
//  - "sl3-so3":  e1 <-> -e2, f1 <-> -f2, h1 <-> h2 on the Chevalley basis
//  - "sl3-gl2":  sign flip on e2, f2 (and hence e3, f3)
//  - "sl3-even": identity
//  - "sl4-diag": conjugation by diag(1,1,1,-1) on the sl4 basis
Involution involution(const std::string& pair_name, const LieAlgebra& L);

// Named pairs built from the fixtures above: "sl3-so3", "sl3-gl2",
// "sl3-even", "sl4-diag".
SymmetricPair pair(const std::string& name);
bool is_pair_name(const std::string& name);

// Parent algebra fixture used by the named pair.
LieAlgebra pair_parent(const std::string& name);

}  // namespace fixtures
}  // namespace ty
