#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ty/coeffs.hpp"
#include "ty/pair.hpp"
#include "ty/report.hpp"

namespace ty {

using Json = nlohmann::ordered_json;

// Wire format for tensors:
//   {"rank": r, "dims": [...], "variance": ["up"|"down", ...],
//    "entries": [{"idx": [i, ...], "num": "...", "den": "..."}]}
// with entries sorted lexicographically by idx; numerator and denominator
// are decimal strings.
Json tensor_to_json(const SparseTensor& t);
SparseTensor tensor_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j);  // revalidates all invariants

Json involution_to_json(const Involution& th);
Involution involution_from_json(const Json& j);

Json pair_to_json(const SymmetricPair& P);
// Recomputes the decomposition from the embedded parent and involution and
// verifies it matches the embedded blocked data.
SymmetricPair pair_from_json(const Json& j);

Json bundle_to_json(const CoeffBundle& b);
CoeffBundle bundle_from_json(const Json& j);

Json report_to_json(const Report& r);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace ty
