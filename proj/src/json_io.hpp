#pragma once

// JSON encodings. Rationals are "p/q" strings; a term is {"idx": [...], "c": "p/q"}.
//   tensor:   {"n", "truncation", "terms"}
//   hom:      {"n", "p", "columns": [{"x": i, "terms"}]}     value on X_i
//   exterior: {"n", "q", "terms", "convention"}               idx strictly increasing

#include <json.hpp>

#include "coeff.hpp"
#include "magnus.hpp"

namespace tmm {

nlohmann::json to_json(const TruncatedTensor& t);
nlohmann::json to_json(const HomTensor& u);
nlohmann::json to_json(const ExteriorElement& e);
nlohmann::json to_json(const CoeffValue& v);

// Reads a tensor into rank n and truncation N. Terms above degree N are dropped;
// an `n` key, if present, must equal n.
TruncatedTensor tensor_from_json(const nlohmann::json& j, int n, int N);
// {"tails": [tensor, ...]} (one tail per generator) -> custom expansion.
MagnusExpansion expansion_from_json(const nlohmann::json& j, int n, int N);

inline constexpr const char* kExteriorConvention =
    "unnormalized alternating sum: the image of X_i1 (x) ... (x) X_iq is e_i1^...^e_iq, no 1/q!";

}  // namespace tmm
