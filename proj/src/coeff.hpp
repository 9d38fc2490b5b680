#pragma once

// Coefficient modules for group cochains: Hom(H, H^{(x)m}), H^{(x)m} and Lambda^m H_Q.

#include <string>
#include <variant>

#include "tensor.hpp"

namespace tmm {

enum class CoeffKind { Hom, Tensor, Exterior };

struct CoeffType {
  CoeffKind kind;
  int n;
  int degree;
  friend bool operator==(const CoeffType&, const CoeffType&) = default;
};

using CoeffValue = std::variant<HomTensor, TruncatedTensor, ExteriorElement>;

CoeffType type_of(const CoeffValue& v);
CoeffValue zero_value(const CoeffType& t);
bool is_zero(const CoeffValue& v);
CoeffValue add(const CoeffValue& a, const CoeffValue& b);
CoeffValue subtract(const CoeffValue& a, const CoeffValue& b);
CoeffValue scale(const Rational& c, const CoeffValue& v);
// H^{(x)m}: M^{(x)m}; Hom: u |-> M^{(x)m} o u o M^{-1}; Lambda: induced action.
CoeffValue act_matrix(const IntMatrix& m, const IntMatrix& minv, const CoeffValue& v);
// Product used by the cup product: tensors concatenate, exterior elements wedge,
// degree-0 scalars multiply anything. Hom (x) Hom is not representable here.
CoeffValue multiply_values(const CoeffValue& a, const CoeffValue& b);
CoeffType product_type(const CoeffType& a, const CoeffType& b);
// Rank-k value moved into rank n with index i -> i + offset.
CoeffValue embed_value(const CoeffValue& v, int n, int offset);
std::string to_string(const CoeffValue& v);

template <class G>
CoeffValue coeff_action(const G& g, const CoeffValue& v) {
  return act_matrix(g.matrix(), g.inverse_matrix(), v);
}

}  // namespace tmm
