#include "coeff.hpp"

#include "error.hpp"

namespace tmm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_same_type(const CoeffValue& a, const CoeffValue& b) {
  if (!(type_of(a) == type_of(b))) throw DomainError("coefficient type mismatch");
}

bool is_scalar(const CoeffValue& v) {
  const auto t = type_of(v);
  return t.kind != CoeffKind::Hom && t.degree == 0;
}

Rational scalar_of(const CoeffValue& v) {
  return std::visit(overloaded{[](const HomTensor&) { return Rational(0); },
                               [](const TruncatedTensor& t) { return t.coeff(IndexSeq{}); },
                               [](const ExteriorElement& e) { return e.coeff(IndexSeq{}); }},
                    v);
}

}  // namespace

CoeffType type_of(const CoeffValue& v) {
  return std::visit(overloaded{[](const HomTensor& u) { return CoeffType{CoeffKind::Hom, u.rank(), u.degree()}; },
                               [](const TruncatedTensor& t) { return CoeffType{CoeffKind::Tensor, t.rank(), t.truncation()}; },
                               [](const ExteriorElement& e) { return CoeffType{CoeffKind::Exterior, e.rank(), e.degree()}; }},
                    v);
}

CoeffValue zero_value(const CoeffType& t) {
  switch (t.kind) {
    case CoeffKind::Hom:
      return HomTensor(t.n, t.degree);
    case CoeffKind::Tensor:
      return TruncatedTensor(t.n, t.degree);
    case CoeffKind::Exterior:
      return ExteriorElement(t.n, t.degree);
  }
  throw DomainError("unknown coefficient kind");
}

bool is_zero(const CoeffValue& v) {
  return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

CoeffValue add(const CoeffValue& a, const CoeffValue& b) {
  check_same_type(a, b);
  return std::visit(
      [&](const auto& x) -> CoeffValue {
        using T = std::decay_t<decltype(x)>;
        return x + std::get<T>(b);
      },
      a);
}

CoeffValue subtract(const CoeffValue& a, const CoeffValue& b) {
  check_same_type(a, b);
  return std::visit(
      [&](const auto& x) -> CoeffValue {
        using T = std::decay_t<decltype(x)>;
        return x - std::get<T>(b);
      },
      a);
}

CoeffValue scale(const Rational& c, const CoeffValue& v) {
  return std::visit([&](const auto& x) -> CoeffValue { return c * x; }, v);
}

CoeffValue act_matrix(const IntMatrix& m, const IntMatrix& minv, const CoeffValue& v) {
  if (m.is_identity()) return v;
  return std::visit(overloaded{[&](const HomTensor& u) -> CoeffValue { return act_hom(m, minv, u); },
                               [&](const TruncatedTensor& t) -> CoeffValue { return act_gl(m, t); },
                               [&](const ExteriorElement& e) -> CoeffValue { return act_exterior(m, e); }},
                    v);
}

CoeffType product_type(const CoeffType& a, const CoeffType& b) {
  if (a.n != b.n) throw DomainError("cup product: rank mismatch");
  const bool a_scalar = a.kind != CoeffKind::Hom && a.degree == 0;
  const bool b_scalar = b.kind != CoeffKind::Hom && b.degree == 0;
  if (a_scalar) return b;
  if (b_scalar) return a;
  if (a.kind != b.kind || a.kind == CoeffKind::Hom) {
    throw DomainError("cup product of these coefficient modules is not supported");
  }
  return {a.kind, a.n, a.degree + b.degree};
}

CoeffValue multiply_values(const CoeffValue& a, const CoeffValue& b) {
  product_type(type_of(a), type_of(b));
  if (is_scalar(a)) return scale(scalar_of(a), b);
  if (is_scalar(b)) return scale(scalar_of(b), a);
  if (type_of(a).kind == CoeffKind::Tensor) return outer(std::get<TruncatedTensor>(a), std::get<TruncatedTensor>(b));
  return wedge(std::get<ExteriorElement>(a), std::get<ExteriorElement>(b));
}

CoeffValue embed_value(const CoeffValue& v, int n, int offset) {
  return std::visit([&](const auto& x) -> CoeffValue { return shift_indices(x, n, offset); }, v);
}

std::string to_string(const CoeffValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace tmm
