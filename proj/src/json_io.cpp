#include "json_io.hpp"

#include "error.hpp"

namespace tmm {

using nlohmann::json;

namespace {

json terms_json(const TermMap& terms) {
  auto a = json::array();
  for (const auto& [idx, c] : terms) a.push_back({{"idx", idx.to_vector()}, {"c", to_string(c)}});
  return a;
}

Rational coefficient(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw DomainError("coefficient must be a \"p/q\" string or an integer");
}

}  // namespace

json to_json(const TruncatedTensor& t) {
  return {{"n", t.rank()}, {"truncation", t.truncation()}, {"terms", terms_json(t.terms())}};
}

json to_json(const HomTensor& u) {
  auto cols = json::array();
  for (int i = 1; i <= u.rank(); ++i) cols.push_back({{"x", i}, {"terms", terms_json(u.column(i).terms())}});
  return {{"n", u.rank()}, {"p", u.degree()}, {"columns", cols}};
}

json to_json(const ExteriorElement& e) {
  return {{"n", e.rank()}, {"q", e.degree()}, {"terms", terms_json(e.terms())}, {"convention", kExteriorConvention}};
}

json to_json(const CoeffValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

TruncatedTensor tensor_from_json(const json& j, int n, int N) {
  try {
    if (j.contains("n") && j.at("n").get<int>() != n) throw DomainError("tensor rank does not match");
    TruncatedTensor t(n, N);
    for (const auto& term : j.at("terms")) {
      const auto idx = term.at("idx").get<std::vector<int>>();
      if (static_cast<int>(idx.size()) > N) continue;
      t.add_term(IndexSeq(std::span<const int>(idx)), coefficient(term.at("c")));
    }
    return t;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed tensor JSON: ") + e.what());
  }
}

MagnusExpansion expansion_from_json(const json& j, int n, int N) {
  try {
    const auto& tails = j.at("tails");
    if (!tails.is_array() || static_cast<int>(tails.size()) != n) throw DomainError("expansion needs one tail per generator");
    std::vector<TruncatedTensor> ts;
    for (const auto& t : tails) ts.push_back(tensor_from_json(t, n, N));
    return MagnusExpansion::custom(n, N, std::move(ts));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed expansion JSON: ") + e.what());
  }
}

}  // namespace tmm
