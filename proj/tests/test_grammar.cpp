#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "grammar.hpp"
#include "json_io.hpp"

using namespace tmm;

namespace {

std::size_t error_column(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("words") {
  CHECK(parse_word("x1 x2^-1 x1", 2) == FreeWord::reduce(2, std::vector{1, -2, 1}));
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("  ", 2).empty());
  CHECK(parse_word("x1^2", 2) == FreeWord::reduce(2, std::vector{1, 1}));
  CHECK(error_column([] { parse_word("x1 y2", 2); }) == 3);
  CHECK(error_column([] { parse_word("x3", 2); }) == 0);
  CHECK(error_column([] { parse_word("x1^", 2); }) == 3);
  CHECK(error_column([] { parse_word("x1^0", 2); }) == 3);
}

TEST_CASE("braids") {
  CHECK(parse_braid("s1 s2^-1", 3) == BraidWord::from_letters(3, std::vector{1, -2}));
  CHECK(parse_braid("A(1,3)", 3) == aij_word(1, 3, 3));
  CHECK(braids_equal(parse_braid("twist(3)", 4), full_twist(3, 4)));
  CHECK(braids_equal(parse_braid("twist(2,4)", 4), shift(full_twist(3, 3), 1, 4)));
  CHECK(parse_braid("A(1,2)^-2", 2) == aij_word(1, 2, 2).power(-2));
  CHECK(error_column([] { parse_braid("s1 s3", 3); }) == 3);
  CHECK(error_column([] { parse_braid("A(1 2)", 3); }) == 3);
  CHECK(error_column([] { parse_braid("A(2,2)", 3); }) == 0);
  CHECK(error_column([] { parse_braid("q", 3); }) == 0);
}

TEST_CASE("tuples and cycles") {
  CHECK(parse_tuple("s1; A(1,2)", 2).size() == 2);
  const BarChain t = parse_cycle("torus:\"A(1,2)|twist(3)\"", 3);
  CHECK(t.degree() == 2);
  CHECK(boundary(t).is_zero());
  CHECK(parse_cycle("torus:A(1,2)|twist(3)", 3) == t);
  const BarChain c = parse_cycle("cross:torus:A(1,2) * torus:A(3,4)", 4);
  CHECK(c.degree() == 2);
  CHECK(c.terms().size() == 2);
  CHECK(parse_cycle("unit", 3).degree() == 0);
  CHECK(error_column([] { parse_cycle("torus:A(1,2)|A(1,3)", 3); }) == 6);
  CHECK(error_column([] { parse_cycle("cross:torus:A(1,2) * torus:A(2,3)", 3); }) == 20);
  CHECK(error_column([] { parse_cycle("ring:A(1,2)", 3); }) == 0);
  CHECK(error_column([] { parse_cycle("torus:A(1,2)|s9", 3); }) == 13);
}

TEST_CASE("json round trip") {
  TruncatedTensor t(2, 2);
  t.add_term({1, 2}, Rational(1, 2));
  t.add_term({}, 1);
  const auto j = to_json(t);
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[1].at("c") == "1/2");
  CHECK(tensor_from_json(j, 2, 2) == t);
  const auto e = expansion_from_json(nlohmann::json::parse(R"({"tails":[{"terms":[{"idx":[2,2],"c":"1/1"}]},{"terms":[]}]})"), 2, 2);
  CHECK(e.value(1).coeff({2, 2}) == 1);
  CHECK_THROWS_AS(expansion_from_json(nlohmann::json::parse(R"({"tails":[]})"), 2, 2), DomainError);
  CHECK_THROWS_AS(tensor_from_json(nlohmann::json::parse(R"({"terms":[{"idx":[3],"c":"1"}]})"), 2, 2), DomainError);
}
