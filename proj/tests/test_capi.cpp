#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "tmm/tmm.h"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  tmm_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("expansions and expand") {
  tmm_expansion* e = nullptr;
  REQUIRE(tmm_expansion_standard(2, 2, &e) == TMM_OK);
  char* out = nullptr;
  REQUIRE(tmm_expand(e, "x1 x2", &out) == TMM_OK);
  const json j = take(out);
  CHECK(j.at("truncation") == 2);
  CHECK(j.at("terms").size() == 4);
  CHECK(tmm_expand(e, "x1 y2", &out) == TMM_ERR_PARSE);
  CHECK(tmm_last_error_position() == 3);
  CHECK(std::string(tmm_last_error()).find("column 4") != std::string::npos);
  CHECK(tmm_expand(nullptr, "x1", &out) == TMM_ERR_ARGUMENT);
  CHECK(tmm_expand(e, "x1", nullptr) == TMM_ERR_ARGUMENT);
  tmm_expansion_free(e);

  tmm_expansion* bad = nullptr;
  CHECK(tmm_expansion_standard(0, 2, &bad) != TMM_OK);
  CHECK(bad == nullptr);
  CHECK(tmm_expansion_from_json(2, 2, "{not json", &bad) == TMM_ERR_PARSE);
  tmm_expansion* c = nullptr;
  REQUIRE(tmm_expansion_from_json(2, 2, R"({"tails":[{"terms":[{"idx":[1,2],"c":"1/2"}]},{"terms":[]}]})", &c) == TMM_OK);
  REQUIRE(tmm_expand(c, "x1", &out) == TMM_OK);
  CHECK(take(out).at("terms").size() == 3);
  tmm_expansion_free(c);
  tmm_expansion_free(nullptr);
}

TEST_CASE("braids") {
  tmm_braid *a = nullptr, *b = nullptr;
  REQUIRE(tmm_braid_parse(3, "s1 s2 s1", &a) == TMM_OK);
  REQUIRE(tmm_braid_parse(3, "s2 s1 s2", &b) == TMM_OK);
  int eq = -1;
  REQUIRE(tmm_braid_equal(a, b, &eq) == TMM_OK);
  CHECK(eq == 1);
  char* out = nullptr;
  REQUIRE(tmm_braid_permutation(a, &out) == TMM_OK);
  CHECK(take(out).at("perm").size() == 3);
  REQUIRE(tmm_braid_xi(a, &out) == TMM_OK);
  CHECK(take(out).at("images").size() == 3);
  REQUIRE(tmm_braid_string(a, &out) == TMM_OK);
  CHECK(std::string(out).size() > 0);
  tmm_string_free(out);

  tmm_expansion* e = nullptr;
  REQUIRE(tmm_expansion_standard(3, 2, &e) == TMM_OK);
  tmm_braid* s = nullptr;
  REQUIRE(tmm_braid_parse(3, "s1", &s) == TMM_OK);
  REQUIRE(tmm_tau1(e, s, &out) == TMM_OK);
  CHECK(take(out).at("p") == 2);
  tmm_expansion* e2 = nullptr;
  REQUIRE(tmm_expansion_standard(2, 2, &e2) == TMM_OK);
  CHECK(tmm_tau1(e2, s, &out) == TMM_ERR_DOMAIN);
  CHECK(tmm_braid_parse(3, "s3", &b) == TMM_ERR_PARSE);
  tmm_braid_free(a);
  tmm_braid_free(b);
  tmm_braid_free(s);
  tmm_expansion_free(e);
  tmm_expansion_free(e2);
}

TEST_CASE("classes, cycles and pairings") {
  tmm_expansion* e = nullptr;
  REQUIRE(tmm_expansion_standard(3, 2, &e) == TMM_OK);
  char* out = nullptr;
  REQUIRE(tmm_hbar(e, 1, "A(1,2)", TMM_FORM_EXTERIOR, &out) == TMM_OK);
  CHECK(take(out).at("terms").size() == 2);
  CHECK(tmm_hbar(e, 2, "A(1,2)", TMM_FORM_EXTERIOR, &out) == TMM_ERR_DOMAIN);
  tmm_cycle* z = nullptr;
  REQUIRE(tmm_cycle_parse(3, "torus:A(1,2)", &z) == TMM_OK);
  int d = -1;
  REQUIRE(tmm_cycle_degree(z, &d) == TMM_OK);
  CHECK(d == 1);
  const int parts[] = {1};
  REQUIRE(tmm_pair(e, parts, 1, TMM_FORM_EXTERIOR, z, &out) == TMM_OK);
  const json j = take(out);
  CHECK(j.at("value").at("terms").size() == 2);
  CHECK(j.at("zero") == false);
  tmm_cycle_free(z);
  CHECK(tmm_cycle_parse(3, "torus:A(1,2)|A(1,3)", &z) == TMM_ERR_PARSE);
  tmm_expansion_free(e);
}

TEST_CASE("certificates and checks") {
  char* out = nullptr;
  int pass = -1;
  REQUIRE(tmm_certificate(4, 2, 3, &out, &pass) == TMM_OK);
  CHECK(pass == 1);
  const json j = take(out);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("verdict") == "pass");
  CHECK(tmm_certificate(3, 3, 3, &out, &pass) == TMM_ERR_DOMAIN);
  const int parts[] = {1, 1};
  REQUIRE(tmm_assertion_a(parts, 2, 4, tmm_default_seed(), 4, &out, &pass) == TMM_OK);
  CHECK(pass == 1);
  tmm_string_free(out);
  REQUIRE(tmm_check_suite("lemmas", tmm_default_seed(), &out, &pass) == TMM_OK);
  CHECK(pass == 1);
  CHECK(take(out).at("seed") == tmm_default_seed());
  CHECK(tmm_check_suite("nope", 1, &out, &pass) == TMM_ERR_DOMAIN);
  CHECK(std::string(tmm_version()).size() > 0);
}
