#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" TMM_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("expand and the degree variable") {
  const Run a = run("expand --n 2 'x1 x2'");
  CHECK(a.status == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("truncation") == 2);
  CHECK(nlohmann::json::parse(run("expand --n 2 x1", "TMM_DEGREE=3").out).at("truncation") == 3);
  CHECK(run("expand --n 2 'x1 y2'").status == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("braid-eq --n 3 's1 s2 s1' 's2 s1 s2'").status == 0);
  CHECK(nlohmann::json::parse(run("braid-eq --n 3 's1' 's2'").out).at("equal") == false);
  CHECK(run("independence --n 4 --q 2").status == 0);
  CHECK(run("independence --n 3 --q 3").status == 2);
  CHECK(run("check --suite nope").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("pair --n 3 --p 1 --cycle 'torus:A(1,2)'").status == 0);
  CHECK(run("pair --n 4 --lambda 1,1 --cycle 'cross:torus:A(1,2) * torus:A(2,3)'").status == 2);
  CHECK(run("assertion-a --n 4 --lambda 1,1").status == 0);
}

TEST_CASE("repeated runs are byte identical") {
  for (const char* args : {"check --suite cocycle", "check --suite expansion-independence --seed 7",
                           "independence --n 5 --q 2", "hbar --p 2 --n 3 --tuple 'A(1,2);twist(3)' --form hom"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}
