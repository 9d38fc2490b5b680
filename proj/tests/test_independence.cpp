#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "independence.hpp"
#include "oracle.hpp"
#include "rng.hpp"

using namespace tmm;

TEST_CASE("partitions in descending lexicographic order") {
  auto parts = [](int q, int s) {
    std::vector<std::vector<int>> v;
    for (const auto& p : partitions(q, s)) v.push_back(p.parts);
    return v;
  };
  CHECK(parts(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}});
  CHECK(parts(1, 1) == std::vector<std::vector<int>>{{1}});
  CHECK(parts(3, 3) == std::vector<std::vector<int>>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
  CHECK_THROWS_AS(partitions(2, 0), DomainError);
  for (int q = 0; q <= 6; ++q)
    for (int s = 1; s <= 5; ++s) {
      const auto got = parts(q, s);
      CHECK(got == oracle::brute_partitions(q, s));
      for (std::size_t k = 1; k < got.size(); ++k) CHECK(lex_greater(Partition(got[k - 1]), Partition(got[k])));
    }
}

TEST_CASE("dual partitions and r_lambda") {
  CHECK(dual_partition(Partition({1, 1})) == std::vector<int>{2});
  CHECK(r_lambda(Partition({1, 1})) == 2);
  CHECK(dual_partition(Partition({3, 0, 0})) == std::vector<int>{1, 1, 1});
  CHECK(r_lambda(Partition({3, 0, 0})) == 1);
  CHECK(dual_partition(Partition({2, 1, 0})) == std::vector<int>{2, 1});
  CHECK(r_lambda(Partition({2, 1, 0})) == 1);
  CHECK(r_lambda(Partition({1, 1, 1})) == 6);
  CHECK(r_lambda(Partition({2, 2, 1})) == 2);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
}

TEST_CASE("block embeddings") {
  const auto b = iota_lambda_embed(Partition({1, 1}), 4);
  REQUIRE(b.size() == 2);
  CHECK((b[0].offset == 0 && b[0].size == 2));
  CHECK((b[1].offset == 2 && b[1].size == 2));
  const auto c = iota_lambda_embed(Partition({2, 0}), 4);
  CHECK((c[0].size == 3 && c[1].offset == 3 && c[1].size == 1));
  CHECK_THROWS_AS(iota_lambda_embed(Partition({2, 1}), 4), DomainError);
  const auto e = embed_element(GroupElement::from_braid(aij_word(1, 2, 2)), b[1], 4);
  CHECK(braids_equal(*e.braid(), aij_word(3, 4, 4)));
}

TEST_CASE("torus catalog") {
  const auto c1 = torus_catalog(1, 3);
  CHECK(c1.front().front().label() == "A(1,2)");
  const auto c2 = torus_catalog(2, 2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0][0].label() == "A(1,2)");
  CHECK(c2[0][1].label() == "twist(1,3)");
  CHECK(c2[1][0].label() == "A(2,3)");
  for (int p = 1; p <= 3; ++p) {
    for (const auto& t : torus_catalog(p, 10)) {
      std::vector<GroupElement> es;
      for (const auto& b : t) es.push_back(GroupElement::from_braid(b.word(p + 1)));
      CHECK(boundary(torus_cycle(es)).is_zero());
    }
  }
  CHECK(torus_catalog(0, 3).size() == 1);
}

TEST_CASE("exact rank against plain elimination") {
  Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    const int r = rng.between(1, 5), c = rng.between(1, 6), k = rng.between(1, 4);
    // product of random r x k and k x c matrices has rank <= k
    oracle::Matrix a(static_cast<std::size_t>(r), std::vector<mpq_class>(static_cast<std::size_t>(k)));
    oracle::Matrix b(static_cast<std::size_t>(k), std::vector<mpq_class>(static_cast<std::size_t>(c)));
    for (auto& row : a)
      for (auto& x : row) x = mpq_class(rng.between(-3, 3), rng.between(1, 4));
    for (auto& row : b)
      for (auto& x : row) x = mpq_class(rng.between(-3, 3), rng.between(1, 4));
    for (auto& row : a)
      for (auto& x : row) x.canonicalize();
    for (auto& row : b)
      for (auto& x : row) x.canonicalize();
    const auto m = oracle::matmul(a, b);
    CHECK(exact_rank(m) == oracle::rank(m));
  }
  CHECK(exact_rank({}) == 0);
}

TEST_CASE("certificates") {
  const auto c21 = certificate(2, 1, MagnusExpansion::standard(2, 2));
  CHECK(c21.pass());
  REQUIRE(c21.matrix.size() == 1);
  CHECK(c21.matrix[0][0] == 1);
  CHECK(c21.matrix[0][1] == 1);
  const auto c42 = certificate(4, 2, MagnusExpansion::standard(4, 2));
  CHECK(c42.rank == 2);
  CHECK(c42.triangular);
  CHECK(c42.verdict() == "pass");
  const auto c0 = certificate(3, 0, MagnusExpansion::standard(3, 2));
  CHECK(c0.pass());
  CHECK(c0.matrix == std::vector<std::vector<Rational>>{{1}});
  CHECK_THROWS_AS(certificate(3, 3, MagnusExpansion::standard(3, 2)), DomainError);
  CHECK(c42.to_json().dump() == certificate(4, 2, MagnusExpansion::standard(4, 2)).to_json().dump());
}

TEST_CASE("assertion A scalar identity") {
  for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2}, {2, 1, 0}, {1, 0}}) {
    const Partition l(parts);
    const int n = l.q() + l.slots();
    const auto r = assertion_a_scalar_check(l, n, MagnusExpansion::standard(n, 2), 7, 4);
    CHECK(r.passed());
  }
}
