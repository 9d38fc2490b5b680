#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "error.hpp"
#include "magnus.hpp"
#include "oracle.hpp"
#include "suites.hpp"

using namespace tmm;

namespace {

FreeWord random_word(std::mt19937_64& g, int n, int max_len) {
  std::vector<int> ls;
  const int len = static_cast<int>(g() % static_cast<unsigned>(max_len + 1));
  for (int k = 0; k < len; ++k) {
    const int i = 1 + static_cast<int>(g() % static_cast<unsigned>(n));
    ls.push_back(g() % 2 ? i : -i);
  }
  return FreeWord::reduce(n, ls);
}

TruncatedTensor T(int n, int N, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  TruncatedTensor t(n, N);
  for (const auto& [idx, c] : terms) t.add_term(IndexSeq(std::span<const int>(idx)), c);
  return t;
}

// Expansion of a word letter by letter with the dense oracle product.
oracle::Dense dense_expand(const MagnusExpansion& theta, const FreeWord& w) {
  auto to_dense = [](const TruncatedTensor& t) {
    oracle::Dense d(t.rank(), t.truncation());
    for (const auto& [idx, c] : t.terms()) d.at(idx.to_vector()) += c;
    return d;
  };
  oracle::Dense acc(theta.rank(), theta.truncation());
  acc.at({}) = 1;
  for (int l : w.letters()) acc = oracle::dense_mul(acc, to_dense(l > 0 ? theta.value(l) : theta.inverse_value(-l)));
  return acc;
}

}  // namespace

TEST_CASE("standard expansion on generators") {
  const auto th = MagnusExpansion::standard(2, 2);
  CHECK(th.expand(FreeWord::generator(2, 1)) == T(2, 2, {{{}, 1}, {{1}, 1}}));
  CHECK(th.expand(FreeWord::generator(2, 1, -1)) == T(2, 2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}}));
  CHECK(th.expand(FreeWord(2)) == TruncatedTensor::one(2, 2));
}

TEST_CASE("degree-2 parts used for braid generators") {
  const auto th = MagnusExpansion::standard(2, 2);
  CHECK(component(th.expand(FreeWord::reduce(2, std::vector{1, 2, -1})), 2) == T(2, 2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(component(th.expand(FreeWord::reduce(2, std::vector{1, 2})), 2) == T(2, 2, {{{1, 2}, 1}}));
}

TEST_CASE("standard expansion matches Fox derivative coefficients") {
  std::mt19937_64 g(21);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(g() % 2);
    const FreeWord w = random_word(g, n, 8);
    const auto th = MagnusExpansion::standard(n, 3);
    const TruncatedTensor e = th.expand(w);
    const std::vector<int> ls(w.letters().begin(), w.letters().end());
    for (int m = 0; m <= 3; ++m) {
      for (const auto& idx : oracle::all_indices(n, m)) {
        CHECK(e.coeff(IndexSeq(std::span<const int>(idx))) == oracle::fox_coefficient(ls, idx));
      }
    }
  }
}

TEST_CASE("custom expansions") {
  std::vector<TruncatedTensor> zero(2, TruncatedTensor(2, 3));
  const auto z = MagnusExpansion::custom(2, 3, zero);
  const auto s = MagnusExpansion::standard(2, 3);
  const FreeWord w = FreeWord::reduce(2, std::vector{1, -2, -1, 2, 2});
  CHECK(z.expand(w) == s.expand(w));

  std::vector<TruncatedTensor> tails{T(2, 2, {{{2, 2}, 1}}), TruncatedTensor(2, 2)};
  const auto c = MagnusExpansion::custom(2, 2, tails);
  CHECK(c.inverse_value(1) == T(2, 2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}, {{2, 2}, -1}}));
  CHECK_THROWS_AS(MagnusExpansion::custom(2, 2, {T(2, 2, {{{1}, 1}}), TruncatedTensor(2, 2)}), DomainError);

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto th = random_expansion(rng, 3, 4);
    for (int i = 1; i <= 3; ++i) CHECK(th.value(i) * th.inverse_value(i) == TruncatedTensor::one(3, 4));
  }
}

TEST_CASE("homomorphism, normalization and inverses against the dense oracle") {
  Rng rng(6);
  std::mt19937_64 g(22);
  for (int e = 0; e < 6; ++e) {
    const auto th = e == 0 ? MagnusExpansion::standard(3, 3) : random_expansion(rng, 3, 3);
    for (int t = 0; t < 10; ++t) {
      const FreeWord a = random_word(g, 3, 6), b = random_word(g, 3, 6);
      const TruncatedTensor ea = th.expand(a);
      CHECK(th.expand(multiply(a, b)) == ea * th.expand(b));
      CHECK(component(ea, 0) == TruncatedTensor::one(3, 0));
      TruncatedTensor ab(3, 1);
      const HVector h = abelianize(a);
      for (int i = 1; i <= 3; ++i) ab.add_term({i}, Rational(static_cast<long>(h.coords[static_cast<std::size_t>(i - 1)])));
      CHECK(component(ea, 1) == ab);
      CHECK(th.expand(invert(a)) == truncated_inverse(ea));
      const auto d = dense_expand(th, a);
      for (int m = 0; m <= 3; ++m)
        for (const auto& idx : oracle::all_indices(3, m)) CHECK(ea.coeff(IndexSeq(std::span<const int>(idx))) == d.get(idx));
    }
  }
}

TEST_CASE("rank and component errors") {
  const auto th = MagnusExpansion::standard(2, 2);
  CHECK_THROWS_AS(th.expand(FreeWord(3)), DomainError);
  CHECK_THROWS_AS(component(th.expand(FreeWord(2)), 3), DomainError);
  CHECK(component(th.expand(FreeWord::generator(2, 1)), 2).is_zero());
}
