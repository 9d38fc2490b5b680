// One line per acceptance criterion: id, verdict, wall time. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "independence.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "suites.hpp"

using namespace tmm;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

GroupElement E(const BraidWord& b) { return GroupElement::from_braid(b); }

TruncatedTensor bracket(int n, int i, int j) {
  TruncatedTensor t(n, 2);
  t.add_term({i, j}, 1);
  t.add_term({j, i}, -1);
  return t;
}

// tau1 for the standard expansion from Fox coefficients of the inverse images.
HomTensor tau1_oracle(const GroupElement& phi) {
  const int n = phi.rank();
  std::vector<TruncatedTensor> cols;
  for (int j = 1; j <= n; ++j) {
    const FreeWord w = phi.aut().inv().image(j);
    const std::vector<int> ls(w.letters().begin(), w.letters().end());
    TruncatedTensor col(n, 2);
    for (const auto& idx : oracle::all_indices(n, 2)) {
      const long c = oracle::fox_coefficient(ls, idx);
      if (c == 0) continue;
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          const long m = phi.matrix()(r, idx[0]) * phi.matrix()(s, idx[1]);
          if (m) col.add_term({r, s}, Rational(-c * m));
        }
    }
    cols.push_back(col);
  }
  return HomTensor(n, 2, cols);
}

FreeWord random_word(Rng& rng, int n, int max_len) {
  std::vector<int> ls;
  const int len = rng.between(0, max_len);
  for (int k = 0; k < len; ++k) ls.push_back(rng.between(1, n) * (rng.below(2) ? 1 : -1));
  return FreeWord::reduce(n, ls);
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  std::vector<int> ls(a.letters().begin(), a.letters().end());
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return FreeWord::reduce(a.rank(), ls);
}

Outcome lemma_sigma() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const auto th = MagnusExpansion::standard(n, 2);
    for (int i = 1; i < n; ++i) {
      const auto g = E(BraidWord::generator(n, i));
      const HomTensor got = tau1(th, g);
      if (!(got == HomTensor::dual_times(n, i, bracket(n, i, i + 1))) || !(got == tau1_oracle(g)))
        o.fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  return o;
}

Outcome lemma_aij() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const auto th = MagnusExpansion::standard(n, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto g = E(aij_word(i, j, n));
        const HomTensor got = tau1(th, g);
        const HomTensor want = HomTensor::dual_times(n, i, bracket(n, i, j)) - HomTensor::dual_times(n, j, bracket(n, i, j));
        if (!(got == want) || !(got == tau1_oracle(g)))
          o.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  }
  return o;
}

Outcome cocycle() {
  Outcome o;
  Rng rng(kDefaultSeed);
  int tuples = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto th = MagnusExpansion::standard(n, 2);
    const Cochain tau = tau1_cochain(th);
    for (int p = 1; p <= 3; ++p) {
      const Cochain d = coboundary(hp_from_tau(tau, p));
      const int samples = p == 3 ? 8 : 10;
      for (int s = 0; s < samples; ++s) {
        std::vector<GroupElement> t;
        for (int k = 0; k <= p; ++k) t.push_back(E(random_braid(rng, n, 8)));
        if (!is_zero(d(std::span<const GroupElement>(t)))) o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
        ++tuples;
      }
    }
  }
  if (tuples < 100) o.fail("only " + std::to_string(tuples) + " tuples");
  o.note = o.pass ? std::to_string(tuples) + " tuples" : o.note;
  return o;
}

Outcome magnus_axioms() {
  Outcome o;
  Rng rng(kDefaultSeed + 4);
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<MagnusExpansion> thetas{MagnusExpansion::standard(n, 4)};
    for (int e = 0; e < 5; ++e) thetas.push_back(random_expansion(rng, n, 4));
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      const auto& th = thetas[t];
      const auto one = TruncatedTensor::one(n, 4);
      if (!(th.expand(FreeWord(n)) == one)) o.fail("empty word");
      for (int i = 1; i <= n; ++i) {
        const auto x = FreeWord::generator(n, i);
        if (!(component(th.expand(x), 0) == component(one, 0)) || !(component(th.expand(x), 1) == TruncatedTensor::basis(n, 1, {i})))
          o.fail("normalization at x" + std::to_string(i));
        if (!(th.expand(x) * th.expand(x.inverse()) == one)) o.fail("inverse at x" + std::to_string(i));
      }
      for (int s = 0; s < 20; ++s) {
        const FreeWord u = random_word(rng, n, 6), v = random_word(rng, n, 6);
        const FreeWord uv = concat(u, v);
        if (!(th.expand(uv) == th.expand(u) * th.expand(v))) o.fail("homomorphism on " + u.str() + " . " + v.str());
        if (t == 0) {
          const std::vector<int> ls(uv.letters().begin(), uv.letters().end());
          for (int m = 1; m <= 3; ++m)
            for (const auto& idx : oracle::all_indices(n, m))
              if (th.expand(uv).coeff(IndexSeq(std::span<const int>(idx))) != oracle::fox_coefficient(ls, idx))
                o.fail("Fox coefficient of " + uv.str());
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.note = std::to_string(checked) + " word pairs, 6 expansions per rank";
  return o;
}

Outcome expansion_independence() {
  Outcome o;
  Rng rng(kDefaultSeed + 5);
  int braids = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto st = MagnusExpansion::standard(n, 2);
    std::vector<MagnusExpansion> thetas;
    for (int e = 0; e < 5; ++e) thetas.push_back(random_expansion(rng, n, 3));
    for (int s = 0; s < 20; ++s) {
      const auto g = E(random_pure_braid(rng, n, 4));
      const HomTensor want = tau1(st, g);
      for (const auto& th : thetas)
        if (!(tau1(th, g) == want)) o.fail(g.str());
      ++braids;
    }
  }
  if (o.pass) o.note = std::to_string(braids) + " pure braids x 5 expansions";
  return o;
}

Outcome primitivity() {
  Outcome o;
  Rng rng(kDefaultSeed + 6);
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      const int n = n1 + n2;
      const Cochain tau = tau1_cochain(MagnusExpansion::standard(n, 2));
      const Cochain ta = tau1_cochain(MagnusExpansion::standard(n1, 2));
      const Cochain tb = tau1_cochain(MagnusExpansion::standard(n2, 2));
      const BlockCochain t1 = pullback_projection(ta, 1, n1, n2, n);
      const BlockCochain t2 = pullback_projection(tb, 2, n1, n2, n);
      std::vector<std::pair<std::string, BlockCochain>> checks{
          {"mixed 12", bp_cup<BlockElement>({t1, t2})}, {"mixed 21", bp_cup<BlockElement>({t2, t1})}};
      for (int p = 1; p <= 3; ++p) {
        checks.emplace_back("h" + std::to_string(p), block_restrict(hp_from_tau(tau, p), n1, n2) -
                                                         (pullback_projection(hp_from_tau(ta, p), 1, n1, n2, n) +
                                                          pullback_projection(hp_from_tau(tb, p), 2, n1, n2, n)));
        checks.emplace_back("hbar" + std::to_string(p), block_restrict(hbar_from_tau(tau, p), n1, n2) -
                                                            (pullback_projection(hbar_from_tau(ta, p), 1, n1, n2, n) +
                                                             pullback_projection(hbar_from_tau(tb, p), 2, n1, n2, n)));
      }
      for (const auto& [name, u] : checks)
        for (int s = 0; s < 4; ++s) {
          std::vector<BlockElement> t;
          for (int k = 0; k < u.degree(); ++k)
            t.emplace_back(E(random_braid(rng, n1, 4)), E(random_braid(rng, n2, 4)), n);
          if (!is_zero(u(std::span<const BlockElement>(t))))
            o.fail(name + " blocks " + std::to_string(n1) + "," + std::to_string(n2));
        }
    }
  return o;
}

Outcome nonvanishing() {
  Outcome o;
  ExteriorElement want(2, 1);
  want.add_term({1}, 1);
  want.add_term({2}, 1);
  const CoeffValue v = pair(hbar_exterior(MagnusExpansion::standard(2, 2), 1), torus_cycle(std::vector{E(aij_word(1, 2, 2))}));
  if (!(std::get<ExteriorElement>(v) == want)) o.fail("pairing with A(1,2) is " + to_string(v));
  const Cochain h2 = hbar_exterior(MagnusExpansion::standard(3, 2), 2);
  bool nonzero = false;
  for (const auto& t : torus_catalog(2, 2)) {
    std::vector<GroupElement> es;
    for (const auto& b : t) es.push_back(E(b.word(3)));
    nonzero = nonzero || !is_zero(pair(h2, torus_cycle(es)));
  }
  if (!nonzero) o.fail("both P3 tori pair to zero with hbar_2");
  return o;
}

Outcome certificates() {
  Outcome o;
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    const Certificate c = certificate(n, q, MagnusExpansion::standard(n, 2));
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    if (!c.pass()) o.fail(tag + " rank " + std::to_string(c.rank));
    if (!c.triangular) o.fail(tag + " triangularity");
    if (o.pass) o.note += (o.note.empty() ? "" : " ") + tag + " rank " + std::to_string(c.rank);
  }
  return o;
}

Outcome stretch() {
  Outcome o;
  const Certificate c = certificate(6, 3, MagnusExpansion::standard(6, 2));
  o.note = "(6,3) " + c.verdict() + ", rank " + std::to_string(c.rank) + "/" + std::to_string(c.partitions.size()) +
           (c.triangular ? ", triangular" : ", not triangular");
  return o;
}

Outcome assertion_a() {
  Outcome o;
  int count = 0;
  for (int q = 0; q <= 2; ++q)
    for (int n = q + 1; n <= 5; ++n)
      for (const auto& l : partitions(q, n - q)) {
        const auto r = assertion_a_scalar_check(l, n, MagnusExpansion::standard(n, 2), kDefaultSeed, 6);
        if (!r.passed()) o.fail(l.str() + " n=" + std::to_string(n) + ": " + r.witness);
        ++count;
      }
  if (o.pass) o.note = std::to_string(count) + " partitions";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}})
    if (certificate(n, q, MagnusExpansion::standard(n, 2)).to_json().dump(2) !=
        certificate(n, q, MagnusExpansion::standard(n, 2)).to_json().dump(2))
      o.fail("certificate " + std::to_string(n) + "," + std::to_string(q));
  for (const auto& s : suite_names())
    if (check_suite(s, kDefaultSeed).to_json().dump(2) != check_suite(s, kDefaultSeed).to_json().dump(2))
      o.fail("suite " + s);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<std::string, std::function<Outcome()>, bool>> criteria{
      {"1 tau1 on sigma_i, n=2..6", lemma_sigma, true},
      {"2 tau1 on A_ij, n=2..6", lemma_aij, true},
      {"3 cocycle condition", cocycle, true},
      {"4 Magnus axioms", magnus_axioms, true},
      {"5 expansion independence on pure braids", expansion_independence, true},
      {"6 primitivity on block tuples", primitivity, true},
      {"7 nonvanishing pairings", nonvanishing, true},
      {"8 independence certificates", certificates, true},
      {"8 stretch (6,3)", stretch, false},
      {"9 scalar identity for hbar_lambda", assertion_a, true},
      {"10 determinism", determinism, true},
  };
  bool all = true;
  for (const auto& [name, run, required] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* verdict = required ? (o.pass ? "PASS" : "FAIL") : "REPORT";
    std::printf("[%s] criterion %s (%.2f s)%s%s\n", verdict, name.c_str(), secs, o.note.empty() ? "" : ": ",
                o.note.c_str());
    std::fflush(stdout);
    if (required && !o.pass) all = false;
  }
  return all ? 0 : 1;
}
