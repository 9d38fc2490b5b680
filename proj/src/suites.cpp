#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "independence.hpp"

namespace tmm {

namespace {

TruncatedTensor bracket(int n, int i, int j) {
  TruncatedTensor t(n, 2);
  t.add_term({i, j}, 1);
  t.add_term({j, i}, -1);
  return t;
}

std::string ij(int n, int i, int j) {
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

void lemmas(std::vector<SuiteRow>& rows) {
  for (int n = 2; n <= 6; ++n) {
    const auto theta = MagnusExpansion::standard(n, 2);
    for (int i = 1; i < n; ++i) {
      const HomTensor got = tau1(theta, GroupElement::from_braid(BraidWord::generator(n, i)));
      const HomTensor want = HomTensor::dual_times(n, i, bracket(n, i, i + 1));
      SuiteRow r{"tau1 sigma " + ij(n, i, i + 1), "tau1(xi(s_i)) = l_i (x) (X_i X_{i+1} - X_{i+1} X_i)", got == want, ""};
      if (!r.pass) r.witness = got.str();
      rows.push_back(r);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const HomTensor got = tau1(theta, GroupElement::from_braid(aij_word(i, j, n)));
        const HomTensor want =
            HomTensor::dual_times(n, i, bracket(n, i, j)) - HomTensor::dual_times(n, j, bracket(n, i, j));
        SuiteRow r{"tau1 A " + ij(n, i, j), "tau1(xi(A_ij)) = (l_i - l_j) (x) (X_i X_j - X_j X_i)", got == want, ""};
        if (!r.pass) r.witness = got.str();
        rows.push_back(r);
      }
    }
  }
}

// Evaluates u on `samples` random tuples; records the first nonzero value.
template <class G, class Draw>
SuiteRow vanishes(std::string name, std::string ref, const BasicCochain<G>& u, int samples, Draw draw) {
  SuiteRow r{std::move(name), std::move(ref), true, ""};
  for (int s = 0; s < samples; ++s) {
    std::vector<G> tuple;
    for (int k = 0; k < u.degree(); ++k) tuple.push_back(draw());
    const CoeffValue v = u(std::span<const G>(tuple));
    if (!is_zero(v)) {
      r.pass = false;
      r.witness = "sample " + std::to_string(s) + ": " + to_string(v);
      break;
    }
  }
  return r;
}

void cocycle(std::vector<SuiteRow>& rows, Rng& rng) {
  for (int n = 2; n <= 5; ++n) {
    const Cochain tau = tau1_cochain(MagnusExpansion::standard(n, 2));
    auto draw = [&rng, n] { return GroupElement::from_braid(random_braid(rng, n, 8)); };
    const std::string sn = " n=" + std::to_string(n);
    rows.push_back(vanishes("coboundary tau1" + sn, "d tau1 = 0", coboundary(tau), 10, draw));
    rows.push_back(vanishes("coboundary h2" + sn, "d h_2 = 0", coboundary(hp_from_tau(tau, 2)), 10, draw));
    rows.push_back(vanishes("coboundary h3" + sn, "d h_3 = 0", coboundary(hp_from_tau(tau, 3)), 8, draw));
  }
}

void expansion_independence(std::vector<SuiteRow>& rows, Rng& rng) {
  for (int n = 2; n <= 4; ++n) {
    const auto std_theta = MagnusExpansion::standard(n, 2);
    for (int e = 1; e <= 5; ++e) {
      const auto theta = random_expansion(rng, n, 3);
      SuiteRow r{"pure braids n=" + std::to_string(n) + " expansion=" + std::to_string(e),
                 "tau1^theta(b) = tau1^std(b) for pure b", true, ""};
      for (int s = 0; s < 20 && r.pass; ++s) {
        const auto g = GroupElement::from_braid(random_pure_braid(rng, n, 4));
        const HomTensor a = tau1(theta, g);
        const HomTensor b = tau1(std_theta, g);
        if (!(a == b)) {
          r.pass = false;
          r.witness = g.str() + ": " + a.str() + " vs " + b.str();
        }
      }
      rows.push_back(r);
    }
  }
}

void primitivity(std::vector<SuiteRow>& rows, Rng& rng) {
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (const auto& [n1, n2] : shapes) {
    const int n = n1 + n2;
    auto draw = [&rng, n1 = n1, n2 = n2, n] {
      return BlockElement(GroupElement::from_braid(random_braid(rng, n1, 4)),
                          GroupElement::from_braid(random_braid(rng, n2, 4)), n);
    };
    const std::string shape = " blocks=" + std::to_string(n1) + "," + std::to_string(n2);
    const Cochain tau = tau1_cochain(MagnusExpansion::standard(n, 2));
    const Cochain tau_a = tau1_cochain(MagnusExpansion::standard(n1, 2));
    const Cochain tau_b = tau1_cochain(MagnusExpansion::standard(n2, 2));
    const BlockCochain t1 = pullback_projection(tau_a, 1, n1, n2, n);
    const BlockCochain t2 = pullback_projection(tau_b, 2, n1, n2, n);

    rows.push_back(vanishes("restrict tau1" + shape, "iota^* tau1 = tau^(1) + tau^(2)",
                            block_restrict(tau, n1, n2) - (t1 + t2), 8, draw));
    rows.push_back(vanishes("mixed b2 12" + shape, "b_2(tau^(1) tau^(2)) = 0", bp_cup<BlockElement>({t1, t2}), 8, draw));
    rows.push_back(vanishes("mixed b2 21" + shape, "b_2(tau^(2) tau^(1)) = 0", bp_cup<BlockElement>({t2, t1}), 8, draw));
    for (int p = 1; p <= 3; ++p) {
      const std::string sp = " p=" + std::to_string(p);
      const BlockCochain h = block_restrict(hp_from_tau(tau, p), n1, n2) -
                             (pullback_projection(hp_from_tau(tau_a, p), 1, n1, n2, n) +
                              pullback_projection(hp_from_tau(tau_b, p), 2, n1, n2, n));
      rows.push_back(vanishes("restrict h" + sp + shape, "iota^* h_p = varpi_1^* h_p + varpi_2^* h_p", h, 6, draw));
      const BlockCochain hb = block_restrict(hbar_from_tau(tau, p), n1, n2) -
                              (pullback_projection(hbar_from_tau(tau_a, p), 1, n1, n2, n) +
                               pullback_projection(hbar_from_tau(tau_b, p), 2, n1, n2, n));
      rows.push_back(
          vanishes("restrict hbar" + sp + shape, "iota^* hbar_p = varpi_1^* hbar_p + varpi_2^* hbar_p", hb, 6, draw));
    }
  }
}

void independence_small(std::vector<SuiteRow>& rows) {
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {5, 2}}) {
    const Certificate c = certificate(n, q, MagnusExpansion::standard(n, 2));
    SuiteRow r{"certificate n=" + std::to_string(n) + " q=" + std::to_string(q),
               "rank <hbar_mu, z_lambda> = |P(q, n-q)| and <hbar_mu, z_lambda> = 0 for mu > lambda",
               c.pass() && c.triangular, ""};
    if (!r.pass) r.witness = "rank " + std::to_string(c.rank) + ", triangular " + (c.triangular ? "yes" : "no");
    rows.push_back(r);
  }
  {
    const auto theta = MagnusExpansion::standard(2, 2);
    const BarChain z = torus_cycle(std::vector{GroupElement::from_braid(aij_word(1, 2, 2))});
    const CoeffValue v = pair(hbar_exterior(theta, 1), z);
    ExteriorElement want(2, 1);
    want.add_term({1}, 1);
    want.add_term({2}, 1);
    SuiteRow r{"pairing hbar1 A(1,2) n=2", "<hbar_1, [A_12]> = X_1 + X_2", std::get<ExteriorElement>(v) == want, ""};
    if (!r.pass) r.witness = to_string(v);
    rows.push_back(r);
  }
  {
    const Cochain h = hbar_exterior(MagnusExpansion::standard(3, 2), 2);
    SuiteRow r{"pairing hbar2 P3 tori n=3", "<hbar_2, z> != 0 for some catalog torus z of P_3", false, ""};
    for (const auto& t : torus_catalog(2, 2)) {
      std::vector<GroupElement> elems;
      for (const auto& b : t) elems.push_back(GroupElement::from_braid(b.word(3)));
      if (!is_zero(pair(h, torus_cycle(elems)))) r.pass = true;
    }
    if (!r.pass) r.witness = "both pairings vanish";
    rows.push_back(r);
  }
}

}  // namespace

MagnusExpansion random_expansion(Rng& rng, int n, int N) {
  std::vector<TruncatedTensor> tails;
  for (int i = 1; i <= n; ++i) {
    TruncatedTensor t(n, N);
    for (int m = 2; m <= N; ++m) {
      const int count = rng.between(1, 3);
      for (int k = 0; k < count; ++k) {
        IndexSeq idx;
        for (int s = 0; s < m; ++s) idx.push_back(rng.between(1, n));
        Rational c(rng.nonzero(3), rng.between(1, 3));
        c.canonicalize();
        t.add_term(idx, c);
      }
    }
    tails.push_back(std::move(t));
  }
  return MagnusExpansion::custom(n, N, std::move(tails));
}

bool SuiteReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

nlohmann::json SuiteReport::to_json() const {
  auto a = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"name", r.name}, {"ref", r.ref}, {"pass", r.pass}};
    if (!r.pass) j["witness"] = r.witness;
    a.push_back(j);
  }
  return {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"rows", a}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmas", "cocycle", "primitivity", "expansion-independence",
                                              "independence-small"};
  return names;
}

SuiteReport check_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport rep{name, seed, {}};
  Rng rng(seed);
  if (name == "lemmas") {
    lemmas(rep.rows);
  } else if (name == "cocycle") {
    cocycle(rep.rows, rng);
  } else if (name == "primitivity") {
    primitivity(rep.rows, rng);
  } else if (name == "expansion-independence") {
    expansion_independence(rep.rows, rng);
  } else if (name == "independence-small") {
    independence_small(rep.rows);
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const SuiteRow& a, const SuiteRow& b) { return a.name < b.name; });
  return rep;
}

}  // namespace tmm
