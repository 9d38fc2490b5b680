#include "independence.hpp"

#include "rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace tmm {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0) throw DomainError("partition parts must be non-negative");
    if (k > 0 && parts[k] > parts[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::q() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts[k]);
  }
  return s + ")";
}

bool lex_greater(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(), a.parts.end());
}

std::vector<Partition> partitions(int q, int slots) {
  if (slots < 1) throw DomainError("partitions need at least one slot");
  if (q < 0) throw DomainError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts chosen largest first, so the recursion already emits descending order.
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (static_cast<int>(cur.size()) == slots) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    const int left = slots - static_cast<int>(cur.size());
    for (int v = std::min(remaining, bound); v >= 0; --v) {
      if (static_cast<long>(v) * left < remaining) break;
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(q, q);
  return out;
}

std::vector<int> dual_partition(const Partition& lambda) {
  const int top = lambda.parts.empty() ? 0 : lambda.parts.front();
  std::vector<int> b(static_cast<std::size_t>(top), 0);
  for (int part : lambda.parts) {
    for (int p = 1; p <= part; ++p) ++b[static_cast<std::size_t>(p - 1)];
  }
  return b;
}

mpz_class r_lambda(const Partition& lambda) {
  const auto b = dual_partition(lambda);
  mpz_class r = 1;
  for (std::size_t p = 0; p < b.size(); ++p) {
    const int next = p + 1 < b.size() ? b[p + 1] : 0;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(b[p] - next));
    r *= f;
  }
  return r;
}

std::vector<BlockEmbedding> iota_lambda_embed(const Partition& lambda, int n) {
  std::vector<BlockEmbedding> blocks;
  int offset = 0;
  for (int part : lambda.parts) {
    if (offset + part + 1 > n) {
      throw DomainError("partition " + lambda.str() + " needs more than " + std::to_string(n) + " strands");
    }
    blocks.push_back({offset, part + 1});
    offset += part + 1;
  }
  return blocks;
}

// ---------------------------------------------------------------------------

BraidWord NamedBraid::word(int n) const {
  if (kind == Kind::A) return aij_word(i, j, n);
  if (!(1 <= i && i < j && j <= n)) throw DomainError("twist(" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  const int k = j - i + 1;
  return shift(full_twist(k, k), i - 1, n);
}

std::string NamedBraid::label() const {
  const std::string args = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return (kind == Kind::A ? "A" : "twist") + args;
}

std::vector<std::vector<NamedBraid>> torus_catalog(int p, int depth) {
  if (p < 0) throw DomainError("torus catalog degree must be non-negative");
  if (p == 0) return {{}};
  const int m = p + 1;
  std::vector<NamedBraid> pool;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) pool.push_back({NamedBraid::Kind::A, i, j});
  }
  for (int k = 3; k <= m; ++k) pool.push_back({NamedBraid::Kind::Twist, 1, k});

  std::vector<GroupElement> elems;
  std::vector<std::size_t> lengths;
  for (const auto& b : pool) {
    const BraidWord w = b.word(m);
    elems.push_back(GroupElement::from_braid(w));
    lengths.push_back(w.length());
  }
  const std::size_t size = pool.size();
  std::vector<std::vector<bool>> commutes(size, std::vector<bool>(size, true));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) commutes[a][b] = commutes[b][a] = commute(elems[a], elems[b]);
  }

  struct Candidate {
    std::size_t length;
    std::vector<std::size_t> idx;
  };
  std::vector<Candidate> found;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == p) {
      std::size_t len = 0;
      for (auto k : cur) len += lengths[k];
      found.push_back({len, cur});
      return;
    }
    for (std::size_t k = start; k < size; ++k) {
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return commutes[c][k]; })) {
        cur.push_back(k);
        rec(k + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return a.length != b.length ? a.length < b.length : a.idx < b.idx;
  });

  std::vector<std::vector<NamedBraid>> out;
  for (const auto& c : found) {
    if (static_cast<int>(out.size()) >= depth) break;
    std::vector<NamedBraid> t;
    for (auto k : c.idx) t.push_back(pool[k]);
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError("exact_rank: ragged matrix");
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(cols);
    for (const auto& x : row) r.push_back(x.get_num() * (l / x.get_den()));
    a.push_back(std::move(r));
  }

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

namespace {

std::string tuple_label(const std::vector<NamedBraid>& t) {
  std::string s = "torus:";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += "|";
    s += t[k].label();
  }
  return s;
}

BarChain tuple_cycle(const std::vector<GroupElement>& elems, int n) {
  if (elems.empty()) return BarChain::unit(n);
  return torus_cycle(elems);
}

// Cross product of the per-block cycles; the unit chain when there are none.
BarChain cross_all(const std::vector<BarChain>& cycles, int n) {
  if (cycles.empty()) return BarChain::unit(n);
  BarChain acc = cycles.front();
  for (std::size_t k = 1; k < cycles.size(); ++k) acc = cross(acc, cycles[k]);
  return acc;
}

BarChain descriptor_chain(const CycleDescriptor& d, int n) {
  std::vector<BarChain> parts;
  for (const auto& t : d.blocks) {
    std::vector<GroupElement> elems;
    for (const auto& b : t) elems.push_back(GroupElement::from_braid(b.word(n)));
    parts.push_back(tuple_cycle(elems, n));
  }
  return cross_all(parts, n);
}

constexpr std::size_t kMaxCyclesPerPartition = 16;

std::vector<CycleDescriptor> partition_cycles(const Partition& lambda, int n, int depth) {
  const auto blocks = iota_lambda_embed(lambda, n);
  std::vector<std::vector<std::vector<NamedBraid>>> choices;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int part = lambda.parts[k];
    if (part == 0) continue;
    auto cat = torus_catalog(part, depth);
    if (cat.empty()) {
      throw DomainError("no catalog cycle for block " + std::to_string(k + 1) + " of " + lambda.str());
    }
    for (auto& t : cat) {
      for (auto& b : t) b = b.shifted(blocks[k].offset);
    }
    choices.push_back(std::move(cat));
  }

  std::vector<CycleDescriptor> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (out.size() < kMaxCyclesPerPartition) {
    CycleDescriptor d{lambda, {}};
    for (std::size_t k = 0; k < choices.size(); ++k) d.blocks.push_back(choices[k][pick[k]]);
    out.push_back(std::move(d));
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++pick[k] < choices[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) break;
  }
  return out;
}

nlohmann::json rational_row(const std::vector<Rational>& row) {
  auto a = nlohmann::json::array();
  for (const auto& x : row) a.push_back(to_string(x));
  return a;
}

}  // namespace

std::string CycleDescriptor::label() const {
  if (blocks.empty()) return "unit";
  if (blocks.size() == 1) return tuple_label(blocks.front());
  std::string s = "cross:";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) s += " * ";
    s += tuple_label(blocks[k]);
  }
  return s;
}

Certificate certificate(int n, int q, const MagnusExpansion& theta, int catalog_depth) {
  if (n < 1) throw DomainError("certificate needs n >= 1");
  if (q < 0 || q > n - 1) throw DomainError("certificate needs 0 <= q <= n - 1");
  if (catalog_depth < 1) throw DomainError("catalog depth must be at least 1");
  if (theta.rank() != n) throw DomainError("expansion rank does not match n");

  Certificate cert;
  cert.n = n;
  cert.q = q;
  cert.catalog_depth = catalog_depth;
  cert.partitions = partitions(q, n - q);

  const Cochain tau = tau1_cochain(theta);
  std::vector<Cochain> classes;
  for (const auto& mu : cert.partitions) classes.push_back(hbar_lambda_from_tau(tau, mu.parts));

  cert.matrix.assign(cert.partitions.size(), {});
  for (const auto& lambda : cert.partitions) {
    const auto cycles = partition_cycles(lambda, n, catalog_depth);
    std::vector<bool> zero(cert.partitions.size(), true);
    for (const auto& d : cycles) {
      const BarChain z = descriptor_chain(d, n);
      for (std::size_t r = 0; r < classes.size(); ++r) {
        const auto coords = flatten(std::get<ExteriorElement>(pair(classes[r], z)));
        for (const auto& x : coords) {
          if (x != 0) zero[r] = false;
        }
        auto& row = cert.matrix[r];
        row.insert(row.end(), coords.begin(), coords.end());
      }
      cert.cycles.push_back(d);
    }
    for (std::size_t r = 0; r < cert.partitions.size(); ++r) {
      const auto& mu = cert.partitions[r];
      if (!lex_greater(mu, lambda)) continue;
      cert.triangularity.push_back({mu, lambda, zero[r]});
      if (!zero[r]) cert.triangular = false;
    }
  }
  cert.rank = exact_rank(cert.matrix);
  return cert;
}

nlohmann::json Certificate::to_json() const {
  using nlohmann::json;
  json j;
  j["n"] = n;
  j["q"] = q;
  j["catalog_depth"] = catalog_depth;
  j["convention"] =
      "Lambda^q values are the unnormalized alternating sums of H^q coefficients (no 1/q!); "
      "columns list the coefficients of e_i1^...^e_iq for i1<...<iq in lexicographic order, cycle by cycle";
  auto parts = json::array();
  for (const auto& p : partitions) parts.push_back(p.parts);
  j["partitions"] = parts;
  auto cyc = json::array();
  for (const auto& d : cycles) {
    json c;
    c["lambda"] = d.lambda.parts;
    c["cycle"] = d.label();
    auto words = json::array();
    for (const auto& t : d.blocks) {
      auto tw = json::array();
      for (const auto& b : t) tw.push_back(b.word(n).str());
      words.push_back(tw);
    }
    c["braids"] = words;
    cyc.push_back(c);
  }
  j["cycles"] = cyc;
  auto m = json::array();
  for (const auto& row : matrix) m.push_back(rational_row(row));
  j["matrix"] = m;
  j["rank"] = rank;
  j["required_rank"] = partitions.size();
  j["verdict"] = verdict();
  auto tri = json::array();
  for (const auto& t : triangularity) {
    tri.push_back({{"mu", t.mu.parts}, {"lambda", t.lambda.parts}, {"zero", t.zero}});
  }
  j["triangularity"] = tri;
  j["triangular"] = triangular;
  return j;
}

// ---------------------------------------------------------------------------

namespace {

// Braid of P_{block size} underlying an element supported on the block, or nullopt
// if the element lives on strands disjoint from the block.
std::optional<BraidWord> block_part(const GroupElement& g, const BlockEmbedding& e) {
  if (!g.braid()) throw DomainError("block classes need braid-backed elements");
  const auto letters = g.braid()->letters();
  bool inside = true;
  bool outside = true;
  for (int l : letters) {
    const int i = std::abs(l);
    if (i <= e.offset || i >= e.offset + e.size) inside = false;
    if (i >= e.offset && i <= e.offset + e.size) outside = false;
  }
  if (inside) {
    std::vector<int> local;
    for (int l : letters) local.push_back(l > 0 ? l - e.offset : l + e.offset);
    return BraidWord::from_letters(e.size, local);
  }
  if (outside) return std::nullopt;
  throw DomainError("element " + g.str() + " is not supported on a single block");
}

}  // namespace

Cochain block_hbar(int p, const BlockEmbedding& block, int n) {
  if (p < 1) throw DomainError("block class needs p >= 1");
  if (block.offset < 0 || block.offset + block.size > n) throw DomainError("block outside 1..n");
  const Cochain inner = hbar_exterior(MagnusExpansion::standard(block.size, 2), p);
  const CoeffType type{CoeffKind::Exterior, n, p};
  return Cochain(p, type, [inner, block, n, type](std::span<const GroupElement> args) -> CoeffValue {
    std::vector<GroupElement> local;
    for (const auto& g : args) {
      auto b = block_part(g, block);
      if (!b) return zero_value(type);
      local.push_back(GroupElement::from_braid(*b));
    }
    return embed_value(inner(std::span<const GroupElement>(local)), n, block.offset);
  });
}

namespace {

// Commuting tuple of P_{p+1} built from random data.
std::vector<BraidWord> random_torus(Rng& rng, int p) {
  const int m = p + 1;
  if (p == 1) return {aij_word(1, 2, m).power(rng.nonzero(3))};
  if (p == 2) {
    BraidWord w = random_pure_braid(rng, m, 3);
    while (w.empty()) w = random_pure_braid(rng, m, 3);
    const BraidWord t = full_twist(3, 3).power(rng.nonzero(1));
    return {w, t * w.power(rng.below(2))};
  }
  const auto cat = torus_catalog(p, 64);
  const auto& t = cat[static_cast<std::size_t>(rng.below(static_cast<int>(cat.size())))];
  std::vector<BraidWord> out;
  for (const auto& b : t) out.push_back(b.word(m).power(rng.nonzero(2)));
  return out;
}

}  // namespace

AssertionAReport assertion_a_scalar_check(const Partition& lambda, int n, const MagnusExpansion& theta,
                                          std::uint64_t seed, int samples) {
  AssertionAReport rep{lambda, 0, 1, 0, true, false, {}};
  rep.n = n;
  rep.r = r_lambda(lambda);
  if (theta.rank() != n) throw DomainError("expansion rank does not match n");
  const auto blocks = iota_lambda_embed(lambda, n);

  const Cochain lhs = hbar_lambda(theta, lambda.parts);
  std::optional<Cochain> rhs;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int part = lambda.parts[k];
    if (part == 0) continue;
    Cochain h = block_hbar(part, blocks[k], n);
    rhs = rhs ? cup(*rhs, h) : h;
  }
  const Rational r(rep.r);
  auto rhs_value = [&](const BarChain& z) -> CoeffValue {
    if (!rhs) return scale(r, pair(constant_cochain<GroupElement>(ExteriorElement::unit(n)), z));
    return scale(r, pair(*rhs, z));
  };

  auto check = [&](const BarChain& z, const std::string& label) {
    ++rep.cycles_checked;
    const CoeffValue a = pair(lhs, z);
    const CoeffValue b = rhs_value(z);
    if (!is_zero(a)) rep.some_nonzero = true;
    if (!is_zero(subtract(a, b)) && rep.identity_holds) {
      rep.identity_holds = false;
      rep.witness = label + ": lhs " + to_string(a) + " vs rhs " + to_string(b);
    }
  };

  for (const auto& d : partition_cycles(lambda, n, 3)) check(descriptor_chain(d, n), d.label());

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<BarChain> parts;
    std::string label;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const int part = lambda.parts[k];
      if (part == 0) continue;
      std::vector<GroupElement> elems;
      for (const auto& w : random_torus(rng, part)) {
        elems.push_back(GroupElement::from_braid(shift(BraidWord::from_letters(n, w.letters()), blocks[k].offset, n)));
      }
      if (!label.empty()) label += " * ";
      label += "torus:";
      for (std::size_t e = 0; e < elems.size(); ++e) label += (e ? "|" : "") + elems[e].str();
      parts.push_back(tuple_cycle(elems, n));
    }
    check(cross_all(parts, n), label.empty() ? "unit" : label);
  }
  return rep;
}

}  // namespace tmm
