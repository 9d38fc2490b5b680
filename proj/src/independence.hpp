#pragma once

// Partitions, cup monomials hbar_lambda, block subgroups P_lambda of P_n, and the
// linear-independence certificate built from pairings with explicit bar cycles.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chains.hpp"

namespace tmm {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, non-negative

  explicit Partition(std::vector<int> p);
  int q() const;
  int slots() const { return static_cast<int>(parts.size()); }
  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Lexicographic comparison of part sequences, larger first part is larger.
bool lex_greater(const Partition& a, const Partition& b);

// All partitions of q into `slots` non-negative parts, lexicographically descending.
std::vector<Partition> partitions(int q, int slots);
// b_p = #{k : lambda_k >= p}, p = 1..lambda_1.
std::vector<int> dual_partition(const Partition& lambda);
// prod_{p=1}^{lambda_1} (b_p - b_{p+1})!
mpz_class r_lambda(const Partition& lambda);
// Consecutive blocks of lambda_k + 1 strands.
std::vector<BlockEmbedding> iota_lambda_embed(const Partition& lambda, int n);

// A(i,j) or the full twist on strands i..j.
struct NamedBraid {
  enum class Kind { A, Twist } kind;
  int i;
  int j;

  BraidWord word(int n) const;
  NamedBraid shifted(int offset) const { return {kind, i + offset, j + offset}; }
  std::string label() const;
};

// Commuting p-tuples of catalog elements of P_{p+1} (A(i,j) and nested full twists),
// ordered by total word length then by position in the element list. At most `depth`.
std::vector<std::vector<NamedBraid>> torus_catalog(int p, int depth);

// Exact rank by fraction-free (Bareiss) elimination after clearing denominators row-wise.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

struct CycleDescriptor {
  Partition lambda;
  std::vector<std::vector<NamedBraid>> blocks;  // one commuting tuple per block with lambda_k >= 1, already shifted
  std::string label() const;                    // e.g. "torus:A(1,2) * torus:A(3,4)"
};

struct TriangularityRow {
  Partition mu;
  Partition lambda;
  bool zero;
};

struct Certificate {
  int n = 0;
  int q = 0;
  int catalog_depth = 0;
  std::vector<Partition> partitions;
  std::vector<CycleDescriptor> cycles;
  std::vector<std::vector<Rational>> matrix;  // rows: partitions; columns: C(n,q) coordinates per cycle
  std::size_t rank = 0;
  std::vector<TriangularityRow> triangularity;
  bool triangular = true;

  bool pass() const { return rank == partitions.size(); }
  std::string verdict() const { return pass() ? "pass" : "inconclusive-catalog"; }
  nlohmann::json to_json() const;
};

// Throws DomainError if q > n - 1 or a block has no catalog cycle (depth < 1).
Certificate certificate(int n, int q, const MagnusExpansion& theta, int catalog_depth = 3);

struct AssertionAReport {
  Partition lambda;
  int n = 0;
  mpz_class r = 1;
  int cycles_checked = 0;
  bool identity_holds = true;
  bool some_nonzero = false;
  std::string witness;
  bool passed() const { return identity_holds && some_nonzero; }
};

// Compares <iota_lambda^* hbar_lambda, z> with r_lambda <hbar_{lambda_1,1} ... hbar_{lambda_m,m}, z>
// on the catalog cycles of P_lambda and on `samples` seeded random torus cycles.
AssertionAReport assertion_a_scalar_check(const Partition& lambda, int n, const MagnusExpansion& theta,
                                          std::uint64_t seed, int samples = 8);

// hbar_{p,k}: hbar_p of the block group P_{size} evaluated on the block-k parts of the
// arguments (elements supported inside the block), pushed into Lambda^p H of rank n.
// The block class uses the standard expansion of the block group.
Cochain block_hbar(int p, const BlockEmbedding& block, int n);

}  // namespace tmm
