#pragma once

// Seeded generator with draws defined by modulo reduction, so sequences do not
// depend on the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "braid.hpp"

namespace tmm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int below(int m) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(m)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  // Uniform in [-bound, -1] u [1, bound].
  int nonzero(int bound) {
    const int v = below(2 * bound) - bound;
    return v >= 0 ? v + 1 : v;
  }

 private:
  std::mt19937_64 gen_;
};

// Random word in sigma_1^{+-1}..sigma_{n-1}^{+-1} with 1..max_len letters before reduction.
BraidWord random_braid(Rng& rng, int n, int max_len);
// Random product of 1..max_letters generators A_{i,j}^{+-1} of P_n.
BraidWord random_pure_braid(Rng& rng, int n, int max_letters);

}  // namespace tmm
