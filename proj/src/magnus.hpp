#pragma once

// Magnus expansions theta: F_n -> 1 + T_1 into the truncated tensor algebra.

#include <cstdint>
#include <memory>
#include <vector>

#include "tensor.hpp"
#include "word.hpp"

namespace tmm {

class MagnusExpansion {
 public:
  // theta(x_i) = 1 + X_i.
  static MagnusExpansion standard(int n, int N);
  // theta(x_i) = 1 + X_i + tails[i-1]; each tail may only have terms of degree >= 2.
  static MagnusExpansion custom(int n, int N, std::vector<TruncatedTensor> tails);

  int rank() const { return n_; }
  int truncation() const { return N_; }
  bool is_standard() const { return standard_; }
  const TruncatedTensor& value(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const TruncatedTensor& inverse_value(int i) const { return inverses_.at(static_cast<std::size_t>(i - 1)); }

  // Product of per-letter values in word order. Memoized per word.
  TruncatedTensor expand(const FreeWord& gamma) const;
  // The same expansion with truncation lowered to N (N <= truncation()); shares nothing mutable.
  MagnusExpansion truncated(int N) const;

 private:
  struct Cache;
  MagnusExpansion(int n, int N, bool standard, std::vector<TruncatedTensor> values,
                  std::vector<TruncatedTensor> inverses);

  int n_;
  int N_;
  bool standard_;
  std::vector<TruncatedTensor> values_;
  std::vector<TruncatedTensor> inverses_;
  std::shared_ptr<Cache> cache_;
};

TruncatedTensor expand(const MagnusExpansion& theta, const FreeWord& gamma);

}  // namespace tmm
