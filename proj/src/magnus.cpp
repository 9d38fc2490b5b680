#include "magnus.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "error.hpp"

namespace tmm {

namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::size_t kCacheLimit = 1 << 16;

}  // namespace

// Concurrent readers; writers insert idempotently (same word -> same value).
struct MagnusExpansion::Cache {
  std::shared_mutex mutex;
  std::unordered_map<std::vector<int>, TruncatedTensor, LettersHash> values;
};

MagnusExpansion::MagnusExpansion(int n, int N, bool standard, std::vector<TruncatedTensor> values,
                                 std::vector<TruncatedTensor> inverses)
    : n_(n),
      N_(N),
      standard_(standard),
      values_(std::move(values)),
      inverses_(std::move(inverses)),
      cache_(std::make_shared<Cache>()) {}

MagnusExpansion MagnusExpansion::standard(int n, int N) {
  if (n < 1 || N < 1) throw DomainError("standard expansion needs n >= 1 and N >= 1");
  std::vector<TruncatedTensor> vals;
  std::vector<TruncatedTensor> invs;
  for (int i = 1; i <= n; ++i) {
    vals.push_back(TruncatedTensor::one(n, N) + TruncatedTensor::basis(n, N, IndexSeq{i}));
    // sum_{k <= N} (-X_i)^k
    TruncatedTensor inv = TruncatedTensor::one(n, N);
    IndexSeq idx;
    for (int k = 1; k <= N; ++k) {
      idx.push_back(i);
      inv.add_term(idx, k % 2 == 0 ? 1 : -1);
    }
    invs.push_back(std::move(inv));
  }
  return MagnusExpansion(n, N, true, std::move(vals), std::move(invs));
}

MagnusExpansion MagnusExpansion::custom(int n, int N, std::vector<TruncatedTensor> tails) {
  if (n < 1 || N < 1) throw DomainError("custom expansion needs n >= 1 and N >= 1");
  if (static_cast<int>(tails.size()) != n) throw DomainError("custom expansion needs one tail per generator");
  std::vector<TruncatedTensor> vals;
  std::vector<TruncatedTensor> invs;
  bool all_zero = true;
  for (int i = 1; i <= n; ++i) {
    const TruncatedTensor& tail = tails[static_cast<std::size_t>(i - 1)];
    if (tail.rank() != n) throw DomainError("custom expansion tail has wrong rank");
    for (const auto& [idx, c] : tail.terms()) {
      if (idx.size() < 2) throw DomainError("custom expansion tail has a term of degree < 2");
    }
    all_zero = all_zero && tail.is_zero();
    TruncatedTensor v = TruncatedTensor::one(n, N) + TruncatedTensor::basis(n, N, IndexSeq{i}) + retruncate(tail, N);
    invs.push_back(truncated_inverse(v));
    vals.push_back(std::move(v));
  }
  return MagnusExpansion(n, N, all_zero, std::move(vals), std::move(invs));
}

TruncatedTensor MagnusExpansion::expand(const FreeWord& gamma) const {
  if (gamma.rank() != n_) throw DomainError("expand: rank mismatch");
  const std::vector<int> key(gamma.letters().begin(), gamma.letters().end());
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  TruncatedTensor t = TruncatedTensor::one(n_, N_);
  for (int l : key) t = t * (l > 0 ? value(l) : inverse_value(-l));
  {
    std::unique_lock lock(cache_->mutex);
    if (cache_->values.size() < kCacheLimit) cache_->values.try_emplace(key, t);
  }
  return t;
}

MagnusExpansion MagnusExpansion::truncated(int N) const {
  if (N < 1 || N > N_) throw DomainError("truncated: degree outside 1..N");
  std::vector<TruncatedTensor> vals;
  std::vector<TruncatedTensor> invs;
  for (const auto& v : values_) vals.push_back(retruncate(v, N));
  for (const auto& v : inverses_) invs.push_back(retruncate(v, N));
  return MagnusExpansion(n_, N, standard_, std::move(vals), std::move(invs));
}

TruncatedTensor expand(const MagnusExpansion& theta, const FreeWord& gamma) { return theta.expand(gamma); }

}  // namespace tmm
