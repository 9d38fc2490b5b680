#include "braid.hpp"

#include <cstdlib>
#include <numeric>

#include "error.hpp"

namespace tmm {

namespace {

void push_reduced(std::vector<int>& stack, int letter) {
  if (!stack.empty() && stack.back() == -letter) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw DomainError("braid group needs at least one strand");
}

BraidWord BraidWord::from_letters(int n, std::span<const int> letters) {
  BraidWord b(n);
  for (int l : letters) {
    if (l == 0 || std::abs(l) > n - 1) {
      throw DomainError("braid generator index " + std::to_string(std::abs(l)) + " outside 1.." + std::to_string(n - 1));
    }
    push_reduced(b.letters_, l);
  }
  return b;
}

BraidWord BraidWord::generator(int n, int i, int exponent) {
  if (exponent != 1 && exponent != -1) throw DomainError("braid generator exponent must be +1 or -1");
  const int l = i * exponent;
  return from_letters(n, std::span<const int>(&l, 1));
}

BraidWord BraidWord::inverse() const {
  BraidWord b(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) b.letters_.push_back(-*it);
  return b;
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord r(n_);
  for (int t = 0; t < std::abs(k); ++t) r = r * base;
  return r;
}

std::string BraidWord::str() const {
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) throw DomainError("braid product: strand count mismatch");
  BraidWord r = a;
  for (int l : b.letters_) push_reduced(r.letters_, l);
  return r;
}

BraidWord PureBraidWord::to_braid() const {
  BraidWord r(n);
  for (const auto& [g, e] : letters) r = r * aij_word(g.i, g.j, n).power(e);
  return r;
}

BraidWord aij_word(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw DomainError("A(" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j <= " + std::to_string(n));
  }
  std::vector<int> ls;
  for (int k = j - 1; k > i; --k) ls.push_back(k);
  ls.push_back(i);
  ls.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) ls.push_back(-k);
  return BraidWord::from_letters(n, ls);
}

BraidWord full_twist(int k, int n) {
  if (!(2 <= k && k <= n)) throw DomainError("full twist needs 2 <= k <= n");
  std::vector<int> ls;
  for (int r = 0; r < k; ++r) {
    for (int i = 1; i <= k - 1; ++i) ls.push_back(i);
  }
  return BraidWord::from_letters(n, ls);
}

BraidWord shift(const BraidWord& b, int offset, int n) {
  std::vector<int> ls;
  for (int l : b.letters()) ls.push_back(l > 0 ? l + offset : l - offset);
  return BraidWord::from_letters(n, ls);
}

AutPair xi_generator(int n, int i, int exponent) {
  if (i < 1 || i > n - 1) throw DomainError("sigma index outside 1..n-1");
  std::vector<FreeWord> fwd;
  std::vector<FreeWord> inv;
  for (int j = 1; j <= n; ++j) {
    fwd.push_back(FreeWord::generator(n, j));
    inv.push_back(FreeWord::generator(n, j));
  }
  const int a = i;
  const int b = i + 1;
  // sigma_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
  fwd[static_cast<std::size_t>(a - 1)] = FreeWord::generator(n, b);
  {
    const int ls[] = {-b, a, b};
    fwd[static_cast<std::size_t>(b - 1)] = FreeWord::reduce(n, ls);
  }
  // sigma_i^{-1}: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
  {
    const int ls[] = {a, b, -a};
    inv[static_cast<std::size_t>(a - 1)] = FreeWord::reduce(n, ls);
  }
  inv[static_cast<std::size_t>(b - 1)] = FreeWord::generator(n, a);
  EndoMap f(n, std::move(fwd));
  EndoMap g(n, std::move(inv));
  return exponent > 0 ? AutPair::make(std::move(f), std::move(g)) : AutPair::make(std::move(g), std::move(f));
}

AutPair xi(const BraidWord& beta) {
  const int n = beta.strands();
  std::vector<AutPair> gens;
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(xi_generator(n, i, 1));
  }
  AutPair r = AutPair::identity(n);
  for (int l : beta.letters()) {
    const AutPair& g = gens[static_cast<std::size_t>(std::abs(l) - 1)];
    r = compose(r, l > 0 ? g : g.inverse());
  }
  return r;
}

std::vector<int> permutation(const BraidWord& beta) {
  std::vector<int> perm(static_cast<std::size_t>(beta.strands()));
  std::iota(perm.begin(), perm.end(), 1);
  // perm(ab) = perm(a) o perm(b): apply letters right to left.
  const auto ls = beta.letters();
  std::vector<int> result = perm;
  for (int k = 1; k <= beta.strands(); ++k) {
    int s = k;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      const int i = std::abs(*it);
      if (s == i) {
        s = i + 1;
      } else if (s == i + 1) {
        s = i;
      }
    }
    result[static_cast<std::size_t>(k - 1)] = s;
  }
  return result;
}

bool is_pure(const BraidWord& beta) {
  const auto perm = permutation(beta);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("braids_equal: strand count mismatch");
  return xi(a).fwd() == xi(b).fwd();
}

HVector k0_pure(const PureBraidWord& beta) {
  const int n = beta.n - 1;
  if (n < 1) throw DomainError("k0 needs at least two strands");
  HVector v = HVector::zero(n);
  for (const auto& [g, e] : beta.letters) {
    if (!(1 <= g.i && g.i < g.j && g.j <= beta.n)) throw DomainError("pure braid generator index out of range");
    if (e != 1 && e != -1) throw DomainError("pure braid exponent must be +1 or -1");
    if (g.j == n + 1) v.coords[static_cast<std::size_t>(g.i - 1)] += e;
  }
  return v;
}

PureBraidWord iota_word(const FreeWord& gamma) {
  PureBraidWord w;
  w.n = gamma.rank() + 1;
  for (int l : gamma.letters()) w.letters.push_back({PureBraidGen{std::abs(l), w.n}, l > 0 ? 1 : -1});
  return w;
}

}  // namespace tmm
