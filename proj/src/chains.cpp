#include "chains.hpp"

#include <algorithm>
#include <numeric>

namespace tmm {

namespace {

void accumulate(std::map<BarChain::Tuple, Rational>& terms, const BarChain::Tuple& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

BarChain::BarChain(int n, int degree) : n_(n), degree_(degree) {
  if (degree < 0) throw DomainError("chain degree must be non-negative");
}

BarChain BarChain::unit(int n) {
  BarChain z(n, 0);
  z.add_term({}, 1);
  return z;
}

BarChain BarChain::single(const Tuple& tuple, const Rational& c) {
  if (tuple.empty()) throw DomainError("use BarChain::unit for the empty tuple");
  BarChain z(tuple.front().rank(), static_cast<int>(tuple.size()));
  z.add_term(tuple, c);
  return z;
}

void BarChain::add_term(const Tuple& tuple, const Rational& c) {
  if (static_cast<int>(tuple.size()) != degree_) throw DomainError("chain term has wrong length");
  for (const auto& g : tuple) {
    if (g.rank() != n_) throw DomainError("chain term has wrong rank");
    if (g.is_identity()) return;
  }
  accumulate(terms_, tuple, c);
}

BarChain& BarChain::operator+=(const BarChain& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw DomainError("chain add: shape mismatch");
  for (const auto& [t, c] : o.terms_) accumulate(terms_, t, c);
  return *this;
}

BarChain& BarChain::operator-=(const BarChain& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw DomainError("chain subtract: shape mismatch");
  for (const auto& [t, c] : o.terms_) accumulate(terms_, t, -c);
  return *this;
}

BarChain& BarChain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

bool operator==(const BarChain& a, const BarChain& b) {
  return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string BarChain::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*(";
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) s += " | ";
      s += t[k].str();
    }
    s += ")";
  }
  return s;
}

BarChain boundary(const BarChain& z) {
  const int p = z.degree();
  if (p == 0) return BarChain(z.rank(), 0);
  BarChain r(z.rank(), p - 1);
  for (const auto& [t, c] : z.terms()) {
    r.add_term(BarChain::Tuple(t.begin() + 1, t.end()), c);
    for (int i = 1; i < p; ++i) {
      BarChain::Tuple f;
      f.reserve(t.size() - 1);
      for (int k = 0; k < p; ++k) {
        if (k == i - 1) {
          f.push_back(t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k + 1)]);
          ++k;
        } else {
          f.push_back(t[static_cast<std::size_t>(k)]);
        }
      }
      r.add_term(f, i % 2 == 0 ? c : Rational(-c));
    }
    r.add_term(BarChain::Tuple(t.begin(), t.end() - 1), p % 2 == 0 ? c : Rational(-c));
  }
  return r;
}

BarChain torus_cycle(std::span<const GroupElement> elems) {
  if (elems.empty()) throw DomainError("torus cycle needs at least one element");
  const int n = elems.front().rank();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (elems[a].rank() != n) throw DomainError("torus cycle: rank mismatch");
    if (elems[a].is_identity()) throw DomainError("torus cycle: identity element");
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (!commute(elems[a], elems[b])) {
        throw DomainError("torus cycle: " + elems[a].str() + " and " + elems[b].str() + " do not commute");
      }
    }
  }
  std::vector<int> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  BarChain z(n, static_cast<int>(elems.size()));
  do {
    BarChain::Tuple t;
    for (int k : perm) t.push_back(elems[static_cast<std::size_t>(k)]);
    z.add_term(t, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!boundary(z).is_zero()) throw CheckFailure("torus cycle has nonzero boundary");
  return z;
}

GroupElement embed_element(const GroupElement& g, const BlockEmbedding& e, int n) {
  if (!g.braid()) throw DomainError("block embedding needs braid-backed elements");
  if (g.braid()->strands() != e.size) throw DomainError("element does not match block size");
  if (e.offset < 0 || e.offset + e.size > n) throw DomainError("block outside 1..n");
  return GroupElement::from_braid(shift(BraidWord::from_letters(n, g.braid()->letters()), e.offset, n));
}

BarChain embed_chain(const BarChain& z, const BlockEmbedding& e, int n) {
  BarChain r(n, z.degree());
  for (const auto& [t, c] : z.terms()) {
    BarChain::Tuple s;
    for (const auto& g : t) s.push_back(embed_element(g, e, n));
    r.add_term(s, c);
  }
  return r;
}

namespace {

std::set<int> chain_support(const BarChain& z) {
  std::set<int> s;
  for (const auto& [t, c] : z.terms()) {
    for (const auto& g : t) s.insert(g.support().begin(), g.support().end());
  }
  return s;
}

}  // namespace

BarChain cross(const BarChain& z1, const BarChain& z2) {
  if (z1.rank() != z2.rank()) throw DomainError("cross: rank mismatch");
  const auto s1 = chain_support(z1);
  const auto s2 = chain_support(z2);
  std::vector<int> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
  if (!common.empty()) throw DomainError("cross: overlapping blocks");
  if (!boundary(z1).is_zero() || !boundary(z2).is_zero()) throw DomainError("cross: inputs must be cycles");

  const int p = z1.degree();
  const int q = z2.degree();
  BarChain r(z1.rank(), p + q);
  // A (p,q)-shuffle is a choice of the p slots taken by the first factor.
  std::vector<int> mask(static_cast<std::size_t>(p + q), 0);
  std::fill(mask.begin(), mask.begin() + p, 1);
  std::sort(mask.begin(), mask.end());
  do {
    // Sign: parity of inversions between first-factor and second-factor slots.
    int inversions = 0;
    int seen_second = 0;
    for (int m : mask) {
      if (m == 1) {
        inversions += seen_second;
      } else {
        ++seen_second;
      }
    }
    const int sign = inversions % 2 == 0 ? 1 : -1;
    for (const auto& [t1, c1] : z1.terms()) {
      for (const auto& [t2, c2] : z2.terms()) {
        BarChain::Tuple t;
        std::size_t a = 0;
        std::size_t b = 0;
        for (int m : mask) t.push_back(m == 1 ? t1[a++] : t2[b++]);
        r.add_term(t, sign * c1 * c2);
      }
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  if (!boundary(r).is_zero()) throw CheckFailure("cross product has nonzero boundary");
  return r;
}

BarChain cross(const BarChain& z1, const BlockEmbedding& e1, const BarChain& z2, const BlockEmbedding& e2, int n) {
  const bool disjoint = e1.offset + e1.size <= e2.offset || e2.offset + e2.size <= e1.offset;
  if (!disjoint) throw DomainError("cross: overlapping blocks");
  return cross(embed_chain(z1, e1, n), embed_chain(z2, e2, n));
}

CoeffValue pair(const Cochain& u, const BarChain& z) {
  if (u.degree() != z.degree()) throw DomainError("pair: degree mismatch");
  if (u.type().n != z.rank()) throw DomainError("pair: rank mismatch");
  CoeffValue acc = zero_value(u.type());
  for (const auto& [t, c] : z.terms()) {
    for (const auto& g : t) {
      if (!g.matrix().is_identity()) {
        throw DomainError("pair: element " + g.str() + " acts nontrivially on H");
      }
    }
    acc = add(acc, scale(c, u(std::span<const GroupElement>(t))));
  }
  return acc;
}

}  // namespace tmm
