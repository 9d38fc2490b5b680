#pragma once

// Normalized bar complex of a group with trivial coefficients, torus cycles from
// commuting tuples, shuffle (Eilenberg-Zilber) cross products, and evaluation of
// cochains on chains over subgroups acting trivially on H.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cochain.hpp"

namespace tmm {

class BarChain {
 public:
  using Tuple = std::vector<GroupElement>;

  BarChain(int n, int degree);
  static BarChain unit(int n);  // the empty tuple with coefficient 1
  static BarChain single(const Tuple& tuple, const Rational& c = 1);

  int rank() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Tuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Tuples containing the identity are degenerate and dropped.
  void add_term(const Tuple& tuple, const Rational& c);

  BarChain& operator+=(const BarChain& o);
  BarChain& operator-=(const BarChain& o);
  BarChain& operator*=(const Rational& c);
  friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }
  friend BarChain operator-(BarChain a, const BarChain& b) { return a -= b; }
  friend BarChain operator*(const Rational& c, BarChain a) { return a *= c; }
  friend bool operator==(const BarChain& a, const BarChain& b);

  std::string str() const;

 private:
  int n_;
  int degree_;
  std::map<Tuple, Rational> terms_;
};

BarChain boundary(const BarChain& z);

// sum_{s in S_p} sgn(s) (a_{s(1)} | ... | a_{s(p)}); throws DomainError on
// non-commuting pairs or identity entries, CheckFailure if the boundary is nonzero.
BarChain torus_cycle(std::span<const GroupElement> elems);

// Strand block {offset+1, ..., offset+size} of P_n.
struct BlockEmbedding {
  int offset;
  int size;
};

// Braid-backed element of P_size moved onto the block.
GroupElement embed_element(const GroupElement& g, const BlockEmbedding& e, int n);
BarChain embed_chain(const BarChain& z, const BlockEmbedding& e, int n);

// Shuffle product of cycles whose elements have disjoint supports in F_n.
BarChain cross(const BarChain& z1, const BarChain& z2);
// Shuffle product of cycles on block groups, embedded into P_n first.
BarChain cross(const BarChain& z1, const BlockEmbedding& e1, const BarChain& z2, const BlockEmbedding& e2, int n);

// sum over tuples of coeff * u(tuple). Every element must act trivially on H.
CoeffValue pair(const Cochain& u, const BarChain& z);

}  // namespace tmm
