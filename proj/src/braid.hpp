#pragma once

// Artin braid group B_n, the pure braid generators A_{i,j}, the Artin
// homomorphism xi: B_n -> Aut(F_n) and the crossed homomorphism k_0 on pure braids.

#include <span>
#include <string>
#include <vector>

#include "word.hpp"

namespace tmm {

// Word in sigma_1..sigma_{n-1}; signed flat letters, freely reduced.
class BraidWord {
 public:
  explicit BraidWord(int n);
  static BraidWord from_letters(int n, std::span<const int> letters);
  static BraidWord generator(int n, int i, int exponent = 1);

  int strands() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  std::string str() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

struct PureBraidGen {
  int i;
  int j;
};

// Word in A_{i,j}^{+-1}.
struct PureBraidWord {
  int n = 0;
  std::vector<std::pair<PureBraidGen, int>> letters;  // (generator, exponent +-1)

  BraidWord to_braid() const;
};

// sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}
BraidWord aij_word(int i, int j, int n);
// (sigma_1 ... sigma_{k-1})^k
BraidWord full_twist(int k, int n);
// sigma_i |-> sigma_{i+offset} into B_n.
BraidWord shift(const BraidWord& b, int offset, int n);

// Automorphism xi(sigma_i^{e}) of F_n.
AutPair xi_generator(int n, int i, int exponent);
// xi(a b) = xi(a) o xi(b).
AutPair xi(const BraidWord& beta);

// perm[k-1] = image of strand k; sigma_i |-> transposition (i, i+1), perm(ab) = perm(a) o perm(b).
std::vector<int> permutation(const BraidWord& beta);
bool is_pure(const BraidWord& beta);
bool braids_equal(const BraidWord& a, const BraidWord& b);

// k_0 on P_{n+1} with values in H = H_1(F_n): A_{i,j} |-> 0 for j <= n, X_i for j = n+1.
HVector k0_pure(const PureBraidWord& beta);
// x_j |-> A_{j, n+1}: F_n into P_{n+1}.
PureBraidWord iota_word(const FreeWord& gamma);

}  // namespace tmm
