#pragma once

// Elements of Aut(F_n), either braid-backed (a braid word with its xi image) or
// given directly as a verified automorphism pair. Equality and ordering use the
// generator images, so different words for the same braid compare equal.

#include <memory>
#include <optional>
#include <set>
#include <string>

#include "braid.hpp"
#include "word.hpp"

namespace tmm {

class GroupElement {
 public:
  static GroupElement identity(int n);
  static GroupElement from_braid(const BraidWord& beta);
  static GroupElement from_aut(AutPair aut);

  int rank() const;
  bool is_identity() const;
  const AutPair& aut() const;
  const std::optional<BraidWord>& braid() const;
  // |phi| and |phi|^{-1} acting on H.
  const IntMatrix& matrix() const;
  const IntMatrix& inverse_matrix() const;
  // Generators x_i moved by the element, together with every generator in their images.
  const std::set<int>& support() const;

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  // Braid word if braid-backed, otherwise the generator images.
  std::string str() const;

 private:
  struct Data;
  explicit GroupElement(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static GroupElement build(std::optional<BraidWord> braid, AutPair aut);
  std::shared_ptr<const Data> d_;
};

bool commute(const GroupElement& a, const GroupElement& b);

}  // namespace tmm
