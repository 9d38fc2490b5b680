#include "group_element.hpp"

#include <cstdlib>

#include "error.hpp"

namespace tmm {

struct GroupElement::Data {
  std::optional<BraidWord> braid;
  AutPair aut;
  IntMatrix matrix;
  IntMatrix inverse_matrix;
  std::set<int> support;
  bool identity;
};

GroupElement GroupElement::build(std::optional<BraidWord> braid, AutPair aut) {
  auto d = std::make_shared<Data>(Data{std::move(braid), std::move(aut), {}, {}, {}, false});
  d->matrix = induced_matrix(d->aut.fwd());
  d->inverse_matrix = induced_matrix(d->aut.inv());
  d->identity = d->aut.fwd().is_identity();
  for (int i = 1; i <= d->aut.rank(); ++i) {
    const FreeWord& w = d->aut.fwd().image(i);
    if (w.length() == 1 && w.letters()[0] == i) continue;
    d->support.insert(i);
    for (int l : w.letters()) d->support.insert(std::abs(l));
  }
  return GroupElement(std::move(d));
}

GroupElement GroupElement::identity(int n) { return build(BraidWord(n), AutPair::identity(n)); }

GroupElement GroupElement::from_braid(const BraidWord& beta) { return build(beta, xi(beta)); }

GroupElement GroupElement::from_aut(AutPair aut) { return build(std::nullopt, std::move(aut)); }

int GroupElement::rank() const { return d_->aut.rank(); }
bool GroupElement::is_identity() const { return d_->identity; }
const AutPair& GroupElement::aut() const { return d_->aut; }
const std::optional<BraidWord>& GroupElement::braid() const { return d_->braid; }
const IntMatrix& GroupElement::matrix() const { return d_->matrix; }
const IntMatrix& GroupElement::inverse_matrix() const { return d_->inverse_matrix; }
const std::set<int>& GroupElement::support() const { return d_->support; }

GroupElement GroupElement::inverse() const {
  std::optional<BraidWord> b;
  if (d_->braid) b = d_->braid->inverse();
  return build(std::move(b), d_->aut.inverse());
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw DomainError("group product: rank mismatch");
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  std::optional<BraidWord> w;
  if (a.d_->braid && b.d_->braid) w = *a.d_->braid * *b.d_->braid;
  return GroupElement::build(std::move(w), compose(a.d_->aut, b.d_->aut));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.d_ == b.d_ || a.d_->aut.fwd() == b.d_->aut.fwd();
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.d_ == b.d_) return false;
  return a.d_->aut.fwd().images() < b.d_->aut.fwd().images();
}

std::string GroupElement::str() const {
  if (d_->braid) return d_->braid->empty() ? std::string("1") : d_->braid->str();
  std::string s = "[";
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) s += ", ";
    s += "x" + std::to_string(i) + " -> " + (aut().fwd().image(i).empty() ? "1" : aut().fwd().image(i).str());
  }
  return s + "]";
}

bool commute(const GroupElement& a, const GroupElement& b) { return a * b == b * a; }

}  // namespace tmm
