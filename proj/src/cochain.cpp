#include "cochain.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace tmm {

namespace {

const MagnusExpansion& degree_two(const MagnusExpansion& theta, std::optional<MagnusExpansion>& holder) {
  if (theta.truncation() < 2) throw DomainError("tau1 needs an expansion truncated at degree >= 2");
  if (theta.truncation() == 2) return theta;
  holder = theta.truncated(2);
  return *holder;
}

HomTensor tau1_at_degree_two(const MagnusExpansion& theta2, const GroupElement& phi) {
  const int n = theta2.rank();
  if (phi.rank() != n) throw DomainError("tau1: rank mismatch");
  std::vector<TruncatedTensor> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const FreeWord xj = FreeWord::generator(n, j);
    TruncatedTensor col = component(theta2.expand(xj), 2);
    col -= act_gl(phi.matrix(), component(theta2.expand(phi.aut().inv().image(j)), 2));
    cols.push_back(std::move(col));
  }
  return HomTensor(n, 2, std::move(cols));
}

struct Tau1Memo {
  std::shared_mutex mutex;
  std::map<GroupElement, HomTensor> values;
};

constexpr std::size_t kTau1MemoLimit = 1 << 15;

}  // namespace

HomTensor tau1(const MagnusExpansion& theta, const GroupElement& phi) {
  std::optional<MagnusExpansion> holder;
  return tau1_at_degree_two(degree_two(theta, holder), phi);
}

Cochain tau1_cochain(const MagnusExpansion& theta) {
  std::optional<MagnusExpansion> holder;
  const MagnusExpansion theta2 = degree_two(theta, holder);
  auto memo = std::make_shared<Tau1Memo>();
  const int n = theta.rank();
  return Cochain(1, CoeffType{CoeffKind::Hom, n, 2}, [theta2, memo](std::span<const GroupElement> g) -> CoeffValue {
    {
      std::shared_lock lock(memo->mutex);
      auto it = memo->values.find(g[0]);
      if (it != memo->values.end()) return it->second;
    }
    HomTensor v = tau1_at_degree_two(theta2, g[0]);
    std::unique_lock lock(memo->mutex);
    if (memo->values.size() < kTau1MemoLimit) memo->values.try_emplace(g[0], v);
    return v;
  });
}

Cochain hp_from_tau(const Cochain& tau, int p) {
  if (p < 1) throw DomainError("h_p needs p >= 1");
  if (!(tau.degree() == 1 && tau.type() == CoeffType{CoeffKind::Hom, tau.type().n, 2})) {
    throw DomainError("h_p needs a Hom(H, H^2)-valued 1-cochain");
  }
  if (p == 1) return tau;
  return bp_cup(std::vector<Cochain>(static_cast<std::size_t>(p), tau));
}

Cochain hbar_from_tau(const Cochain& tau, int p) {
  return map_values(hp_from_tau(tau, p), CoeffType{CoeffKind::Tensor, tau.type().n, p},
                    [](const CoeffValue& v) -> CoeffValue { return contract_rp(std::get<HomTensor>(v)); });
}

Cochain hbar_exterior_from_tau(const Cochain& tau, int p) {
  return map_values(hbar_from_tau(tau, p), CoeffType{CoeffKind::Exterior, tau.type().n, p},
                    [p](const CoeffValue& v) -> CoeffValue { return alt_project(std::get<TruncatedTensor>(v), p); });
}

Cochain hbar_lambda_from_tau(const Cochain& tau, const std::vector<int>& parts) {
  Cochain acc = constant_cochain<GroupElement>(ExteriorElement::unit(tau.type().n));
  bool first = true;
  for (int part : parts) {
    if (part < 0) throw DomainError("partition parts must be non-negative");
    if (part == 0) continue;
    Cochain h = hbar_exterior_from_tau(tau, part);
    acc = first ? h : cup(acc, h);
    first = false;
  }
  return acc;
}

Cochain hp_cochain(const MagnusExpansion& theta, int p) { return hp_from_tau(tau1_cochain(theta), p); }
Cochain hbar_cochain(const MagnusExpansion& theta, int p) { return hbar_from_tau(tau1_cochain(theta), p); }
Cochain hbar_exterior(const MagnusExpansion& theta, int p) {
  return hbar_exterior_from_tau(tau1_cochain(theta), p);
}
Cochain hbar_lambda(const MagnusExpansion& theta, const std::vector<int>& parts) {
  return hbar_lambda_from_tau(tau1_cochain(theta), parts);
}

// ---------------------------------------------------------------------------

namespace {

FreeWord relabel(const FreeWord& w, int n, int offset) {
  std::vector<int> ls;
  ls.reserve(w.length());
  for (int l : w.letters()) ls.push_back(l > 0 ? l + offset : l - offset);
  return FreeWord::reduce(n, ls);
}

EndoMap block_map(const EndoMap& a, const EndoMap& b, int n) {
  const int n1 = a.rank();
  const int n2 = b.rank();
  std::vector<FreeWord> imgs;
  for (int i = 1; i <= n; ++i) {
    if (i <= n1) {
      imgs.push_back(relabel(a.image(i), n, 0));
    } else if (i <= n1 + n2) {
      imgs.push_back(relabel(b.image(i - n1), n, n1));
    } else {
      imgs.push_back(FreeWord::generator(n, i));
    }
  }
  return EndoMap(n, std::move(imgs));
}

}  // namespace

GroupElement block_include(const GroupElement& g1, const GroupElement& g2, int n) {
  const int n1 = g1.rank();
  const int n2 = g2.rank();
  if (n1 + n2 > n) {
    throw DomainError("block overflow: " + std::to_string(n1) + " + " + std::to_string(n2) + " > " + std::to_string(n));
  }
  if (g1.braid() && g2.braid()) {
    return GroupElement::from_braid(shift(BraidWord::from_letters(n, g1.braid()->letters()), 0, n) *
                                    shift(*g2.braid(), n1, n));
  }
  return GroupElement::from_aut(
      AutPair::make(block_map(g1.aut().fwd(), g2.aut().fwd(), n), block_map(g1.aut().inv(), g2.aut().inv(), n)));
}

BlockElement::BlockElement(GroupElement first, GroupElement second, int n)
    : first_(std::move(first)), second_(std::move(second)), included_(block_include(first_, second_, n)) {}

BlockElement operator*(const BlockElement& a, const BlockElement& b) {
  return BlockElement(a.first_ * b.first_, a.second_ * b.second_, a.rank());
}

BlockCochain block_restrict(const Cochain& u, int n1, int n2) {
  if (n1 + n2 > u.type().n) throw DomainError("block overflow in block_restrict");
  return BlockCochain(u.degree(), u.type(), [u](std::span<const BlockElement> g) {
    std::vector<GroupElement> inc;
    inc.reserve(g.size());
    for (const auto& b : g) inc.push_back(b.included());
    return u(std::span<const GroupElement>(inc));
  });
}

BlockCochain pullback_projection(const Cochain& u, int k, int n1, int n2, int n) {
  if (k != 1 && k != 2) throw DomainError("projection index must be 1 or 2");
  if (n1 + n2 > n) throw DomainError("block overflow in pullback_projection");
  const int nk = k == 1 ? n1 : n2;
  if (u.type().n != nk) throw DomainError("pullback_projection: cochain rank does not match the block");
  const int offset = k == 1 ? 0 : n1;
  CoeffType t = u.type();
  t.n = n;
  return BlockCochain(u.degree(), t, [u, k, n, offset](std::span<const BlockElement> g) {
    std::vector<GroupElement> comp;
    comp.reserve(g.size());
    for (const auto& b : g) comp.push_back(k == 1 ? b.first() : b.second());
    return embed_value(u(std::span<const GroupElement>(comp)), n, offset);
  });
}

}  // namespace tmm
