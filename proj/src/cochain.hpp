#pragma once

// Normalized group cochains with twisted coefficients, evaluated lazily.
// Cochains are templated on the group: GroupElement (Aut(F_n) and its braid
// subgroups) or BlockElement (A_{n1} x A_{n2} included block-diagonally).

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "error.hpp"
#include "group_element.hpp"
#include "magnus.hpp"

namespace tmm {

template <class G>
class BasicCochain {
 public:
  using Element = G;
  using Evaluator = std::function<CoeffValue(std::span<const G>)>;

  BasicCochain(int degree, CoeffType type, Evaluator f) : degree_(degree), type_(type), eval_(std::move(f)) {
    if (degree < 0) throw DomainError("cochain degree must be non-negative");
  }

  int degree() const { return degree_; }
  const CoeffType& type() const { return type_; }

  // Returns 0 whenever an argument is the identity.
  CoeffValue operator()(std::span<const G> args) const {
    if (static_cast<int>(args.size()) != degree_) {
      throw DomainError("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                        std::to_string(args.size()) + " arguments");
    }
    for (const auto& g : args) {
      if (g.rank() != type_.n) throw DomainError("cochain argument has wrong rank");
      if (g.is_identity()) return zero_value(type_);
    }
    return eval_(args);
  }
  CoeffValue operator()(std::initializer_list<G> args) const {
    return (*this)(std::span<const G>(args.begin(), args.size()));
  }

 private:
  int degree_;
  CoeffType type_;
  Evaluator eval_;
};

using Cochain = BasicCochain<GroupElement>;

// ---------------------------------------------------------------------------
// Generic constructions.

namespace detail {

template <class G>
std::pair<IntMatrix, IntMatrix> action_of_product(std::span<const G> gs, int n) {
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix minv = IntMatrix::identity(n);
  for (const auto& g : gs) {
    m = m * g.matrix();
    minv = g.inverse_matrix() * minv;
  }
  return {m, minv};
}

}  // namespace detail

template <class G>
BasicCochain<G> constant_cochain(const CoeffValue& v) {
  return BasicCochain<G>(0, type_of(v), [v](std::span<const G>) { return v; });
}

template <class G>
BasicCochain<G> map_values(const BasicCochain<G>& u, CoeffType type, std::function<CoeffValue(const CoeffValue&)> f) {
  return BasicCochain<G>(u.degree(), type, [u, f](std::span<const G> args) { return f(u(args)); });
}

template <class G>
BasicCochain<G> operator+(const BasicCochain<G>& u, const BasicCochain<G>& v) {
  if (u.degree() != v.degree() || !(u.type() == v.type())) throw DomainError("cochain sum: shape mismatch");
  return BasicCochain<G>(u.degree(), u.type(), [u, v](std::span<const G> args) { return add(u(args), v(args)); });
}

template <class G>
BasicCochain<G> operator-(const BasicCochain<G>& u, const BasicCochain<G>& v) {
  if (u.degree() != v.degree() || !(u.type() == v.type())) throw DomainError("cochain difference: shape mismatch");
  return BasicCochain<G>(u.degree(), u.type(), [u, v](std::span<const G> args) { return subtract(u(args), v(args)); });
}

// (du)(g_1..g_{p+1}) = g_1.u(g_2..) + sum_i (-1)^i u(.., g_i g_{i+1}, ..) + (-1)^{p+1} u(g_1..g_p)
template <class G>
BasicCochain<G> coboundary(const BasicCochain<G>& u) {
  const int p = u.degree();
  return BasicCochain<G>(p + 1, u.type(), [u, p](std::span<const G> g) {
    CoeffValue acc = coeff_action(g[0], u(g.subspan(1)));
    std::vector<G> face;
    for (int i = 1; i <= p; ++i) {
      face.assign(g.begin(), g.end());
      face[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(i - 1)] * g[static_cast<std::size_t>(i)];
      face.erase(face.begin() + i);
      const CoeffValue term = u(std::span<const G>(face));
      acc = (i % 2 == 0) ? add(acc, term) : subtract(acc, term);
    }
    const CoeffValue last = u(g.first(static_cast<std::size_t>(p)));
    return ((p + 1) % 2 == 0) ? add(acc, last) : subtract(acc, last);
  });
}

// Alexander-Whitney: (u cup v)(g_1..g_{p+q}) = u(g_1..g_p) * (g_1...g_p).v(g_{p+1}..)
template <class G>
BasicCochain<G> cup(const BasicCochain<G>& u, const BasicCochain<G>& v) {
  const int p = u.degree();
  const CoeffType t = product_type(u.type(), v.type());
  return BasicCochain<G>(p + v.degree(), t, [u, v, p](std::span<const G> g) {
    const auto head = g.first(static_cast<std::size_t>(p));
    const auto [m, minv] = detail::action_of_product(head, u.type().n);
    return multiply_values(u(head), act_matrix(m, minv, v(g.subspan(static_cast<std::size_t>(p)))));
  });
}

// b_p applied to the cup product of Hom(H, H^{(x)2})-valued 1-cochains:
// (g_1..g_p) |-> b_p(u_1(g_1), g_1.u_2(g_2), ..., (g_1...g_{p-1}).u_p(g_p)).
template <class G>
BasicCochain<G> bp_cup(std::vector<BasicCochain<G>> factors) {
  if (factors.empty()) throw DomainError("bp_cup needs at least one factor");
  const int n = factors.front().type().n;
  for (const auto& f : factors) {
    if (f.degree() != 1 || !(f.type() == CoeffType{CoeffKind::Hom, n, 2})) {
      throw DomainError("bp_cup factors must be Hom(H, H^2)-valued 1-cochains");
    }
  }
  const int p = static_cast<int>(factors.size());
  return BasicCochain<G>(p, CoeffType{CoeffKind::Hom, n, p + 1}, [factors, n](std::span<const G> g) {
    std::vector<HomTensor> us;
    us.reserve(factors.size());
    IntMatrix m = IntMatrix::identity(n);
    IntMatrix minv = IntMatrix::identity(n);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const CoeffValue val = factors[k](std::span<const G>(&g[k], 1));
      us.push_back(std::get<HomTensor>(act_matrix(m, minv, val)));
      m = m * g[k].matrix();
      minv = g[k].inverse_matrix() * minv;
    }
    return CoeffValue(compose_bp(us));
  });
}

// ---------------------------------------------------------------------------
// The classes on Aut(F_n).

// tau_1(phi)[x_j] = theta_2(x_j) - |phi|^{(x)2} theta_2(phi^{-1}(x_j)).
HomTensor tau1(const MagnusExpansion& theta, const GroupElement& phi);
// Memoized tau_1 as a 1-cochain.
Cochain tau1_cochain(const MagnusExpansion& theta);
// Representative of h_p valued in Hom(H, H^{(x)(p+1)}).
Cochain hp_cochain(const MagnusExpansion& theta, int p);
// r_p applied pointwise: valued in H^{(x)p}.
Cochain hbar_cochain(const MagnusExpansion& theta, int p);
// alt_project of hbar_cochain: valued in Lambda^p H_Q (unnormalized alternating sum).
Cochain hbar_exterior(const MagnusExpansion& theta, int p);
// Cup product of hbar_exterior over the nonzero parts; unit in degree 0 if none.
Cochain hbar_lambda(const MagnusExpansion& theta, const std::vector<int>& parts);

// The same constructions sharing one (memoized) tau_1 cochain.
Cochain hp_from_tau(const Cochain& tau, int p);
Cochain hbar_from_tau(const Cochain& tau, int p);
Cochain hbar_exterior_from_tau(const Cochain& tau, int p);
Cochain hbar_lambda_from_tau(const Cochain& tau, const std::vector<int>& parts);

// ---------------------------------------------------------------------------
// Block inclusion A_{n1} x A_{n2} -> A_n.

// g1 acts on x_1..x_{n1}, g2 on x_{n1+1}..x_{n1+n2}; remaining generators fixed.
GroupElement block_include(const GroupElement& g1, const GroupElement& g2, int n);

class BlockElement {
 public:
  BlockElement(GroupElement first, GroupElement second, int n);

  const GroupElement& first() const { return first_; }
  const GroupElement& second() const { return second_; }
  const GroupElement& included() const { return included_; }
  int rank() const { return included_.rank(); }
  bool is_identity() const { return first_.is_identity() && second_.is_identity(); }
  const IntMatrix& matrix() const { return included_.matrix(); }
  const IntMatrix& inverse_matrix() const { return included_.inverse_matrix(); }

  friend BlockElement operator*(const BlockElement& a, const BlockElement& b);

 private:
  GroupElement first_;
  GroupElement second_;
  GroupElement included_;
};

using BlockCochain = BasicCochain<BlockElement>;

// iota^* u: u evaluated on the included elements.
BlockCochain block_restrict(const Cochain& u, int n1, int n2);
// varpi_k^* u for a cochain u on A_{n_k}, coefficients pushed into rank n.
BlockCochain pullback_projection(const Cochain& u, int k, int n1, int n2, int n);

}  // namespace tmm
