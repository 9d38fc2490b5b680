#pragma once

// Truncated tensor algebra T(H)/T_{N+1} over exact rationals, linear maps
// H -> H^{(x)p} stored by columns, and the exterior algebra of H.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "word.hpp"

namespace tmm {

using Rational = mpq_class;

// "p/q" with q > 0 always present.
std::string to_string(const Rational& r);
// Accepts "p/q" or "p"; throws DomainError on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

inline constexpr int kMaxDegree = 12;

// Multi-index (i_1, ..., i_m), entries in 1..n, m <= kMaxDegree. Ordered by
// degree first, then lexicographically.
class IndexSeq {
 public:
  IndexSeq() = default;
  IndexSeq(std::initializer_list<int> idx);
  explicit IndexSeq(std::span<const int> idx);

  int size() const { return len_; }
  int operator[](int k) const { return idx_[static_cast<std::size_t>(k)]; }
  const std::uint8_t* begin() const { return idx_.data(); }
  const std::uint8_t* end() const { return idx_.data() + len_; }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  void push_back(int i);
  IndexSeq drop_first() const;
  friend IndexSeq concat(const IndexSeq& a, const IndexSeq& b);

  friend bool operator==(const IndexSeq& a, const IndexSeq& b) {
    return a.len_ == b.len_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const IndexSeq& a, const IndexSeq& b);

 private:
  std::uint8_t len_ = 0;
  std::array<std::uint8_t, kMaxDegree> idx_{};
};

using TermMap = std::map<IndexSeq, Rational>;

// Element of T(H)/T_{N+1}. Zero coefficients are never stored.
class TruncatedTensor {
 public:
  TruncatedTensor(int n, int N);
  static TruncatedTensor one(int n, int N);
  static TruncatedTensor basis(int n, int N, const IndexSeq& idx, const Rational& c = 1);

  int rank() const { return n_; }
  int truncation() const { return N_; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const IndexSeq& idx) const;
  bool is_zero() const { return terms_.empty(); }
  // True when every stored term has degree m (the zero tensor is homogeneous of every degree).
  bool is_homogeneous(int m) const;

  // Adds c to the coefficient of idx; throws if idx has degree > N or bad entries.
  void add_term(const IndexSeq& idx, const Rational& c);

  TruncatedTensor& operator+=(const TruncatedTensor& o);
  TruncatedTensor& operator-=(const TruncatedTensor& o);
  TruncatedTensor& operator*=(const Rational& c);
  friend TruncatedTensor operator+(TruncatedTensor a, const TruncatedTensor& b) { return a += b; }
  friend TruncatedTensor operator-(TruncatedTensor a, const TruncatedTensor& b) { return a -= b; }
  friend TruncatedTensor operator-(TruncatedTensor a) { return a *= -1; }
  friend TruncatedTensor operator*(const Rational& c, TruncatedTensor a) { return a *= c; }
  // Graded product, terms of degree > N discarded.
  friend TruncatedTensor operator*(const TruncatedTensor& a, const TruncatedTensor& b);
  friend bool operator==(const TruncatedTensor&, const TruncatedTensor&) = default;

  std::string str() const;

 private:
  int n_;
  int N_;
  TermMap terms_;
};

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor scale(const Rational& c, const TruncatedTensor& a);
TruncatedTensor tensor_multiply(const TruncatedTensor& a, const TruncatedTensor& b);

// Degree-m homogeneous part, returned with truncation m.
TruncatedTensor component(const TruncatedTensor& t, int m);
// Same terms, truncation changed; terms above the new truncation are dropped.
TruncatedTensor retruncate(const TruncatedTensor& t, int N);
// a (x) b with indices concatenated; truncation Na + Nb.
TruncatedTensor outer(const TruncatedTensor& a, const TruncatedTensor& b);
// Multiplicative inverse of an element with constant term 1.
TruncatedTensor truncated_inverse(const TruncatedTensor& t);
// Applies M^{(x)m} on each degree-m component.
TruncatedTensor act_gl(const IntMatrix& M, const TruncatedTensor& t);
// Relabels every index i to i + offset in a rank-n tensor.
TruncatedTensor shift_indices(const TruncatedTensor& t, int n, int offset);

// Linear map H -> H^{(x)p}; column i is the value on X_i. As an element of
// H^* (x) H^{(x)p} it is sum_i l_i (x) column_i.
class HomTensor {
 public:
  HomTensor(int n, int p);
  HomTensor(int n, int p, std::vector<TruncatedTensor> columns);
  // l_i (x) v
  static HomTensor dual_times(int n, int i, const TruncatedTensor& v);

  int rank() const { return n_; }
  int degree() const { return p_; }
  const TruncatedTensor& column(int i) const { return cols_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<TruncatedTensor>& columns() const { return cols_; }
  bool is_zero() const;
  TruncatedTensor apply(const TruncatedTensor& v) const;  // v of degree 1

  HomTensor& operator+=(const HomTensor& o);
  HomTensor& operator-=(const HomTensor& o);
  HomTensor& operator*=(const Rational& c);
  friend HomTensor operator+(HomTensor a, const HomTensor& b) { return a += b; }
  friend HomTensor operator-(HomTensor a, const HomTensor& b) { return a -= b; }
  friend HomTensor operator*(const Rational& c, HomTensor a) { return a *= c; }
  friend bool operator==(const HomTensor&, const HomTensor&) = default;

  std::string str() const;

 private:
  int n_;
  int p_;
  std::vector<TruncatedTensor> cols_;
};

// u |-> M^{(x)p} o u o M^{-1}; minv must be the inverse of m.
HomTensor act_hom(const IntMatrix& m, const IntMatrix& minv, const HomTensor& u);
HomTensor shift_indices(const HomTensor& u, int n, int offset);

// r_p: f (x) v_0 (x) v_1 ... (x) v_p |-> f(v_0) v_1 (x) ... (x) v_p.
TruncatedTensor contract_rp(const HomTensor& u);
// (u_1 (x) 1^{p-1}) o (u_2 (x) 1^{p-2}) o ... o u_p, each u_k of output degree 2.
HomTensor compose_bp(std::span<const HomTensor> us);

// Element of Lambda^q H_Q in the basis X_{i_1} ^ ... ^ X_{i_q}, i_1 < ... < i_q.
class ExteriorElement {
 public:
  ExteriorElement(int n, int q);
  static ExteriorElement unit(int n);  // 1 in Lambda^0

  int rank() const { return n_; }
  int degree() const { return q_; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const IndexSeq& idx) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const IndexSeq& idx, const Rational& c);  // idx must be strictly increasing

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  ExteriorElement& operator*=(const Rational& c);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const Rational& c, ExteriorElement a) { return a *= c; }
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

  std::string str() const;

 private:
  int n_;
  int q_;
  TermMap terms_;
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
// Lifts e_I to X_{i_1} (x) ... (x) X_{i_q}.
TruncatedTensor lift(const ExteriorElement& e);
ExteriorElement act_exterior(const IntMatrix& M, const ExteriorElement& e);
ExteriorElement shift_indices(const ExteriorElement& e, int n, int offset);

// Signed sum over S_q without division by q!: the image of a degree-q tensor
// under the quotient map T^q(H) -> Lambda^q(H). Throws unless t is homogeneous of degree q.
ExteriorElement alt_project(const TruncatedTensor& t, int q);
ExteriorElement alt_project(const TruncatedTensor& t);  // q = t.truncation()

// Coordinates in the basis of increasing q-subsets of 1..n, in lexicographic order.
std::vector<Rational> flatten(const ExteriorElement& e);
std::vector<IndexSeq> increasing_tuples(int n, int q);

}  // namespace tmm
