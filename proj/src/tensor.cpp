#include "tensor.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace tmm {

namespace {

void check_rank(int a, int b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": rank mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

void check_entries(const IndexSeq& idx, int n) {
  for (int i : idx) {
    if (i < 1 || i > n) {
      throw DomainError("tensor index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
  }
}

void accumulate(TermMap& terms, const IndexSeq& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string terms_str(const TermMap& terms, const char* sep) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : terms) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    if (idx.size() == 0) continue;
    s += "*";
    bool first = true;
    for (int i : idx) {
      if (!first) s += sep;
      s += "X" + std::to_string(i);
      first = false;
    }
  }
  return s;
}

// Sign of the permutation sorting idx, 0 if idx has a repeated entry.
int sort_sign(IndexSeq& idx_out, const IndexSeq& idx) {
  std::vector<int> v = idx.to_vector();
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) sign = -sign;
    }
  }
  std::sort(v.begin(), v.end());
  idx_out = IndexSeq(v);
  return sign;
}

}  // namespace

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(k), t.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw DomainError("malformed rational '" + s + "'");
  }
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

IndexSeq::IndexSeq(std::initializer_list<int> idx) : IndexSeq(std::span<const int>(idx.begin(), idx.size())) {}

IndexSeq::IndexSeq(std::span<const int> idx) {
  if (idx.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw DomainError("tensor degree exceeds " + std::to_string(kMaxDegree));
  }
  for (int i : idx) push_back(i);
}

void IndexSeq::push_back(int i) {
  if (len_ >= kMaxDegree) throw DomainError("tensor degree exceeds " + std::to_string(kMaxDegree));
  if (i < 1 || i > 255) throw DomainError("tensor index out of range");
  idx_[len_++] = static_cast<std::uint8_t>(i);
}

IndexSeq IndexSeq::drop_first() const {
  IndexSeq r;
  for (int k = 1; k < len_; ++k) r.idx_[static_cast<std::size_t>(r.len_++)] = idx_[static_cast<std::size_t>(k)];
  return r;
}

IndexSeq concat(const IndexSeq& a, const IndexSeq& b) {
  if (a.len_ + b.len_ > kMaxDegree) throw DomainError("tensor degree exceeds " + std::to_string(kMaxDegree));
  IndexSeq r = a;
  for (int i : b) r.idx_[r.len_++] = static_cast<std::uint8_t>(i);
  return r;
}

std::strong_ordering operator<=>(const IndexSeq& a, const IndexSeq& b) {
  if (a.len_ != b.len_) return a.len_ <=> b.len_;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------

TruncatedTensor::TruncatedTensor(int n, int N) : n_(n), N_(N) {
  if (n < 1) throw DomainError("tensor rank must be positive");
  if (N < 0 || N > kMaxDegree) throw DomainError("truncation degree outside 0.." + std::to_string(kMaxDegree));
}

TruncatedTensor TruncatedTensor::one(int n, int N) { return basis(n, N, IndexSeq{}); }

TruncatedTensor TruncatedTensor::basis(int n, int N, const IndexSeq& idx, const Rational& c) {
  TruncatedTensor t(n, N);
  t.add_term(idx, c);
  return t;
}

Rational TruncatedTensor::coeff(const IndexSeq& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncatedTensor::is_homogeneous(int m) const {
  return std::all_of(terms_.begin(), terms_.end(), [m](const auto& kv) { return kv.first.size() == m; });
}

void TruncatedTensor::add_term(const IndexSeq& idx, const Rational& c) {
  if (idx.size() > N_) {
    throw DomainError("term of degree " + std::to_string(idx.size()) + " exceeds truncation " + std::to_string(N_));
  }
  check_entries(idx, n_);
  Rational v(c);
  v.canonicalize();
  accumulate(terms_, idx, v);
}

TruncatedTensor& TruncatedTensor::operator+=(const TruncatedTensor& o) {
  check_rank(n_, o.n_, "tensor add");
  if (N_ != o.N_) throw DomainError("tensor add: truncation mismatch");
  for (const auto& [idx, c] : o.terms_) accumulate(terms_, idx, c);
  return *this;
}

TruncatedTensor& TruncatedTensor::operator-=(const TruncatedTensor& o) {
  check_rank(n_, o.n_, "tensor subtract");
  if (N_ != o.N_) throw DomainError("tensor subtract: truncation mismatch");
  for (const auto& [idx, c] : o.terms_) accumulate(terms_, idx, -c);
  return *this;
}

TruncatedTensor& TruncatedTensor::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

TruncatedTensor operator*(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_rank(a.n_, b.n_, "tensor multiply");
  if (a.N_ != b.N_) throw DomainError("tensor multiply: truncation mismatch");
  TruncatedTensor r(a.n_, a.N_);
  Rational prod;
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      if (ia.size() + ib.size() > a.N_) break;  // b's terms are ordered by degree
      prod = ca * cb;
      accumulate(r.terms_, concat(ia, ib), prod);
    }
  }
  return r;
}

std::string TruncatedTensor::str() const { return terms_str(terms_, "(x)"); }

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b) { return a + b; }
TruncatedTensor scale(const Rational& c, const TruncatedTensor& a) { return c * a; }
TruncatedTensor tensor_multiply(const TruncatedTensor& a, const TruncatedTensor& b) { return a * b; }

TruncatedTensor component(const TruncatedTensor& t, int m) {
  if (m < 0 || m > t.truncation()) {
    throw DomainError("component degree " + std::to_string(m) + " outside 0.." + std::to_string(t.truncation()));
  }
  TruncatedTensor r(t.rank(), m);
  for (const auto& [idx, c] : t.terms()) {
    if (idx.size() == m) r.add_term(idx, c);
  }
  return r;
}

TruncatedTensor retruncate(const TruncatedTensor& t, int N) {
  TruncatedTensor r(t.rank(), N);
  for (const auto& [idx, c] : t.terms()) {
    if (idx.size() <= N) r.add_term(idx, c);
  }
  return r;
}

TruncatedTensor outer(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_rank(a.rank(), b.rank(), "outer product");
  TruncatedTensor r(a.rank(), a.truncation() + b.truncation());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) r.add_term(concat(ia, ib), ca * cb);
  }
  return r;
}

TruncatedTensor truncated_inverse(const TruncatedTensor& t) {
  if (t.coeff(IndexSeq{}) != 1) throw DomainError("truncated inverse needs constant term 1");
  // t = 1 + u, t^{-1} = sum_k (-u)^k, u in T_1 so the series stops at degree N.
  TruncatedTensor minus_u = TruncatedTensor::one(t.rank(), t.truncation()) - t;
  TruncatedTensor result = TruncatedTensor::one(t.rank(), t.truncation());
  TruncatedTensor power = result;
  for (int k = 1; k <= t.truncation(); ++k) {
    power = power * minus_u;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

namespace {

// Nonzero entries of each column of M: cols[j] = {(i, M(i,j))}.
std::vector<std::vector<std::pair<int, Rational>>> sparse_columns(const IntMatrix& M) {
  std::vector<std::vector<std::pair<int, Rational>>> cols(static_cast<std::size_t>(M.size()) + 1);
  for (int j = 1; j <= M.size(); ++j) {
    for (int i = 1; i <= M.size(); ++i) {
      if (M(i, j) != 0) cols[static_cast<std::size_t>(j)].emplace_back(i, Rational(static_cast<long>(M(i, j))));
    }
  }
  return cols;
}

void act_on_terms(const std::vector<std::vector<std::pair<int, Rational>>>& cols, const TermMap& in,
                  TermMap& out) {
  for (const auto& [idx, c] : in) {
    // Expand M X_{i_1} (x) ... (x) M X_{i_m} one slot at a time.
    std::vector<std::pair<IndexSeq, Rational>> partial{{IndexSeq{}, c}};
    for (int slot : idx) {
      std::vector<std::pair<IndexSeq, Rational>> next;
      next.reserve(partial.size() * cols[static_cast<std::size_t>(slot)].size());
      for (const auto& [pi, pc] : partial) {
        for (const auto& [row, entry] : cols[static_cast<std::size_t>(slot)]) {
          IndexSeq ni = pi;
          ni.push_back(row);
          next.emplace_back(ni, pc * entry);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pi, pc] : partial) accumulate(out, pi, pc);
  }
}

}  // namespace

TruncatedTensor act_gl(const IntMatrix& M, const TruncatedTensor& t) {
  check_rank(M.size(), t.rank(), "act_gl");
  if (M.is_identity()) return t;
  TruncatedTensor r(t.rank(), t.truncation());
  TermMap out;
  act_on_terms(sparse_columns(M), t.terms(), out);
  for (const auto& [idx, c] : out) r.add_term(idx, c);
  return r;
}

TruncatedTensor shift_indices(const TruncatedTensor& t, int n, int offset) {
  TruncatedTensor r(n, t.truncation());
  for (const auto& [idx, c] : t.terms()) {
    IndexSeq s;
    for (int i : idx) s.push_back(i + offset);
    r.add_term(s, c);
  }
  return r;
}

// ---------------------------------------------------------------------------

HomTensor::HomTensor(int n, int p) : n_(n), p_(p) {
  cols_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols_.emplace_back(n, p);
}

HomTensor::HomTensor(int n, int p, std::vector<TruncatedTensor> columns) : n_(n), p_(p), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != n) throw DomainError("HomTensor needs one column per generator");
  for (auto& c : cols_) {
    check_rank(n, c.rank(), "HomTensor column");
    if (!c.is_homogeneous(p)) throw DomainError("HomTensor column is not homogeneous of degree " + std::to_string(p));
    if (c.truncation() != p) c = retruncate(c, p);
  }
}

HomTensor HomTensor::dual_times(int n, int i, const TruncatedTensor& v) {
  HomTensor u(n, v.truncation());
  if (!v.is_homogeneous(v.truncation())) throw DomainError("dual_times needs a homogeneous tensor");
  u.cols_.at(static_cast<std::size_t>(i - 1)) = v;
  return u;
}

bool HomTensor::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.is_zero(); });
}

TruncatedTensor HomTensor::apply(const TruncatedTensor& v) const {
  check_rank(n_, v.rank(), "HomTensor apply");
  TruncatedTensor r(n_, p_);
  for (const auto& [idx, c] : v.terms()) {
    if (idx.size() != 1) throw DomainError("HomTensor apply needs a degree-1 argument");
    r += c * column(idx[0]);
  }
  return r;
}

HomTensor& HomTensor::operator+=(const HomTensor& o) {
  check_rank(n_, o.n_, "HomTensor add");
  if (p_ != o.p_) throw DomainError("HomTensor add: degree mismatch");
  for (std::size_t k = 0; k < cols_.size(); ++k) cols_[k] += o.cols_[k];
  return *this;
}

HomTensor& HomTensor::operator-=(const HomTensor& o) {
  check_rank(n_, o.n_, "HomTensor subtract");
  if (p_ != o.p_) throw DomainError("HomTensor subtract: degree mismatch");
  for (std::size_t k = 0; k < cols_.size(); ++k) cols_[k] -= o.cols_[k];
  return *this;
}

HomTensor& HomTensor::operator*=(const Rational& c) {
  for (auto& col : cols_) col *= c;
  return *this;
}

std::string HomTensor::str() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    if (column(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "l" + std::to_string(i) + "(x)(" + column(i).str() + ")";
  }
  return s.empty() ? "0" : s;
}

HomTensor act_hom(const IntMatrix& m, const IntMatrix& minv, const HomTensor& u) {
  check_rank(m.size(), u.rank(), "act_hom");
  if (m.is_identity()) return u;
  const int n = u.rank();
  std::vector<TruncatedTensor> image_cols;
  image_cols.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) image_cols.push_back(act_gl(m, u.column(k)));
  std::vector<TruncatedTensor> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // (phi.u)(X_j) = |phi| u(|phi|^{-1} X_j), |phi|^{-1} X_j = sum_k minv(k, j) X_k.
    TruncatedTensor col(n, u.degree());
    for (int k = 1; k <= n; ++k) {
      if (minv(k, j) != 0) col += Rational(static_cast<long>(minv(k, j))) * image_cols[static_cast<std::size_t>(k - 1)];
    }
    cols.push_back(std::move(col));
  }
  return HomTensor(n, u.degree(), std::move(cols));
}

HomTensor shift_indices(const HomTensor& u, int n, int offset) {
  std::vector<TruncatedTensor> cols(static_cast<std::size_t>(n), TruncatedTensor(n, u.degree()));
  for (int i = 1; i <= u.rank(); ++i) cols.at(static_cast<std::size_t>(i + offset - 1)) = shift_indices(u.column(i), n, offset);
  return HomTensor(n, u.degree(), std::move(cols));
}

TruncatedTensor contract_rp(const HomTensor& u) {
  if (u.degree() < 1) throw DomainError("contraction needs output degree >= 1");
  TruncatedTensor r(u.rank(), u.degree() - 1);
  for (int i = 1; i <= u.rank(); ++i) {
    for (const auto& [idx, c] : u.column(i).terms()) {
      if (idx[0] == i) r.add_term(idx.drop_first(), c);
    }
  }
  return r;
}

HomTensor compose_bp(std::span<const HomTensor> us) {
  if (us.empty()) throw DomainError("compose_bp needs at least one factor");
  const int n = us.front().rank();
  for (const auto& u : us) {
    check_rank(n, u.rank(), "compose_bp");
    if (u.degree() != 2) throw DomainError("compose_bp factors must have output degree 2");
  }
  const int p = static_cast<int>(us.size());
  std::vector<TruncatedTensor> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    TermMap cur = us.back().column(m).terms();
    for (int k = p - 2; k >= 0; --k) {
      const HomTensor& u = us[static_cast<std::size_t>(k)];
      TermMap next;
      for (const auto& [idx, c] : cur) {
        const IndexSeq rest = idx.drop_first();
        for (const auto& [ui, uc] : u.column(idx[0]).terms()) accumulate(next, concat(ui, rest), c * uc);
      }
      cur = std::move(next);
    }
    TruncatedTensor col(n, p + 1);
    for (const auto& [idx, c] : cur) col.add_term(idx, c);
    cols.push_back(std::move(col));
  }
  return HomTensor(n, p + 1, std::move(cols));
}

// ---------------------------------------------------------------------------

ExteriorElement::ExteriorElement(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw DomainError("exterior rank must be positive");
  if (q < 0 || q > kMaxDegree) throw DomainError("exterior degree out of range");
}

ExteriorElement ExteriorElement::unit(int n) {
  ExteriorElement e(n, 0);
  e.add_term(IndexSeq{}, 1);
  return e;
}

Rational ExteriorElement::coeff(const IndexSeq& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(const IndexSeq& idx, const Rational& c) {
  if (idx.size() != q_) throw DomainError("exterior term has wrong degree");
  check_entries(idx, n_);
  for (int k = 1; k < idx.size(); ++k) {
    if (idx[k - 1] >= idx[k]) throw DomainError("exterior index tuple must be strictly increasing");
  }
  Rational v(c);
  v.canonicalize();
  accumulate(terms_, idx, v);
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  check_rank(n_, o.n_, "exterior add");
  if (q_ != o.q_) throw DomainError("exterior add: degree mismatch");
  for (const auto& [idx, c] : o.terms_) accumulate(terms_, idx, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  check_rank(n_, o.n_, "exterior subtract");
  if (q_ != o.q_) throw DomainError("exterior subtract: degree mismatch");
  for (const auto& [idx, c] : o.terms_) accumulate(terms_, idx, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

std::string ExteriorElement::str() const { return terms_str(terms_, "^"); }

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  check_rank(a.rank(), b.rank(), "wedge");
  ExteriorElement r(a.rank(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      IndexSeq sorted;
      const int s = sort_sign(sorted, concat(ia, ib));
      if (s != 0) r.add_term(sorted, s * ca * cb);
    }
  }
  return r;
}

TruncatedTensor lift(const ExteriorElement& e) {
  TruncatedTensor t(e.rank(), e.degree());
  for (const auto& [idx, c] : e.terms()) t.add_term(idx, c);
  return t;
}

ExteriorElement act_exterior(const IntMatrix& M, const ExteriorElement& e) {
  if (M.is_identity()) return e;
  return alt_project(act_gl(M, lift(e)), e.degree());
}

ExteriorElement shift_indices(const ExteriorElement& e, int n, int offset) {
  ExteriorElement r(n, e.degree());
  for (const auto& [idx, c] : e.terms()) {
    IndexSeq s;
    for (int i : idx) s.push_back(i + offset);
    r.add_term(s, c);
  }
  return r;
}

ExteriorElement alt_project(const TruncatedTensor& t, int q) {
  if (!t.is_homogeneous(q)) throw DomainError("alt_project needs a tensor homogeneous of degree " + std::to_string(q));
  ExteriorElement e(t.rank(), q);
  for (const auto& [idx, c] : t.terms()) {
    IndexSeq sorted;
    const int s = sort_sign(sorted, idx);
    if (s != 0) e.add_term(sorted, s * c);
  }
  return e;
}

ExteriorElement alt_project(const TruncatedTensor& t) { return alt_project(t, t.truncation()); }

std::vector<IndexSeq> increasing_tuples(int n, int q) {
  std::vector<IndexSeq> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == q) {
      out.emplace_back(std::span<const int>(cur));
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Rational> flatten(const ExteriorElement& e) {
  std::vector<Rational> v;
  for (const auto& idx : increasing_tuples(e.rank(), e.degree())) v.push_back(e.coeff(idx));
  return v;
}

}  // namespace tmm
