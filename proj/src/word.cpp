#include "word.hpp"

#include <cstdlib>

#include "error.hpp"

namespace tmm {

namespace {

void check_same_rank(int a, int b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": rank mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t x, std::int64_t y) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
    throw DomainError("integer matrix entry overflow");
  }
  return acc;
}

}  // namespace

HVector HVector::basis(int n, int i) {
  HVector v = zero(n);
  v.coords.at(static_cast<std::size_t>(i - 1)) = 1;
  return v;
}

HVector& HVector::operator+=(const HVector& o) {
  check_same_rank(n, o.n, "HVector add");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

bool HVector::is_zero() const {
  for (auto c : coords) {
    if (c != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  check_same_rank(a.n_, b.n_, "matrix product");
  IntMatrix c(a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int k = 1; k <= a.n_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 1; j <= a.n_; ++j) {
        if (b(k, j) != 0) c(i, j) = checked_mul_add(c(i, j), aik, b(k, j));
      }
    }
  }
  return c;
}

FreeWord::FreeWord(int n) : n_(n) {
  if (n < 1) throw DomainError("free group rank must be positive");
}

FreeWord FreeWord::reduce(int n, std::span<const int> letters) {
  WordBuilder b(n);
  for (int l : letters) b.push(l);
  return std::move(b).finish();
}

FreeWord FreeWord::generator(int n, int i, int exponent) {
  if (exponent != 1 && exponent != -1) throw DomainError("generator exponent must be +1 or -1");
  const int letter = exponent * i;
  return reduce(n, std::span<const int>(&letter, 1));
}

FreeWord FreeWord::inverse() const {
  FreeWord w(n_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

std::string FreeWord::str() const {
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += 'x';
    s += std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

void WordBuilder::push(int letter) {
  if (letter == 0 || std::abs(letter) > n_) {
    throw DomainError("generator index " + std::to_string(std::abs(letter)) + " outside 1.." +
                      std::to_string(n_));
  }
  if (!stack_.empty() && stack_.back() == -letter) {
    stack_.pop_back();
  } else {
    stack_.push_back(letter);
  }
}

void WordBuilder::append(const FreeWord& w) {
  check_same_rank(n_, w.rank(), "word product");
  for (int l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const FreeWord& w) {
  check_same_rank(n_, w.rank(), "word product");
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
}

FreeWord WordBuilder::finish() && {
  FreeWord w(n_);
  w.letters_ = std::move(stack_);
  return w;
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a.rank(), b.rank(), "multiply");
  WordBuilder bld(a.rank());
  bld.append(a);
  bld.append(b);
  return std::move(bld).finish();
}

FreeWord invert(const FreeWord& a) { return a.inverse(); }

HVector abelianize(const FreeWord& w) {
  HVector v = HVector::zero(w.rank());
  for (int l : w.letters()) v.coords[static_cast<std::size_t>(std::abs(l) - 1)] += (l > 0 ? 1 : -1);
  return v;
}

EndoMap::EndoMap(int n, std::vector<FreeWord> images) : n_(n), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n) {
    throw DomainError("endomorphism of F_" + std::to_string(n) + " needs " + std::to_string(n) +
                      " images, got " + std::to_string(images_.size()));
  }
  for (const auto& w : images_) check_same_rank(n, w.rank(), "endomorphism image");
}

EndoMap EndoMap::identity(int n) {
  std::vector<FreeWord> imgs;
  imgs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) imgs.push_back(FreeWord::generator(n, i));
  return EndoMap(n, std::move(imgs));
}

bool EndoMap::is_identity() const {
  for (int i = 1; i <= n_; ++i) {
    const auto ls = image(i).letters();
    if (ls.size() != 1 || ls[0] != i) return false;
  }
  return true;
}

FreeWord apply(const EndoMap& phi, const FreeWord& gamma) {
  check_same_rank(phi.rank(), gamma.rank(), "apply");
  WordBuilder b(phi.rank());
  for (int l : gamma.letters()) {
    if (l > 0) {
      b.append(phi.image(l));
    } else {
      b.append_inverse(phi.image(-l));
    }
  }
  return std::move(b).finish();
}

EndoMap compose(const EndoMap& phi, const EndoMap& psi) {
  check_same_rank(phi.rank(), psi.rank(), "compose");
  std::vector<FreeWord> imgs;
  imgs.reserve(static_cast<std::size_t>(phi.rank()));
  for (const auto& w : psi.images()) imgs.push_back(apply(phi, w));
  return EndoMap(phi.rank(), std::move(imgs));
}

IntMatrix induced_matrix(const EndoMap& phi) {
  IntMatrix m(phi.rank());
  for (int j = 1; j <= phi.rank(); ++j) {
    const HVector col = abelianize(phi.image(j));
    for (int i = 1; i <= phi.rank(); ++i) m(i, j) = col.coords[static_cast<std::size_t>(i - 1)];
  }
  return m;
}

AutPair AutPair::make(EndoMap fwd, EndoMap inv) {
  check_same_rank(fwd.rank(), inv.rank(), "AutPair");
  if (!compose(fwd, inv).is_identity() || !compose(inv, fwd).is_identity()) {
    throw CheckFailure("supplied inverse does not invert the endomorphism on generators");
  }
  return AutPair(std::move(fwd), std::move(inv));
}

AutPair AutPair::identity(int n) { return AutPair(EndoMap::identity(n), EndoMap::identity(n)); }

AutPair compose(const AutPair& a, const AutPair& b) {
  return AutPair(compose(a.fwd_, b.fwd_), compose(b.inv_, a.inv_));
}

}  // namespace tmm
