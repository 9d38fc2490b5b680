#pragma once

// Free group F_n on generators x_1..x_n: reduced words, endomorphisms given by
// generator images, verified automorphism pairs and the abelianization H.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tmm {

// Element of H = F_n^{ab} = Z^n.
struct HVector {
  int n = 0;
  std::vector<std::int64_t> coords;

  static HVector zero(int n) { return {n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)}; }
  static HVector basis(int n, int i);

  HVector& operator+=(const HVector& o);
  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend bool operator==(const HVector&, const HVector&) = default;
  bool is_zero() const;
};

// Square integer matrix, row-major, indices 1-based in the accessors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t operator()(int row, int col) const { return a_[idx(row, col)]; }
  std::int64_t& operator()(int row, int col) { return a_[idx(row, col)]; }
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * n_ + static_cast<std::size_t>(c - 1);
  }
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

// Freely reduced word. Letters are stored flat and signed: +i is x_i, -i is x_i^{-1}.
class FreeWord {
 public:
  explicit FreeWord(int n);

  // Reduces an arbitrary signed-letter sequence; throws DomainError on |letter| outside 1..n.
  static FreeWord reduce(int n, std::span<const int> letters);
  static FreeWord generator(int n, int i, int exponent = 1);

  int rank() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  std::string str() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend class WordBuilder;
  int n_;
  std::vector<int> letters_;
};

// Stack-based reducer used to build words letter by letter.
class WordBuilder {
 public:
  explicit WordBuilder(int n) : n_(n) {}
  void push(int letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord finish() &&;

 private:
  int n_;
  std::vector<int> stack_;
};

FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
HVector abelianize(const FreeWord& w);

// Endomorphism of F_n: image of every generator.
class EndoMap {
 public:
  EndoMap(int n, std::vector<FreeWord> images);
  static EndoMap identity(int n);

  int rank() const { return n_; }
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FreeWord>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const EndoMap&, const EndoMap&) = default;

 private:
  int n_;
  std::vector<FreeWord> images_;
};

FreeWord apply(const EndoMap& phi, const FreeWord& gamma);
// (phi o psi)(x_i) = phi(psi(x_i))
EndoMap compose(const EndoMap& phi, const EndoMap& psi);
// Column i is abelianize(phi(x_i)).
IntMatrix induced_matrix(const EndoMap& phi);

// An automorphism together with a caller-supplied inverse. The pair is verified
// on generators when built through make(); compositions of verified pairs are
// valid by construction.
class AutPair {
 public:
  static AutPair make(EndoMap fwd, EndoMap inv);  // throws CheckFailure
  static AutPair identity(int n);

  int rank() const { return fwd_.rank(); }
  const EndoMap& fwd() const { return fwd_; }
  const EndoMap& inv() const { return inv_; }
  AutPair inverse() const { return AutPair(inv_, fwd_); }

  // fwd = a.fwd o b.fwd
  friend AutPair compose(const AutPair& a, const AutPair& b);
  friend bool operator==(const AutPair& a, const AutPair& b) { return a.fwd_ == b.fwd_; }

 private:
  AutPair(EndoMap f, EndoMap i) : fwd_(std::move(f)), inv_(std::move(i)) {}
  EndoMap fwd_;
  EndoMap inv_;
};

}  // namespace tmm
