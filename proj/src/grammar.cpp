#include "grammar.hpp"

#include <cctype>
#include <charconv>

namespace tmm {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : s_(text), base_(base) {}

  std::size_t pos() const { return base_ + i_; }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(std::string_view lit) {
    if (s_.substr(i_, lit.size()) != lit) return false;
    i_ += lit.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  long integer() {
    const std::size_t start = i_;
    if (peek() == '-' || peek() == '+') ++i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    long v = 0;
    const char* b = s_.data() + start + (s_[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(b, s_.data() + i_, v);
    if (ec != std::errc() || ptr != s_.data() + i_ || i_ == start) {
      i_ = start;
      fail("expected an integer");
    }
    return v;
  }
  long exponent() {
    if (peek() != '^') return 1;
    ++i_;
    const std::size_t at = pos();
    const long e = integer();
    if (e == 0) throw ParseError("zero exponent", at);
    return e;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos()); }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t i_ = 0;
};

FreeWord word_at(std::string_view text, int n, std::size_t base) {
  if (n < 1) throw DomainError("word rank must be at least 1");
  Cursor c(text, base);
  std::vector<int> letters;
  while (!c.done()) {
    const std::size_t at = c.pos();
    if (!c.accept("x")) c.fail("unknown token");
    const long k = c.integer();
    if (k < 1 || k > n) throw ParseError("generator x" + std::to_string(k) + " outside x1..x" + std::to_string(n), at);
    const long e = c.exponent();
    for (long r = 0; r < std::labs(e); ++r) letters.push_back(static_cast<int>(e > 0 ? k : -k));
  }
  return FreeWord::reduce(n, letters);
}

BraidWord braid_at(std::string_view text, int n, std::size_t base) {
  if (n < 1) throw DomainError("braid needs at least one strand");
  Cursor c(text, base);
  BraidWord acc(n);
  while (!c.done()) {
    const std::size_t at = c.pos();
    BraidWord atom(n);
    try {
      if (c.accept("s")) {
        const long k = c.integer();
        if (k < 1 || k > n - 1) throw ParseError("generator s" + std::to_string(k) + " outside s1..s" + std::to_string(n - 1), at);
        atom = BraidWord::generator(n, static_cast<int>(k));
      } else if (c.accept("A(")) {
        const long i = c.integer();
        c.expect(',');
        const long j = c.integer();
        c.expect(')');
        atom = aij_word(static_cast<int>(i), static_cast<int>(j), n);
      } else if (c.accept("twist(")) {
        long i = 1;
        long j = c.integer();
        if (c.peek() == ',') {
          c.expect(',');
          i = j;
          j = c.integer();
        }
        c.expect(')');
        if (!(1 <= i && i < j && j <= n)) throw ParseError("twist strands outside 1.." + std::to_string(n), at);
        const int k = static_cast<int>(j - i + 1);
        atom = shift(full_twist(k, k), static_cast<int>(i - 1), n);
      } else {
        c.fail("unknown token");
      }
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
    const long e = c.exponent();
    acc = acc * atom.power(static_cast<int>(e));
  }
  return acc;
}

std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view text, char sep, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.emplace_back(text.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  return out;
}

std::pair<std::string_view, std::size_t> trim(std::string_view t, std::size_t base) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) {
    t.remove_prefix(1);
    ++base;
  }
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return {t, base};
}

BarChain torus_at(std::string_view text, int n, std::size_t base) {
  auto [t, at] = trim(text, base);
  if (t.substr(0, 6) != "torus:") throw ParseError("expected 'torus:'", at);
  t.remove_prefix(6);
  at += 6;
  if (!t.empty() && t.front() == '"') {
    if (t.size() < 2 || t.back() != '"') throw ParseError("unterminated quote", at);
    t = t.substr(1, t.size() - 2);
    at += 1;
  }
  std::vector<GroupElement> elems;
  for (const auto& [piece, p] : split(t, '|', at)) {
    const auto [body, q] = trim(piece, p);
    if (body.empty()) throw ParseError("empty torus entry", q);
    elems.push_back(GroupElement::from_braid(braid_at(body, n, q)));
  }
  try {
    return torus_cycle(elems);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at);
  }
}

}  // namespace

FreeWord parse_word(std::string_view text, int n) { return word_at(text, n, 0); }

BraidWord parse_braid(std::string_view text, int n) { return braid_at(text, n, 0); }

std::vector<BraidWord> parse_tuple(std::string_view text, int n) {
  std::vector<BraidWord> out;
  if (trim(text, 0).first.empty()) return out;
  for (const auto& [piece, p] : split(text, ';', 0)) out.push_back(braid_at(piece, n, p));
  return out;
}

BarChain parse_cycle(std::string_view text, int n) {
  const auto [t, at] = trim(text, 0);
  if (t.substr(0, 6) == "cross:") {
    std::optional<BarChain> acc;
    for (const auto& [piece, p] : split(t.substr(6), '*', at + 6)) {
      BarChain z = torus_at(piece, n, p);
      try {
        acc = acc ? cross(*acc, z) : z;
      } catch (const DomainError& e) {
        throw ParseError(e.what(), p);
      }
    }
    return *acc;
  }
  if (t.substr(0, 6) == "torus:") return torus_at(t, n, at);
  if (t == "unit") return BarChain::unit(n);
  throw ParseError("expected 'torus:', 'cross:' or 'unit'", at);
}

}  // namespace tmm
