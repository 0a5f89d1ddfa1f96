#pragma once

// Words in the generators a_1..a_n and vertices of the n-ary tree.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selfsim {

struct Syllable {
  unsigned gen = 1;  // 1..n
  long long exp = 1;  // never zero inside a GeneratorWord

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word a_{i1}^{r1} ... a_{ik}^{rk}.
///
/// Adjacent syllables always carry distinct generators and no exponent is
/// zero. length() counts syllables.
class GeneratorWord {
 public:
  GeneratorWord() = default;

  explicit GeneratorWord(unsigned n) : n_(n) {
    if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
  }

  GeneratorWord(unsigned n, std::span<const Syllable> syllables) : GeneratorWord(n) {
    for (const auto& s : syllables) append(s);
  }

  GeneratorWord(unsigned n, std::initializer_list<Syllable> syllables)
      : GeneratorWord(n, std::span<const Syllable>(syllables.begin(), syllables.size())) {}

  static GeneratorWord generator(unsigned n, unsigned i, long long exp = 1) {
    GeneratorWord w(n);
    w.append({i, exp});
    return w;
  }

  unsigned n() const { return n_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  std::span<const Syllable> syllables() const { return syllables_; }

  /// Multiply on the right by a_gen^exp, reducing freely.
  void append(Syllable s) {
    if (s.gen < 1 || s.gen > n_) throw std::invalid_argument("generator index out of range");
    if (s.exp == 0) return;
    if (!syllables_.empty() && syllables_.back().gen == s.gen) {
      syllables_.back().exp += s.exp;
      if (syllables_.back().exp == 0) syllables_.pop_back();
      return;
    }
    syllables_.push_back(s);
  }

  GeneratorWord& operator*=(const GeneratorWord& rhs) {
    check_same_alphabet(rhs);
    for (const auto& s : rhs.syllables_) append(s);
    return *this;
  }

  friend GeneratorWord operator*(GeneratorWord lhs, const GeneratorWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  GeneratorWord inverse() const {
    GeneratorWord w(n_);
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->gen, -it->exp});
    return w;
  }

  GeneratorWord pow(long long k) const {
    const GeneratorWord base = k < 0 ? inverse() : *this;
    GeneratorWord w(n_);
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) w *= base;
    return w;
  }

  /// Exponents reduced into {1..n-2} (generators have order n-1) with the
  /// resulting empty syllables removed and neighbours merged.
  GeneratorWord canonical() const {
    const long long m = static_cast<long long>(n_) - 1;
    GeneratorWord w(n_);
    for (const auto& s : syllables_) {
      long long e = ((s.exp % m) + m) % m;
      if (e == 0) continue;
      if (!w.syllables_.empty() && w.syllables_.back().gen == s.gen) {
        long long merged = (w.syllables_.back().exp + e) % m;
        if (merged == 0)
          w.syllables_.pop_back();
        else
          w.syllables_.back().exp = merged;
      } else {
        w.syllables_.push_back({s.gen, e});
      }
    }
    return w;
  }

  bool is_canonical() const {
    const long long m = static_cast<long long>(n_) - 1;
    for (const auto& s : syllables_)
      if (s.exp < 1 || s.exp >= m) return false;
    return true;
  }

  /// Sum of the exponents carried by generator i.
  long long exponent_sum(unsigned i) const {
    long long total = 0;
    for (const auto& s : syllables_)
      if (s.gen == i) total += s.exp;
    return total;
  }

  long long total_exponent() const {
    long long total = 0;
    for (const auto& s : syllables_) total += s.exp;
    return total;
  }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  void check_same_alphabet(const GeneratorWord& other) const {
    if (other.n_ != n_) throw std::invalid_argument("words over different alphabets");
  }

  unsigned n_ = 3;
  std::vector<Syllable> syllables_;
};

/// [u, v] = u^-1 v^-1 u v.
inline GeneratorWord commutator(const GeneratorWord& u, const GeneratorWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

/// u^v = v^-1 u v.
inline GeneratorWord conjugate(const GeneratorWord& u, const GeneratorWord& v) { return v.inverse() * u * v; }

/// The word a_1 a_2 ... a_n.
inline GeneratorWord beta_word(unsigned n) {
  GeneratorWord w(n);
  for (unsigned i = 1; i <= n; ++i) w.append({i, 1});
  return w;
}

struct GeneratorWordHash {
  std::size_t operator()(const GeneratorWord& w) const noexcept {
    std::size_t h = w.n();
    for (const auto& s : w.syllables()) {
      h = h * 1000003U ^ s.gen;
      h = h * 1000003U ^ static_cast<std::size_t>(s.exp);
    }
    return h;
  }
};

// Text form -----------------------------------------------------------------

/// "a1*a2^-1*a3^2"; the empty word prints as "1".
inline std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += 'a' + std::to_string(s.gen);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// expr   := term (('*')? term)*
// term   := factor ('^' (['-'] integer | ['-'] factor))*
// factor := 'a' integer | '1' | 'e' | '(' expr ')' | '[' expr ',' expr ']'
//
// u^v with a word v is conjugation; u^-v means (u^v)^-1.
class WordParser {
 public:
  WordParser(unsigned n, std::string_view text) : n_(n), text_(text) {}

  GeneratorWord parse() {
    skip_ws();
    if (pos_ == text_.size()) return GeneratorWord(n_);
    GeneratorWord w = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw WordParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const { return c == 'a' || c == '(' || c == '[' || c == '1' || c == 'e'; }

  long long integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  GeneratorWord expr() {
    GeneratorWord w = term();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        w *= term();
      } else if (starts_factor(c)) {
        w *= term();
      } else {
        return w;
      }
    }
  }

  GeneratorWord term() {
    GeneratorWord w = factor();
    while (peek() == '^') {
      ++pos_;
      bool negate = false;
      if (peek() == '-') {
        negate = true;
        ++pos_;
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long k = integer();
        w = w.pow(negate ? -k : k);
      } else if (starts_factor(c)) {
        GeneratorWord v = factor();
        w = conjugate(w, v);
        if (negate) w = w.inverse();
      } else {
        fail("expected exponent or conjugating word");
      }
    }
    return w;
  }

  GeneratorWord factor() {
    char c = peek();
    if (c == 'a') {
      ++pos_;
      long long i = integer();
      if (i < 1 || i > static_cast<long long>(n_)) fail("generator index out of range");
      return GeneratorWord::generator(n_, static_cast<unsigned>(i));
    }
    if (c == '1' || c == 'e') {
      ++pos_;
      return GeneratorWord(n_);
    }
    if (c == '(') {
      ++pos_;
      GeneratorWord w = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      GeneratorWord u = expr();
      if (peek() != ',') fail("expected ','");
      ++pos_;
      GeneratorWord v = expr();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return commutator(u, v);
    }
    fail("expected a generator, '(' or '['");
  }

  unsigned n_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the word syntax `a1*a2^-1*a3^2`, `[u,v]`, `u^v`, `(u)^k`.
/// Throws WordParseError on malformed input.
inline GeneratorWord parse_word(unsigned n, std::string_view text) {
  if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
  return detail::WordParser(n, text).parse();
}

// Vertices ------------------------------------------------------------------

/// Vertex of the n-ary tree as its sequence of letters (1..n); empty is the root.
struct Vertex {
  std::vector<unsigned> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Digit string for n <= 9 ("121"), dot-separated otherwise ("1.10.3").
/// The root prints as the empty string.
inline std::string to_string(const Vertex& v, unsigned n) {
  std::string out;
  for (std::size_t k = 0; k < v.letters.size(); ++k) {
    if (n > 9 && k) out += '.';
    out += std::to_string(v.letters[k]);
  }
  return out;
}

inline Vertex parse_vertex(unsigned n, std::string_view text) {
  Vertex v;
  const bool dotted = n > 9 || text.find('.') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    unsigned x = 0;
    if (dotted) {
      std::size_t end = text.find('.', pos);
      if (end == std::string_view::npos) end = text.size();
      if (end == pos) throw std::invalid_argument("empty letter in vertex");
      for (std::size_t k = pos; k < end; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw std::invalid_argument("bad vertex letter");
        x = x * 10 + static_cast<unsigned>(text[k] - '0');
        if (x > n) break;
      }
      pos = end + (end < text.size() ? 1 : 0);
    } else {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw std::invalid_argument("bad vertex letter");
      x = static_cast<unsigned>(text[pos] - '0');
      ++pos;
    }
    if (x < 1 || x > n) throw std::invalid_argument("vertex letter out of range");
    v.letters.push_back(x);
  }
  return v;
}

/// Index of a level-m vertex in lexicographic order (letters 1 < ... < n), 0-based.
inline std::size_t vertex_index(const Vertex& v, unsigned n) {
  std::size_t idx = 0;
  for (unsigned x : v.letters) idx = idx * n + (x - 1);
  return idx;
}

inline Vertex vertex_at(std::size_t index, unsigned n, std::size_t level) {
  Vertex v;
  v.letters.assign(level, 1);
  for (std::size_t k = level; k-- > 0;) {
    v.letters[k] = static_cast<unsigned>(index % n) + 1;
    index /= n;
  }
  return v;
}

}  // namespace selfsim
