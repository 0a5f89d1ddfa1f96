#pragma once

// Permutations of {1..degree} in image-array form.
//
// Composition follows the right-action convention used throughout the
// library: (p * q)(x) = q(p(x)), i.e. apply p first. Points are 1-based in
// every public signature; storage is 0-based.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace selfsim {

using Point = std::uint32_t;

enum class Parity { even, odd };

class Permutation {
 public:
  Permutation() = default;

  /// Builds from 1-based images; throws std::invalid_argument unless the
  /// images form a bijection of {1..images.size()}.
  explicit Permutation(std::span<const Point> images_one_based) {
    const auto d = images_one_based.size();
    if (d == 0) throw std::invalid_argument("permutation degree must be positive");
    images_.resize(d);
    std::vector<bool> seen(d, false);
    for (std::size_t i = 0; i < d; ++i) {
      const Point img = images_one_based[i];
      if (img < 1 || img > d || seen[img - 1]) {
        throw std::invalid_argument("images do not form a bijection");
      }
      seen[img - 1] = true;
      images_[i] = img - 1;
    }
  }

  Permutation(std::initializer_list<Point> images_one_based)
      : Permutation(std::span<const Point>(images_one_based.begin(), images_one_based.size())) {}

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Trusted constructor for internal callers holding 0-based images.
  static Permutation from_zero_based(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return images_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point x) const {
    if (x < 1 || x > images_.size()) throw std::out_of_range("point out of range");
    return images_[x - 1] + 1;
  }

  Point image0(Point x) const { return images_[x]; }
  const std::vector<Point>& zero_based() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return from_zero_based(std::move(inv));
  }

  /// Smallest moved point (1-based), or nullopt for the identity.
  std::optional<Point> first_moved() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<Point>(i + 1);
    return std::nullopt;
  }

  Parity parity() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
  }

  /// Cycle decomposition, 1-based, each cycle starting at its least point,
  /// fixed points omitted.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<Point> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<Point>(j + 1));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Point> out(p.degree());
  const auto& pi = p.zero_based();
  const auto& qi = q.zero_based();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = qi[pi[i]];
  return Permutation::from_zero_based(std::move(out));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline Permutation pow(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

/// p^q = q^-1 p q.
inline Permutation conjugate(const Permutation& p, const Permutation& q) { return q.inverse() * p * q; }

inline Parity parity(const Permutation& p) { return p.parity(); }

/// The (n-1)-cycle (1, 2, ..., i-1, i+1, ..., n) fixing i.
inline Permutation sigma(unsigned n, unsigned i) {
  if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  std::vector<Point> pts;
  for (Point x = 1; x <= n; ++x)
    if (x != i) pts.push_back(x);
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  for (std::size_t k = 0; k < pts.size(); ++k) img[pts[k] - 1] = pts[(k + 1) % pts.size()];
  return Permutation(img);
}

/// The n-cycle (1, 2, ..., n).
inline Permutation omega(unsigned n) {
  std::vector<Point> img(n);
  for (Point x = 1; x <= n; ++x) img[x - 1] = x % n + 1;
  return Permutation(img);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.zero_based()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

/// Order of <gens> by breadth-first enumeration of the whole group.
///
/// Returns nullopt once more than `cap` elements have been found. An empty
/// generator list generates the trivial group.
inline std::optional<std::uint64_t> closure_order_bfs(std::span<const Permutation> gens,
                                                      std::uint64_t cap = kDefaultClosureCap) {
  if (gens.empty()) return 1;
  const auto degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generators of different degree");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    const Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

inline std::optional<std::uint64_t> closure_order_bfs(std::initializer_list<Permutation> gens,
                                                      std::uint64_t cap = kDefaultClosureCap) {
  return closure_order_bfs(std::span<const Permutation>(gens.begin(), gens.size()), cap);
}

// Cycle notation ------------------------------------------------------------

inline std::string to_cycle_string(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

/// Parses "(2 3)(4 5)" (commas also accepted as separators) as a
/// permutation of the given degree. Cycles are composed left to right.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result = Permutation::identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw std::invalid_argument("expected a point");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > degree) throw std::invalid_argument("point exceeds degree");
        ++pos;
      }
      if (v == 0) throw std::invalid_argument("points are 1-based");
      cyc.push_back(static_cast<Point>(v));
    }
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{1});
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k] - 1]) throw std::invalid_argument("repeated point in cycle");
      used[cyc[k] - 1] = true;
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    result = result * Permutation(img);
    skip_ws();
  }
  return result;
}

}  // namespace selfsim
