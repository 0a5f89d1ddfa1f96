#pragma once

// Word problem by contraction: canonicalize, split along the wreath
// recursion, and recurse into the states while the root stays trivial.

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "selfsim/tree.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

namespace detail {

class IdentityQuery {
 public:
  bool run(const GeneratorWord& word) {
    const GeneratorWord w = word.canonical();
    // Canonical single syllables have exponent in 1..n-2 and so are never trivial.
    if (w.empty()) return true;
    if (w.length() == 1) return false;
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    const auto d = decompose(w);
    bool trivial = d.root.is_identity();
    for (const auto& s : d.states) {
      if (!trivial) break;
      trivial = run(s);
    }
    memo_.emplace(w, trivial);
    return trivial;
  }

 private:
  std::unordered_map<GeneratorWord, bool, GeneratorWordHash> memo_;
};

}  // namespace detail

/// True iff w evaluates to the identity of G_n.
inline bool is_identity(const GeneratorWord& w) { return detail::IdentityQuery{}.run(w); }

inline bool are_equal(const GeneratorWord& u, const GeneratorWord& v) {
  if (u.n() != v.n()) throw std::invalid_argument("words over different alphabets");
  return is_identity(u * v.inverse());
}

inline std::uint64_t default_order_bound(unsigned n) {
  const std::uint64_t m = n - 1;
  return 4 * m * m;
}

/// Least k <= bound with w^k trivial, or nullopt if none exists up to bound.
inline std::optional<std::uint64_t> element_order(const GeneratorWord& w, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("order bound must be positive");
  const GeneratorWord base = w.canonical();
  GeneratorWord power = base;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (is_identity(power)) return k;
    power = (power * base).canonical();
  }
  return std::nullopt;
}

inline std::optional<std::uint64_t> element_order(const GeneratorWord& w) {
  return element_order(w, default_order_bound(w.n()));
}

}  // namespace selfsim
