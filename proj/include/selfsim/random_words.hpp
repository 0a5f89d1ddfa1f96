#pragma once

#include <cstdint>
#include <random>

#include "selfsim/word.hpp"

namespace selfsim {

inline constexpr std::uint64_t kDefaultSeed = 0x5e1f5171ULL;

/// Freely reduced word with exactly `syllables` syllables.
///
/// Canonical words take exponents in 1..n-2; otherwise exponents are drawn
/// from +-1..max_abs_exp.
template <class Rng>
GeneratorWord random_word(unsigned n, std::size_t syllables, Rng& rng, bool canonical = true,
                          long long max_abs_exp = 3) {
  GeneratorWord w(n);
  std::uniform_int_distribution<unsigned> other(1, n - 1);
  std::uniform_int_distribution<unsigned> any(1, n);
  const long long hi = canonical ? static_cast<long long>(n) - 2 : max_abs_exp;
  std::uniform_int_distribution<long long> mag(1, hi);
  std::bernoulli_distribution negative(0.5);
  unsigned prev = 0;
  for (std::size_t k = 0; k < syllables; ++k) {
    unsigned g = prev == 0 ? any(rng) : other(rng);
    if (prev != 0 && g >= prev) ++g;
    long long e = mag(rng);
    if (!canonical && negative(rng)) e = -e;
    w.append({g, e});
    prev = g;
  }
  return w;
}

/// Every word with 1..max_syllables syllables over exponents in `exponents`
/// (adjacent generators distinct), plus the empty word, in a fixed order.
template <class Visit>
void for_each_word(unsigned n, std::size_t max_syllables, const std::vector<long long>& exponents, Visit&& visit) {
  GeneratorWord empty(n);
  visit(empty);
  std::vector<Syllable> current;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == 0) return;
    for (unsigned g = 1; g <= n; ++g) {
      if (!current.empty() && current.back().gen == g) continue;
      for (long long e : exponents) {
        current.push_back({g, e});
        visit(GeneratorWord(n, current));
        self(self, depth - 1);
        current.pop_back();
      }
    }
  };
  rec(rec, max_syllables);
}

}  // namespace selfsim
