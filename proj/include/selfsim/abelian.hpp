#pragma once

// Exponent-sum invariants and the membership tests they decide.

#include <stdexcept>
#include <vector>

#include "selfsim/tree.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

/// Image in (Z/(n-1))^n; entries[i-1] belongs to generator i and lies in [0, n-2].
struct AbelianVector {
  unsigned n = 3;
  std::vector<long long> entries;

  bool is_zero() const {
    for (long long e : entries)
      if (e != 0) return false;
    return true;
  }

  friend AbelianVector operator+(AbelianVector a, const AbelianVector& b) {
    if (a.n != b.n) throw std::invalid_argument("abelian vectors over different alphabets");
    const long long m = static_cast<long long>(a.n) - 1;
    for (std::size_t i = 0; i < a.entries.size(); ++i) a.entries[i] = (a.entries[i] + b.entries[i]) % m;
    return a;
  }

  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;
};

inline long long residue(long long x, long long m) { return ((x % m) + m) % m; }

inline AbelianVector abelianize(const GeneratorWord& w) {
  const unsigned n = w.n();
  const long long m = static_cast<long long>(n) - 1;
  AbelianVector v{n, std::vector<long long>(n, 0)};
  for (const auto& s : w.syllables()) v.entries[s.gen - 1] += s.exp;
  for (auto& e : v.entries) e = residue(e, m);
  return v;
}

/// Total exponent sum mod (n-1).
inline long long epsilon(const GeneratorWord& w) {
  return residue(w.total_exponent(), static_cast<long long>(w.n()) - 1);
}

/// Sum of epsilon over the first-level states, mod (n-1).
inline long long epsilon1(const GeneratorWord& w) {
  const long long m = static_cast<long long>(w.n()) - 1;
  long long total = 0;
  for (const auto& s : decompose(w).states) total += epsilon(s);
  return residue(total, m);
}

inline bool in_commutator(const GeneratorWord& w) { return abelianize(w).is_zero(); }

/// K_n = {epsilon even}, odd n >= 5 (n-1 even, so the parity of the residue is well defined).
inline bool in_Kn_odd(const GeneratorWord& w) {
  if (w.n() < 5 || w.n() % 2 == 0) throw std::domain_error("K_n membership needs odd n >= 5");
  return epsilon(w) % 2 == 0;
}

/// chi_4 = e_1 - e_2 + e_3 - e_4 mod 3 on G_4; the index-3 quotient by K_4.
inline long long chi4(const GeneratorWord& w) {
  if (w.n() != 4) throw std::domain_error("chi_4 is defined for n = 4 only");
  const auto v = abelianize(w);
  return residue(v.entries[0] - v.entries[1] + v.entries[2] - v.entries[3], 3);
}

inline bool in_K4(const GeneratorWord& w) { return chi4(w) == 0; }

/// H_{n,d} = {epsilon = 0 mod d}, for d > 2 dividing n-1.
inline bool in_Hnd(const GeneratorWord& w, unsigned d) {
  const unsigned m = w.n() - 1;
  if (d <= 2 || m % d != 0) throw std::domain_error("H_{n,d} needs d > 2 with d | (n-1)");
  return epsilon(w) % d == 0;
}

/// Necessary condition for w to fix the first level when n is odd: each
/// sigma_i is then an odd permutation, so a trivial root forces even epsilon.
inline bool stab1_parity_test(const GeneratorWord& w) {
  if (w.n() < 5 || w.n() % 2 == 0) throw std::domain_error("parity test needs odd n >= 5");
  return epsilon(w) % 2 == 0;
}

inline bool fixes_first_level(const GeneratorWord& w) { return root_permutation(w).is_identity(); }

}  // namespace selfsim
