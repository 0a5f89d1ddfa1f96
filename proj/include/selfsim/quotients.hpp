#pragma once

// Orders of the congruence quotients G_n/Stab(m) from the level-m action,
// the closed-form index recursions they are checked against, and Hausdorff
// dimension (closed form and finite partial ratios).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfsim/numeric.hpp"
#include "selfsim/schreier_sims.hpp"
#include "selfsim/tree.hpp"

namespace selfsim {

struct QuotientBudget {
  std::size_t max_degree = 2000;  // n^m must not exceed this
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t degree, std::size_t limit)
      : std::runtime_error("level action of degree " + std::to_string(degree) + " exceeds the budget of " +
                           std::to_string(limit)),
        degree_(degree),
        limit_(limit) {}

  std::size_t degree() const { return degree_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t degree_;
  std::size_t limit_;
};

inline std::uint64_t int_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < exp; ++k) r *= base;
  return r;
}

inline void check_budget(unsigned n, unsigned m, const QuotientBudget& budget) {
  if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
  if (m < 1) throw std::invalid_argument("level must be positive");
  std::uint64_t degree = 1;
  for (unsigned k = 0; k < m; ++k) {
    degree *= n;
    if (degree > budget.max_degree) throw BudgetExceeded(degree, budget.max_degree);
  }
}

/// Chain of <a_1..a_n> acting on level m.
inline StabilizerChain level_chain(unsigned n, unsigned m, const QuotientBudget& budget = {}) {
  check_budget(n, m, budget);
  const auto gens = LeafActions(n, m).generators();
  return StabilizerChain(gens);
}

/// |G_n / Stab(m)|.
inline BigNat quotient_order(unsigned n, unsigned m, const QuotientBudget& budget = {}) {
  return level_chain(n, m, budget).order();
}

/// |Aut(T)/Stab(m)| = (n!)^((n^m - 1)/(n - 1)).
inline BigNat full_quotient_order(unsigned n, unsigned m) {
  return power(factorial(n), (int_pow(n, m) - 1) / (n - 1));
}

/// Closed-form |Stab(m-1)/Stab(m)| (m = 1 gives the root group):
///   n = 4:       12, then 6912^(4^(m-2))
///   odd n:       n!^(n^(m-1)) / 2^(n^(m-2))
///   even n >= 6: (n!/2)^(n^(m-1))
/// `odd_exponent_base` replaces n in 2^(base^(m-2)) so the alternative
/// 4^(m-2) reading of the odd case can be compared.
inline BigNat formula_level_index(unsigned n, unsigned m, unsigned odd_exponent_base = 0) {
  if (n < 3 || m < 1) throw std::invalid_argument("need n >= 3 and m >= 1");
  const BigNat nf = factorial(n);
  if (n == 4) return m == 1 ? BigNat(12) : power(BigNat(6912), int_pow(4, m - 2));
  if (n % 2 == 1) {
    if (m == 1) return nf;
    const unsigned base = odd_exponent_base == 0 ? n : odd_exponent_base;
    return power(nf, int_pow(n, m - 1)) / power(BigNat(2), int_pow(base, m - 2));
  }
  return power(nf / 2, int_pow(n, m - 1));
}

inline BigNat formula_quotient_order(unsigned n, unsigned m) {
  BigNat r = 1;
  for (unsigned k = 1; k <= m; ++k) r *= formula_level_index(n, k);
  return r;
}

struct QuotientRow {
  unsigned level = 0;
  BigNat order;          // |G/Stab(m)|
  BigNat index;          // |Stab(m-1)/Stab(m)|
  BigNat formula_index;  // closed-form prediction for index
  HighReal partial_ratio;  // log|G/Stab(m)| / log|Aut(T)/Stab(m)|
  std::size_t first_orbit = 0;  // size of the first basic orbit
};

struct QuotientTable {
  unsigned n = 0;
  std::vector<QuotientRow> rows;
};

inline HighReal partial_ratio(const BigNat& order, unsigned n, unsigned m) {
  const HighReal denom = HighReal((int_pow(n, m) - 1) / (n - 1)) * log_of(factorial(n));
  return log_of(order) / denom;
}

inline QuotientTable index_table(unsigned n, unsigned max_level, const QuotientBudget& budget = {}) {
  check_budget(n, max_level, budget);
  QuotientTable t{n, {}};
  BigNat previous = 1;
  for (unsigned m = 1; m <= max_level; ++m) {
    const auto chain = level_chain(n, m, budget);
    QuotientRow row;
    row.level = m;
    row.order = chain.order();
    row.index = row.order / previous;
    row.formula_index = formula_level_index(n, m);
    row.partial_ratio = partial_ratio(row.order, n, m);
    row.first_orbit = chain.levels().empty() ? 1 : chain.levels().front().orbit.size();
    previous = row.order;
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Hausdorff dimension of the closure of G_n:
///   n = 4:        1 - log 48 / log 331776
///   even n >= 6:  1 - log 2 / log n!
///   odd n:        1 - log 2 / (n log n!)
inline HighReal hausdorff_closed_form(unsigned n) {
  if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
  using boost::multiprecision::log;
  const HighReal two = 2;
  if (n == 4) return 1 - log(HighReal(48)) / log(HighReal(331776));
  if (n % 2 == 0) return 1 - log(two) / log_of(factorial(n));
  return 1 - log(two) / (HighReal(n) * log_of(factorial(n)));
}

/// Partial ratio at level m obtained by substituting the closed-form index
/// recursion, simplified to a difference of two logarithm ratios.
inline HighReal hausdorff_formula_partial(unsigned n, unsigned m) {
  using boost::multiprecision::log;
  const HighReal lognf = log_of(factorial(n));
  const HighReal full = HighReal((int_pow(n, m) - 1) / (n - 1));
  if (n == 4) {
    const HighReal threes = HighReal((int_pow(4, m - 1) - 1) / 3);
    return 1 - log(HighReal(2)) / lognf - threes * log(HighReal(3)) / (full * lognf);
  }
  if (n % 2 == 0) return 1 - log(HighReal(2)) / lognf;
  const HighReal twos = HighReal((int_pow(n, m - 1) - 1) / (n - 1));
  return 1 - twos * log(HighReal(2)) / (full * lognf);
}

/// Partial ratios for m = 1..max_level from exact quotient orders.
inline std::vector<HighReal> hausdorff_empirical(unsigned n, unsigned max_level, const QuotientBudget& budget = {}) {
  check_budget(n, max_level, budget);
  std::vector<HighReal> out;
  for (unsigned m = 1; m <= max_level; ++m) out.push_back(partial_ratio(quotient_order(n, m, budget), n, m));
  return out;
}

}  // namespace selfsim
