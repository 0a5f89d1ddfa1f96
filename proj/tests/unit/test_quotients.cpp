#include <gtest/gtest.h>

#include "selfsim/perm.hpp"
#include "selfsim/quotients.hpp"

using namespace selfsim;

namespace {

// Independent reference values, computed with mpmath at 60 digits.
const char* const kClosedForm[] = {
    "0.871049064255152804376584620510726374511619380180965523870168",
    "0.695473927003617110192665548389152902843084893625125058096315",
    "0.971043409877208373768335433618301011257916436385152346141362",
    "0.894646494224959967347751430283193066419700573435680068567515",
    "0.988384850256734266117130765353526165281728678180143177842912",
    "0.934637139465117746030467276111728615360654502249855347137325",
};

bool close(const HighReal& a, const HighReal& b, const char* tol) { return abs(a - b) < HighReal(tol); }

}  // namespace

TEST(Quotients, LevelOneMatchesRootGroup) {
  for (unsigned n = 3; n <= 8; ++n) {
    std::vector<Permutation> gens;
    for (unsigned i = 1; i <= n; ++i) gens.push_back(sigma(n, i));
    EXPECT_EQ(quotient_order(n, 1), BigNat(*closure_order_bfs(gens))) << "n=" << n;
  }
}

TEST(Quotients, LevelTwo) {
  EXPECT_EQ(quotient_order(4, 2), 82944);
  EXPECT_EQ(quotient_order(3, 2), 648);
  EXPECT_EQ(quotient_order(5, 2), BigNat(120) * power(BigNat(120), 5) / 2);
  EXPECT_EQ(quotient_order(6, 2), BigNat(360) * power(BigNat(360), 6));
}

TEST(Quotients, LevelThree) {
  EXPECT_EQ(quotient_order(4, 3), BigNat(12) * power(BigNat(6912), 5));
  EXPECT_EQ(quotient_order(3, 3), BigNat(648) * power(BigNat(108), 3));
}

TEST(Quotients, FormulaAgreesWithComputation) {
  for (unsigned n = 3; n <= 7; ++n) {
    const unsigned levels = n <= 4 ? 3 : 2;
    const auto t = index_table(n, levels);
    for (const auto& row : t.rows) {
      EXPECT_EQ(row.index, row.formula_index) << "n=" << n << " m=" << row.level;
      EXPECT_EQ(row.first_orbit, int_pow(n, row.level));
      EXPECT_EQ(full_quotient_order(n, row.level) % row.order, 0);
    }
    EXPECT_EQ(t.rows.back().order, formula_quotient_order(n, levels));
  }
}

TEST(Quotients, OddExponentReadingsDifferFromLevelThree) {
  // At m = 3 the two readings of the odd-case exponent separate for n = 3.
  EXPECT_EQ(formula_level_index(3, 3), BigNat(216 * 216 * 216) / 8);
  EXPECT_NE(formula_level_index(3, 3), formula_level_index(3, 3, 4));
  EXPECT_EQ(formula_level_index(3, 2), formula_level_index(3, 2, 4));
}

TEST(Quotients, BudgetRefusal) {
  EXPECT_THROW(quotient_order(8, 4), BudgetExceeded);
  EXPECT_THROW(quotient_order(4, 3, QuotientBudget{63}), BudgetExceeded);
  try {
    check_budget(10, 4, QuotientBudget{500});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.limit(), 500u);
    EXPECT_GT(e.degree(), 500u);
  }
  EXPECT_THROW(quotient_order(2, 1), std::invalid_argument);
}

TEST(Hausdorff, ClosedFormsToFiftyDigits) {
  for (unsigned n = 3; n <= 8; ++n)
    EXPECT_TRUE(close(hausdorff_closed_form(n), HighReal(kClosedForm[n - 3]), "1e-55")) << "n=" << n;
}

TEST(Hausdorff, FourValue) {
  const long double direct = 1.0L - std::log(48.0L) / std::log(331776.0L);
  EXPECT_NEAR(static_cast<double>(hausdorff_closed_form(4)), static_cast<double>(direct), 1e-12);
}

TEST(Hausdorff, PartialRatios) {
  EXPECT_TRUE(close(hausdorff_formula_partial(4, 1),
                    HighReal("0.781895708014468440770662193556611611372339574500500232385262"), "1e-55"));
  EXPECT_TRUE(close(hausdorff_formula_partial(4, 2),
                    HighReal("0.712758283205787376308264877422644644548935829800200092954105"), "1e-55"));
  for (unsigned n = 3; n <= 6; ++n) {
    const auto emp = hausdorff_empirical(n, 2);
    for (unsigned m = 1; m <= 2; ++m) EXPECT_TRUE(close(emp[m - 1], hausdorff_formula_partial(n, m), "1e-40"));
  }
}

TEST(Hausdorff, PartialRatiosApproachTheClosedForm) {
  for (unsigned n = 3; n <= 8; ++n) {
    const HighReal gap20 = abs(hausdorff_formula_partial(n, 20) - hausdorff_closed_form(n));
    const HighReal gap10 = abs(hausdorff_formula_partial(n, 10) - hausdorff_closed_form(n));
    EXPECT_LE(gap20, gap10);
    EXPECT_LT(gap20, HighReal("1e-9"));
  }
}
