#include "ivc2/budget.hpp"

#include <doctest.h>

#include <sstream>

using namespace ivc2;

namespace {

// n = 4 counts from the desk compile of K4.
BudgetCounts k4_counts() {
  BudgetCounts c;
  c.n3b = 552;
  c.nsw = 12;
  c.nsl = 408;
  c.nli = 416;
  return c;
}

}  // namespace

TEST_CASE("epsilon at n = 4") {
  CHECK(epsilon_for(4) == BigInt(62208000));
  BigInt direct = BigInt(243) * 32 * 14 * 64 / 4 + BigInt(7776) * 7776;
  CHECK(epsilon_for(4) == direct);
  CHECK(long_interval_bound(4) == 7776);
  CHECK(with_commas(epsilon_for(4)) == "62,208,000");
}

TEST_CASE("M grows by one edge-gadget gap per cut edge") {
  auto p = BudgetParams::from(ReductionParams{4, 3, 2, 3});
  auto c = k4_counts();
  for (int cut = 0; cut < 6; ++cut) {
    BigInt k = p.k;
    CHECK(m_value(c, cut + 1, p) - m_value(c, cut, p) == k + 1);
  }
}

TEST_CASE("M by hand at the desk parameters") {
  auto p = BudgetParams::from(ReductionParams{4, 3, 2, 3});
  auto c = k4_counts();
  // 4x^2 N3b + Nsw(32x^2+12x'^2+16xx') + 2x Nsl + 2x Nli + 2 Nsw(2x'-x) - 3nx + (8k^2+7k+2)C + (8k^2+6k+1)(6-C)
  BigInt expected = BigInt(36) * 552 + BigInt(12) * (288 + 48 + 96) + 6 * 408 + 6 * 416 + 2 * 12 * 1 - 36 +
                    BigInt(95) * 4 + BigInt(91) * 2;
  CHECK(m_value(c, 4, p) == expected);
}

TEST_CASE("paper parameters make the bands disjoint") {
  auto p = BudgetParams::paper(4);
  CHECK(p.k == epsilon_for(4) + 1);
  CHECK(p.x == 4 * p.k);
  auto table = budget_table(k4_counts(), p);
  REQUIRE(table.size() == 7u);
  CHECK(bands_disjoint(table));
  for (const auto& b : table) {
    CHECK(decide(b.m, table) == b.maxcut);
    CHECK(decide(b.m + b.epsilon, table) == b.maxcut);
  }
  CHECK_THROWS_AS(decide(table.front().m - 1, table), ModelError);
  CHECK_THROWS_AS(decide(table.back().m + table.back().epsilon + 1, table), ModelError);
  CHECK_THROWS_AS(decide(table[2].m + table[2].epsilon + 1, table), ModelError);
}

TEST_CASE("small k makes the bands overlap") {
  auto table = budget_table(k4_counts(), BudgetParams::from(ReductionParams{4, 3, 2, 3}));
  CHECK_FALSE(bands_disjoint(table));
  CHECK_THROWS_AS(decide(table[3].m, table), ModelError);
}

TEST_CASE("budget file lists every band") {
  std::ostringstream os;
  write_budget(os, budget_table(k4_counts(), BudgetParams::paper(4)));
  auto text = os.str();
  for (int c = 0; c <= 6; ++c) CHECK(text.find("C " + std::to_string(c) + " M ") != std::string::npos);
}
