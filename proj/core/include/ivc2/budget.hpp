#pragma once

#include "ivc2/reduction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ivc2 {

using BigInt = boost::multiprecision::cpp_int;

struct BudgetParams {
  int n = 4;
  BigInt x = 3, x_prime = 2, k = 3;

  static BudgetParams from(const ReductionParams& p);
  // k = epsilon + 1, x = 4k, x' = x/2 + 1.
  static BudgetParams paper(int n);
};

struct CutBudget {
  BudgetCounts counts;
  int maxcut = 0;
  BigInt m;
  BigInt epsilon;
};

// 243(3n+20)(3n+2)n^3/4 + (243n^3/2)^2, exact for even n.
BigInt epsilon_for(int n);
// Long intervals the counting argument allows: 243n^3/2.
BigInt long_interval_bound(int n);

BigInt m_value(const BudgetCounts& c, int maxcut, const BudgetParams& p);
CutBudget compute_budget(const BudgetCounts& c, int maxcut, const BudgetParams& p);

// One entry per C = 0..3n/2.
std::vector<CutBudget> budget_table(const BudgetCounts& c, const BudgetParams& p);
bool bands_disjoint(const std::vector<CutBudget>& table);

// The C whose closed band [M(C), M(C)+epsilon] holds the value. Throws ModelError
// when no band or more than one band holds it.
int decide(const BigInt& value, const std::vector<CutBudget>& table);

void write_budget(std::ostream& os, const std::vector<CutBudget>& table);
std::string with_commas(const BigInt& v);

}  // namespace ivc2
