#include "ivc2/budget.hpp"

#include <ostream>

namespace ivc2 {

BudgetParams BudgetParams::from(const ReductionParams& p) { return {p.n, p.x, p.x_prime, p.k}; }

BudgetParams BudgetParams::paper(int n) {
  BudgetParams p;
  p.n = n;
  p.k = epsilon_for(n) + 1;
  p.x = 4 * p.k;
  p.x_prime = p.x / 2 + 1;
  return p;
}

BigInt epsilon_for(int n) {
  if (n < 4 || n % 2) throw ModelError("epsilon needs an even n >= 4");
  BigInt N = n;
  BigInt n3 = N * N * N;
  BigInt first = 243 * (3 * N + 20) * (3 * N + 2) * n3;
  BigInt li = long_interval_bound(n);
  return first / 4 + li * li;
}

BigInt long_interval_bound(int n) {
  BigInt N = n;
  return 243 * N * N * N / 2;
}

BigInt m_value(const BudgetCounts& c, int maxcut, const BudgetParams& p) {
  const BigInt& x = p.x;
  const BigInt& xp = p.x_prime;
  const BigInt& k = p.k;
  BigInt edges = 3 * p.n / 2;
  BigInt m = 4 * x * x * c.n3b;
  m += BigInt(c.nsw) * (32 * x * x + 12 * xp * xp + 16 * x * xp);
  m += 2 * x * c.nsl;
  m += 2 * x * c.nli;
  m += 2 * BigInt(c.nsw) * (2 * xp - x);
  m -= 3 * p.n * x;
  m += (8 * k * k + 7 * k + 2) * maxcut;
  m += (8 * k * k + 6 * k + 1) * (edges - maxcut);
  return m;
}

CutBudget compute_budget(const BudgetCounts& c, int maxcut, const BudgetParams& p) {
  if (maxcut < 0 || maxcut > 3 * p.n / 2) throw ModelError("maxcut(G) out of range");
  return CutBudget{c, maxcut, m_value(c, maxcut, p), epsilon_for(p.n)};
}

std::vector<CutBudget> budget_table(const BudgetCounts& c, const BudgetParams& p) {
  std::vector<CutBudget> t;
  for (int C = 0; C <= 3 * p.n / 2; ++C) t.push_back(compute_budget(c, C, p));
  return t;
}

bool bands_disjoint(const std::vector<CutBudget>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i].m <= t[j].m + t[j].epsilon && t[j].m <= t[i].m + t[i].epsilon) return false;
  return true;
}

int decide(const BigInt& value, const std::vector<CutBudget>& t) {
  int found = -1;
  for (const auto& b : t) {
    if (value < b.m || value > b.m + b.epsilon) continue;
    if (found >= 0)
      throw ModelError("value " + value.str() + " lies in the bands of C=" + std::to_string(found) + " and C=" +
                       std::to_string(b.maxcut));
    found = b.maxcut;
  }
  if (found < 0) throw ModelError("value " + value.str() + " lies in no band");
  return found;
}

std::string with_commas(const BigInt& v) {
  std::string s = (v < 0 ? BigInt(-v) : v).str();
  std::string out;
  int n = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (n && n % 3 == 0) out.insert(out.begin(), ',');
    out.insert(out.begin(), *it);
    ++n;
  }
  return v < 0 ? "-" + out : out;
}

void write_budget(std::ostream& os, const std::vector<CutBudget>& t) {
  if (t.empty()) return;
  const auto& c = t.front().counts;
  os << "N3b " << c.n3b << "\nNsw " << c.nsw << "\nNsl " << c.nsl << "\nNli " << c.nli << "\nepsilon "
     << t.front().epsilon << "\n";
  for (const auto& b : t) os << "C " << b.maxcut << " M " << b.m << " M+epsilon " << b.m + b.epsilon << "\n";
}

}  // namespace ivc2
