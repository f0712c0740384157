#include "ivc2/formulas.hpp"

#include "ivc2/model.hpp"

#include <cstdlib>

namespace ivc2 {

OverlapProfile OverlapProfile::from_deltas(const std::array<int, 4>& d) {
  OverlapProfile p;
  for (int i = 0; i < 4; ++i) {
    p.r[i] = d[i] > 0 ? d[i] : 0;
    p.b[i] = d[i] < 0 ? -d[i] : 0;
  }
  return p;
}

std::int64_t eval_cut_RBR(std::int64_t x, const OverlapProfile& p) {
  return 4 * x * x + 2 * (p.r[1] + p.b[1]) * x + (p.b[0] + p.b[2]) * x + (2 * p.r[3] + p.b[3]) * x;
}

std::int64_t eval_cut_BRB(std::int64_t x, const OverlapProfile& p) {
  return 4 * x * x + 2 * (p.r[1] + p.b[1]) * x + (p.r[0] + p.r[2]) * x + (p.r[3] + 2 * p.b[3]) * x;
}

std::int64_t eval_cut_difference(std::int64_t x, const OverlapProfile& p) {
  return (p.delta(1) + p.delta(3) - p.delta(4)) * x;
}

Coord eval_f_bound(const OverlapProfile& p) {
  if (p.delta(1) + p.delta(3) - p.delta(4) > 0)
    throw ModelError("eval_f_bound: profile is not RBR-normalized (Delta1 + Delta3 - Delta4 > 0)");
  Coord s(p.delta(2) + p.delta(4));
  return s * s / 4;
}

EdgeCases eval_edge_cases(std::int64_t k, std::int64_t r, std::int64_t b) {
  if (k < 1) throw ModelError("edge gadget needs k >= 1");
  EdgeCases e;
  const std::int64_t d = r - b;
  const Coord D(d, 2);  // the proof's Delta = (r - b) / 2
  const Coord K(k);
  e.same_color_max = 8 * k * k + 6 * k + 1;
  e.diff_color_min = Coord(8 * k * k + 7 * k + 2) - Coord(d * d, 2) - Coord(std::llabs(d));
  e.case_values = {8 * K * K + 6 * K - D * D - 2 * D + 1, 8 * K * K + 6 * K, 8 * K * K + 6 * K - D * D,
                   8 * K * K + 7 * K - 2 * D * D - 2 * D + 2};
  return e;
}

std::int64_t eval_switch_alter(std::int64_t x, std::int64_t xp) {
  if (!(x < 2 * xp && xp < x)) throw ModelError("eval_switch_alter needs x/2 < x' < x");
  return 12 * xp * xp + 28 * x * x + 16 * x * xp;
}

}  // namespace ivc2
