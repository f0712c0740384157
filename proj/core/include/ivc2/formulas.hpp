#pragma once

#include "ivc2/coord.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ivc2 {

// External interval families around a 3-block: family i has r[i] red and b[i] blue members.
// Index 0..3 stands for families 1..4 of the 3-block lemma.
struct OverlapProfile {
  std::array<int, 4> r{};
  std::array<int, 4> b{};

  int delta(int family) const { return r.at(family - 1) - b.at(family - 1); }
  // Smallest family sizes realising the given deltas.
  static OverlapProfile from_deltas(const std::array<int, 4>& deltas);
};

std::int64_t eval_cut_RBR(std::int64_t x, const OverlapProfile& p);
std::int64_t eval_cut_BRB(std::int64_t x, const OverlapProfile& p);
// (Delta1 + Delta3 - Delta4) x
std::int64_t eval_cut_difference(std::int64_t x, const OverlapProfile& p);

// (Delta2 + Delta4)^2 / 4, requires Delta1 + Delta3 - Delta4 <= 0.
Coord eval_f_bound(const OverlapProfile& p);

struct EdgeCases {
  std::int64_t same_color_max = 0;
  Coord diff_color_min;
  std::vector<Coord> case_values;  // the four values worked out in the edge gadget proof
};
EdgeCases eval_edge_cases(std::int64_t k, std::int64_t r, std::int64_t b);

// 12 x'^2 + 28 x^2 + 16 x x', requires x/2 < x' < x.
std::int64_t eval_switch_alter(std::int64_t x, std::int64_t x_prime);

}  // namespace ivc2
