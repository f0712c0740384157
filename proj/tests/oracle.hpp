#pragma once

// Test-side helpers that deliberately avoid the library's graph and solver code.

#include "ivc2/model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_oracle {

struct Interval {
  ivc2::Coord lo, hi;
};

inline std::vector<Interval> intervals_of(const ivc2::IntervalModel& m) {
  std::vector<Interval> out;
  for (const auto& b : m.blocks())
    for (int i = 0; i < b.multiplicity; ++i) out.push_back({b.left, b.left + b.length});
  return out;
}

inline bool meets(const Interval& a, const Interval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

// Max cut over all 2^V colourings of the intersection graph, straight from the intervals.
inline std::int64_t brute_maxcut(const ivc2::IntervalModel& m) {
  auto iv = intervals_of(m);
  const std::size_t n = iv.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (meets(iv[i], iv[j])) edges.push_back({i, j});
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) {  // vertex 0 fixed by symmetry
    std::int64_t c = 0;
    for (auto [a, b] : edges) c += ((mask >> a) ^ (mask >> b)) & 1;
    if (c > best) best = c;
  }
  return best;
}

// Cut of a block assignment computed pairwise over intervals: a block with y red
// of m intervals contributes y(m-y); two touching blocks y_a(m_b-y_b)+(m_a-y_a)y_b.
inline std::int64_t assignment_cut(const ivc2::IntervalModel& m, const std::vector<int>& red) {
  std::int64_t c = 0;
  const auto& bs = m.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    std::int64_t mi = bs[i].multiplicity, yi = red[i];
    c += yi * (mi - yi);
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      Interval a{bs[i].left, bs[i].left + bs[i].length}, b{bs[j].left, bs[j].left + bs[j].length};
      if (!meets(a, b)) continue;
      std::int64_t mj = bs[j].multiplicity, yj = red[j];
      c += yi * (mj - yj) + (mi - yi) * yj;
    }
  }
  return c;
}

// Small models on the eighth grid with at most max_vertices intervals.
inline ivc2::IntervalModel random_model(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> span(0, 48), mult(1, 4), kind(0, 4), alpha8(12, 40);
  ivc2::Coord alpha = ivc2::eighths(alpha8(rng));
  ivc2::ModelBuilder b(alpha);
  int used = 0, id = 0;
  int target = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  while (used < target) {
    int m = std::min(mult(rng), target - used);
    auto left = ivc2::eighths(span(rng));
    std::string name = "b" + std::to_string(id++);
    if (kind(rng) == 0) b.add_long(name, left, m, "rnd/long");
    else b.add_short(name, left, m, "rnd/short");
    used += m;
  }
  return std::move(b).build();
}

}  // namespace testing_oracle
