#pragma once

#include "ivc2/gadgets.hpp"
#include "ivc2/model.hpp"

#include <string>
#include <vector>

namespace ivc2 {

enum class Verdict { Alternating, AlmostAlternating, Other };
std::string verdict_name(Verdict v);

enum class Majority { Blue, Red, Tie };

struct AlternationReport {
  Verdict verdict = Verdict::Other;
  std::string block;   // set for AlmostAlternating
  int deviation = 0;   // intervals of `block` coloured like its neighbours
  std::vector<std::string> blocks;
  std::vector<Majority> majority;

  std::string describe() const;
};

// One report per row of the gadget (the switch has bottom and top rows).
// `graph` is any twin graph containing the gadget's blocks, `a` an assignment on it.
std::vector<AlternationReport> classify_partition(const GadgetInstance& g, const TwinGraph& graph,
                                                  const BlockAssignment& a);

AlternationReport classify_row(const std::vector<std::string>& ids, const std::vector<int>& red,
                               const std::vector<int>& mult);

}  // namespace ivc2
