#include "ivc2/classify.hpp"

namespace ivc2 {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Alternating: return "Alternating";
    case Verdict::AlmostAlternating: return "AlmostAlternating";
    case Verdict::Other: return "Other";
  }
  return "?";
}

std::string AlternationReport::describe() const {
  if (verdict == Verdict::AlmostAlternating)
    return verdict_name(verdict) + "(" + block + "," + std::to_string(deviation) + ")";
  return verdict_name(verdict);
}

AlternationReport classify_row(const std::vector<std::string>& ids, const std::vector<int>& red,
                               const std::vector<int>& mult) {
  AlternationReport rep;
  rep.blocks = ids;
  for (std::size_t i = 0; i < ids.size(); ++i)
    rep.majority.push_back(2 * red[i] > mult[i] ? Majority::Red
                           : 2 * red[i] < mult[i] ? Majority::Blue
                                                  : Majority::Tie);
  struct Fit {
    int bad_blocks = 0;
    long total = 0;
    std::size_t where = 0;
    int dev = 0;
  };
  Fit best;
  bool have = false;
  for (int start = 0; start < 2; ++start) {
    Fit f;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      bool expect_red = ((start + i) % 2) == 1;
      int dev = expect_red ? mult[i] - red[i] : red[i];
      if (dev > 0) {
        ++f.bad_blocks;
        f.where = i;
        f.dev = dev;
      }
      f.total += dev;
    }
    if (!have || f.bad_blocks < best.bad_blocks || (f.bad_blocks == best.bad_blocks && f.total < best.total)) {
      best = f;
      have = true;
    }
  }
  if (best.bad_blocks == 0) {
    rep.verdict = Verdict::Alternating;
  } else if (best.bad_blocks == 1 && 2 * best.dev <= mult[best.where]) {
    rep.verdict = Verdict::AlmostAlternating;
    rep.block = ids[best.where];
    rep.deviation = best.dev;
  } else {
    rep.verdict = Verdict::Other;
  }
  return rep;
}

std::vector<AlternationReport> classify_partition(const GadgetInstance& g, const TwinGraph& graph,
                                                  const BlockAssignment& a) {
  std::vector<AlternationReport> out;
  for (const auto& row : g.rows) {
    std::vector<int> red, mult;
    for (const auto& id : row) {
      auto i = graph.index_of(id);
      if (!i) throw ModelError("classify: block '" + id + "' is not in the graph");
      red.push_back(a.red.at(*i));
      mult.push_back(graph.multiplicity(*i));
    }
    out.push_back(classify_row(row, red, mult));
  }
  return out;
}

}  // namespace ivc2
