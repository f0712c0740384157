#pragma once

#include "ivc2/model.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivc2 {

class SolverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pinned red counts, aligned with graph nodes; nullopt means free.
using FixedColors = std::vector<std::optional<int>>;

FixedColors fix_by_id(const TwinGraph& graph, const std::vector<std::pair<std::string, int>>& pins);

struct SolveResult {
  std::int64_t value = 0;
  BlockAssignment assignment;
  std::uint64_t optima_count = 0;        // distinct optimal block assignments
  std::vector<BlockAssignment> optima;   // filled when enumeration was requested
  bool optima_complete = false;          // optima holds every optimum
};

struct BruteOptions {
  std::size_t max_vertices = 26;
  bool enumerate = false;
  std::size_t max_optima = 100000;
};

// Exhaustive search over vertex 2-colourings of the expanded graph.
SolveResult maxcut_bruteforce(const TwinGraph& graph, const FixedColors& fixed = {},
                              const BruteOptions& options = {});
SolveResult maxcut_bruteforce(const IntervalModel& model, const FixedColors& fixed = {},
                              const BruteOptions& options = {});

struct TwinOptions {
  std::size_t max_width = 8;            // frontier size including the current block
  std::size_t max_states = 4000000;     // per layer
  bool enumerate = false;
  std::size_t max_optima = 200000;
};

// Dynamic programming over block counts in node order. Node order should be an
// interval order (as produced by build_twin_graph) so the active frontier stays small.
SolveResult maxcut_twin_exact(const TwinGraph& graph, const FixedColors& fixed = {},
                              const TwinOptions& options = {});

// Frontier width the DP would need; useful for deciding whether to call it.
std::size_t twin_width(const TwinGraph& graph, const FixedColors& fixed = {});

}  // namespace ivc2
