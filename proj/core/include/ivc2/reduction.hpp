#pragma once

#include "ivc2/cubic_graph.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/model.hpp"
#include "ivc2/template_table.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ivc2 {

struct ReductionParams {
  int n = 4;
  int x = 3;
  int x_prime = 2;
  int k = 3;

  Coord alpha() const { return Coord(53 * n - 3); }
  Coord phase() const { return Coord(53 * n); }
};
// Throws ModelError unless n is even, n >= 4 and x/2 < x' < x, k >= 1.
void check_params(const ReductionParams& p);

struct Span {
  Coord lo, hi;
};

class ZoneMap {
 public:
  explicit ZoneMap(int n);

  int n() const { return n_; }
  Coord phase() const { return Coord(53 * n_); }
  Span zone(int i, std::int64_t j) const;
  // Between zone i and zone i+1 (zone 0 of the next phase for i = n-1).
  Span buffer(int i, std::int64_t j) const;

  struct Location {
    bool in_zone = false;  // false: buffer(index, index+1)
    int index = 0;
    std::int64_t phase = 0;
    Coord offset;  // from the left end of the zone or buffer
  };
  // Shared endpoints belong to the zone.
  Location locate(const Coord& x) const;

  Coord zone_point(int v, std::int64_t j, const Coord& z) const;
  // Lane of buffer(i,i+1): u = 0 is the buffer's left end, zone i is [-32,0].
  Coord lane_point(int i, std::int64_t j, const Coord& u) const;

 private:
  int n_;
};

// Errors for odd n or n < 4.
ZoneMap layout_zones(int n);

struct PlacedGadget {
  std::string name;  // unique; also the gadget's id prefix without the trailing dot
  std::string role;  // vertex, home, edge, terminal-stretch or a template role
  std::int64_t phase = 0;
  int edge = -1;       // index into SwitchSchedule::edges
  int procedure = -1;  // switching procedure within the edge
  int step = 0;        // template step, 0 when not a template gadget
  bool in_zone = false;
  int where = 0;       // zone index, or i for buffer(i,i+1) lane coordinates
  Coord local_lo, local_hi;
  GadgetInstance gadget;  // global coordinates

  std::string place() const;  // "zone 2" or "lane 1-2"
};

struct LongInterval {
  std::string id;
  Coord left;
  std::int64_t phase = 0;  // phase of the departure
  int from = -1;
  std::string from_port;
  int to = -1;
  std::string to_port;
};

struct EdgePlan {
  int u = 0, v = 0;  // u < v
  std::int64_t start = 0;
  int procedures = 0;  // vertices strictly between u and v
  std::int64_t meet = 0;     // the chains sit next to each other
  std::int64_t join = 0;     // the edge gadget's phase
  int edge_gadget = -1;
};

struct SwitchSchedule {
  ReductionParams params;
  std::vector<EdgePlan> edges;  // lexicographic by (u, v)
  std::vector<PlacedGadget> gadgets;
  std::vector<LongInterval> longs;
  std::int64_t final_phase = 0;
  std::map<std::pair<int, std::string>, std::size_t> into_index, from_index;

  // Gadget index and port name -> long index, for arrivals and departures.
  std::optional<std::size_t> long_into(int gadget, const std::string& port) const;
  std::optional<std::size_t> long_from(int gadget, const std::string& port) const;
};

SwitchSchedule plan_switching(const SimpleGraph& g, const ReductionParams& params);

// One line per placed gadget: "kind role name phase place lo hi".
void write_schedule(std::ostream& os, const SwitchSchedule& s);

// Whose colour a block or long carries in a good partition: class of `vertex`, flipped if inverted.
struct Signal {
  int vertex = -1;
  bool inverted = false;
  bool operator==(const Signal&) const = default;
};

struct ColorExpectation {
  std::vector<std::optional<Signal>> block;  // aligned with H; empty for edge gadget blocks
  struct EdgeArrivals {
    int gadget = -1;
    Signal left, right;
  };
  std::vector<EdgeArrivals> edges;  // aligned with SwitchSchedule::edges
};

struct BudgetCounts {
  std::int64_t n3b = 0;  // size-x 3-blocks of vertex, link and stretch gadgets
  std::int64_t nsw = 0;
  std::int64_t nsl = 0;  // short links of those gadgets
  std::int64_t nli = 0;
  std::int64_t inverters = 0;
  std::int64_t edge_gadgets = 0;
};

struct CompiledReduction {
  IntervalModel h;
  SwitchSchedule schedule;
  ColorExpectation expect;
  BudgetCounts counts;
};

struct ScheduleReport {
  ValidationReport report;
  std::size_t max_overlap = 0;    // most 3-blocks and switch gadgets met by one long
  std::size_t overlap_bound = 0;  // 3n + 20
  bool ok() const { return report.ok(); }
};

ScheduleReport validate_schedule(const IntervalModel& h, const SwitchSchedule& s);

// Plans, assembles H, validates (throws on any violation) and derives the colour bookkeeping.
CompiledReduction compile(const SimpleGraph& g, const ReductionParams& params);

// The good partition induced by a 0/1 class per vertex of G, aligned with build_twin_graph(h).
BlockAssignment good_partition(const CompiledReduction& c, const std::vector<int>& side);

// Flip a long of the chain behind an edge gadget end, everything downstream of it,
// and the blocks of the gadgets it passes, up to but excluding the edge gadget.
struct RecolorMove {
  int edge = -1;
  bool left_end = true;  // chain into the edge gadget's left port
  std::string first_long;
  std::vector<std::size_t> nodes;  // H block indices to complement
};
std::vector<RecolorMove> recolor_moves(const CompiledReduction& c);

BlockAssignment apply_move(const TwinGraph& graph, const BlockAssignment& a, const RecolorMove& m);

// Vertices of G whose vertex gadget the chain into the given edge gadget end comes from.
std::vector<int> trace_chain(const SwitchSchedule& s, int edge_gadget, const std::string& port);

}  // namespace ivc2
