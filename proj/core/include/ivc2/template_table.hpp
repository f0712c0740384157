#pragma once

#include "ivc2/chain.hpp"
#include "ivc2/coord.hpp"
#include "ivc2/gadgets.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ivc2 {

// Where a printed coordinate lives, relative to the swap between vertex i and i+1.
enum class Area { ZoneI, Buffer, ZoneNext, NextBuffer };
std::string area_name(Area a);

struct AreaPoint {
  Area area;
  Coord x;
};

struct AreaPiece {
  Area area;
  Coord lo, hi;
};

// Lane coordinate: buffer(i,i+1) local, so zone i is [-32,0], zone i+1 is [21,53],
// buffer(i+1,i+2) starts at 53. A long leaving at u arrives at u-3 one phase later.
Coord to_lane(const AreaPoint& p);
constexpr int kLaneZoneWidth = 32;
constexpr int kLaneBufferWidth = 21;
constexpr int kLanePitch = 53;

// One gadget of the nine-buffer layout exactly as printed.
struct LiteralEntry {
  int buffer = 0;  // 1..9
  std::string role;
  GadgetKind kind = GadgetKind::Stretch;
  std::vector<AreaPiece> pieces;
  std::vector<AreaPoint> arrivals;
  std::vector<AreaPoint> leaves;
};
const std::vector<LiteralEntry>& literal_table();

// Buffers 1 and 9 are empty; buffer b is step b-1 of a switching procedure.
struct TemplateEntry {
  int step = 0;  // 1..7
  std::string role;
  GadgetKind kind = GadgetKind::Stretch;
  bool blue = false;  // carries the moving chain
  Coord lo, hi;       // region in lane coordinates
  std::vector<std::pair<PortKind, Coord>> ports;

  std::vector<Coord> arrivals() const;
  std::vector<Coord> leaves() const;
};

// The layout actually used. Differs from the printed one where the printed
// coordinates do not chain together; see literal_table_issues().
const std::vector<TemplateEntry>& switching_template();
const TemplateEntry& template_entry(int step, const std::string& role);

struct TableIssue {
  int buffer = 0;
  std::string role;
  std::string message;
};
// Every place where the printed table disagrees with itself or cannot be built,
// plus each difference from switching_template().
std::vector<TableIssue> literal_table_issues();

// Builds a template gadget at lane offset `shift` (global = lane + shift).
// Chains are routed with route_chain starting at the region's left end.
GadgetInstance build_template_gadget(const TemplateEntry& e, const Coord& shift, int x, int x_prime,
                                     const Naming& naming);

// Chain layout for the given ports starting at `lo` and staying within [lo, hi].
ChainLayout route_in_region(const std::vector<std::pair<PortKind, Coord>>& ports, const Coord& lo,
                            const Coord& hi);

}  // namespace ivc2
