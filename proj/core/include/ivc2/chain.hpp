#pragma once

#include "ivc2/coord.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ivc2 {

enum class PortKind { ArriveIn, LeaveFrom };

// A 3-block with B1 at [left, left+1], B2 at [left+u, ...], B3 at [left+u+v, ...].
// u = v = 1 is the plain layout; the other shapes are the compressed blocks used by stretches.
// A shape is valid when u, v <= 1 and u + v > 1.
struct ThreeBlockGeom {
  Coord left;
  Coord u = Coord(1);
  Coord v = Coord(1);
  Coord b2() const { return left + u; }
  Coord b3() const { return left + u + v; }
  Coord right() const { return b3() + 1; }
};

// Shapes on the eighth grid, plain first, then symmetric, then the rest.
const std::vector<std::pair<Coord, Coord>>& block_shapes();

struct ChainPort {
  PortKind kind;
  std::size_t block;  // 0-based 3-block index
  Coord anchor;
};

// Geometry of a chain of 3-blocks joined by link intervals.
struct ChainLayout {
  std::vector<ThreeBlockGeom> blocks;
  std::vector<Coord> links;  // links[i] joins blocks[i] and blocks[i+1]
  std::vector<ChainPort> ports;

  Coord left() const { return blocks.front().left; }
  Coord right() const { return blocks.back().right(); }
};

// Left end of the link between two consecutive 3-blocks, if one exists.
std::optional<Coord> link_position(const ThreeBlockGeom& a, const ThreeBlockGeom& b);

// Whether a port anchor lands in B1 (arrival) or B3 (departure) without touching B2.
bool port_fits(const ThreeBlockGeom& g, PortKind kind, const Coord& anchor);

// Empty string when the layout is geometrically sound.
std::string check_layout(const ChainLayout& layout);

// Pitch-4 layout. Ports are given as (kind, 0-based block, offset from the block's left end).
struct PortSpec {
  PortKind kind;
  std::size_t block;
  Coord offset;
};
ChainLayout standard_chain(const Coord& anchor, std::size_t m, const std::vector<PortSpec>& ports);

struct RouteRequest {
  std::vector<std::pair<PortKind, Coord>> ports;  // any order
  std::optional<Coord> start;                     // left end of the first 3-block
  std::optional<Coord> end;                       // no 3-block may reach past this
  std::size_t max_blocks = 10;
};

// Eighth-grid pitches allowed between two consecutive 3-block shapes (contiguous).
struct PitchRange {
  Coord lo, hi;
  bool empty = true;
};
PitchRange pitch_range_between(const std::pair<Coord, Coord>& a, const std::pair<Coord, Coord>& b);

// Splits total into pitches, one per range, largest first.
std::vector<Coord> distribute(const std::vector<PitchRange>& ranges, const Coord& total);

// Computes the links for a list of 3-blocks.
ChainLayout finish_layout(std::vector<ThreeBlockGeom> blocks, std::vector<ChainPort> ports);

// Finds a chain carrying the given ports, preferring plain pitch-4 blocks.
std::optional<ChainLayout> route_chain(const RouteRequest& request);

}  // namespace ivc2
