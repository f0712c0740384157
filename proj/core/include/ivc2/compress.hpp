#pragma once

#include "ivc2/chain.hpp"
#include "ivc2/gadgets.hpp"

#include <optional>
#include <utility>

namespace ivc2 {

// Port cases: 1 both ends arrive, 2 arrival then departure, 3 departure then arrival.
struct CompressPlacement {
  int port_case = 1;
  Coord distance;
  std::size_t j = 0;           // 3-blocks between the two ends
  bool in_paper_range = true;  // distance inside the lemma's interval for this j
  ChainLayout layout;          // first end at 0, second at distance
};

// Half-open (lo, hi] interval the lemma states for case c and j.
std::pair<Coord, Coord> paper_range(int port_case, std::size_t j);

std::optional<CompressPlacement> compress_with_j(const Coord& distance, int port_case, std::size_t j);

// Smallest j whose stated range contains the distance and which can be realized;
// falls back to the smallest realizable j when no stated range applies.
CompressPlacement compress_placement(const Coord& distance, int port_case);

GadgetInstance realize(const CompressPlacement& placement, int x, const Naming& naming = {});

// The lemma only promises ends more than 2 apart, so the validator relaxes the
// reduction-wide spacing rule to that.
ValidationOptions compress_validation_options();

}  // namespace ivc2
