#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ivc2 {

// Simple undirected graph on 0..n-1; edges stored with u < v, sorted.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  bool is_cubic() const;
  std::vector<std::vector<int>> adjacency() const;
};

// "n m" header then m lines "u v", 0-indexed. Loops and repeated edges are rejected.
SimpleGraph read_edge_list(std::istream& is);
SimpleGraph parse_edge_list(const std::string& text);
SimpleGraph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& os, const SimpleGraph& g);

SimpleGraph make_k4();
SimpleGraph make_k33();
SimpleGraph make_cube();
// Pairing model with rejection; deterministic for a given (n, seed) via std::mt19937_64.
SimpleGraph random_cubic(int n, std::uint64_t seed);

// Number of edges cut by the side vector (0/1 per vertex).
int cut_size(const SimpleGraph& g, const std::vector<int>& side);

struct GraphCut {
  int value = 0;
  std::vector<int> side;  // one optimal side vector, vertex 0 on side 0
  std::uint64_t optima = 0;  // optimal side vectors with vertex 0 on side 0
};
// Exhaustive over 2^(n-1) partitions; refuses n > 26.
GraphCut maxcut_graph(const SimpleGraph& g);

}  // namespace ivc2
