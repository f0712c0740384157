#pragma once

#include "ivc2/coord.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ivc2 {

enum class LengthClass { Short, Long, Irregular };

struct Block {
  std::string id;
  Coord left;
  Coord length = Coord(1);
  int multiplicity = 1;
  std::string tag;  // "<group>/<role>", the group names the owning gadget

  Coord right() const { return left + length; }
};

// Text before the first '/', or the whole tag.
std::string tag_group(const std::string& tag);

// Immutable after construction. Blocks are kept sorted by (left, id).
class IntervalModel {
 public:
  IntervalModel() = default;
  IntervalModel(Coord alpha, std::vector<Block> blocks);

  const Coord& alpha() const { return alpha_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  std::optional<std::size_t> index_of(const std::string& id) const;
  const Block& at(const std::string& id) const;
  LengthClass length_class(const Block& b) const;
  long long vertex_count() const;

  IntervalModel merged(const IntervalModel& other) const;
  IntervalModel translated(const Coord& dx) const;
  IntervalModel with_alpha(const Coord& alpha) const;

 private:
  Coord alpha_ = Coord(1);
  std::vector<Block> blocks_;
  std::unordered_map<std::string, std::size_t> index_;
};

class ModelBuilder {
 public:
  explicit ModelBuilder(Coord alpha = Coord(1)) : alpha_(alpha) {}
  ModelBuilder& add(Block b) {
    blocks_.push_back(std::move(b));
    return *this;
  }
  ModelBuilder& add_short(std::string id, Coord left, int mult, std::string tag);
  ModelBuilder& add_long(std::string id, Coord left, int mult, std::string tag);
  IntervalModel build() && { return IntervalModel(alpha_, std::move(blocks_)); }
  IntervalModel build() const& { return IntervalModel(alpha_, blocks_); }

 private:
  Coord alpha_;
  std::vector<Block> blocks_;
};

class TwinGraph {
 public:
  TwinGraph() = default;
  TwinGraph(std::vector<std::string> ids, std::vector<int> multiplicity,
            const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int multiplicity(std::size_t i) const { return mult_[i]; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> mult_;
  std::vector<std::vector<std::size_t>> adj_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t edge_count_ = 0;
};

// Builds graphs from id pairs; convenient for writing intended graphs by hand.
class TwinGraphBuilder {
 public:
  void node(const std::string& id, int mult);
  void edge(const std::string& a, const std::string& b);
  bool has_node(const std::string& id) const { return index_.count(id) > 0; }
  TwinGraph build() const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> mult_;
  std::unordered_map<std::string, std::size_t> index_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// Number of intervals of each node that sit in class R, aligned with node order.
struct BlockAssignment {
  std::vector<int> red;

  static BlockAssignment all_blue(const TwinGraph& g);
  BlockAssignment complemented(const TwinGraph& g) const;
};

// Nodes follow model order, so node i is model block i.
TwinGraph build_twin_graph(const IntervalModel& model);

std::set<Coord> interval_count(const IntervalModel& model);

std::int64_t cut_value(const TwinGraph& graph, const BlockAssignment& assignment);

// Vertex level expansion, used by the brute force oracle and cross checks.
struct VertexGraph {
  std::vector<std::size_t> block_of;           // vertex -> node
  std::vector<std::vector<std::size_t>> adj;   // vertex adjacency
  std::size_t size() const { return block_of.size(); }
};
VertexGraph expand(const TwinGraph& graph);
std::int64_t vertex_cut(const VertexGraph& vg, const std::vector<int>& side);

struct Violation {
  std::string check;  // "length", "structure", "spacing"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& check) const;
  std::string summary() const;
};

struct ValidationOptions {
  bool check_lengths = true;
  bool check_spacing = true;
  Coord same_type_min = Coord(3);
  Coord opposite_min = Coord(5, 2);
};

ValidationReport validate_model(const IntervalModel& model, const TwinGraph& intended,
                                const ValidationOptions& options = {});

// Only the spacing part; shared with the reduction validator.
void check_spacing(const IntervalModel& model, const ValidationOptions& options,
                   std::vector<Violation>& out);

}  // namespace ivc2
