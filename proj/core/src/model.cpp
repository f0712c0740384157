#include "ivc2/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ivc2 {

std::string tag_group(const std::string& tag) {
  auto slash = tag.find('/');
  return slash == std::string::npos ? tag : tag.substr(0, slash);
}

IntervalModel::IntervalModel(Coord alpha, std::vector<Block> blocks)
    : alpha_(alpha), blocks_(std::move(blocks)) {
  if (alpha_ <= 0) throw ModelError("alpha must be positive");
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.id < b.id;
  });
  index_.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.multiplicity < 1) throw ModelError("block '" + b.id + "' has multiplicity < 1");
    if (b.length <= 0) throw ModelError("block '" + b.id + "' has non-positive length");
    if (!index_.emplace(b.id, i).second) throw ModelError("duplicate block id '" + b.id + "'");
  }
}

std::optional<std::size_t> IntervalModel::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Block& IntervalModel::at(const std::string& id) const {
  auto i = index_of(id);
  if (!i) throw ModelError("unknown block id '" + id + "'");
  return blocks_[*i];
}

LengthClass IntervalModel::length_class(const Block& b) const {
  if (b.length == Coord(1)) return LengthClass::Short;
  if (b.length == alpha_) return LengthClass::Long;
  return LengthClass::Irregular;
}

long long IntervalModel::vertex_count() const {
  long long n = 0;
  for (const auto& b : blocks_) n += b.multiplicity;
  return n;
}

IntervalModel IntervalModel::merged(const IntervalModel& other) const {
  auto all = blocks_;
  all.insert(all.end(), other.blocks_.begin(), other.blocks_.end());
  return IntervalModel(alpha_, std::move(all));
}

IntervalModel IntervalModel::translated(const Coord& dx) const {
  auto all = blocks_;
  for (auto& b : all) b.left += dx;
  return IntervalModel(alpha_, std::move(all));
}

IntervalModel IntervalModel::with_alpha(const Coord& alpha) const {
  auto all = blocks_;
  for (auto& b : all)
    if (b.length == alpha_) b.length = alpha;
  return IntervalModel(alpha, std::move(all));
}

ModelBuilder& ModelBuilder::add_short(std::string id, Coord left, int mult, std::string tag) {
  return add(Block{std::move(id), left, Coord(1), mult, std::move(tag)});
}

ModelBuilder& ModelBuilder::add_long(std::string id, Coord left, int mult, std::string tag) {
  return add(Block{std::move(id), left, alpha_, mult, std::move(tag)});
}

TwinGraph::TwinGraph(std::vector<std::string> ids, std::vector<int> multiplicity,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : ids_(std::move(ids)), mult_(std::move(multiplicity)), adj_(ids_.size()) {
  if (ids_.size() != mult_.size()) throw ModelError("ids/multiplicity size mismatch");
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (!index_.emplace(ids_[i], i).second) throw ModelError("duplicate node id '" + ids_[i] + "'");
  for (auto [a, b] : edges) {
    if (a == b) throw ModelError("self loop on '" + ids_[a] + "'");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& l : adj_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    edge_count_ += l.size();
  }
  edge_count_ /= 2;
}

bool TwinGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::optional<std::size_t> TwinGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> TwinGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (auto b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

void TwinGraphBuilder::node(const std::string& id, int mult) {
  if (index_.count(id)) throw ModelError("duplicate intended node '" + id + "'");
  index_.emplace(id, ids_.size());
  ids_.push_back(id);
  mult_.push_back(mult);
}

void TwinGraphBuilder::edge(const std::string& a, const std::string& b) {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end())
    throw ModelError("intended edge names unknown node: " + a + " -- " + b);
  auto p = std::minmax(ia->second, ib->second);
  edges_.insert({p.first, p.second});
}

TwinGraph TwinGraphBuilder::build() const {
  return TwinGraph(ids_, mult_, {edges_.begin(), edges_.end()});
}

BlockAssignment BlockAssignment::all_blue(const TwinGraph& g) {
  return BlockAssignment{std::vector<int>(g.node_count(), 0)};
}

BlockAssignment BlockAssignment::complemented(const TwinGraph& g) const {
  BlockAssignment out{red};
  for (std::size_t i = 0; i < out.red.size(); ++i) out.red[i] = g.multiplicity(i) - red[i];
  return out;
}

TwinGraph build_twin_graph(const IntervalModel& model) {
  const auto& bl = model.blocks();
  std::vector<std::string> ids;
  std::vector<int> mult;
  ids.reserve(bl.size());
  for (const auto& b : bl) {
    ids.push_back(b.id);
    mult.push_back(b.multiplicity);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    const Coord& l = bl[i].left;
    std::size_t keep = 0;
    for (auto j : active) {
      if (bl[j].right() < l) continue;
      active[keep++] = j;
      edges.emplace_back(j, i);
    }
    active.resize(keep);
    active.push_back(i);
  }
  return TwinGraph(std::move(ids), std::move(mult), edges);
}

std::set<Coord> interval_count(const IntervalModel& model) {
  std::set<Coord> out;
  for (const auto& b : model.blocks()) out.insert(b.length);
  return out;
}

std::int64_t cut_value(const TwinGraph& graph, const BlockAssignment& a) {
  if (a.red.size() != graph.node_count()) throw ModelError("assignment does not cover the graph");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    std::int64_t m = graph.multiplicity(i), y = a.red[i];
    if (y < 0 || y > m)
      throw ModelError("assignment out of range for '" + graph.id(i) + "'");
    total += y * (m - y);
  }
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    std::int64_t mi = graph.multiplicity(i), yi = a.red[i];
    for (auto j : graph.neighbors(i)) {
      if (j <= i) continue;
      std::int64_t mj = graph.multiplicity(j), yj = a.red[j];
      total += yi * (mj - yj) + (mi - yi) * yj;
    }
  }
  return total;
}

VertexGraph expand(const TwinGraph& graph) {
  VertexGraph vg;
  std::vector<std::size_t> first(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    first[i] = vg.block_of.size();
    for (int k = 0; k < graph.multiplicity(i); ++k) vg.block_of.push_back(i);
  }
  vg.adj.resize(vg.block_of.size());
  for (std::size_t u = 0; u < vg.size(); ++u) {
    auto bu = vg.block_of[u];
    for (std::size_t v = 0; v < vg.size(); ++v) {
      if (u == v) continue;
      auto bv = vg.block_of[v];
      if (bu == bv || graph.has_edge(bu, bv)) vg.adj[u].push_back(v);
    }
  }
  return vg;
}

std::int64_t vertex_cut(const VertexGraph& vg, const std::vector<int>& side) {
  std::int64_t c = 0;
  for (std::size_t u = 0; u < vg.size(); ++u)
    for (auto v : vg.adj[u])
      if (u < v && side[u] != side[v]) ++c;
  return c;
}

std::size_t ValidationReport::count(const std::string& check) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.check == check; }));
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) os << "[" << v.check << "] " << v.message << "\n";
  return os.str();
}

namespace {

// Groups of the short blocks containing point p.
std::set<std::string> groups_at(const IntervalModel& model, const Coord& p) {
  std::set<std::string> out;
  const auto& bl = model.blocks();
  auto it = std::lower_bound(bl.begin(), bl.end(), p - 1,
                             [](const Block& b, const Coord& v) { return b.left < v; });
  for (; it != bl.end() && it->left <= p; ++it)
    if (it->length == Coord(1) && it->right() >= p) out.insert(tag_group(it->tag));
  return out;
}

}  // namespace

void check_spacing(const IntervalModel& model, const ValidationOptions& opt,
                   std::vector<Violation>& out) {
  struct End {
    Coord at;
    bool right;  // right end = arrival, left end = departure
    std::size_t block;
  };
  std::vector<End> ends;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& b = model[i];
    if (model.length_class(b) != LengthClass::Long || b.length == Coord(1)) continue;
    ends.push_back({b.left, false, i});
    ends.push_back({b.right(), true, i});
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    if (a.at != b.at) return a.at < b.at;
    return a.block < b.block;
  });
  Coord window = std::max(opt.same_type_min, opt.opposite_min);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size() && ends[j].at - ends[i].at < window; ++j) {
      const auto& a = ends[i];
      const auto& b = ends[j];
      if (a.block == b.block) continue;
      Coord d = b.at - a.at;
      const auto& ida = model[a.block].id;
      const auto& idb = model[b.block].id;
      if (a.right == b.right) {
        if (d < opt.same_type_min)
          out.push_back({"spacing", std::string(a.right ? "right" : "left") + " ends of '" + ida +
                                        "' and '" + idb + "' are " + decimal(d) + " apart (min " +
                                        decimal(opt.same_type_min) + ")"});
        continue;
      }
      // Opposite types. A departure left of (or at) an arrival is allowed.
      bool arrival_first = a.right && !b.right;
      if (!arrival_first && d > 0) continue;
      if (d >= opt.opposite_min) continue;
      if (d > 0) {
        auto ga = groups_at(model, a.at), gb = groups_at(model, b.at);
        bool shared = std::any_of(ga.begin(), ga.end(), [&](const std::string& g) { return gb.count(g) > 0; });
        if (shared) continue;
      }
      out.push_back({"spacing", "arrival of '" + model[arrival_first ? a.block : b.block].id +
                                    "' and departure of '" + model[arrival_first ? b.block : a.block].id +
                                    "' are " + decimal(d) + " apart (min " + decimal(opt.opposite_min) + ")"});
    }
  }
}

ValidationReport validate_model(const IntervalModel& model, const TwinGraph& intended,
                                const ValidationOptions& opt) {
  ValidationReport rep;
  if (opt.check_lengths) {
    for (const auto& b : model.blocks())
      if (model.length_class(b) == LengthClass::Irregular)
        rep.violations.push_back({"length", "block '" + b.id + "' has length " + decimal(b.length) +
                                                " not in {1, " + decimal(model.alpha()) + "}"});
  }

  auto real = build_twin_graph(model);
  for (std::size_t i = 0; i < real.node_count(); ++i) {
    auto j = intended.index_of(real.id(i));
    if (!j) {
      rep.violations.push_back({"structure", "unexpected block '" + real.id(i) + "'"});
    } else if (intended.multiplicity(*j) != real.multiplicity(i)) {
      rep.violations.push_back({"structure", "block '" + real.id(i) + "' has multiplicity " +
                                                 std::to_string(real.multiplicity(i)) + ", intended " +
                                                 std::to_string(intended.multiplicity(*j))});
    }
  }
  for (std::size_t j = 0; j < intended.node_count(); ++j)
    if (!real.index_of(intended.id(j)))
      rep.violations.push_back({"structure", "missing block '" + intended.id(j) + "'"});
  for (auto [a, b] : real.edges()) {
    auto ia = intended.index_of(real.id(a)), ib = intended.index_of(real.id(b));
    if (ia && ib && !intended.has_edge(*ia, *ib))
      rep.violations.push_back({"structure", "unintended edge (" + real.id(a) + ", " + real.id(b) + ")"});
  }
  for (auto [a, b] : intended.edges()) {
    auto ia = real.index_of(intended.id(a)), ib = real.index_of(intended.id(b));
    if (ia && ib && !real.has_edge(*ia, *ib))
      rep.violations.push_back({"structure", "missing edge (" + intended.id(a) + ", " + intended.id(b) + ")"});
  }

  if (opt.check_spacing) check_spacing(model, opt, rep.violations);
  return rep;
}

}  // namespace ivc2
