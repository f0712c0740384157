#include "ivc2/solver.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

namespace ivc2 {

FixedColors fix_by_id(const TwinGraph& graph, const std::vector<std::pair<std::string, int>>& pins) {
  FixedColors f(graph.node_count());
  for (const auto& [id, y] : pins) {
    auto i = graph.index_of(id);
    if (!i) throw ModelError("cannot fix unknown block '" + id + "'");
    if (y < 0 || y > graph.multiplicity(*i)) throw ModelError("fixed count out of range for '" + id + "'");
    f[*i] = y;
  }
  return f;
}

namespace {

FixedColors normalized(const TwinGraph& g, const FixedColors& fixed) {
  if (fixed.empty()) return FixedColors(g.node_count());
  if (fixed.size() != g.node_count()) throw ModelError("fixed colours do not match the graph");
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i] && (*fixed[i] < 0 || *fixed[i] > g.multiplicity(i)))
      throw ModelError("fixed count out of range for '" + g.id(i) + "'");
  return fixed;
}

}  // namespace

SolveResult maxcut_bruteforce(const IntervalModel& model, const FixedColors& fixed, const BruteOptions& opt) {
  return maxcut_bruteforce(build_twin_graph(model), fixed, opt);
}

SolveResult maxcut_bruteforce(const TwinGraph& g, const FixedColors& fixed_in, const BruteOptions& opt) {
  auto fixed = normalized(g, fixed_in);
  auto vg = expand(g);
  const std::size_t n = vg.size();
  if (n > opt.max_vertices || n > 30)
    throw SolverRefusal("brute force refused: " + std::to_string(n) + " vertices (limit " +
                        std::to_string(opt.max_vertices) + ")");
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : vg.adj[u]) adj[u] |= 1u << v;

  // initial side: fixed blocks get their first y vertices red
  std::uint32_t side = 0;
  std::vector<std::size_t> free;
  bool any_fixed = false;
  {
    std::vector<int> used(g.node_count(), 0);
    for (std::size_t u = 0; u < n; ++u) {
      auto b = vg.block_of[u];
      if (fixed[b]) {
        any_fixed = true;
        if (used[b]++ < *fixed[b]) side |= 1u << u;
      } else {
        free.push_back(u);
      }
    }
  }
  auto cut_of = [&](std::uint32_t s) {
    std::int64_t c = 0;
    for (std::size_t u = 0; u < n; ++u)
      if (s >> u & 1u) c += std::popcount(adj[u] & ~s);
    return c;
  };
  auto fold = [&](std::uint32_t s) {
    BlockAssignment a{std::vector<int>(g.node_count(), 0)};
    for (std::size_t u = 0; u < n; ++u)
      if (s >> u & 1u) ++a.red[vg.block_of[u]];
    return a;
  };

  // complement symmetry: the first free vertex stays blue when nothing is pinned
  std::size_t start = (!any_fixed && !free.empty()) ? 1 : 0;
  std::size_t bits = free.size() - start;
  std::int64_t cur = cut_of(side);
  std::int64_t best = cur;
  std::set<std::vector<int>> optima;
  std::uint64_t total = 1ull << bits;
  auto record = [&](std::uint32_t s, std::int64_t val) {
    if (val > best) {
      best = val;
      optima.clear();
    }
    if (val == best && (opt.enumerate || optima.empty()) && optima.size() < opt.max_optima) {
      optima.insert(fold(s).red);
      if (start == 1) optima.insert(fold(s).complemented(g).red);
    }
  };
  record(side, cur);
  for (std::uint64_t i = 1; i < total; ++i) {
    int bit = std::countr_zero(i);
    std::size_t v = free[start + bit];
    std::uint32_t vm = 1u << v;
    std::uint32_t same_mask = (side & vm) ? side : ~side;
    std::int64_t same = std::popcount(adj[v] & same_mask & ~vm);
    std::int64_t diff = std::popcount(adj[v]) - same;
    cur += same - diff;
    side ^= vm;
    record(side, cur);
  }

  SolveResult r;
  r.value = best;
  for (const auto& o : optima) r.optima.push_back(BlockAssignment{o});
  r.assignment = r.optima.front();
  r.optima_count = r.optima.size();
  r.optima_complete = opt.enumerate && optima.size() < opt.max_optima;
  if (!opt.enumerate) {
    r.optima.clear();
    r.optima_count = 0;
  }
  return r;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

struct Problem {
  std::vector<std::size_t> nodes;          // free nodes, in order
  std::vector<std::int64_t> m, lin;        // multiplicity, linear coefficient
  std::vector<std::vector<std::size_t>> back;  // earlier free neighbours (positions)
  std::vector<std::size_t> last;           // last position of a later neighbour, or own position
  std::int64_t constant = 0;
};

Problem prepare(const TwinGraph& g, const FixedColors& fixed) {
  Problem p;
  std::vector<long> pos(g.node_count(), -1);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (fixed[i]) {
      std::int64_t m = g.multiplicity(i), y = *fixed[i];
      p.constant += y * (m - y);
      continue;
    }
    pos[i] = static_cast<long>(p.nodes.size());
    p.nodes.push_back(i);
    p.m.push_back(g.multiplicity(i));
  }
  p.lin.assign(p.nodes.size(), 0);
  p.back.resize(p.nodes.size());
  p.last.resize(p.nodes.size());
  for (std::size_t k = 0; k < p.nodes.size(); ++k) p.last[k] = k;
  for (auto [a, b] : g.edges()) {
    if (fixed[a] && fixed[b]) {
      std::int64_t ma = g.multiplicity(a), ya = *fixed[a], mb = g.multiplicity(b), yb = *fixed[b];
      p.constant += ya * (mb - yb) + (ma - ya) * yb;
    } else if (fixed[a] || fixed[b]) {
      auto f = fixed[a] ? a : b;
      auto v = fixed[a] ? b : a;
      std::int64_t mf = g.multiplicity(f), yf = *fixed[f], mv = g.multiplicity(v);
      p.lin[pos[v]] += mf - 2 * yf;
      p.constant += mv * yf;
    } else {
      auto pa = static_cast<std::size_t>(pos[a]), pb = static_cast<std::size_t>(pos[b]);
      if (pa > pb) std::swap(pa, pb);
      p.back[pb].push_back(pa);
      p.last[pa] = std::max(p.last[pa], pb);
    }
  }
  return p;
}

}  // namespace

std::size_t twin_width(const TwinGraph& g, const FixedColors& fixed_in) {
  auto fixed = normalized(g, fixed_in);
  auto p = prepare(g, fixed);
  std::size_t width = 0;
  std::vector<std::size_t> frontier;
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    width = std::max(width, frontier.size() + 1);
    frontier.push_back(k);
    std::erase_if(frontier, [&](std::size_t j) { return p.last[j] <= k; });
  }
  return width;
}

SolveResult maxcut_twin_exact(const TwinGraph& g, const FixedColors& fixed_in, const TwinOptions& opt) {
  auto fixed = normalized(g, fixed_in);
  auto p = prepare(g, fixed);
  const std::size_t N = p.nodes.size();

  struct Pred {
    std::uint32_t prev;
    int y;
  };
  struct Entry {
    std::int64_t best;
    std::uint64_t ways;
    std::vector<Pred> preds;
  };
  struct Layer {
    std::vector<std::size_t> frontier;  // positions, after processing
    std::vector<std::vector<int>> states;
    std::vector<Entry> entries;
  };
  std::vector<Layer> layers;
  layers.reserve(N + 1);
  layers.push_back(Layer{{}, {{}}, {Entry{0, 1, {}}}});

  for (std::size_t k = 0; k < N; ++k) {
    const Layer& prev = layers.back();
    if (prev.frontier.size() + 1 > opt.max_width)
      throw SolverRefusal("twin DP refused: frontier width " + std::to_string(prev.frontier.size() + 1) +
                          " exceeds " + std::to_string(opt.max_width) + " at block '" + g.id(p.nodes[k]) + "'");
    std::vector<std::size_t> next_frontier;
    std::vector<int> keep_slot;  // slot in prev frontier, or -1 for the current block
    for (std::size_t s = 0; s < prev.frontier.size(); ++s)
      if (p.last[prev.frontier[s]] > k) {
        next_frontier.push_back(prev.frontier[s]);
        keep_slot.push_back(static_cast<int>(s));
      }
    if (p.last[k] > k) {
      next_frontier.push_back(k);
      keep_slot.push_back(-1);
    }
    // neighbours of k among the previous frontier slots
    std::vector<std::size_t> nb_slots;
    for (std::size_t s = 0; s < prev.frontier.size(); ++s)
      if (std::find(p.back[k].begin(), p.back[k].end(), prev.frontier[s]) != p.back[k].end()) nb_slots.push_back(s);
    if (nb_slots.size() != p.back[k].size())
      throw SolverRefusal("twin DP refused: node order is not an elimination order at '" + g.id(p.nodes[k]) + "'");

    Layer next;
    next.frontier = next_frontier;
    std::unordered_map<std::vector<int>, std::uint32_t, VecHash> index;
    const std::int64_t mk = p.m[k];
    std::vector<int> key(next_frontier.size());
    for (std::uint32_t si = 0; si < prev.states.size(); ++si) {
      const auto& st = prev.states[si];
      const auto& e = prev.entries[si];
      std::int64_t a = 0, bq = 0;  // gain = y*(mk - y) + lin*y + sum(yj*mk + mj*y - 2*yj*y)
      for (auto s : nb_slots) {
        std::int64_t yj = st[s], mj = p.m[prev.frontier[s]];
        a += yj * mk;
        bq += mj - 2 * yj;
      }
      for (int y = 0; y <= mk; ++y) {
        std::int64_t gain = y * (mk - y) + p.lin[k] * y + a + bq * y;
        std::int64_t val = e.best + gain;
        for (std::size_t t = 0; t < keep_slot.size(); ++t) key[t] = keep_slot[t] < 0 ? y : st[keep_slot[t]];
        auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(next.states.size()));
        if (inserted) {
          if (next.states.size() >= opt.max_states)
            throw SolverRefusal("twin DP refused: more than " + std::to_string(opt.max_states) + " states");
          next.states.push_back(key);
          next.entries.push_back(Entry{val, e.ways, {{si, y}}});
          continue;
        }
        auto& ne = next.entries[it->second];
        if (val > ne.best) {
          ne.best = val;
          ne.ways = e.ways;
          ne.preds.assign(1, {si, y});
        } else if (val == ne.best) {
          ne.ways = (ne.ways > UINT64_MAX - e.ways) ? UINT64_MAX : ne.ways + e.ways;
          ne.preds.push_back({si, y});
        }
      }
    }
    layers.push_back(std::move(next));
  }

  const Layer& fin = layers.back();
  if (fin.states.size() != 1) throw std::logic_error("twin DP: final layer not collapsed");
  SolveResult r;
  r.value = fin.entries[0].best + p.constant;
  r.optima_count = fin.entries[0].ways;

  BlockAssignment base{std::vector<int>(g.node_count(), 0)};
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (fixed[i]) base.red[i] = *fixed[i];
  std::size_t limit = opt.enumerate ? opt.max_optima : 1;
  std::vector<int> ys(N, 0);
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t layer, std::uint32_t si) {
    if (r.optima.size() >= limit) return;
    if (layer == 0) {
      BlockAssignment a = base;
      for (std::size_t k = 0; k < N; ++k) a.red[p.nodes[k]] = ys[k];
      r.optima.push_back(std::move(a));
      return;
    }
    for (const auto& pr : layers[layer].entries[si].preds) {
      ys[layer - 1] = pr.y;
      walk(layer - 1, pr.prev);
      if (r.optima.size() >= limit) return;
    }
  };
  walk(N, 0);
  r.assignment = r.optima.front();
  r.optima_complete = opt.enumerate && r.optima_count <= opt.max_optima;
  if (!opt.enumerate) r.optima.clear();
  return r;
}

}  // namespace ivc2
