#include "ivc2/cubic_graph.hpp"

#include "ivc2/coord.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace ivc2 {

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool SimpleGraph::is_cubic() const {
  if (n == 0) return false;
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> a(n);
  for (auto [u, v] : edges) {
    a[u].push_back(v);
    a[v].push_back(u);
  }
  for (auto& l : a) std::sort(l.begin(), l.end());
  return a;
}

namespace {

SimpleGraph finish(int n, std::vector<std::pair<int, int>> e) {
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : e) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ModelError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw ModelError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ModelError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  std::sort(e.begin(), e.end());
  return SimpleGraph{n, std::move(e)};
}

}  // namespace

SimpleGraph read_edge_list(std::istream& is) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> e;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ModelError("line " + std::to_string(lineno) + ": expected two integers");
    std::string rest;
    if (ls >> rest) throw ModelError("line " + std::to_string(lineno) + ": trailing text '" + rest + "'");
    if (n < 0) {
      if (a < 0 || b < 0) throw ModelError("negative header");
      n = a;
      m = b;
    } else {
      e.push_back({a, b});
    }
  }
  if (n < 0) throw ModelError("missing 'n m' header");
  if (static_cast<int>(e.size()) != m)
    throw ModelError("header promises " + std::to_string(m) + " edges, found " + std::to_string(e.size()));
  return finish(n, std::move(e));
}

SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

SimpleGraph load_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ModelError("cannot open '" + path + "'");
  return read_edge_list(f);
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << g.n << ' ' << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) os << u << ' ' << v << "\n";
}

SimpleGraph make_k4() { return finish(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

SimpleGraph make_k33() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.push_back({a, b});
  return finish(6, std::move(e));
}

SimpleGraph make_cube() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) e.push_back({v, v | bit});
  return finish(8, std::move(e));
}

SimpleGraph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2) throw ModelError("a cubic graph needs an even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> e;
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
      ok = u != v && e.insert({u, v}).second;
    }
    if (ok) return finish(n, {e.begin(), e.end()});
  }
  throw ModelError("random_cubic: no simple pairing found");
}

int cut_size(const SimpleGraph& g, const std::vector<int>& side) {
  int c = 0;
  for (auto [u, v] : g.edges) c += side.at(u) != side.at(v);
  return c;
}

GraphCut maxcut_graph(const SimpleGraph& g) {
  if (g.n > 26) throw ModelError("maxcut_graph: " + std::to_string(g.n) + " vertices is too many");
  GraphCut best;
  best.side.assign(g.n, 0);
  if (g.n == 0) {
    best.optima = 1;
    return best;
  }
  const std::uint64_t total = std::uint64_t(1) << (g.n - 1);
  std::vector<int> side(g.n, 0);
  bool first = true;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 1; v < g.n; ++v) side[v] = (mask >> (v - 1)) & 1;
    int c = cut_size(g, side);
    if (first || c > best.value) {
      best.value = c;
      best.side = side;
      best.optima = 1;
      first = false;
    } else if (c == best.value) {
      ++best.optima;
    }
  }
  return best;
}

}  // namespace ivc2
