#include "ivc2/chain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ivc2 {

namespace {

const Coord kEighth(1, 8);

using Shape = std::pair<Coord, Coord>;

const std::vector<Shape>& symmetric_shapes() {
  static const std::vector<Shape> s = {{Coord(1), Coord(1)},
                                       {Coord(7, 8), Coord(7, 8)},
                                       {Coord(3, 4), Coord(3, 4)},
                                       {Coord(5, 8), Coord(5, 8)}};
  return s;
}

ThreeBlockGeom geom(const Coord& left, const Shape& s) { return {left, s.first, s.second}; }

}  // namespace

const std::vector<std::pair<Coord, Coord>>& block_shapes() {
  static const std::vector<Shape> all = [] {
    std::vector<Shape> out = symmetric_shapes();
    std::vector<Shape> rest;
    for (int u = 1; u <= 8; ++u)
      for (int v = 1; v <= 8; ++v)
        if (u + v > 8 && u != v) rest.push_back({Coord(u, 8), Coord(v, 8)});
    std::stable_sort(rest.begin(), rest.end(), [](const Shape& a, const Shape& b) {
      if (a.first + a.second != b.first + b.second) return a.first + a.second > b.first + b.second;
      return a.first > b.first;
    });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }();
  return all;
}

std::optional<Coord> link_position(const ThreeBlockGeom& a, const ThreeBlockGeom& b) {
  if (b.left <= a.right()) return std::nullopt;
  auto ok = [&](const Coord& q) {
    return q > a.b2() + 1 && q <= a.right() && q + 1 >= b.left && q + 1 < b.b2();
  };
  Coord q1 = b.left - 1;
  if (ok(q1)) return q1;
  Coord q2 = a.b2() + 1 + kEighth;
  if (ok(q2)) return q2;
  return std::nullopt;
}

bool port_fits(const ThreeBlockGeom& g, PortKind kind, const Coord& anchor) {
  if (kind == PortKind::ArriveIn) return anchor >= g.left && anchor < g.b2();
  return anchor > g.b2() + 1 && anchor <= g.right();
}

std::string check_layout(const ChainLayout& l) {
  if (l.blocks.empty()) return "empty chain";
  if (l.links.size() + 1 != l.blocks.size()) return "link count mismatch";
  for (std::size_t i = 0; i < l.blocks.size(); ++i) {
    const auto& g = l.blocks[i];
    if (g.u <= 0 || g.v <= 0 || g.u > 1 || g.v > 1 || g.u + g.v <= 1)
      return "3-block " + std::to_string(i + 1) + " is not a 3-block";
    if (!on_eighth_grid(g.left) || !on_eighth_grid(g.u) || !on_eighth_grid(g.v)) return "off-grid 3-block";
    if (i + 1 < l.blocks.size()) {
      auto q = link_position(g, l.blocks[i + 1]);
      if (!q) return "no valid link between 3-blocks " + std::to_string(i + 1) + " and " + std::to_string(i + 2);
      if (*q != l.links[i]) {
        // any valid link is fine, recheck the stored one directly
        const auto& a = g;
        const auto& b = l.blocks[i + 1];
        const Coord& s = l.links[i];
        if (!(s > a.b2() + 1 && s <= a.right() && s + 1 >= b.left && s + 1 < b.b2()))
          return "link " + std::to_string(i + 1) + " touches the wrong blocks";
      }
    }
  }
  for (const auto& p : l.ports) {
    if (p.block >= l.blocks.size()) return "port on missing 3-block";
    if (!port_fits(l.blocks[p.block], p.kind, p.anchor))
      return "port anchor " + decimal(p.anchor) + " does not land in 3-block " + std::to_string(p.block + 1);
  }
  return {};
}

ChainLayout standard_chain(const Coord& anchor, std::size_t m, const std::vector<PortSpec>& ports) {
  ChainLayout l;
  for (std::size_t i = 0; i < m; ++i) l.blocks.push_back({anchor + Coord(4 * static_cast<std::int64_t>(i))});
  for (std::size_t i = 0; i + 1 < m; ++i) l.links.push_back(l.blocks[i].left + 3);
  for (const auto& p : ports) l.ports.push_back({p.kind, p.block, l.blocks.at(p.block).left + p.offset});
  return l;
}

namespace {

PitchRange pitch_range(const Shape& s, const Shape& s2) {
  static std::map<std::pair<Shape, Shape>, PitchRange> cache;
  auto key = std::make_pair(s, s2);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  PitchRange r;
  for (std::int64_t e = 8; e <= 48; ++e) {
    Coord p(e, 8);
    if (link_position(geom(Coord(0), s), geom(p, s2))) {
      if (r.empty) r.lo = p;
      r.hi = p;
      r.empty = false;
    }
  }
  cache[key] = r;
  return r;
}

std::vector<Coord> offsets_for(PortKind kind, const Shape& s) {
  std::vector<Coord> out;
  if (kind == PortKind::ArriveIn) {
    for (Coord o(0); o < s.first; o += kEighth) out.push_back(o);
  } else {
    for (Coord o = s.first + s.second + 1; o > s.first + 1; o -= kEighth) out.push_back(o);
  }
  return out;
}

Shape shape_of(const ThreeBlockGeom& g) { return {g.u, g.v}; }

struct Router {
  std::vector<std::pair<PortKind, Coord>> ports;
  std::size_t max_blocks;
  std::optional<Coord> end;
  std::vector<ThreeBlockGeom> blocks;
  std::vector<ChainPort> placed;
  std::set<std::tuple<std::size_t, Coord, Coord, Coord, bool, std::size_t>> failed;
  std::size_t budget = 200000;

  bool last_has_leave() const {
    for (const auto& p : placed)
      if (p.block + 1 == blocks.size() && p.kind == PortKind::LeaveFrom) return true;
    return false;
  }

  bool go(std::size_t k) {
    if (k == ports.size()) return true;
    if (budget == 0) return false;
    --budget;
    const ThreeBlockGeom last = blocks.back();
    const Shape ls = shape_of(last);
    bool has_leave = last_has_leave();
    auto key = std::make_tuple(k, last.left, last.u, last.v, has_leave, blocks.size());
    if (failed.count(key)) return false;
    auto [kind, anchor] = ports[k];

    if (kind == PortKind::LeaveFrom && !has_leave && port_fits(last, kind, anchor)) {
      placed.push_back({kind, blocks.size() - 1, anchor});
      if (go(k + 1)) return true;
      placed.pop_back();
    }

    std::set<std::tuple<Coord, Coord, Coord>> tried;
    for (const auto& tt : block_shapes()) {
      for (const auto& off : offsets_for(kind, tt)) {
        Coord target = anchor - off;
        if (!tried.insert({target, tt.first, tt.second}).second) continue;
        Coord d = target - last.left;
        bool done = false;
        for (const auto& tm : symmetric_shapes()) {
          for (std::size_t m = 1; blocks.size() + m <= max_blocks; ++m) {
            std::vector<PitchRange> rs;
            if (m == 1) {
              rs.push_back(pitch_range(ls, tt));
            } else {
              rs.push_back(pitch_range(ls, tm));
              for (std::size_t i = 0; i + 2 < m; ++i) rs.push_back(pitch_range(tm, tm));
              rs.push_back(pitch_range(tm, tt));
            }
            Coord lo(0), hi(0);
            bool bad = false;
            for (const auto& r : rs) {
              if (r.empty) bad = true;
              lo += r.lo;
              hi += r.hi;
            }
            if (bad) break;
            if (lo > d) break;
            if (hi < d) continue;
            auto pitch = distribute(rs, d);
            std::size_t saved = blocks.size();
            Coord pos = last.left;
            for (std::size_t i = 0; i < m; ++i) {
              pos += pitch[i];
              blocks.push_back(geom(pos, i + 1 == m ? tt : tm));
            }
            placed.push_back({kind, blocks.size() - 1, anchor});
            if ((!end || blocks.back().right() <= *end) && go(k + 1)) return true;
            placed.pop_back();
            blocks.resize(saved);
            done = true;
            break;
          }
          if (done) break;
        }
      }
    }
    failed.insert(key);
    return false;
  }
};

}  // namespace

std::vector<Coord> distribute(const std::vector<PitchRange>& rs, const Coord& total) {
  // largest pitches first, then shave from the back
  std::vector<Coord> pitch;
  Coord hi(0);
  for (const auto& r : rs) {
    pitch.push_back(r.hi);
    hi += r.hi;
  }
  Coord excess = hi - total;
  for (std::size_t i = pitch.size(); i-- > 0 && excess > 0;) {
    Coord cut = std::min(excess, pitch[i] - rs[i].lo);
    pitch[i] -= cut;
    excess -= cut;
  }
  return pitch;
}

PitchRange pitch_range_between(const std::pair<Coord, Coord>& a, const std::pair<Coord, Coord>& b) {
  return pitch_range(a, b);
}

std::optional<ChainLayout> route_chain(const RouteRequest& req) {
  if (req.ports.empty() || req.max_blocks == 0) return std::nullopt;
  Router r;
  r.ports = req.ports;
  std::stable_sort(r.ports.begin(), r.ports.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  r.max_blocks = req.max_blocks;
  r.end = req.end;
  auto [kind, anchor] = r.ports.front();
  bool ok = false;
  for (const auto& sh : block_shapes()) {
    std::vector<Coord> firsts;
    if (req.start) {
      firsts.push_back(*req.start);
    } else {
      for (const auto& off : offsets_for(kind, sh)) firsts.push_back(anchor - off);
    }
    for (const auto& left : firsts) {
      ThreeBlockGeom g = geom(left, sh);
      if (!port_fits(g, kind, anchor)) continue;
      if (req.end && g.right() > *req.end) continue;
      r.blocks = {g};
      r.placed = {{kind, 0, anchor}};
      if (r.go(1)) {
        ok = true;
        break;
      }
    }
    if (ok) break;
  }
  if (!ok) return std::nullopt;
  return finish_layout(r.blocks, r.placed);
}

ChainLayout finish_layout(std::vector<ThreeBlockGeom> blocks, std::vector<ChainPort> ports) {
  ChainLayout l;
  l.blocks = std::move(blocks);
  l.ports = std::move(ports);
  for (std::size_t i = 0; i + 1 < l.blocks.size(); ++i) {
    auto q = link_position(l.blocks[i], l.blocks[i + 1]);
    if (!q) throw std::logic_error("finish_layout: no link between consecutive 3-blocks");
    l.links.push_back(*q);
  }
  return l;
}

}  // namespace ivc2
