#include "ivc2/template_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <set>

namespace ivc2 {

std::string area_name(Area a) {
  switch (a) {
    case Area::ZoneI: return "zone i";
    case Area::Buffer: return "buffer(i,i+1)";
    case Area::ZoneNext: return "zone i+1";
    case Area::NextBuffer: return "buffer(i+1,i+2)";
  }
  return "?";
}

Coord to_lane(const AreaPoint& p) {
  switch (p.area) {
    case Area::ZoneI: return p.x - kLaneZoneWidth;
    case Area::Buffer: return p.x;
    case Area::ZoneNext: return p.x + kLaneBufferWidth;
    case Area::NextBuffer: return p.x + kLanePitch;
  }
  return p.x;
}

namespace {

Coord c(double v) { return Coord(std::llround(v * 8), 8); }

std::vector<AreaPoint> pts(Area a, std::initializer_list<double> xs) {
  std::vector<AreaPoint> out;
  for (double x : xs) out.push_back({a, c(x)});
  return out;
}

std::vector<AreaPoint> cat(std::vector<AreaPoint> a, const std::vector<AreaPoint>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

using A = Area;
using K = GadgetKind;

std::vector<LiteralEntry> make_literal() {
  std::vector<LiteralEntry> t;
  t.push_back({2, "blue-stretch", K::Stretch, {{A::ZoneI, c(0), c(32)}, {A::Buffer, c(0), c(3)}},
               pts(A::ZoneI, {0, 4, 8}), cat(pts(A::ZoneI, {3, 7}), pts(A::Buffer, {3}))});
  t.push_back({2, "red-stretch", K::Stretch, {{A::Buffer, c(4), c(21)}, {A::ZoneNext, c(0), c(11)}},
               pts(A::ZoneNext, {0, 4, 8}), cat(pts(A::Buffer, {6.5}), pts(A::ZoneNext, {3, 7}))});
  t.push_back({3, "switch1", K::Switch, {{A::Buffer, c(0), c(9)}}, pts(A::Buffer, {0, 3.5}),
               pts(A::Buffer, {5.5, 9})});
  t.push_back({3, "red-stretch", K::Stretch, {{A::Buffer, c(10), c(21)}, {A::ZoneNext, c(0), c(7)}},
               pts(A::ZoneNext, {0, 4}), cat(pts(A::Buffer, {12.5}), pts(A::ZoneNext, {3}))});
  t.push_back({4, "switch2", K::Switch, {{A::Buffer, c(6), c(15)}}, pts(A::Buffer, {6, 9.5}),
               pts(A::Buffer, {11.5, 15})});
  t.push_back({4, "inverter1", K::Inverter, {{A::Buffer, c(2.5), c(5.5)}}, pts(A::Buffer, {2.5}),
               pts(A::Buffer, {4.5})});
  t.push_back({4, "red-stretch", K::Stretch, {{A::Buffer, c(16), c(21)}, {A::ZoneNext, c(0), c(3)}},
               pts(A::Buffer, {21}), pts(A::Buffer, {18})});
  t.push_back({5, "inverter2", K::Inverter, {{A::Buffer, c(8.5), c(11.5)}}, pts(A::Buffer, {8.5}),
               pts(A::Buffer, {10.5})});
  t.push_back({5, "switch3", K::Switch, {{A::Buffer, c(12), c(21)}}, pts(A::Buffer, {12, 15.5}),
               pts(A::Buffer, {17.5, 21})});
  t.push_back({5, "red-link", K::Link, {{A::Buffer, c(2), c(5)}}, pts(A::Buffer, {2}), pts(A::Buffer, {5})});
  t.push_back({6, "blue-link", K::Link, {{A::Buffer, c(18), c(21)}}, pts(A::Buffer, {18}),
               pts(A::Buffer, {21})});
  t.push_back({6, "inverter3", K::Inverter, {{A::Buffer, c(14.5), c(17.5)}}, pts(A::Buffer, {14.5}),
               pts(A::Buffer, {16.5})});
  t.push_back({6, "red-stretch", K::Stretch, {{A::Buffer, c(2), c(13.5)}}, pts(A::Buffer, {2, 7.5}),
               pts(A::Buffer, {10.5, 13.5})});
  t.push_back({7, "blue-stretch", K::Stretch,
               {{A::Buffer, c(18), c(21)}, {A::ZoneNext, c(0), c(32)}, {A::NextBuffer, c(0), c(3)}},
               pts(A::Buffer, {18}), pts(A::NextBuffer, {3})});
  t.push_back({7, "red-stretch", K::Stretch, {{A::Buffer, c(7.5), c(16.5)}}, pts(A::Buffer, {7.5, 10.5, 14}),
               pts(A::Buffer, {10, 13, 16.5})});
  t.push_back({8, "red-stretch", K::Stretch, {{A::Buffer, c(7), c(21)}, {A::ZoneNext, c(0), c(11)}},
               pts(A::Buffer, {7, 10, 13.5}), pts(A::ZoneNext, {3, 7, 11})});
  return t;
}

TemplateEntry entry(int step, std::string role, K kind, bool blue, double lo, double hi,
                    std::initializer_list<double> arr, std::initializer_list<double> lv) {
  TemplateEntry e{step, std::move(role), kind, blue, c(lo), c(hi), {}};
  for (double a : arr) e.ports.push_back({PortKind::ArriveIn, c(a)});
  for (double l : lv) e.ports.push_back({PortKind::LeaveFrom, c(l)});
  return e;
}

std::vector<TemplateEntry> make_template() {
  std::vector<TemplateEntry> t;
  t.push_back(entry(1, "blue-stretch", K::Stretch, true, -32, 3, {-32, -28, -24}, {-29, -25, 3}));
  t.push_back(entry(1, "red-stretch", K::Stretch, false, 4, 32, {21, 25, 29}, {6.5, 24, 28}));
  t.push_back(entry(2, "switch1", K::Switch, true, 0, 9, {0, 3.5}, {5.5, 9}));
  t.push_back(entry(2, "red-stretch", K::Stretch, false, 10, 28, {21, 25}, {12.5, 24}));
  t.push_back(entry(3, "switch2", K::Switch, true, 6, 15, {6, 9.5}, {11.5, 15}));
  t.push_back(entry(3, "inverter1", K::Inverter, false, 2.5, 5.5, {2.5}, {4.5}));
  t.push_back(entry(3, "red-stretch", K::Stretch, false, 16, 24, {21}, {18.5}));
  t.push_back(entry(4, "inverter2", K::Inverter, false, 8.5, 11.5, {8.5}, {10.5}));
  t.push_back(entry(4, "switch3", K::Switch, true, 12, 21, {12, 15.5}, {17.5, 21}));
  t.push_back(entry(4, "red-link", K::Link, false, 1.5, 4.5, {1.5}, {4.5}));
  t.push_back(entry(5, "blue-link", K::Link, true, 18, 21, {18}, {21}));
  t.push_back(entry(5, "inverter3", K::Inverter, false, 14.5, 17.5, {14.5}, {16.5}));
  t.push_back(entry(5, "red-stretch", K::Stretch, false, 1.5, 13.5, {1.5, 7.5}, {10.5, 13.5}));
  t.push_back(entry(6, "blue-stretch", K::Stretch, true, 18, 56, {18}, {56}));
  t.push_back(entry(6, "red-stretch", K::Stretch, false, 7.5, 16.5, {7.5, 10.5, 13.5}, {10, 13, 16.5}));
  t.push_back(entry(7, "red-stretch", K::Stretch, false, 7, 32, {7, 10, 13.5}, {24, 28, 32}));
  return t;
}

std::vector<Coord> of_kind(const std::vector<std::pair<PortKind, Coord>>& ports, PortKind k) {
  std::vector<Coord> out;
  for (const auto& [kind, x] : ports)
    if (kind == k) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::string list(const std::vector<Coord>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + decimal(xs[i]);
  return s + "}";
}

bool is_chain(K k) { return k == K::Stretch || k == K::Link || k == K::Vertex; }

ChainLayout shifted(ChainLayout l, const Coord& s) {
  for (auto& b : l.blocks) b.left += s;
  for (auto& q : l.links) q += s;
  for (auto& p : l.ports) p.anchor += s;
  return l;
}

}  // namespace

std::vector<Coord> TemplateEntry::arrivals() const { return of_kind(ports, PortKind::ArriveIn); }
std::vector<Coord> TemplateEntry::leaves() const { return of_kind(ports, PortKind::LeaveFrom); }

const std::vector<LiteralEntry>& literal_table() {
  static const std::vector<LiteralEntry> t = make_literal();
  return t;
}

const std::vector<TemplateEntry>& switching_template() {
  static const std::vector<TemplateEntry> t = make_template();
  return t;
}

const TemplateEntry& template_entry(int step, const std::string& role) {
  for (const auto& e : switching_template())
    if (e.step == step && e.role == role) return e;
  throw ModelError("no template entry '" + role + "' at step " + std::to_string(step));
}

ChainLayout route_in_region(const std::vector<std::pair<PortKind, Coord>>& ports, const Coord& lo,
                            const Coord& hi) {
  auto l = route_chain(RouteRequest{ports, lo, hi, 10});
  if (!l) throw ModelError("no chain carries ports " + list(of_kind(ports, PortKind::ArriveIn)) + "/" +
                           list(of_kind(ports, PortKind::LeaveFrom)) + " from " + decimal(lo));
  if (l->right() > hi)
    throw ModelError("chain from " + decimal(lo) + " ends at " + decimal(l->right()) + ", past " + decimal(hi));
  return *l;
}

namespace {

// Routing is deterministic, so each region/port set is solved once.
ChainLayout cached_layout(const TemplateEntry& e) {
  static std::mutex mu;
  static std::map<std::tuple<Coord, Coord, std::vector<std::pair<PortKind, Coord>>>, ChainLayout> cache;
  auto key = std::make_tuple(e.lo, e.hi, e.ports);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, route_in_region(e.ports, e.lo, e.hi)).first;
  return it->second;
}

}  // namespace

GadgetInstance build_template_gadget(const TemplateEntry& e, const Coord& shift, int x, int x_prime,
                                     const Naming& naming) {
  GadgetInstance g;
  if (e.kind == K::Switch) {
    g = make_switch_gadget(e.lo + shift, x, x_prime, naming);
  } else if (e.kind == K::Inverter) {
    g = make_inverter(e.lo + shift, x, naming);
  } else {
    g = make_chain_gadget(shifted(cached_layout(e), shift), x, e.kind, naming);
  }
  std::vector<std::pair<PortKind, Coord>> got;
  for (const auto& p : g.ports) got.push_back({p.kind, p.anchor - shift});
  if (of_kind(got, PortKind::ArriveIn) != e.arrivals() || of_kind(got, PortKind::LeaveFrom) != e.leaves())
    throw ModelError("template gadget '" + e.role + "' at step " + std::to_string(e.step) +
                     " does not reproduce its ports");
  return g;
}

std::vector<TableIssue> literal_table_issues() {
  std::vector<TableIssue> out;
  const auto& lit = literal_table();
  auto lane_list = [](const std::vector<AreaPoint>& ps) {
    std::vector<Coord> v;
    for (const auto& p : ps) v.push_back(to_lane(p));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto span = [](const LiteralEntry& e) {
    Coord lo = to_lane({e.pieces.front().area, e.pieces.front().lo});
    Coord hi = to_lane({e.pieces.front().area, e.pieces.front().hi});
    for (const auto& p : e.pieces) {
      lo = std::min(lo, to_lane({p.area, p.lo}));
      hi = std::max(hi, to_lane({p.area, p.hi}));
    }
    return std::make_pair(lo, hi);
  };

  // arrivals at each buffer, lane coordinates
  std::map<int, std::set<Coord>> arrivals_at, leaves_at;
  for (const auto& e : lit) {
    for (auto u : lane_list(e.arrivals)) arrivals_at[e.buffer].insert(u);
    for (auto u : lane_list(e.leaves)) leaves_at[e.buffer].insert(u);
  }
  auto in_zone = [](const Coord& u) { return u <= 0 || (u >= kLaneBufferWidth && u <= kLanePitch); };

  for (const auto& e : lit) {
    auto [lo, hi] = span(e);
    auto arr = lane_list(e.arrivals), lv = lane_list(e.leaves);
    for (const auto& u : arr)
      if (e.buffer > 2 && !leaves_at[e.buffer - 1].count(u + 3) && !in_zone(u))
        out.push_back({e.buffer, e.role, "arrival at " + decimal(u) + " has no departure at " + decimal(u + 3) +
                                             " in the previous buffer"});
    for (const auto& u : lv)
      if (e.buffer < 8 && !arrivals_at[e.buffer + 1].count(u - 3) && !in_zone(u - 3))
        out.push_back({e.buffer, e.role, "departure at " + decimal(u) + " has no arrival at " + decimal(u - 3) +
                                             " in the next buffer"});
    if (is_chain(e.kind)) {
      std::vector<std::pair<PortKind, Coord>> ports;
      for (auto u : arr) ports.push_back({PortKind::ArriveIn, u});
      for (auto u : lv) ports.push_back({PortKind::LeaveFrom, u});
      try {
        route_in_region(ports, lo, hi);
      } catch (const ModelError& err) {
        out.push_back({e.buffer, e.role, std::string("not buildable: ") + err.what()});
      }
    }
    const TemplateEntry* used = nullptr;
    for (const auto& t : switching_template())
      if (t.step == e.buffer - 1 && t.role == e.role) used = &t;
    if (!used) {
      out.push_back({e.buffer, e.role, "no counterpart in the layout used"});
      continue;
    }
    if (lo != used->lo || hi != used->hi)
      out.push_back({e.buffer, e.role, "region [" + decimal(lo) + "," + decimal(hi) + "] replaced by [" +
                                           decimal(used->lo) + "," + decimal(used->hi) + "]"});
    if (arr != used->arrivals())
      out.push_back({e.buffer, e.role, "arrivals " + list(arr) + " replaced by " + list(used->arrivals())});
    if (lv != used->leaves())
      out.push_back({e.buffer, e.role, "departures " + list(lv) + " replaced by " + list(used->leaves())});
  }
  return out;
}

}  // namespace ivc2
