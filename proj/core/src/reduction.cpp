#include "ivc2/reduction.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ivc2 {

void check_params(const ReductionParams& p) {
  if (p.n < 4 || p.n % 2) throw ModelError("need an even n >= 4 (got " + std::to_string(p.n) + ")");
  if (p.x < 1 || p.x_prime < 1 || p.k < 1) throw ModelError("x, x' and k must be positive");
  if (!(p.x < 2 * p.x_prime && p.x_prime < p.x))
    throw ModelError("need x/2 < x' < x (got x=" + std::to_string(p.x) + ", x'=" + std::to_string(p.x_prime) + ")");
}

namespace {

std::int64_t floor_div(const Coord& a, std::int64_t d) {
  std::int64_t num = a.numerator(), den = a.denominator() * d;
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

ZoneMap::ZoneMap(int n) : n_(n) {
  if (n < 4 || n % 2) throw ModelError("zones need an even n >= 4 (got " + std::to_string(n) + ")");
}

Span ZoneMap::zone(int i, std::int64_t j) const {
  Coord lo = Coord(53 * i) + phase() * j;
  return {lo, lo + 32};
}

Span ZoneMap::buffer(int i, std::int64_t j) const {
  Coord lo = Coord(53 * i + 32) + phase() * j;
  return {lo, lo + 21};
}

ZoneMap::Location ZoneMap::locate(const Coord& x) const {
  Location loc;
  loc.phase = floor_div(x, 53 * n_);
  Coord r = x - phase() * loc.phase;
  loc.index = static_cast<int>(floor_div(r, 53));
  Coord off = r - 53 * loc.index;
  if (off <= 32) {
    loc.in_zone = true;
    loc.offset = off;
  } else {
    loc.offset = off - 32;
  }
  return loc;
}

Coord ZoneMap::zone_point(int v, std::int64_t j, const Coord& z) const { return zone(v, j).lo + z; }

Coord ZoneMap::lane_point(int i, std::int64_t j, const Coord& u) const { return buffer(i, j).lo + u; }

ZoneMap layout_zones(int n) { return ZoneMap(n); }

std::string PlacedGadget::place() const {
  return in_zone ? "zone " + std::to_string(where)
                 : "lane " + std::to_string(where) + "-" + std::to_string(where + 1);
}

std::optional<std::size_t> SwitchSchedule::long_into(int gadget, const std::string& port) const {
  auto it = into_index.find({gadget, port});
  if (it == into_index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SwitchSchedule::long_from(int gadget, const std::string& port) const {
  auto it = from_index.find({gadget, port});
  if (it == from_index.end()) return std::nullopt;
  return it->second;
}

namespace {

// A gadget waiting to be placed in some phase, in lane coordinates.
struct Spec {
  TemplateEntry entry;
  int lane = 0;
  int edge = -1;
  int procedure = -1;
  bool edge_gadget = false;
};

TemplateEntry terminal_entry() {
  TemplateEntry e;
  e.role = "terminal-stretch";
  e.kind = GadgetKind::Stretch;
  e.lo = Coord(5);
  e.hi = Coord(32);
  for (int a : {21, 25, 29}) e.ports.push_back({PortKind::ArriveIn, Coord(a)});
  for (int l : {8, 24, 28}) e.ports.push_back({PortKind::LeaveFrom, Coord(l)});
  return e;
}

TemplateEntry edge_entry() {
  TemplateEntry e;
  e.role = "edge";
  e.kind = GadgetKind::Edge;
  e.lo = Coord(0);
  e.hi = Coord(7);
  e.ports = {{PortKind::ArriveIn, Coord(0)}, {PortKind::ArriveIn, Coord(5)}};
  return e;
}

const Coord kHomeOffsets[3] = {Coord(0), Coord(4), Coord(8)};

class Planner {
 public:
  Planner(const SimpleGraph& g, const ReductionParams& p) : g_(g), zm_(p.n) {
    s_.params = p;
  }

  SwitchSchedule run() {
    schedule_edges();
    for (std::int64_t ph = 0; ph <= s_.final_phase; ++ph) place_phase(ph);
    if (!pending_.empty()) fail(s_.final_phase, "longs left over after the final phase");
    for (auto& e : s_.edges) {
      for (std::size_t i = 0; i < s_.gadgets.size(); ++i) {
        const auto& pg = s_.gadgets[i];
        if (pg.role == "edge" && pg.edge == static_cast<int>(&e - s_.edges.data())) e.edge_gadget = static_cast<int>(i);
      }
    }
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(std::int64_t ph, const std::string& what) {
    throw ModelError("phase " + std::to_string(ph) + ": " + what);
  }

  void schedule_edges() {
    std::int64_t start = 1;
    for (auto [u, v] : g_.edges) {
      EdgePlan e;
      e.u = u;
      e.v = v;
      e.start = start;
      e.procedures = v - u - 1;
      int idx = static_cast<int>(s_.edges.size());
      for (int q = 0; q < e.procedures; ++q) {
        for (const auto& t : switching_template()) {
          if (q > 0 && t.step == 1 && t.blue) continue;  // the previous procedure's blue stretch
          specs_[start + 5 * q + t.step - 1].push_back({t, u + q, idx, q, false});
        }
      }
      e.meet = start + 5 * e.procedures;
      e.join = e.meet + 1;
      if (e.procedures == 0) specs_[e.meet].push_back({template_entry(1, "blue-stretch"), u, idx, 0, false});
      specs_[e.meet].push_back({terminal_entry(), v - 1, idx, -1, false});
      specs_[e.join].push_back({edge_entry(), v - 1, idx, -1, true});
      s_.edges.push_back(e);
      start = e.join + 1;
    }
    s_.final_phase = start;
  }

  std::string name_for(std::int64_t ph, const std::string& role, bool zone, int where) {
    return "p" + std::to_string(ph) + "." + role + "." + (zone ? "z" : "b") + std::to_string(where);
  }

  int add(PlacedGadget pg) {
    s_.gadgets.push_back(std::move(pg));
    return static_cast<int>(s_.gadgets.size() - 1);
  }

  void receive(int gi, std::int64_t ph) {
    const auto& pg = s_.gadgets[gi];
    for (const auto& port : pg.gadget.ports) {
      if (port.kind != PortKind::ArriveIn) continue;
      auto it = pending_.find(port.anchor);
      if (it == pending_.end())
        fail(ph, pg.role + " in " + pg.place() + " expects a long at " + decimal(port.anchor) + " (" + port.name +
                     ") but none arrives there");
      LongInterval li;
      li.phase = ph - 1;
      li.left = port.anchor - s_.params.alpha();
      li.from = it->second.first;
      li.from_port = it->second.second;
      li.to = gi;
      li.to_port = port.name;
      li.id = "long.p" + std::to_string(li.phase) + "." + std::to_string(s_.longs.size());
      s_.from_index[{li.from, li.from_port}] = s_.longs.size();
      s_.into_index[{li.to, li.to_port}] = s_.longs.size();
      s_.longs.push_back(std::move(li));
      pending_.erase(it);
    }
  }

  GadgetInstance home(int v, std::int64_t ph, const std::vector<std::size_t>& arrive, bool emit, GadgetKind kind,
                      const Naming& nm) {
    std::vector<PortSpec> ports;
    for (auto b : arrive) ports.push_back({PortKind::ArriveIn, b, Coord(0)});
    if (emit)
      for (std::size_t b = 0; b < 3; ++b) ports.push_back({PortKind::LeaveFrom, b, Coord(3)});
    return make_chain_gadget(standard_chain(zm_.zone_point(v, ph, 0), 3, ports), s_.params.x, kind, nm);
  }

  void place_phase(std::int64_t ph) {
    const auto& p = s_.params;
    const bool last = ph == s_.final_phase;
    std::vector<int> placed;
    if (ph == 0) {
      for (int v = 0; v < p.n; ++v) {
        PlacedGadget pg;
        pg.name = name_for(0, "vertex", true, v);
        pg.role = "vertex";
        pg.in_zone = true;
        pg.where = v;
        pg.local_lo = 0;
        pg.local_hi = 11;
        pg.gadget = home(v, 0, {}, true, GadgetKind::Vertex, {pg.name + ".", pg.name});
        placed.push_back(add(std::move(pg)));
      }
    } else {
      for (const auto& sp : specs_[ph]) {
        PlacedGadget pg;
        pg.role = sp.entry.role;
        pg.name = name_for(ph, pg.role, false, sp.lane);
        pg.phase = ph;
        pg.edge = sp.edge;
        pg.procedure = sp.procedure;
        pg.step = sp.entry.step;
        pg.where = sp.lane;
        Coord shift = zm_.lane_point(sp.lane, ph, 0);
        Naming nm{pg.name + ".", pg.name};
        if (sp.edge_gadget) {
          pg.gadget = make_edge_gadget(shift, p.k, nm);
        } else {
          pg.gadget = build_template_gadget(sp.entry, shift, p.x, p.x_prime, nm);
        }
        pg.local_lo = pg.gadget.left - shift;
        pg.local_hi = pg.gadget.right - shift;
        int gi = add(std::move(pg));
        receive(gi, ph);
        placed.push_back(gi);
      }
      // whatever is left lands in a zone and is picked up by that zone's home gadget
      std::map<int, std::vector<std::size_t>> homes;
      for (const auto& [at, src] : pending_) {
        auto loc = zm_.locate(at);
        const auto& from = s_.gadgets[src.first];
        auto slot = std::find(std::begin(kHomeOffsets), std::end(kHomeOffsets), loc.offset);
        if (!loc.in_zone || loc.phase != ph || slot == std::end(kHomeOffsets))
          fail(ph, "long from " + from.name + " (" + src.second + ") lands at " +
                       (loc.in_zone ? "zone " : "buffer ") + std::to_string(loc.index) + " offset " +
                       decimal(loc.offset) + " where no gadget receives it");
        homes[loc.index].push_back(static_cast<std::size_t>(slot - std::begin(kHomeOffsets)));
      }
      for (auto& [v, arrive] : homes) {
        std::sort(arrive.begin(), arrive.end());
        PlacedGadget pg;
        pg.role = "home";
        pg.name = name_for(ph, "home", true, v);
        pg.phase = ph;
        pg.in_zone = true;
        pg.where = v;
        pg.local_lo = 0;
        pg.local_hi = 11;
        pg.gadget = home(v, ph, arrive, !last, GadgetKind::Link, {pg.name + ".", pg.name});
        int gi = add(std::move(pg));
        receive(gi, ph);
        placed.push_back(gi);
      }
    }
    if (!pending_.empty()) fail(ph, "unreceived longs");
    for (int gi : placed) {
      const auto& pg = s_.gadgets[gi];
      for (const auto& port : pg.gadget.ports) {
        if (port.kind != PortKind::LeaveFrom) continue;
        if (last) fail(ph, pg.name + " emits a long after the final phase");
        Coord at = port.anchor + p.alpha();
        if (pending_.count(at))
          fail(ph, pg.name + " and " + s_.gadgets[pending_[at].first].name + " both send a long to " + decimal(at));
        pending_[at] = {gi, port.name};
      }
    }
  }

  const SimpleGraph& g_;
  ZoneMap zm_;
  SwitchSchedule s_;
  std::map<std::int64_t, std::vector<Spec>> specs_;
  std::map<Coord, std::pair<int, std::string>> pending_;
};

}  // namespace

SwitchSchedule plan_switching(const SimpleGraph& g, const ReductionParams& params) {
  check_params(params);
  if (g.n != params.n) throw ModelError("graph has " + std::to_string(g.n) + " vertices, parameters say " +
                                        std::to_string(params.n));
  if (!g.is_cubic()) throw ModelError("the input graph is not cubic");
  return Planner(g, params).run();
}

void write_schedule(std::ostream& os, const SwitchSchedule& s) {
  for (const auto& pg : s.gadgets) {
    os << kind_name(pg.gadget.kind) << ' ' << pg.role << ' ' << pg.name << ' ' << pg.phase << ' '
       << (pg.in_zone ? "zone:" : "lane:") << pg.where << ' ' << format_coord(pg.local_lo) << ' '
       << format_coord(pg.local_hi) << "\n";
  }
}

// ---------------------------------------------------------------------------
// validation

namespace {

struct BlockOwner {
  int gadget = -1;  // -1 for longs
  std::string unit;  // 3-block or switch the block belongs to, empty for links
};

// Which counted unit (3-block or switch gadget) a block belongs to.
std::string unit_of(const PlacedGadget& pg, const std::string& id) {
  std::string local = id.substr(pg.gadget.prefix.size());
  switch (pg.gadget.kind) {
    case GadgetKind::Switch:
    case GadgetKind::Inverter:
    case GadgetKind::ThreeBlock:
      return pg.name;
    default:
      if (local.size() > 1 && local[0] == 't') return pg.name + "#" + local.substr(0, local.find('.'));
      return {};
  }
}

std::unordered_map<std::string, BlockOwner> owners(const SwitchSchedule& s) {
  std::unordered_map<std::string, BlockOwner> out;
  for (std::size_t i = 0; i < s.gadgets.size(); ++i) {
    const auto& pg = s.gadgets[i];
    for (const auto& b : pg.gadget.model.blocks()) out[b.id] = {static_cast<int>(i), unit_of(pg, b.id)};
  }
  for (const auto& l : s.longs) out[l.id] = {-1, {}};
  return out;
}

const Port* find_port(const GadgetInstance& g, const std::string& name) {
  for (const auto& p : g.ports)
    if (p.name == name) return &p;
  return nullptr;
}

void conformance(const PlacedGadget& pg, std::vector<Violation>& out) {
  auto bad = [&](const std::string& m) { out.push_back({"conformance", pg.name + " in " + pg.place() + ": " + m}); };
  std::vector<Coord> arr, lv;
  Coord origin = pg.gadget.left - pg.local_lo;
  for (const auto& p : pg.gadget.ports) (p.kind == PortKind::ArriveIn ? arr : lv).push_back(p.anchor - origin);
  std::sort(arr.begin(), arr.end());
  std::sort(lv.begin(), lv.end());
  auto subset = [](const std::vector<Coord>& a, std::vector<Coord> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (pg.role == "vertex" || pg.role == "home") {
    if (pg.local_lo != Coord(0) || pg.local_hi != Coord(11)) bad("footprint is not [0,11] of the zone");
    if (!subset(arr, {Coord(0), Coord(4), Coord(8)})) bad("arrivals outside {0,4,8}");
    if (!lv.empty() && lv != std::vector<Coord>{Coord(3), Coord(7), Coord(11)}) bad("departures are not {3,7,11}");
    if (pg.role == "vertex" && !arr.empty()) bad("vertex gadget with arrivals");
    return;
  }
  TemplateEntry want;
  if (pg.role == "edge") {
    want.lo = 0;
    want.hi = 7;
    want.ports = {{PortKind::ArriveIn, Coord(0)}, {PortKind::ArriveIn, Coord(5)}};
  } else if (pg.role == "terminal-stretch") {
    want.lo = 5;
    want.hi = 32;
    for (int a : {21, 25, 29}) want.ports.push_back({PortKind::ArriveIn, Coord(a)});
    for (int l : {8, 24, 28}) want.ports.push_back({PortKind::LeaveFrom, Coord(l)});
  } else {
    try {
      want = template_entry(pg.step, pg.role);
    } catch (const ModelError& e) {
      bad(e.what());
      return;
    }
  }
  if (pg.local_lo < want.lo || pg.local_hi > want.hi)
    bad("footprint [" + decimal(pg.local_lo) + "," + decimal(pg.local_hi) + "] leaves the table region [" +
        decimal(want.lo) + "," + decimal(want.hi) + "]");
  if (arr != want.arrivals() || lv != want.leaves()) bad("ports differ from the table");
}

}  // namespace

ScheduleReport validate_schedule(const IntervalModel& h, const SwitchSchedule& s) {
  ScheduleReport rep;
  auto& v = rep.report.violations;
  const auto& p = s.params;
  rep.overlap_bound = static_cast<std::size_t>(3 * p.n + 20);

  // footprints
  std::vector<std::size_t> order(s.gadgets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return s.gadgets[a].gadget.left < s.gadgets[b].gadget.left;
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto& ga = s.gadgets[order[a]];
    for (std::size_t b = a + 1; b < order.size() && s.gadgets[order[b]].gadget.left <= ga.gadget.right; ++b) {
      const auto& gb = s.gadgets[order[b]];
      v.push_back({"overlap", ga.name + " [" + decimal(ga.gadget.left) + "," + decimal(ga.gadget.right) + "] and " +
                                  gb.name + " [" + decimal(gb.gadget.left) + "," + decimal(gb.gadget.right) +
                                  "] intersect"});
    }
  }
  for (const auto& pg : s.gadgets) conformance(pg, v);

  // longs against their ports
  for (const auto& l : s.longs) {
    auto idx = h.index_of(l.id);
    if (!idx) {
      v.push_back({"ports", "long '" + l.id + "' is missing from the model"});
      continue;
    }
    const auto& b = h[*idx];
    if (b.length != p.alpha())
      v.push_back({"length", "long '" + l.id + "' has length " + decimal(b.length) + ", not " + decimal(p.alpha())});
    auto check_end = [&](int gi, const std::string& port, const Coord& at, const char* which) {
      if (gi < 0 || gi >= static_cast<int>(s.gadgets.size())) {
        v.push_back({"ports", "long '" + l.id + "' has no " + which + " gadget"});
        return;
      }
      const auto& g = s.gadgets[gi].gadget;
      const Port* pt = find_port(g, port);
      if (!pt) {
        v.push_back({"ports", "long '" + l.id + "': " + s.gadgets[gi].name + " has no port " + port});
        return;
      }
      if (pt->anchor != at)
        v.push_back({"ports", "long '" + l.id + "' " + which + " end at " + decimal(at) + ", port " + port + " of " +
                                  s.gadgets[gi].name + " is at " + decimal(pt->anchor)});
      auto bi = h.index_of(pt->block);
      if (!bi || at < h[*bi].left || at > h[*bi].right())
        v.push_back({"ports", "long '" + l.id + "' " + which + " end misses block " + pt->block});
    };
    check_end(l.from, l.from_port, b.left, "left");
    check_end(l.to, l.to_port, b.right(), "right");
  }
  for (std::size_t gi = 0; gi < s.gadgets.size(); ++gi) {
    for (const auto& pt : s.gadgets[gi].gadget.ports) {
      bool linked = pt.kind == PortKind::ArriveIn ? s.long_into(static_cast<int>(gi), pt.name).has_value()
                                                  : s.long_from(static_cast<int>(gi), pt.name).has_value();
      if (!linked) v.push_back({"ports", s.gadgets[gi].name + " port " + pt.name + " has no long"});
    }
  }

  // structure: every gadget as built, longs meet exactly their port blocks within their own gadgets
  auto own = owners(s);
  auto real = build_twin_graph(h);
  TwinGraphBuilder ib;
  for (const auto& b : h.blocks()) ib.node(b.id, b.multiplicity);
  for (const auto& pg : s.gadgets)
    for (auto [a, b] : pg.gadget.intended.edges()) ib.edge(pg.gadget.intended.id(a), pg.gadget.intended.id(b));
  std::vector<std::set<std::string>> covered(s.longs.size());
  for (std::size_t li = 0; li < s.longs.size(); ++li) {
    const auto& l = s.longs[li];
    for (auto [gi, port] : {std::make_pair(l.from, l.from_port), std::make_pair(l.to, l.to_port)}) {
      if (gi < 0) continue;
      if (const Port* pt = find_port(s.gadgets[gi].gadget, port))
        for (const auto& c : pt->covers) {
          covered[li].insert(c);
          ib.edge(l.id, c);
        }
    }
  }
  std::unordered_map<std::string, std::size_t> long_index;
  for (std::size_t li = 0; li < s.longs.size(); ++li) long_index[s.longs[li].id] = li;
  std::vector<std::set<std::string>> units(s.longs.size());
  for (auto [a, b] : real.edges()) {
    for (auto [x, y] : {std::make_pair(a, b), std::make_pair(b, a)}) {
      auto it = long_index.find(real.id(x));
      if (it == long_index.end()) continue;
      const auto& l = s.longs[it->second];
      const auto& other = own[real.id(y)];
      if (other.gadget < 0 || (other.gadget != l.from && other.gadget != l.to)) ib.edge(real.id(x), real.id(y));
      if (other.gadget >= 0 && !other.unit.empty()) units[it->second].insert(other.unit);
    }
  }
  ValidationOptions opt;
  auto structural = validate_model(h, ib.build(), opt);
  v.insert(v.end(), structural.violations.begin(), structural.violations.end());

  for (std::size_t li = 0; li < s.longs.size(); ++li) {
    rep.max_overlap = std::max(rep.max_overlap, units[li].size());
    if (units[li].size() > rep.overlap_bound)
      v.push_back({"bound", "long '" + s.longs[li].id + "' meets " + std::to_string(units[li].size()) +
                                " 3-blocks and switch gadgets (bound " + std::to_string(rep.overlap_bound) + ")"});
  }

  // edge gadgets and their chains
  std::map<int, int> per_edge;
  for (std::size_t gi = 0; gi < s.gadgets.size(); ++gi)
    if (s.gadgets[gi].role == "edge") ++per_edge[s.gadgets[gi].edge];
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const auto& ep = s.edges[e];
    std::string tag = "edge (" + std::to_string(ep.u) + "," + std::to_string(ep.v) + ")";
    if (per_edge[static_cast<int>(e)] != 1) {
      v.push_back({"trace", tag + " has " + std::to_string(per_edge[static_cast<int>(e)]) + " edge gadgets"});
      continue;
    }
    auto left = trace_chain(s, ep.edge_gadget, "left");
    auto right = trace_chain(s, ep.edge_gadget, "right");
    if (left != std::vector<int>{ep.u}) v.push_back({"trace", tag + ": left end does not trace back to vertex " +
                                                                  std::to_string(ep.u) + " alone"});
    if (right != std::vector<int>{ep.v}) v.push_back({"trace", tag + ": right end does not trace back to vertex " +
                                                                   std::to_string(ep.v) + " alone"});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// chains

namespace {

// Arrival ports feeding a departure port.
std::vector<std::string> sources(const GadgetInstance& g, const std::string& leave) {
  switch (g.kind) {
    case GadgetKind::Switch: return {leave == "R2" ? "L1" : "R1"};
    case GadgetKind::Inverter: return {"in"};
    default: {
      std::vector<std::pair<Coord, std::string>> arr;
      for (const auto& p : g.ports)
        if (p.kind == PortKind::ArriveIn) arr.push_back({p.anchor, p.name});
      std::sort(arr.begin(), arr.end());
      std::vector<std::string> out;
      for (auto& a : arr) out.push_back(a.second);
      return out;
    }
  }
}

}  // namespace

std::vector<int> trace_chain(const SwitchSchedule& s, int edge_gadget, const std::string& port) {
  std::set<int> found;
  std::set<std::pair<int, std::string>> seen;
  std::vector<std::pair<int, std::string>> todo{{edge_gadget, port}};
  while (!todo.empty()) {
    auto [gi, p] = todo.back();
    todo.pop_back();
    if (!seen.insert({gi, p}).second) continue;
    auto li = s.long_into(gi, p);
    if (!li) continue;
    const auto& l = s.longs[*li];
    const auto& from = s.gadgets[l.from];
    if (from.role == "vertex") {
      found.insert(from.where);
      continue;
    }
    for (const auto& src : sources(from.gadget, l.from_port)) todo.push_back({l.from, src});
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// compile and colours

namespace {

Signal flip(Signal s) {
  s.inverted = !s.inverted;
  return s;
}

BudgetCounts tally(const SwitchSchedule& s) {
  BudgetCounts c;
  for (const auto& pg : s.gadgets) {
    switch (pg.gadget.kind) {
      case GadgetKind::Vertex:
      case GadgetKind::Link:
      case GadgetKind::Stretch:
        c.n3b += static_cast<std::int64_t>(pg.gadget.stretch_blocks);
        c.nsl += static_cast<std::int64_t>(pg.gadget.stretch_blocks) - 1;
        break;
      case GadgetKind::Switch: ++c.nsw; break;
      case GadgetKind::Inverter: ++c.inverters; break;
      case GadgetKind::Edge: ++c.edge_gadgets; break;
      case GadgetKind::ThreeBlock: break;
    }
  }
  c.nli = static_cast<std::int64_t>(s.longs.size());
  return c;
}

ColorExpectation propagate(const IntervalModel& h, const SwitchSchedule& s) {
  std::unordered_map<std::string, Signal> sig;
  std::vector<std::optional<Signal>> long_sig(s.longs.size());
  ColorExpectation ex;
  ex.edges.resize(s.edges.size());
  auto arriving = [&](int gi, const std::string& port) {
    auto li = s.long_into(gi, port);
    if (!li || !long_sig[*li]) throw std::logic_error("no colour reaches " + s.gadgets[gi].name + " " + port);
    return *long_sig[*li];
  };
  auto emit = [&](int gi, const std::string& port, Signal v) {
    if (auto li = s.long_from(gi, port)) {
      long_sig[*li] = v;
      sig[s.longs[*li].id] = v;
    }
  };
  for (std::size_t i = 0; i < s.gadgets.size(); ++i) {
    const int gi = static_cast<int>(i);
    const auto& pg = s.gadgets[i];
    const auto& g = pg.gadget;
    const auto& pre = g.prefix;
    switch (g.kind) {
      case GadgetKind::Edge: {
        auto& e = ex.edges.at(pg.edge);
        e.gadget = gi;
        e.left = arriving(gi, "left");
        e.right = arriving(gi, "right");
        break;
      }
      case GadgetKind::Switch: {
        Signal l = arriving(gi, "L1"), r = arriving(gi, "R1");
        for (int b = 1; b <= 9; ++b) sig[pre + switch_bottom_id(b)] = b % 2 ? flip(l) : l;
        for (int t = 1; t <= 4; ++t) sig[pre + switch_top_id(t)] = t % 2 ? flip(r) : r;
        emit(gi, "R2", l);
        emit(gi, "L2", flip(r));
        break;
      }
      case GadgetKind::Inverter: {
        Signal in = arriving(gi, "in");
        sig[pre + "B1"] = flip(in);
        sig[pre + "B2"] = in;
        sig[pre + "B3"] = flip(in);
        emit(gi, "out", flip(in));
        break;
      }
      default: {
        std::optional<Signal> chain;
        if (pg.role == "vertex") chain = Signal{pg.where, false};
        for (const auto& p : g.ports) {
          if (p.kind != PortKind::ArriveIn) continue;
          Signal a = arriving(gi, p.name);
          if (chain && !(*chain == a))
            throw std::logic_error(pg.name + " joins chains of different colours");
          chain = a;
        }
        if (!chain) throw std::logic_error(pg.name + " has no colour source");
        for (const auto& b : g.model.blocks()) {
          std::string local = b.id.substr(pre.size());
          bool middle = local.size() > 3 && local.compare(local.size() - 3, 3, ".B2") == 0;
          bool link = !local.empty() && local[0] == 'L';
          sig[b.id] = (middle || link) ? *chain : flip(*chain);
        }
        for (const auto& p : g.ports)
          if (p.kind == PortKind::LeaveFrom) emit(gi, p.name, *chain);
      }
    }
  }
  ex.block.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto it = sig.find(h[i].id);
    if (it != sig.end()) ex.block[i] = it->second;
  }
  return ex;
}

}  // namespace

CompiledReduction compile(const SimpleGraph& g, const ReductionParams& params) {
  CompiledReduction c;
  c.schedule = plan_switching(g, params);
  std::vector<Block> blocks;
  for (const auto& pg : c.schedule.gadgets)
    for (const auto& b : pg.gadget.model.blocks()) blocks.push_back(b);
  for (const auto& l : c.schedule.longs)
    blocks.push_back(Block{l.id, l.left, params.alpha(), 1, "long/" + c.schedule.gadgets[l.from].name});
  c.h = IntervalModel(params.alpha(), std::move(blocks));
  auto rep = validate_schedule(c.h, c.schedule);
  if (!rep.ok()) throw ModelError("compiled model fails validation: " + rep.report.summary());
  c.expect = propagate(c.h, c.schedule);
  c.counts = tally(c.schedule);
  return c;
}

BlockAssignment good_partition(const CompiledReduction& c, const std::vector<int>& side) {
  const auto& s = c.schedule;
  if (static_cast<int>(side.size()) != s.params.n) throw ModelError("partition size differs from n");
  BlockAssignment a;
  a.red.assign(c.h.size(), 0);
  auto colour = [&](const Signal& sg) { return (side.at(sg.vertex) != 0) != sg.inverted; };
  for (std::size_t i = 0; i < c.h.size(); ++i)
    if (c.expect.block[i] && colour(*c.expect.block[i])) a.red[i] = c.h[i].multiplicity;

  // edge gadgets: best uniform colouring given the two arriving longs
  for (const auto& e : c.expect.edges) {
    const auto& g = s.gadgets[e.gadget].gadget;
    const auto& ig = g.intended;
    const std::size_t nb = ig.node_count();
    const bool lc = colour(e.left), rc = colour(e.right);
    std::int64_t best = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << nb); ++mask) {
      std::int64_t val = 0;
      for (auto [x, y] : ig.edges())
        if (((mask >> x) & 1) != ((mask >> y) & 1)) val += std::int64_t(ig.multiplicity(x)) * ig.multiplicity(y);
      for (auto [name, col] : {std::make_pair("left", lc), std::make_pair("right", rc)})
        for (const auto& cv : g.port(name).covers) {
          auto j = *ig.index_of(cv);
          if (((mask >> j) & 1) != static_cast<unsigned>(col)) val += ig.multiplicity(j);
        }
      if (val > best) {
        best = val;
        best_mask = mask;
      }
    }
    for (std::size_t j = 0; j < nb; ++j)
      a.red[*c.h.index_of(ig.id(j))] = ((best_mask >> j) & 1) ? ig.multiplicity(j) : 0;
  }
  return a;
}

std::vector<RecolorMove> recolor_moves(const CompiledReduction& c) {
  const auto& s = c.schedule;
  std::vector<RecolorMove> out;
  auto idx = [&](const std::string& id) { return *c.h.index_of(id); };
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    for (const char* end : {"left", "right"}) {
      // walk back to the vertex gadget along one chain
      struct Step {
        std::size_t li;
        int gadget;  // the gadget this long arrives in
        std::string in_port;
      };
      std::vector<Step> path;
      int gi = s.edges[e].edge_gadget;
      std::string port = end;
      while (true) {
        auto li = s.long_into(gi, port);
        if (!li) throw std::logic_error("broken chain at " + s.gadgets[gi].name);
        path.push_back({*li, gi, port});
        const auto& l = s.longs[*li];
        if (s.gadgets[l.from].role == "vertex") break;
        port = sources(s.gadgets[l.from].gadget, l.from_port).front();
        gi = l.from;
      }
      std::vector<std::size_t> nodes;
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (k > 0) {
          const auto& g = s.gadgets[path[k].gadget].gadget;
          if (g.kind == GadgetKind::Switch) {
            const auto& row = g.rows[path[k].in_port == "L1" ? 0 : 1];
            for (const auto& id : row) nodes.push_back(idx(id));
          } else {
            for (const auto& b : g.model.blocks()) nodes.push_back(idx(b.id));
          }
        }
        nodes.push_back(idx(s.longs[path[k].li].id));
        RecolorMove m;
        m.edge = static_cast<int>(e);
        m.left_end = std::string(end) == "left";
        m.first_long = s.longs[path[k].li].id;
        m.nodes = nodes;
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

BlockAssignment apply_move(const TwinGraph& graph, const BlockAssignment& a, const RecolorMove& m) {
  BlockAssignment b = a;
  for (auto i : m.nodes) b.red.at(i) = graph.multiplicity(i) - b.red.at(i);
  return b;
}

}  // namespace ivc2
