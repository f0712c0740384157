#include "ivc2/gadgets.hpp"

#include <ostream>
#include <set>

namespace ivc2 {

std::string kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::ThreeBlock: return "three-block";
    case GadgetKind::Vertex: return "vertex";
    case GadgetKind::Edge: return "edge";
    case GadgetKind::Link: return "link";
    case GadgetKind::Stretch: return "stretch";
    case GadgetKind::Switch: return "switch";
    case GadgetKind::Inverter: return "inverter";
  }
  return "?";
}

std::string switch_top_id(int i) { return "top" + std::to_string(i); }
std::string switch_bottom_id(int i) { return "bot" + std::to_string(i); }

const Port& GadgetInstance::port(const std::string& name) const {
  for (const auto& p : ports)
    if (p.name == name) return p;
  throw ModelError("gadget has no port '" + name + "'");
}

namespace {

Coord fragment_alpha(const Coord& left, const Coord& right) { return right - left + 8; }

std::string group_of(const Naming& n, GadgetKind kind) {
  return n.group.empty() ? kind_name(kind) : n.group;
}

std::string block_id(std::size_t i, int j) { return "t" + std::to_string(i + 1) + ".B" + std::to_string(j); }
std::string link_id(std::size_t i) { return "L" + std::to_string(i + 1) + "." + std::to_string(i + 2); }

void require_positive(int v, const char* what) {
  if (v < 1) throw ModelError(std::string(what) + " must be at least 1");
}

}  // namespace

GadgetInstance make_chain_gadget(const ChainLayout& layout, int x, GadgetKind kind, const Naming& naming) {
  require_positive(x, "block size");
  if (auto err = check_layout(layout); !err.empty()) throw ModelError("bad chain layout: " + err);
  GadgetInstance g;
  g.kind = kind;
  g.stretch_blocks = layout.blocks.size();
  g.prefix = naming.prefix;
  g.left = layout.left();
  g.right = layout.right();
  const std::string group = group_of(naming, kind);
  const std::string& pre = naming.prefix;

  ModelBuilder mb(fragment_alpha(g.left, g.right));
  TwinGraphBuilder ib;
  std::vector<std::string> row;
  const std::size_t m = layout.blocks.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& b = layout.blocks[i];
    const int mult[3] = {x, 2 * x, x};
    const Coord at[3] = {b.left, b.b2(), b.b3()};
    for (int j = 1; j <= 3; ++j) {
      auto id = pre + block_id(i, j);
      mb.add_short(id, at[j - 1], mult[j - 1],
                   group + "/B" + std::to_string(j) + " of 3-block #" + std::to_string(i + 1));
      ib.node(id, mult[j - 1]);
      row.push_back(id);
    }
    ib.edge(pre + block_id(i, 1), pre + block_id(i, 2));
    ib.edge(pre + block_id(i, 2), pre + block_id(i, 3));
    if (i + 1 < m) {
      auto id = pre + link_id(i);
      mb.add_short(id, layout.links[i], 1, group + "/link " + std::to_string(i + 1) + "-" + std::to_string(i + 2));
      ib.node(id, 1);
      row.push_back(id);
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    ib.edge(pre + link_id(i), pre + block_id(i, 3));
    ib.edge(pre + link_id(i), pre + block_id(i + 1, 1));
  }
  g.rows = {row};

  for (const auto& cp : layout.ports) {
    Port p;
    p.kind = cp.kind;
    p.anchor = cp.anchor;
    std::size_t i = cp.block;
    if (cp.kind == PortKind::ArriveIn) {
      p.name = "in" + std::to_string(i + 1);
      p.block = pre + block_id(i, 1);
      for (std::size_t j = 0; j < i; ++j) {
        for (int b = 1; b <= 3; ++b) p.covers.push_back(pre + block_id(j, b));
        p.covers.push_back(pre + link_id(j));
      }
      p.covers.push_back(pre + block_id(i, 1));
    } else {
      p.name = "out" + std::to_string(i + 1);
      p.block = pre + block_id(i, 3);
      p.covers.push_back(pre + block_id(i, 3));
      for (std::size_t j = i; j + 1 < m; ++j) p.covers.push_back(pre + link_id(j));
      for (std::size_t j = i + 1; j < m; ++j)
        for (int b = 1; b <= 3; ++b) p.covers.push_back(pre + block_id(j, b));
    }
    g.ports.push_back(std::move(p));
  }
  g.model = std::move(mb).build();
  g.intended = ib.build();
  return g;
}

GadgetInstance make_three_block(const Coord& anchor, int size, const Naming& naming) {
  require_positive(size, "3-block size");
  GadgetInstance g;
  g.kind = GadgetKind::ThreeBlock;
  g.prefix = naming.prefix;
  g.left = anchor;
  g.right = anchor + 3;
  const std::string group = group_of(naming, g.kind);
  const auto& pre = naming.prefix;
  ModelBuilder mb(fragment_alpha(g.left, g.right));
  TwinGraphBuilder ib;
  const int mult[3] = {size, 2 * size, size};
  for (int j = 1; j <= 3; ++j) {
    auto id = pre + "B" + std::to_string(j);
    mb.add_short(id, anchor + (j - 1), mult[j - 1], group + "/B" + std::to_string(j));
    ib.node(id, mult[j - 1]);
  }
  ib.edge(pre + "B1", pre + "B2");
  ib.edge(pre + "B2", pre + "B3");
  g.rows = {{pre + "B1", pre + "B2", pre + "B3"}};
  g.model = std::move(mb).build();
  g.intended = ib.build();
  return g;
}

GadgetInstance make_vertex_gadget(const Coord& anchor, int x, const Naming& naming) {
  auto l = standard_chain(anchor, 3, {{PortKind::LeaveFrom, 0, Coord(3)},
                                      {PortKind::LeaveFrom, 1, Coord(3)},
                                      {PortKind::LeaveFrom, 2, Coord(3)}});
  return make_chain_gadget(l, x, GadgetKind::Vertex, naming);
}

GadgetInstance make_link_gadget(const Coord& anchor, int x, const Naming& naming) {
  std::vector<PortSpec> ps;
  for (std::size_t i = 0; i < 3; ++i) {
    ps.push_back({PortKind::ArriveIn, i, Coord(0)});
    ps.push_back({PortKind::LeaveFrom, i, Coord(3)});
  }
  return make_chain_gadget(standard_chain(anchor, 3, ps), x, GadgetKind::Link, naming);
}

GadgetInstance make_stretch_gadget(const Coord& anchor, std::size_t m, int x,
                                   const std::vector<PortSpec>& ports, const Naming& naming) {
  if (m < 1 || m > 10) throw ModelError("stretch gadget needs 1..10 3-blocks");
  std::vector<PortSpec> ps = ports;
  if (ps.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      ps.push_back({PortKind::ArriveIn, i, Coord(0)});
      ps.push_back({PortKind::LeaveFrom, i, Coord(3)});
    }
  }
  std::set<std::pair<int, std::size_t>> seen;
  for (const auto& p : ps) {
    if (p.block >= m) throw ModelError("port 3-block index " + std::to_string(p.block + 1) + " out of range");
    if (!seen.insert({static_cast<int>(p.kind), p.block}).second)
      throw ModelError("two ports of the same kind on 3-block " + std::to_string(p.block + 1));
  }
  auto layout = standard_chain(anchor, m, ps);
  for (std::size_t a = 0; a < layout.ports.size(); ++a) {
    for (std::size_t b = a + 1; b < layout.ports.size(); ++b) {
      const auto& pa = layout.ports[a];
      const auto& pb = layout.ports[b];
      Coord d = pa.anchor > pb.anchor ? pa.anchor - pb.anchor : pb.anchor - pa.anchor;
      if (pa.kind == pb.kind && d < 3)
        throw ModelError("ports at " + decimal(pa.anchor) + " and " + decimal(pb.anchor) +
                         " violate the same-type spacing of 3");
    }
  }
  return make_chain_gadget(layout, x, GadgetKind::Stretch, naming);
}

GadgetInstance make_edge_gadget(const Coord& anchor, int k, const Naming& naming) {
  auto g = make_chain_gadget(standard_chain(anchor, 2, {}), k, GadgetKind::Edge, naming);
  const auto& pre = naming.prefix;
  Port left{"left", PortKind::ArriveIn, anchor, pre + "t1.B1", ExpectedColor::SameAsChain, "", {pre + "t1.B1"}};
  Port right{"right", PortKind::ArriveIn, anchor + 5, pre + "t2.B2", ExpectedColor::SameAsChain, "",
             {pre + "t1.B1", pre + "t1.B2", pre + "t1.B3", pre + "L1.2", pre + "t2.B1", pre + "t2.B2"}};
  g.ports = {left, right};
  return g;
}

GadgetInstance make_inverter(const Coord& anchor, int x, const Naming& naming) {
  Naming n = naming;
  if (n.group.empty()) n.group = kind_name(GadgetKind::Inverter);
  auto g = make_three_block(anchor, x, n);
  g.kind = GadgetKind::Inverter;
  const auto& pre = naming.prefix;
  g.ports.push_back({"in", PortKind::ArriveIn, anchor, pre + "B1", ExpectedColor::SameAsChain, "", {pre + "B1"}});
  // The departure point is shared by B2 and B3; touching B2 is what flips the colour.
  g.ports.push_back({"out", PortKind::LeaveFrom, anchor + 2, pre + "B2", ExpectedColor::Inverted, "in",
                     {pre + "B2", pre + "B3"}});
  return g;
}

GadgetInstance make_switch_gadget(const Coord& a, int x, int xp, const Naming& naming) {
  require_positive(x, "x");
  require_positive(xp, "x'");
  if (!(x < 2 * xp && xp < x))
    throw ModelError("switch gadget needs x/2 < x' < x (got x=" + std::to_string(x) + ", x'=" +
                     std::to_string(xp) + ")");
  GadgetInstance g;
  g.kind = GadgetKind::Switch;
  g.prefix = naming.prefix;
  g.left = a;
  g.right = a + 9;
  const std::string group = group_of(naming, g.kind);
  const auto& pre = naming.prefix;
  ModelBuilder mb(fragment_alpha(g.left, g.right));
  TwinGraphBuilder ib;
  std::vector<std::string> bottom, top;
  for (int i = 1; i <= 9; ++i) {
    int mult = (i == 1 || i == 9) ? x : 2 * x;
    auto id = pre + switch_bottom_id(i);
    mb.add_short(id, a + (i - 1), mult, group + "/bottom " + std::to_string(i));
    ib.node(id, mult);
    bottom.push_back(id);
  }
  const Coord top_left[4] = {Coord(13, 4), Coord(15, 4), Coord(35, 8), Coord(39, 8)};
  for (int i = 1; i <= 4; ++i) {
    auto id = pre + switch_top_id(i);
    mb.add_short(id, a + top_left[i - 1], 2 * xp, group + "/top " + std::to_string(i));
    ib.node(id, 2 * xp);
    top.push_back(id);
  }
  for (int i = 1; i < 9; ++i) ib.edge(bottom[i - 1], bottom[i]);
  for (int i = 1; i < 4; ++i) ib.edge(top[i - 1], top[i]);
  const int overlap[8][2] = {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  for (auto [t, b] : overlap) ib.edge(top[t - 1], bottom[b - 1]);
  g.rows = {bottom, top};

  g.ports.push_back({"L1", PortKind::ArriveIn, a, bottom[0], ExpectedColor::SameAsChain, "", {bottom[0]}});
  g.ports.push_back({"R1", PortKind::ArriveIn, a + Coord(7, 2), top[0], ExpectedColor::SameAsChain, "",
                     {bottom[0], bottom[1], bottom[2], bottom[3], top[0]}});
  g.ports.push_back({"L2", PortKind::LeaveFrom, a + Coord(11, 2), top[3], ExpectedColor::Inverted, "R1",
                     {top[3], bottom[5], bottom[6], bottom[7], bottom[8]}});
  g.ports.push_back({"R2", PortKind::LeaveFrom, a + 9, bottom[8], ExpectedColor::SameAsChain, "L1", {bottom[8]}});
  g.model = std::move(mb).build();
  g.intended = ib.build();
  return g;
}

std::string stub_id(const GadgetInstance& g, const Port& p) { return g.prefix + "stub." + p.name; }

Harness attach_stubs(const GadgetInstance& g, Coord alpha) {
  if (alpha <= 0) alpha = g.right - g.left + 8;
  std::vector<Block> blocks = g.model.blocks();
  TwinGraphBuilder ib;
  for (std::size_t i = 0; i < g.intended.node_count(); ++i) ib.node(g.intended.id(i), g.intended.multiplicity(i));
  for (auto [a, b] : g.intended.edges()) ib.edge(g.intended.id(a), g.intended.id(b));
  struct Span {
    Coord l, r;
    std::string id;
  };
  std::vector<Span> spans;
  for (const auto& p : g.ports) {
    auto id = stub_id(g, p);
    Coord left = p.kind == PortKind::ArriveIn ? p.anchor - alpha : p.anchor;
    blocks.push_back(Block{id, left, alpha, 1, g.prefix + "stub/" + p.name});
    ib.node(id, 1);
    for (const auto& c : p.covers) ib.edge(id, c);
    spans.push_back({left, left + alpha, id});
  }
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j)
      if (spans[i].l <= spans[j].r && spans[j].l <= spans[i].r) ib.edge(spans[i].id, spans[j].id);
  return Harness{IntervalModel(alpha, std::move(blocks)), ib.build()};
}

ValidationReport validate_gadget(const GadgetInstance& g, const ValidationOptions& options) {
  auto h = attach_stubs(g);
  auto rep = validate_model(h.model, h.intended, options);
  for (const auto& p : g.ports) {
    const auto& b = g.model.at(p.block);
    if (p.anchor < b.left || p.anchor > b.right())
      rep.violations.push_back({"structure", "port " + p.name + " anchor " + decimal(p.anchor) +
                                                 " is outside block '" + p.block + "'"});
  }
  return rep;
}

void write_ports(std::ostream& os, const GadgetInstance& g) {
  for (const auto& p : g.ports) {
    os << (p.kind == PortKind::ArriveIn ? "ArriveIn" : "LeaveFrom") << ' ' << p.block << ' '
       << format_coord(p.anchor) << ' ' << (p.color == ExpectedColor::SameAsChain ? "SameAsChain" : "Inverted")
       << ' ' << p.name << "\n";
  }
}

}  // namespace ivc2
