#pragma once

#include "ivc2/chain.hpp"
#include "ivc2/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ivc2 {

struct GadgetParams {
  int x = 1;
  int x_prime = 1;
  int k = 1;
};

enum class GadgetKind { ThreeBlock, Vertex, Edge, Link, Stretch, Switch, Inverter };
std::string kind_name(GadgetKind kind);

enum class ExpectedColor { SameAsChain, Inverted };

struct Port {
  std::string name;
  PortKind kind;
  Coord anchor;
  std::string block;                // block the endpoint lands in
  ExpectedColor color = ExpectedColor::SameAsChain;
  std::string source;               // arrival port the color refers to, empty if none
  std::vector<std::string> covers;  // every gadget block the long interval meets
};

struct Naming {
  std::string prefix;  // prepended to every block id
  std::string group;   // tag group; defaults to the kind name
};

struct GadgetInstance {
  GadgetKind kind = GadgetKind::ThreeBlock;
  std::size_t stretch_blocks = 0;
  IntervalModel model;
  TwinGraph intended;
  std::vector<Port> ports;
  // Left-to-right block sequences used by the classifier. Chains have one row,
  // the switch has {bottom, top}.
  std::vector<std::vector<std::string>> rows;
  Coord left, right;
  std::string prefix;

  const Port& port(const std::string& name) const;
};

GadgetInstance make_three_block(const Coord& anchor, int size, const Naming& naming = {});
GadgetInstance make_vertex_gadget(const Coord& anchor, int x, const Naming& naming = {});
GadgetInstance make_edge_gadget(const Coord& anchor, int k, const Naming& naming = {});
GadgetInstance make_link_gadget(const Coord& anchor, int x, const Naming& naming = {});
GadgetInstance make_stretch_gadget(const Coord& anchor, std::size_t m, int x,
                                   const std::vector<PortSpec>& ports, const Naming& naming = {});
GadgetInstance make_switch_gadget(const Coord& anchor, int x, int x_prime, const Naming& naming = {});
GadgetInstance make_inverter(const Coord& anchor, int x, const Naming& naming = {});

// Any chain of 3-blocks (vertex, link and stretch gadgets are special cases).
GadgetInstance make_chain_gadget(const ChainLayout& layout, int x, GadgetKind kind, const Naming& naming = {});

// The gadget with a stub long interval at every port, plus the intended graph
// including the stubs. Stub ids are "<prefix>stub.<port>".
struct Harness {
  IntervalModel model;
  TwinGraph intended;
};
Harness attach_stubs(const GadgetInstance& g, Coord alpha = Coord(0));
std::string stub_id(const GadgetInstance& g, const Port& p);

ValidationReport validate_gadget(const GadgetInstance& g, const ValidationOptions& options = {});

// Sidecar port table, one line per port: "portKind blockId anchor expectedColor name".
void write_ports(std::ostream& os, const GadgetInstance& g);

std::string switch_top_id(int i);     // 1..4
std::string switch_bottom_id(int i);  // 1..9

}  // namespace ivc2
