#include "oracle.hpp"

#include "ivc2/chain.hpp"
#include "ivc2/compress.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/solver.hpp"

#include <doctest.h>

#include <set>

using namespace ivc2;

namespace {

std::set<Coord> anchors(const GadgetInstance& g, PortKind kind) {
  std::set<Coord> out;
  for (const auto& p : g.ports)
    if (p.kind == kind) out.insert(p.anchor);
  return out;
}

std::set<Coord> all_anchors(const GadgetInstance& g) {
  std::set<Coord> out;
  for (const auto& p : g.ports) out.insert(p.anchor);
  return out;
}

// A port's block must actually contain its anchor.
void check_port_blocks(const GadgetInstance& g) {
  for (const auto& p : g.ports) {
    const auto& b = g.model.at(p.block);
    CHECK(b.left <= p.anchor);
    CHECK(p.anchor <= b.left + b.length);
  }
}

}  // namespace

TEST_CASE("3-block") {
  auto one = make_three_block(Coord(0), 1);
  CHECK(one.model.vertex_count() == 4);
  auto four = make_three_block(Coord(4), 5);
  CHECK(four.left == Coord(4));
  CHECK(four.right == Coord(7));
  auto three = make_three_block(Coord(0), 3);
  CHECK(three.model.at("B1").multiplicity == 3);
  CHECK(three.model.at("B2").multiplicity == 6);
  CHECK(three.model.at("B3").multiplicity == 3);
  CHECK_THROWS_AS(make_three_block(Coord(0), 0), ModelError);
}

TEST_CASE("vertex gadget") {
  auto v1 = make_vertex_gadget(Coord(0), 1);
  CHECK(v1.model.vertex_count() == 14);
  CHECK(make_vertex_gadget(Coord(0), 2).model.vertex_count() == 26);
  CHECK(anchors(v1, PortKind::LeaveFrom) == std::set<Coord>{Coord(3), Coord(7), Coord(11)});
  for (const auto& p : v1.ports) {
    const auto& b = v1.model.at(p.block);
    bool spans = b.left == Coord(2) || b.left == Coord(6) || b.left == Coord(10);
    CHECK(spans);
  }
  check_port_blocks(v1);
}

TEST_CASE("edge gadget") {
  auto e = make_edge_gadget(Coord(10), 1);
  CHECK(e.model.vertex_count() == 9);
  CHECK(e.left == Coord(10));
  CHECK(e.right == Coord(17));
  CHECK(all_anchors(e) == std::set<Coord>{Coord(10), Coord(15)});
  CHECK(validate_gadget(e).ok());
}

TEST_CASE("link gadget") {
  auto l = make_link_gadget(Coord(0), 1);
  CHECK(l.model.vertex_count() == 14);
  CHECK(anchors(l, PortKind::ArriveIn) == std::set<Coord>{Coord(0), Coord(4), Coord(8)});
  CHECK(anchors(l, PortKind::LeaveFrom) == std::set<Coord>{Coord(3), Coord(7), Coord(11)});
  check_port_blocks(l);
}

TEST_CASE("stretch gadget") {
  auto s3 = make_stretch_gadget(Coord(0), 3, 1, {});
  auto l = make_link_gadget(Coord(0), 1);
  CHECK(s3.left == l.left);
  CHECK(s3.right == l.right);
  auto s10 = make_stretch_gadget(Coord(0), 10, 1, {});
  CHECK(s10.right - s10.left == Coord(39));
  std::vector<PortSpec> close{{PortKind::LeaveFrom, 0, Coord(3)}, {PortKind::LeaveFrom, 1, Coord(1)}};
  CHECK_THROWS_AS(make_stretch_gadget(Coord(0), 3, 1, close), ModelError);
}

TEST_CASE("switch gadget") {
  auto s = make_switch_gadget(Coord(0), 3, 2);
  CHECK(all_anchors(s) == std::set<Coord>{Coord(0), Coord(7, 2), Coord(11, 2), Coord(9)});
  CHECK(s.model.vertex_count() == 64);
  CHECK(s.port("L2").color == ExpectedColor::Inverted);
  CHECK(s.port("R2").color == ExpectedColor::SameAsChain);
  check_port_blocks(s);
  CHECK_THROWS_AS(make_switch_gadget(Coord(0), 2, 1), ModelError);
  CHECK_THROWS_AS(make_switch_gadget(Coord(0), 4, 4), ModelError);
}

TEST_CASE("inverter") {
  auto inv = make_inverter(Coord(5, 2), 1);
  CHECK(all_anchors(inv) == std::set<Coord>{Coord(5, 2), Coord(9, 2)});
  CHECK(inv.model.vertex_count() == 4);
  // two inverters in a row restore the colour
  int flips = 0;
  for (int i = 0; i < 2; ++i)
    if (make_inverter(Coord(4 * i), 1).port("out").color == ExpectedColor::Inverted) ++flips;
  CHECK(flips % 2 == 0);
}

TEST_CASE("every gadget validates with stubs attached") {
  std::vector<GadgetInstance> gs{make_three_block(Coord(0), 2), make_vertex_gadget(Coord(1, 8), 2),
                                 make_edge_gadget(Coord(0), 2),  make_link_gadget(Coord(3), 2),
                                 make_switch_gadget(Coord(0), 7, 4), make_inverter(Coord(0), 3)};
  for (const auto& g : gs) {
    INFO(kind_name(g.kind));
    auto rep = validate_gadget(g);
    CHECK_MESSAGE(rep.ok(), rep.summary());
  }
}

TEST_CASE("standard chain layouts are sound") {
  for (std::size_t m = 1; m <= 10; ++m) {
    auto layout = standard_chain(Coord(0), m, {});
    CHECK(check_layout(layout).empty());
    CHECK(layout.right() - layout.left() == Coord(4 * static_cast<long>(m) - 1));
  }
}

TEST_CASE("compress placements pick the smallest fitting j") {
  CHECK_THROWS_AS(compress_placement(Coord(2), 1), ModelError);
  CHECK(compress_placement(Coord(3), 1).j == 1);
  CHECK(compress_placement(Coord(5, 2), 3).j == 2);
  auto ten = compress_placement(Coord(10), 2);
  auto [lo, hi] = paper_range(2, ten.j);
  CHECK(lo < Coord(10));
  CHECK(Coord(10) <= hi);
  for (std::size_t j = 1; j < ten.j; ++j) {
    auto r = paper_range(2, j);
    CHECK_FALSE((r.first < Coord(10) && Coord(10) <= r.second));
  }
}

TEST_CASE("compress placements reproduce the distance") {
  for (int c = 1; c <= 3; ++c) {
    for (int h = 5; h <= 30; ++h) {
      Coord d(h, 2);
      auto p = compress_placement(d, c);
      REQUIRE(p.layout.ports.size() == 2);
      CHECK(p.layout.ports[1].anchor - p.layout.ports[0].anchor == d);
      auto g = realize(p, 2);
      CHECK(validate_gadget(g, compress_validation_options()).ok());
    }
  }
}

TEST_CASE("gadget max cut matches the independent brute force at x <= 2") {
  std::vector<GadgetInstance> gs{make_three_block(Coord(0), 1), make_three_block(Coord(0), 2),
                                 make_vertex_gadget(Coord(0), 1), make_edge_gadget(Coord(0), 1),
                                 make_edge_gadget(Coord(0), 2),   make_link_gadget(Coord(0), 1),
                                 make_inverter(Coord(0), 2)};
  for (const auto& g : gs) {
    INFO(kind_name(g.kind));
    CHECK(maxcut_twin_exact(build_twin_graph(g.model)).value == testing_oracle::brute_maxcut(g.model));
  }
}
