#include "ivc2/budget.hpp"
#include "ivc2/cubic_graph.hpp"
#include "ivc2/reduction.hpp"
#include "ivc2/template_table.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace ivc2;

namespace {

const CompiledReduction& k4_desk() {
  static const CompiledReduction c = compile(make_k4(), ReductionParams{4, 3, 2, 3});
  return c;
}

int count_kind(const SwitchSchedule& s, GadgetKind kind) {
  return static_cast<int>(std::count_if(s.gadgets.begin(), s.gadgets.end(),
                                        [&](const PlacedGadget& g) { return g.gadget.kind == kind; }));
}

}  // namespace

TEST_CASE("cubic graphs") {
  CHECK(make_k4().is_cubic());
  CHECK(make_k33().is_cubic());
  CHECK(make_cube().is_cubic());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_cubic(10, seed);
    CHECK(g.is_cubic());
    CHECK(g.edges.size() == 15u);
  }
  CHECK(maxcut_graph(make_k4()).value == 4);
  CHECK(maxcut_graph(make_k33()).value == 9);
  auto g = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(g.is_cubic());
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ModelError);
}

TEST_CASE("zones and buffers") {
  CHECK_THROWS_AS(layout_zones(5), ModelError);
  CHECK_THROWS_AS(layout_zones(2), ModelError);
  auto z = layout_zones(4);
  CHECK(z.zone(0, 0).lo == Coord(0));
  CHECK(z.zone(1, 0).lo == Coord(53));
  CHECK(z.buffer(0, 0).lo == Coord(32));
  CHECK(z.buffer(0, 0).hi == Coord(53));
  CHECK(z.zone(0, 1).lo == Coord(212));
  auto loc = z.locate(Coord(212 + 53 + 40));
  CHECK_FALSE(loc.in_zone);
  CHECK(loc.index == 1);
  CHECK(loc.phase == 1);
  CHECK(loc.offset == Coord(8));
  CHECK(z.locate(Coord(32)).in_zone);  // shared endpoint
  CHECK(z.lane_point(1, 0, Coord(0)) == Coord(53 + 32));
}

TEST_CASE("template table is self-consistent after corrections") {
  CHECK_FALSE(literal_table_issues().empty());
  for (const auto& e : switching_template()) {
    INFO(e.role << " step " << e.step);
    auto g = build_template_gadget(e, Coord(0), 3, 2, Naming{"t.", "t"});
    CHECK(g.left >= e.lo);
    CHECK(g.right <= e.hi);
  }
  // a long leaving at u comes back at u - 3 next phase, so every departure must meet an arrival
  for (const auto& e : switching_template()) {
    for (const auto& u : e.leaves()) {
      bool received = false;
      for (const auto& f : switching_template())
        for (const auto& a : f.arrivals()) {
          if (f.step == e.step + 1) received = received || a == u - 3;
          // the moving chain hands over to the next procedure, one lane to the right
          if (e.step == 6 && f.step == 2) received = received || a == u - 3 - 53;
        }
      if (e.step >= 2 && e.step < 7) CHECK_MESSAGE(received, e.role << " leaves at " << decimal(u));
    }
  }
}

TEST_CASE("edges of K4 need zero or more switching procedures") {
  const auto& s = k4_desk().schedule;
  REQUIRE(s.edges.size() == 6u);
  for (const auto& e : s.edges) CHECK(e.procedures == e.v - e.u - 1);
  CHECK(s.edges[0].u == 0);
  CHECK(s.edges[0].v == 1);
  CHECK(s.edges[0].procedures == 0);
  CHECK(s.edges[1].v == 2);
  CHECK(s.edges[1].procedures == 1);
  CHECK(count_kind(s, GadgetKind::Edge) == 6);
  CHECK(count_kind(s, GadgetKind::Vertex) == 4);
  CHECK(count_kind(s, GadgetKind::Switch) == k4_desk().counts.nsw);
}

TEST_CASE("compiled K4 has interval count {1, 209} and validates") {
  const auto& c = k4_desk();
  CHECK(interval_count(c.h) == std::set<Coord>{Coord(1), Coord(209)});
  auto rep = validate_schedule(c.h, c.schedule);
  CHECK_MESSAGE(rep.ok(), rep.report.summary());
  CHECK(rep.max_overlap <= rep.overlap_bound);
  CHECK(rep.overlap_bound == 32u);
  CHECK(BigInt(c.counts.nli) <= long_interval_bound(4));
}

TEST_CASE("non-cubic and wrong-size graphs are rejected") {
  SimpleGraph path{4, {{0, 1}, {1, 2}, {2, 3}}};
  CHECK_THROWS_AS(plan_switching(path, ReductionParams{4, 3, 2, 3}), ModelError);
  CHECK_THROWS_AS(plan_switching(make_k4(), ReductionParams{6, 3, 2, 3}), ModelError);
}

TEST_CASE("validator catches an overlapping switch") {
  auto s = k4_desk().schedule;
  auto sw = std::find_if(s.gadgets.begin(), s.gadgets.end(),
                         [](const PlacedGadget& g) { return g.gadget.kind == GadgetKind::Switch; });
  REQUIRE(sw != s.gadgets.end());
  const PlacedGadget* left_neighbour = nullptr;
  for (const auto& g : s.gadgets)
    if (g.gadget.right < sw->gadget.left && (!left_neighbour || g.gadget.right > left_neighbour->gadget.right))
      left_neighbour = &g;
  REQUIRE(left_neighbour != nullptr);
  Coord dx = left_neighbour->gadget.right - Coord(1, 2) - sw->gadget.left;
  sw->gadget.left += dx;
  sw->gadget.right += dx;
  auto rep = validate_schedule(k4_desk().h, s);
  CHECK(rep.report.count("overlap") > 0);
  CHECK(rep.report.summary().find(sw->name) != std::string::npos);
}

TEST_CASE("validator catches a long of the wrong length") {
  const auto& c = k4_desk();
  std::vector<Block> blocks = c.h.blocks();
  auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.length == c.h.alpha(); });
  REQUIRE(it != blocks.end());
  it->length += Coord(1, 2);
  IntervalModel broken(c.h.alpha(), blocks);
  auto rep = validate_schedule(broken, c.schedule);
  CHECK(rep.report.count("length") > 0);
}

TEST_CASE("chains trace back to their vertices") {
  const auto& s = k4_desk().schedule;
  for (const auto& e : s.edges) {
    CHECK(trace_chain(s, e.edge_gadget, "left") == std::vector<int>{e.u});
    CHECK(trace_chain(s, e.edge_gadget, "right") == std::vector<int>{e.v});
  }
}

TEST_CASE("uniform partition puts every edge gadget in the same-colour regime") {
  const auto& c = k4_desk();
  for (int cls : {0, 1}) {
    std::vector<int> side(4, cls);
    for (const auto& e : c.expect.edges) {
      bool lr = (side[e.left.vertex] != 0) != e.left.inverted;
      bool rr = (side[e.right.vertex] != 0) != e.right.inverted;
      CHECK(lr == rr);
    }
  }
}

TEST_CASE("a maximum cut of K4 puts four edge gadgets in the opposite-colour regime") {
  const auto& c = k4_desk();
  auto mc = maxcut_graph(make_k4());
  REQUIRE(mc.value == 4);
  int opposite = 0;
  for (const auto& e : c.expect.edges) {
    bool lr = (mc.side[e.left.vertex] != 0) != e.left.inverted;
    bool rr = (mc.side[e.right.vertex] != 0) != e.right.inverted;
    opposite += lr != rr;
  }
  CHECK(opposite == 4);
}

TEST_CASE("schedule text is deterministic") {
  std::ostringstream a, b;
  write_schedule(a, k4_desk().schedule);
  auto again = compile(make_k4(), ReductionParams{4, 3, 2, 3});
  write_schedule(b, again.schedule);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("edge") != std::string::npos);
}
