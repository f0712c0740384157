#include "ivc2/gadgets.hpp"
#include "ivc2/render.hpp"

#include <doctest.h>

using namespace ivc2;

TEST_CASE("text render of a 3-block") {
  auto g = make_three_block(Coord(0), 1);
  auto text = render_to_string(g.model, RenderSpec{});
  CHECK(text.find("[###]") != std::string::npos);
  CHECK(text.find("0.25 unit") != std::string::npos);
}

TEST_CASE("render output is deterministic") {
  auto g = make_switch_gadget(Coord(0), 3, 2);
  RenderSpec svg{RenderFormat::Svg, std::nullopt, std::nullopt, "switch"};
  CHECK(render_to_string(g.model, svg) == render_to_string(g.model, svg));
  RenderSpec txt;
  CHECK(render_to_string(g.model, txt) == render_to_string(g.model, txt));
}

TEST_CASE("svg has one rect per short block and colours from the assignment") {
  auto g = make_vertex_gadget(Coord(0), 1);
  auto t = build_twin_graph(g.model);
  RenderSpec spec{RenderFormat::Svg, std::nullopt, BlockAssignment::all_blue(t), ""};
  auto svg = render_to_string(g.model, spec);
  std::size_t rects = 0;
  for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
  CHECK(rects >= g.model.size());
  CHECK(svg.find("#1f77b4") != std::string::npos);
  CHECK(svg.find("#d62728") == std::string::npos);
}

TEST_CASE("off-grid coordinates are flagged in the text legend") {
  auto g = make_inverter(Coord(1, 8), 1);
  auto text = render_to_string(g.model, RenderSpec{});
  CHECK(text.find("snap") != std::string::npos);
}
