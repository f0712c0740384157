#include "oracle.hpp"

#include "ivc2/coord.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/model.hpp"
#include "ivc2/model_io.hpp"

#include <doctest.h>

#include <random>

using namespace ivc2;

namespace {

IntervalModel shorts(std::initializer_list<std::pair<const char*, Coord>> blocks) {
  ModelBuilder b(Coord(5));
  for (auto& [id, left] : blocks) b.add_short(id, left, 1, "t/" + std::string(id));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("coordinates parse and print on the eighth grid") {
  CHECK(parse_coord("3.5") == Coord(7, 2));
  CHECK(parse_coord("-1/8") == Coord(-1, 8));
  CHECK(parse_coord("11") == Coord(11));
  CHECK(decimal(Coord(35, 8)) == "4.375");
  CHECK(on_eighth_grid(Coord(3, 8)));
  CHECK_FALSE(on_eighth_grid(Coord(1, 3)));
  CHECK_THROWS_AS(parse_coord("abc"), ModelError);
}

TEST_CASE("twin graph of a 3-block is a path") {
  auto g = make_three_block(Coord(0), 1);
  auto t = build_twin_graph(g.model);
  auto b1 = *t.index_of("B1"), b2 = *t.index_of("B2"), b3 = *t.index_of("B3");
  CHECK(t.has_edge(b1, b2));
  CHECK(t.has_edge(b2, b3));
  CHECK_FALSE(t.has_edge(b1, b3));
}

TEST_CASE("closed intervals: touching blocks are adjacent, separated ones are not") {
  auto apart = build_twin_graph(shorts({{"a", Coord(0)}, {"b", Coord(2)}}));
  CHECK(apart.edge_count() == 0);
  auto touch = build_twin_graph(shorts({{"a", Coord(0)}, {"b", Coord(1)}}));
  CHECK(touch.edge_count() == 1);
}

TEST_CASE("interval count") {
  CHECK(interval_count(IntervalModel{}).empty());
  CHECK(interval_count(shorts({{"a", Coord(0)}, {"b", Coord(3)}})) == std::set<Coord>{Coord(1)});
  ModelBuilder b(Coord(209));
  b.add_short("s", Coord(0), 2, "t/s").add_long("l", Coord(1), 1, "t/l");
  CHECK(interval_count(std::move(b).build()) == std::set<Coord>{Coord(1), Coord(209)});
}

TEST_CASE("duplicate ids are rejected") {
  ModelBuilder b(Coord(5));
  b.add_short("a", Coord(0), 1, "t/a").add_short("a", Coord(3), 1, "t/a");
  CHECK_THROWS_AS(std::move(b).build(), ModelError);
}

TEST_CASE("cut value of a bare 3-block") {
  auto g = make_three_block(Coord(0), 1);
  auto t = build_twin_graph(g.model);
  BlockAssignment rbr{{0, 0, 0}}, all{{1, 1, 1}};
  rbr.red[*t.index_of("B1")] = 1;
  rbr.red[*t.index_of("B3")] = 1;
  all.red[*t.index_of("B2")] = 1;  // B2 has two intervals
  CHECK(cut_value(t, rbr) == 4);
  CHECK(cut_value(t, all) == 3);
  CHECK(cut_value(t, BlockAssignment::all_blue(t)) == 0);
  BlockAssignment bad{{0, 3, 0}};
  CHECK_THROWS_AS(cut_value(t, bad), ModelError);
}

TEST_CASE("cut value agrees with a pairwise interval count on random models") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    auto m = testing_oracle::random_model(rng, 18);
    auto t = build_twin_graph(m);
    BlockAssignment a;
    for (const auto& b : m.blocks()) a.red.push_back(std::uniform_int_distribution<int>(0, b.multiplicity)(rng));
    CHECK(cut_value(t, a) == testing_oracle::assignment_cut(m, a.red));
    CHECK(cut_value(t, a) == cut_value(t, a.complemented(t)));
  }
}

TEST_CASE("validator accepts the builder's own gadgets") {
  CHECK(validate_gadget(make_three_block(Coord(0), 3)).ok());
  CHECK(validate_gadget(make_vertex_gadget(Coord(0), 2)).ok());
  CHECK(validate_gadget(make_edge_gadget(Coord(0), 3)).ok());
  CHECK(validate_gadget(make_switch_gadget(Coord(0), 5, 3)).ok());
  CHECK(validate_gadget(make_inverter(Coord(5, 2), 2)).ok());
}

TEST_CASE("validator flags an unintended edge") {
  auto g = make_three_block(Coord(0), 1);
  std::vector<Block> blocks = g.model.blocks();
  for (auto& b : blocks)
    if (b.id == "B3") b.left = Coord(1, 2);
  IntervalModel shifted(g.model.alpha(), blocks);
  auto rep = validate_model(shifted, g.intended);
  CHECK_FALSE(rep.ok());
  CHECK(rep.count("structure") > 0);
}

TEST_CASE("validator flags a wrong length") {
  std::vector<Block> blocks{{"s", Coord(0), Coord(1), 1, "t/s"}, {"l", Coord(1), Coord(2), 1, "t/l"}};
  IntervalModel m(Coord(7), blocks);
  TwinGraphBuilder tb;
  tb.node("s", 1);
  tb.node("l", 1);
  tb.edge("s", "l");
  auto rep = validate_model(m, tb.build());
  CHECK(rep.count("length") > 0);
}

TEST_CASE("model text round trip") {
  auto g = make_switch_gadget(Coord(3, 8), 3, 2);
  auto text = model_to_string(g.model);
  auto back = model_from_string(text);
  CHECK(model_to_string(back) == text);
  CHECK(back.vertex_count() == 64);
  auto with_comments = model_from_string("# header\n" + text + "# trailing\n");
  CHECK(with_comments.size() == g.model.size());
  CHECK_THROWS_AS(model_from_string("alpha 3/1\nx 1 short\n"), ModelError);
  CHECK_THROWS_AS(model_from_string("x 0/1 short 1 t/x\n"), ModelError);
}
