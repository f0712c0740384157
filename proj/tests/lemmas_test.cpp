#include "ivc2/lemmas.hpp"

#include <doctest.h>

using namespace ivc2;

TEST_CASE("3-block suite on one profile") {
  ThreeBlockSuite s;
  s.xs = {6};
  s.only = std::array<int, 4>{1, -2, 0, 1};
  auto r = verify_three_block(s);
  CHECK_FALSE(r.lines.empty());
  CHECK(r.pass());
}

TEST_CASE("guard refuses sizes below the bound") {
  ThreeBlockSuite s;
  s.xs = {4};
  s.only = std::array<int, 4>{0, 9, 0, 0};
  CHECK_THROWS_AS(verify_three_block(s), GuardRefusal);
  CHECK(three_block_threshold({0, 9, 0, 0}) == Coord(81, 4));
}

TEST_CASE("vertex and link suites") {
  VertexSuite v;
  v.xs = {6};
  CHECK(verify_vertex(v).pass());
  LinkSuite l;
  l.xs = {6};
  CHECK(verify_link(l).pass());
}

TEST_CASE("edge suite at k = 3") {
  EdgeSuite e;
  e.ks = {3};
  e.deltas = {0};
  auto r = verify_edge(e);
  REQUIRE(r.lines.size() == 1u);
  CHECK(r.pass());
  CHECK(r.lines[0].observed.find("91/95") != std::string::npos);
}

TEST_CASE("compress suite up to 10") {
  CompressSuite c;
  c.max_distance = Coord(10);
  auto r = verify_compress(c);
  CHECK(r.lines.size() >= 16u);
  CHECK(r.pass());
}

TEST_CASE("switch suite at (12, 8) with balanced overlaps") {
  SwitchSuite s;
  s.params = {{12, 8}};
  s.deltas = {0};
  CHECK(verify_switch(s).pass());
}
