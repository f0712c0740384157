#include "oracle.hpp"

#include "ivc2/classify.hpp"
#include "ivc2/formulas.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/solver.hpp"

#include <doctest.h>

#include <random>

using namespace ivc2;

TEST_CASE("brute force on small models") {
  auto tb = make_three_block(Coord(0), 1);
  CHECK(maxcut_bruteforce(tb.model).value == 4);
  ModelBuilder b(Coord(3));
  b.add_short("k", Coord(0), 4, "t/k");
  CHECK(maxcut_bruteforce(std::move(b).build()).value == 4);
}

TEST_CASE("brute force refuses large instances") {
  auto v = make_vertex_gadget(Coord(0), 3);
  CHECK_THROWS_AS(maxcut_bruteforce(v.model), SolverRefusal);
}

TEST_CASE("twin solver refuses a frontier that is too wide") {
  ModelBuilder b(Coord(40));
  for (int i = 0; i < 12; ++i) b.add_long("l" + std::to_string(i), Coord(i, 8), 1, "t/l");
  TwinOptions o;
  o.max_width = 4;
  CHECK_THROWS_AS(maxcut_twin_exact(build_twin_graph(std::move(b).build()), {}, o), SolverRefusal);
}

TEST_CASE("twin solver on a 3-block of size 10") {
  auto g = make_three_block(Coord(0), 10);
  auto t = build_twin_graph(g.model);
  CHECK(maxcut_twin_exact(t).value == 400);
  CHECK(eval_cut_RBR(10, {}) == 400);
}

TEST_CASE("edge gadget with opposite fixed arrivals") {
  auto e = make_edge_gadget(Coord(0), 1);
  auto h = attach_stubs(e, Coord(15));
  auto t = build_twin_graph(h.model);
  auto fixed = fix_by_id(t, {{stub_id(e, e.port("left")), 1}, {stub_id(e, e.port("right")), 0}});
  CHECK(maxcut_twin_exact(t, fixed).value >= 17);
}

TEST_CASE("twin solver equals the independent brute force on random models") {
  std::mt19937_64 rng(20240501);
  for (int round = 0; round < 60; ++round) {
    auto m = testing_oracle::random_model(rng, 16);
    auto t = build_twin_graph(m);
    TwinOptions o;
    o.max_width = 32;
    auto r = maxcut_twin_exact(t, {}, o);
    CHECK(r.value == testing_oracle::brute_maxcut(m));
    CHECK(testing_oracle::assignment_cut(m, r.assignment.red) == r.value);
  }
}

TEST_CASE("enumerated optima are all optimal and distinct") {
  auto g = make_vertex_gadget(Coord(0), 1);
  auto t = build_twin_graph(g.model);
  TwinOptions o;
  o.enumerate = true;
  auto r = maxcut_twin_exact(t, {}, o);
  REQUIRE(r.optima_complete);
  CHECK(r.optima.size() == r.optima_count);
  std::set<std::vector<int>> seen;
  for (const auto& a : r.optima) {
    CHECK(cut_value(t, a) == r.value);
    seen.insert(a.red);
  }
  CHECK(seen.size() == r.optima.size());
  BruteOptions bo;
  bo.enumerate = true;
  auto br = maxcut_bruteforce(t, {}, bo);
  CHECK(br.value == r.value);
  CHECK(br.optima_count == r.optima_count);
}

TEST_CASE("3-block cut formulas") {
  CHECK(eval_cut_RBR(5, {}) == 100);
  OverlapProfile p1;
  p1.r = {1, 0, 0, 0};
  CHECK(eval_cut_BRB(5, p1) - eval_cut_RBR(5, p1) == 5);
  CHECK(eval_cut_difference(5, p1) == 5);
  OverlapProfile p4;
  p4.r = {0, 0, 0, 2};
  CHECK(eval_cut_RBR(3, p4) == 48);
}

TEST_CASE("f bound") {
  CHECK(eval_f_bound(OverlapProfile::from_deltas({0, 0, 0, 0})) == Coord(0));
  CHECK(eval_f_bound(OverlapProfile::from_deltas({0, -2, 0, 0})) == Coord(1));
  CHECK(eval_f_bound(OverlapProfile::from_deltas({-1, 1, -1, -2})) == Coord(1, 4));
}

TEST_CASE("edge gadget bounds") {
  auto k3 = eval_edge_cases(3, 0, 0);
  CHECK(k3.same_color_max == 91);
  CHECK(k3.diff_color_min == Coord(95));
  auto k1 = eval_edge_cases(1, 1, 1);
  CHECK(k1.same_color_max == 15);
  CHECK(k1.diff_color_min == Coord(17));
  CHECK(eval_edge_cases(5, 2, 0).diff_color_min == Coord(233));
}

TEST_CASE("switch alternating cut") {
  CHECK(eval_switch_alter(3, 2) == 396);
  CHECK(eval_switch_alter(5, 3) == 1048);
  CHECK_THROWS_AS(eval_switch_alter(2, 1), ModelError);
}

TEST_CASE("row classifier") {
  std::vector<std::string> ids{"B1", "B2", "B3"};
  std::vector<int> mult{2, 4, 2};
  CHECK(classify_row(ids, {2, 0, 2}, mult).verdict == Verdict::Alternating);
  auto almost = classify_row(ids, {2, 1, 2}, mult);
  CHECK(almost.verdict == Verdict::AlmostAlternating);
  CHECK(almost.block == "B2");
  CHECK(almost.deviation == 1);
  CHECK(classify_row(ids, {2, 4, 2}, mult).verdict == Verdict::Other);
}
