#include "ivc2/budget.hpp"
#include "ivc2/compress.hpp"
#include "ivc2/cubic_graph.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/lemmas.hpp"
#include "ivc2/model_io.hpp"
#include "ivc2/reduction.hpp"
#include "ivc2/render.hpp"
#include "ivc2/solver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace ivc2;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefused = 3;

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ModelError("cannot write '" + path + "'");
  return f;
}

// ---------------------------------------------------------------- gadget

struct GadgetArgs {
  std::string kind;
  int x = 1, xprime = 0, k = 1, m = 3;
  std::string anchor = "0";
  std::string out;
};

int cmd_gadget(const GadgetArgs& a) {
  Coord at = parse_coord(a.anchor);
  GadgetInstance g;
  if (a.kind == "three-block") g = make_three_block(at, a.x);
  else if (a.kind == "vertex") g = make_vertex_gadget(at, a.x);
  else if (a.kind == "edge") g = make_edge_gadget(at, a.k);
  else if (a.kind == "link") g = make_link_gadget(at, a.x);
  else if (a.kind == "stretch") g = make_stretch_gadget(at, static_cast<std::size_t>(a.m), a.x, {});
  else if (a.kind == "switch") {
    if (a.xprime == 0) throw ModelError("switch needs --xprime");
    g = make_switch_gadget(at, a.x, a.xprime);
  } else if (a.kind == "inverter") g = make_inverter(at, a.x);
  else throw ModelError("unknown gadget kind '" + a.kind + "'");

  std::ostringstream os;
  write_model(os, g.model);
  os << "# intervals " << g.model.vertex_count() << "\n";
  std::ostringstream ps;
  write_ports(ps, g);
  std::string line;
  std::istringstream pin(ps.str());
  while (std::getline(pin, line)) os << "# port " << line << "\n";
  if (a.out.empty()) {
    std::cout << os.str();
  } else {
    open_out(a.out) << os.str();
    std::cout << "wrote " << a.out << " (" << g.model.vertex_count() << " intervals)\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string lemma;
  std::vector<int> x, xprime, k, delta;
  std::optional<int> d1, d2, d3, d4;
  int max_delta = 2;
  bool no_guard = false;
  std::string max_distance = "40";
  std::string step = "1/2";
};

int cmd_verify(const VerifyArgs& a) {
  SuiteReport rep;
  try {
    if (a.lemma == "3block") {
      ThreeBlockSuite s;
      if (!a.x.empty()) s.xs = a.x;
      s.max_delta = a.max_delta;
      s.guard = !a.no_guard;
      if (a.d1 || a.d2 || a.d3 || a.d4) s.only = std::array<int, 4>{a.d1.value_or(0), a.d2.value_or(0),
                                                                    a.d3.value_or(0), a.d4.value_or(0)};
      rep = verify_three_block(s);
    } else if (a.lemma == "vertex") {
      VertexSuite s;
      if (!a.x.empty()) s.xs = a.x;
      rep = verify_vertex(s);
    } else if (a.lemma == "edge") {
      EdgeSuite s;
      if (!a.k.empty()) s.ks = a.k;
      if (!a.delta.empty()) s.deltas = a.delta;
      rep = verify_edge(s);
    } else if (a.lemma == "link") {
      LinkSuite s;
      if (!a.x.empty()) s.xs = a.x;
      rep = verify_link(s);
    } else if (a.lemma == "switch") {
      SwitchSuite s;
      if (!a.x.empty()) {
        if (a.x.size() != a.xprime.size()) throw ModelError("give one --xprime per --x");
        s.params.clear();
        for (std::size_t i = 0; i < a.x.size(); ++i) s.params.push_back({a.x[i], a.xprime[i]});
      }
      if (!a.delta.empty()) s.deltas = a.delta;
      if (a.no_guard) s.guard = false;
      rep = verify_switch(s);
    } else if (a.lemma == "compress") {
      CompressSuite s;
      s.max_distance = parse_coord(a.max_distance);
      s.step = parse_coord(a.step);
      rep = verify_compress(s);
    } else {
      throw ModelError("unknown lemma '" + a.lemma + "' (3block, vertex, edge, link, switch, compress)");
    }
  } catch (const GuardRefusal& e) {
    std::cout << "REFUSED " << e.what() << "\n";
    return kExitRefused;
  }
  rep.write(std::cout);
  std::cout << "verdict " << (rep.pass() ? "PASS" : "FAIL") << ' ' << rep.lines.size() - rep.failures() << '/'
            << rep.lines.size() << "\n";
  return rep.pass() ? 0 : kExitFail;
}

// ---------------------------------------------------------------- graph

struct GraphArgs {
  std::string which;
  int n = 8;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_graph(const GraphArgs& a) {
  SimpleGraph g;
  if (a.which == "k4") g = make_k4();
  else if (a.which == "k33") g = make_k33();
  else if (a.which == "cube") g = make_cube();
  else if (a.which == "random") g = random_cubic(a.n, a.seed);
  else throw ModelError("unknown graph '" + a.which + "' (k4, k33, cube, random)");
  if (a.out.empty()) {
    write_edge_list(std::cout, g);
  } else {
    auto f = open_out(a.out);
    write_edge_list(f, g);
  }
  return 0;
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string graph;
  std::string mode = "desk";
  int x = 3, xprime = 2, k = 3;
  std::string out_dir = ".";
  std::string stem;
};

int cmd_reduce(const ReduceArgs& a) {
  auto g = load_edge_list(a.graph);
  if (!g.is_cubic()) {
    std::cerr << "error: '" << a.graph << "' is not a cubic graph\n";
    return kExitInput;
  }
  if (a.mode != "desk" && a.mode != "paper") throw ModelError("--mode is desk or paper");
  ReductionParams rp{g.n, a.x, a.xprime, a.k};
  auto c = compile(g, rp);
  auto check = validate_schedule(c.h, c.schedule);
  BudgetParams bp = a.mode == "paper" ? BudgetParams::paper(g.n) : BudgetParams::from(rp);
  auto table = budget_table(c.counts, bp);

  std::string stem = a.stem.empty() ? std::filesystem::path(a.graph).stem().string() : a.stem;
  std::filesystem::create_directories(a.out_dir);
  auto base = std::filesystem::path(a.out_dir) / stem;
  {
    auto f = open_out(base.string() + ".model");
    if (a.mode == "paper")
      f << "# structure only: block sizes use x=" << a.x << " x'=" << a.xprime << " k=" << a.k
        << "; the budget file uses the paper parameters\n";
    write_model(f, c.h);
  }
  {
    auto f = open_out(base.string() + ".schedule");
    write_schedule(f, c.schedule);
  }
  {
    auto f = open_out(base.string() + ".budget");
    f << "mode " << a.mode << "\nn " << g.n << "\nx " << bp.x << "\nxprime " << bp.x_prime << "\nk " << bp.k
      << "\n";
    write_budget(f, table);
  }

  auto ic = interval_count(c.h);
  std::cout << "mode " << a.mode << "\n";
  std::cout << "n " << g.n << " alpha " << decimal(rp.alpha()) << " phase " << decimal(rp.phase()) << "\n";
  std::cout << "interval_count {";
  bool first = true;
  for (const auto& v : ic) {
    std::cout << (first ? "" : ", ") << decimal(v);
    first = false;
  }
  std::cout << "}\n";
  std::cout << "gadgets " << c.schedule.gadgets.size() << " longs " << c.schedule.longs.size() << " blocks "
            << c.h.size() << "\n";
  std::cout << "N3b " << c.counts.n3b << " Nsw " << c.counts.nsw << " Nsl " << c.counts.nsl << " Nli "
            << c.counts.nli << " (bound " << long_interval_bound(g.n) << ")\n";
  std::cout << "validate_schedule " << (check.ok() ? "pass" : "FAIL") << " (max overlap " << check.max_overlap
            << " of " << check.overlap_bound << ")\n";
  std::cout << "x " << bp.x << " xprime " << bp.x_prime << " k " << bp.k << "\n";
  std::cout << "epsilon = " << with_commas(table.front().epsilon) << "\n";
  for (const auto& b : table) std::cout << "C=" << b.maxcut << " band [" << b.m << ", " << b.m + b.epsilon << "]\n";
  std::cout << "bands " << (bands_disjoint(table) ? "disjoint" : "overlap") << "\n";
  std::cout << "wrote " << base.string() << ".{model,schedule,budget}\n";
  return check.ok() ? 0 : kExitFail;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string model;
  std::string format = "text";
  std::string scale;
  std::string colorize;
  std::string out;
};

BlockAssignment read_assignment(const std::string& path, const IntervalModel& m) {
  std::ifstream f(path);
  if (!f) throw ModelError("cannot open '" + path + "'");
  BlockAssignment a;
  a.red.assign(m.size(), 0);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string id;
    int red;
    if (!(ls >> id >> red)) throw ModelError("assignment lines are 'id redCount'");
    auto i = m.index_of(id);
    if (!i) throw ModelError("assignment names unknown block '" + id + "'");
    a.red[*i] = red;
  }
  return a;
}

int cmd_render(const RenderArgs& a) {
  auto m = load_model(a.model);
  RenderSpec spec;
  if (a.format == "svg") spec.format = RenderFormat::Svg;
  else if (a.format != "text") throw ModelError("--format is svg or text");
  if (!a.scale.empty()) spec.scale = parse_coord(a.scale);
  if (!a.colorize.empty()) spec.colorize = read_assignment(a.colorize, m);
  spec.title = std::filesystem::path(a.model).filename().string();
  if (a.out.empty()) {
    render(std::cout, m, spec);
  } else {
    auto f = open_out(a.out);
    render(f, m, spec);
  }
  return 0;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string model;
  std::string oracle = "twin";
  std::vector<std::string> fix;
  std::size_t max_width = 12;
  std::string out;
};

int cmd_solve(const SolveArgs& a) {
  auto m = load_model(a.model);
  auto graph = build_twin_graph(m);
  std::vector<std::pair<std::string, int>> pins;
  for (const auto& f : a.fix) {
    auto eq = f.find('=');
    if (eq == std::string::npos) throw ModelError("--fix takes id=redCount");
    pins.push_back({f.substr(0, eq), std::stoi(f.substr(eq + 1))});
  }
  auto fixed = fix_by_id(graph, pins);
  SolveResult r;
  try {
    if (a.oracle == "twin") {
      TwinOptions o;
      o.max_width = a.max_width;
      r = maxcut_twin_exact(graph, fixed, o);
    } else if (a.oracle == "brute") {
      r = maxcut_bruteforce(graph, fixed);
    } else {
      throw ModelError("--oracle is twin or brute");
    }
  } catch (const SolverRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  }
  std::cout << "value " << r.value << "\n";
  if (r.optima_count > 0) std::cout << "optima " << r.optima_count << "\n";
  std::ostream* sink = &std::cout;
  std::ofstream f;
  if (!a.out.empty()) {
    f = open_out(a.out);
    sink = &f;
  }
  for (std::size_t i = 0; i < graph.node_count(); ++i)
    *sink << graph.id(i) << ' ' << r.assignment.red[i] << (a.out.empty() ? "/" + std::to_string(graph.multiplicity(i)) : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ivc2: interval-count-two MaxCut gadgets and reduction"};
  app.require_subcommand(1);

  GadgetArgs ga;
  auto* g = app.add_subcommand("gadget", "build one gadget and print its model and port table");
  g->add_option("kind", ga.kind, "three-block, vertex, edge, link, stretch, switch, inverter")->required();
  g->add_option("--x", ga.x, "block size x");
  g->add_option("--xprime", ga.xprime, "switch top size x'");
  g->add_option("--k", ga.k, "edge gadget size k");
  g->add_option("--m", ga.m, "3-blocks in a stretch gadget");
  g->add_option("--anchor", ga.anchor, "left end");
  g->add_option("--out", ga.out, "write the model here instead of stdout");

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "run a gadget suite with the exact solvers");
  v->add_option("lemma", va.lemma, "3block, vertex, edge, link, switch, compress")->required();
  v->add_option("--x", va.x, "block sizes");
  v->add_option("--xprime", va.xprime, "switch top sizes, one per --x");
  v->add_option("--k", va.k, "edge gadget sizes");
  v->add_option("--delta", va.delta, "r-b of the overlapping family (edge, switch)");
  v->add_option("--delta1", va.d1);
  v->add_option("--delta2", va.d2);
  v->add_option("--delta3", va.d3);
  v->add_option("--delta4", va.d4);
  v->add_option("--max-delta", va.max_delta, "grid bound for 3block");
  v->add_flag("--no-guard", va.no_guard, "run even below the size bound");
  v->add_option("--max-distance", va.max_distance, "compress sweep end");
  v->add_option("--step", va.step, "compress sweep step");

  GraphArgs gra;
  auto* gr = app.add_subcommand("graph", "print a cubic graph as an edge list");
  gr->add_option("which", gra.which, "k4, k33, cube, random")->required();
  gr->add_option("--n", gra.n, "vertices for random");
  gr->add_option("--seed", gra.seed, "seed for random");
  gr->add_option("--out", gra.out);

  ReduceArgs ra;
  auto* r = app.add_subcommand("reduce", "compile a cubic graph into an interval model");
  r->add_option("graph", ra.graph, "edge list file")->required();
  r->add_option("--mode", ra.mode, "desk or paper");
  r->add_option("--x", ra.x);
  r->add_option("--xprime", ra.xprime);
  r->add_option("--k", ra.k);
  r->add_option("--out-dir", ra.out_dir);
  r->add_option("--stem", ra.stem, "output file stem, default the graph file's");

  RenderArgs rna;
  auto* rn = app.add_subcommand("render", "draw a model as svg or text");
  rn->add_option("model", rna.model)->required();
  rn->add_option("--format", rna.format, "svg or text");
  rn->add_option("--scale", rna.scale, "svg: units per pixel; text: columns per unit");
  rn->add_option("--colorize", rna.colorize, "file of 'id redCount' lines");
  rn->add_option("--out", rna.out);

  SolveArgs sa;
  auto* s = app.add_subcommand("solve", "exact MaxCut of a model file");
  s->add_option("model", sa.model)->required();
  s->add_option("--oracle", sa.oracle, "twin or brute");
  s->add_option("--fix", sa.fix, "id=redCount, repeatable");
  s->add_option("--max-width", sa.max_width, "twin solver frontier limit");
  s->add_option("--out", sa.out, "write the optimal assignment here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) return cmd_gadget(ga);
    if (*v) return cmd_verify(va);
    if (*gr) return cmd_graph(gra);
    if (*r) return cmd_reduce(ra);
    if (*rn) return cmd_render(rna);
    if (*s) return cmd_solve(sa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
