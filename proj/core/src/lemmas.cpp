#include "ivc2/lemmas.hpp"

#include "ivc2/classify.hpp"
#include "ivc2/compress.hpp"
#include "ivc2/formulas.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

namespace ivc2 {

std::string ReportLine::str() const {
  return lemma + ' ' + params + ' ' + expected + ' ' + observed + ' ' + (pass ? "PASS" : "FAIL");
}

bool SuiteReport::pass() const { return failures() == 0 && !lines.empty(); }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const auto& l) { return !l.pass; }));
}

void SuiteReport::write(std::ostream& os) const {
  for (const auto& l : lines) os << l.str() << "\n";
}

Coord three_block_threshold(const std::array<int, 4>& d) {
  Coord s(d[1] + d[3]);
  Coord t = s * s / 4 + Coord(d[2] * d[2], 4);
  return std::max(t, Coord(std::abs(d[0]), 2));
}

Coord switch_threshold(int delta) {
  Coord D(std::abs(delta));
  Coord a = (2 * D + 1) * (2 * D + 1) / 2 + Coord(11, 4) * D * D;
  Coord b = Coord(83, 16) * D * D;
  return std::max(a, b);
}

namespace {

// A fixed family of external long intervals: one block, r of its members red.
struct Family {
  std::string id;
  Coord left;
  int r = 0, b = 0;
};

struct Instance {
  IntervalModel model;
  TwinGraph graph;
  FixedColors fixed;
};

Instance assemble(std::vector<Block> blocks, const Coord& alpha, const std::vector<Family>& fams,
                  const std::vector<std::pair<std::string, int>>& pins) {
  std::vector<std::pair<std::string, int>> all = pins;
  for (const auto& f : fams) {
    if (f.r + f.b == 0) continue;
    blocks.push_back(Block{f.id, f.left, alpha, f.r + f.b, "overlap/" + f.id});
    all.push_back({f.id, f.r});
  }
  Instance in;
  in.model = IntervalModel(alpha, std::move(blocks));
  in.graph = build_twin_graph(in.model);
  in.fixed = fix_by_id(in.graph, all);
  return in;
}

SolveResult solve_all(const Instance& in) {
  TwinOptions o;
  o.enumerate = true;
  o.max_width = 12;
  return maxcut_twin_exact(in.graph, in.fixed, o);
}

int red_of(const TwinGraph& g, const BlockAssignment& a, const std::string& id) {
  auto i = g.index_of(id);
  if (!i) throw ModelError("no block '" + id + "'");
  return a.red[*i];
}

// Red majority of a block, or -1 on a tie.
int side_of(const TwinGraph& g, const BlockAssignment& a, const std::string& id) {
  auto i = *g.index_of(id);
  int m = g.multiplicity(i), r = a.red[i];
  return 2 * r > m ? 1 : 2 * r < m ? 0 : -1;
}

// Cut restricted to the subgraph induced by `ids`.
std::int64_t induced_cut(const TwinGraph& g, const BlockAssignment& a, const std::set<std::string>& ids) {
  std::int64_t v = 0;
  std::vector<char> in(g.node_count(), 0);
  for (std::size_t i = 0; i < g.node_count(); ++i) in[i] = ids.count(g.id(i)) ? 1 : 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!in[i]) continue;
    std::int64_t m = g.multiplicity(i), y = a.red[i];
    v += y * (m - y);
  }
  for (auto [p, q] : g.edges()) {
    if (!in[p] || !in[q]) continue;
    std::int64_t yp = a.red[p], mp = g.multiplicity(p), yq = a.red[q], mq = g.multiplicity(q);
    v += yp * (mq - yq) + (mp - yp) * yq;
  }
  return v;
}

std::string fmt_deltas(const std::array<int, 4>& d) {
  std::ostringstream os;
  os << '(' << d[0] << ',' << d[1] << ',' << d[2] << ',' << d[3] << ')';
  return os.str();
}

int ceil_half(int v) { return (std::abs(v) + 1) / 2; }

std::string truncated_note(const SolveResult& r) { return r.optima_complete ? "" : ";optima_truncated"; }

// Best alternating fit of a chain row where only central blocks may deviate.
// Returns the worst excess of a central deviation over ceil(|s|/2), where s is the
// signed count of long intervals meeting that central block; -1 if another block breaks the pattern.
int chain_excess(const GadgetInstance& g, const IntervalModel& model, const TwinGraph& graph,
                 const BlockAssignment& a) {
  const auto& row = g.rows.front();
  int best = -1;
  for (int start = 0; start < 2; ++start) {
    int worst = 0;
    bool ok = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      bool expect_red = ((start + i) % 2) == 1;
      auto idx = *graph.index_of(row[i]);
      int m = graph.multiplicity(idx), r = a.red[idx];
      int dev = expect_red ? m - r : r;
      bool central = row[i].size() >= 3 && row[i].compare(row[i].size() - 3, 3, ".B2") == 0;
      if (dev == 0) continue;
      if (!central) {
        ok = false;
        break;
      }
      int sgn = 0;
      for (auto nb : graph.neighbors(idx)) {
        if (model.length_class(model[nb]) != LengthClass::Long) continue;
        sgn += 2 * a.red[nb] - graph.multiplicity(nb);
      }
      worst = std::max(worst, dev - ceil_half(sgn));
    }
    if (ok && (best < 0 || worst < best)) best = worst;
  }
  return best;
}

}  // namespace

SuiteReport verify_three_block(const ThreeBlockSuite& s) {
  std::vector<std::array<int, 4>> profiles;
  if (s.only) {
    profiles.push_back(*s.only);
  } else {
    const int D = s.max_delta;
    for (int a = -D; a <= D; ++a)
      for (int b = -D; b <= D; ++b)
        for (int c = -D; c <= D; ++c)
          for (int d = -D; d <= D; ++d)
            if (a + c - d <= 0) profiles.push_back({a, b, c, d});
  }
  if (s.guard) {
    for (int x : s.xs)
      for (const auto& d : profiles)
        if (Coord(x) <= three_block_threshold(d))
          throw GuardRefusal("3block: x=" + std::to_string(x) + " is not above the bound " +
                             decimal(three_block_threshold(d)) + " for deltas " + fmt_deltas(d));
  }
  SuiteReport rep;
  const Coord alpha(20);
  for (int x : s.xs) {
    for (const auto& d : profiles) {
      auto prof = OverlapProfile::from_deltas(d);
      if (d[0] + d[2] - d[3] > 0) {
        rep.lines.push_back({"3block", "x=" + std::to_string(x) + ",d=" + fmt_deltas(d), "RBR-normalized",
                             "not-normalized", false});
        continue;
      }
      auto tb = make_three_block(Coord(0), x);
      std::vector<Family> fams = {{"f1", -alpha, prof.r[0], prof.b[0]},
                                  {"f2", Coord(5, 2) - alpha, prof.r[1], prof.b[1]},
                                  {"f3", Coord(3), prof.r[2], prof.b[2]},
                                  {"f4", Coord(3, 2) - alpha, prof.r[3], prof.b[3]}};
      auto in = assemble(tb.model.blocks(), alpha, fams, {});
      auto res = solve_all(in);

      BlockAssignment rbr;
      rbr.red.assign(in.graph.node_count(), 0);
      for (std::size_t i = 0; i < in.graph.node_count(); ++i) {
        if (in.fixed[i]) rbr.red[i] = *in.fixed[i];
        else if (in.graph.id(i) != "B2") rbr.red[i] = in.graph.multiplicity(i);
      }
      const std::set<std::string> fam_ids = {"f1", "f2", "f3", "f4"};
      std::int64_t fam_const = induced_cut(in.graph, rbr, fam_ids);
      std::int64_t rbr_val = cut_value(in.graph, rbr) - fam_const;
      std::int64_t formula = eval_cut_RBR(x, prof);

      Coord f = eval_f_bound(prof);
      Coord gap(res.value - fam_const - rbr_val);
      const int sum24 = d[1] + d[3];
      const int allowed = ceil_half(sum24);
      bool even_reach = sum24 % 2 == 0 && sum24 <= 0 && -sum24 / 2 <= 2 * x;

      int worst = 0;
      bool shape_ok = res.optima_complete;
      for (const auto& opt : res.optima) {
        auto r = classify_partition(tb, in.graph, opt).front();
        if (r.verdict == Verdict::Alternating) continue;
        if (r.verdict == Verdict::AlmostAlternating && r.block == "B2" && r.deviation <= allowed) {
          worst = std::max(worst, r.deviation);
          continue;
        }
        shape_ok = false;
        worst = std::max(worst, r.deviation);
      }
      bool bound_ok = gap <= f;
      bool eq_ok = !even_reach || gap == f;
      bool formula_ok = formula == rbr_val;

      std::ostringstream exp, obs;
      exp << "almost(B2," << allowed << ");gap<=" << format_coord(f) << (even_reach ? ";gap=f" : "")
          << ";cutRBR=" << formula;
      obs << "optima=" << res.optima_count << ";worst_dev=" << worst << ";gap=" << format_coord(gap)
          << ";cutRBR=" << rbr_val << truncated_note(res);
      rep.lines.push_back({"3block", "x=" + std::to_string(x) + ",d=" + fmt_deltas(d), exp.str(), obs.str(),
                           shape_ok && bound_ok && eq_ok && formula_ok});
    }
  }
  return rep;
}

SuiteReport verify_vertex(const VertexSuite& s) {
  SuiteReport rep;
  for (int x : s.xs) {
    for (auto [r, b] : s.overlaps) {
      auto g = make_vertex_gadget(Coord(0), x);
      auto h = attach_stubs(g);
      auto in = assemble(h.model.blocks(), h.model.alpha(), {{"over", Coord(-2), r, b}}, {});
      auto res = solve_all(in);
      int worst = 0;
      bool ok = res.optima_complete;
      for (const auto& opt : res.optima) {
        int ex = chain_excess(g, in.model, in.graph, opt);
        if (ex < 0) {
          ok = false;
          continue;
        }
        worst = std::max(worst, ex);
        for (const auto& p : g.ports) {
          int from = side_of(in.graph, opt, p.block);
          if (from < 0 || red_of(in.graph, opt, stub_id(g, p)) == from) ok = false;
        }
      }
      ok = ok && worst <= 1;
      std::ostringstream params, exp, obs;
      params << "x=" << x << ",r=" << r << ",b=" << b;
      exp << "alternating;B2excess<=0|1;longs_opposite";
      obs << "optima=" << res.optima_count << ";worst_excess=" << worst
          << (worst <= 0 ? ";half_bound_holds" : ";needs_plus_one") << truncated_note(res);
      rep.lines.push_back({"vertex", params.str(), exp.str(), obs.str(), ok});
    }
  }
  return rep;
}

SuiteReport verify_edge(const EdgeSuite& s) {
  SuiteReport rep;
  for (int k : s.ks) {
    for (int d : s.deltas) {
      const int r = std::max(d, 0), b = std::max(-d, 0);
      auto g = make_edge_gadget(Coord(0), k);
      auto h = attach_stubs(g);
      const auto& left = g.port("left");
      const auto& right = g.port("right");
      std::set<std::string> part;
      for (const auto& id : g.intended.ids()) part.insert(id);
      part.insert(stub_id(g, left));
      part.insert(stub_id(g, right));

      std::int64_t same_max = 0, diff_min = 0, same_total = 0, diff_total = 0;
      bool first_same = true, first_diff = true, complete = true;
      for (int cl = 0; cl < 2; ++cl) {
        for (int cr = 0; cr < 2; ++cr) {
          auto in = assemble(h.model.blocks(), h.model.alpha(), {{"over", Coord(-1), r, b}},
                             {{stub_id(g, left), cl}, {stub_id(g, right), cr}});
          auto res = solve_all(in);
          complete = complete && res.optima_complete;
          std::int64_t lo = 0, hi = 0;
          bool first = true;
          for (const auto& opt : res.optima) {
            auto v = induced_cut(in.graph, opt, part);
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
          }
          if (cl == cr) {
            same_max = first_same ? hi : std::max(same_max, hi);
            same_total = first_same ? res.value : std::max(same_total, res.value);
            first_same = false;
          } else {
            diff_min = first_diff ? lo : std::min(diff_min, lo);
            diff_total = first_diff ? res.value : std::min(diff_total, res.value);
            first_diff = false;
          }
        }
      }
      auto cases = eval_edge_cases(k, r, b);
      bool ok = complete && same_max <= cases.same_color_max && Coord(diff_min) >= cases.diff_color_min &&
                diff_total > same_total;
      std::ostringstream params, exp, obs;
      params << "k=" << k << ",r-b=" << d;
      exp << "same<=" << cases.same_color_max << ";diff>=" << format_coord(cases.diff_color_min)
          << ";diff_total>same_total";
      obs << "same=" << same_max << ";diff=" << diff_min << ";totals=" << same_total << "/" << diff_total
          << (complete ? "" : ";optima_truncated");
      rep.lines.push_back({"edge", params.str(), exp.str(), obs.str(), ok});
    }
  }
  return rep;
}

SuiteReport verify_link(const LinkSuite& s) {
  SuiteReport rep;
  for (int x : s.xs) {
    for (auto [r, b] : s.overlaps) {
      for (int c = 0; c < 2; ++c) {
        auto g = make_link_gadget(Coord(0), x);
        auto h = attach_stubs(g);
        std::vector<std::pair<std::string, int>> pins;
        for (const auto& p : g.ports)
          if (p.kind == PortKind::ArriveIn) pins.push_back({stub_id(g, p), c});
        auto in = assemble(h.model.blocks(), h.model.alpha(), {{"over", Coord(-2), r, b}}, pins);
        auto res = solve_all(in);
        int worst = 0;
        bool ok = res.optima_complete;
        for (const auto& opt : res.optima) {
          int ex = chain_excess(g, in.model, in.graph, opt);
          if (ex < 0) {
            ok = false;
            continue;
          }
          worst = std::max(worst, ex);
          for (const auto& p : g.ports) {
            if (p.kind != PortKind::LeaveFrom) continue;
            if (red_of(in.graph, opt, stub_id(g, p)) != c) ok = false;
          }
          if (side_of(in.graph, opt, "t1.B2") != c) ok = false;
        }
        ok = ok && worst <= 0;
        std::ostringstream params, exp, obs;
        params << "x=" << x << ",r=" << r << ",b=" << b << ",in=" << (c ? "red" : "blue");
        exp << "out=in=central;B2excess<=0";
        obs << "optima=" << res.optima_count << ";worst_excess=" << worst << truncated_note(res);
        rep.lines.push_back({"link", params.str(), exp.str(), obs.str(), ok});
      }
    }
  }
  return rep;
}

SuiteReport verify_switch(const SwitchSuite& s) {
  SuiteReport rep;
  for (auto [x, xp] : s.params) {
    for (int d : s.deltas) {
      if (s.guard && Coord(x) <= switch_threshold(d))
        throw GuardRefusal("switch: x=" + std::to_string(x) + " is not above the bound " +
                           decimal(switch_threshold(d)) + " for r-b=" + std::to_string(d));
      const int r = std::max(d, 0), b = std::max(-d, 0);
      auto g = make_switch_gadget(Coord(0), x, xp);
      auto h = attach_stubs(g, Coord(24));
      std::set<std::string> inner(g.intended.ids().begin(), g.intended.ids().end());
      const std::string sL1 = stub_id(g, g.port("L1")), sR1 = stub_id(g, g.port("R1"));
      const std::string sL2 = stub_id(g, g.port("L2")), sR2 = stub_id(g, g.port("R2"));
      const int allowed = ceil_half(d);
      for (int cl = 0; cl < 2; ++cl) {
        for (int cr = 0; cr < 2; ++cr) {
          auto in = assemble(h.model.blocks(), h.model.alpha(), {{"over", Coord(-5), r, b}},
                             {{sL1, cl}, {sR1, cr}});
          auto res = solve_all(in);
          bool ok = res.optima_complete;
          int worst = 0;
          std::string bad;
          std::set<std::int64_t> internal;
          for (const auto& opt : res.optima) {
            auto rows = classify_partition(g, in.graph, opt);
            if (rows[0].verdict != Verdict::Alternating) {
              ok = false;
              bad = "bottom:" + rows[0].describe();
            }
            const auto& top = rows[1];
            if (top.verdict == Verdict::AlmostAlternating && d != 0 &&
                (top.block == switch_top_id(1) || top.block == switch_top_id(4)) && top.deviation <= allowed) {
              worst = std::max(worst, top.deviation);
            } else if (top.verdict != Verdict::Alternating) {
              ok = false;
              bad = "top:" + top.describe();
            }
            int l2 = red_of(in.graph, opt, sL2), r2 = red_of(in.graph, opt, sR2);
            if (l2 == cr) {
              ok = false;
              bad = "L2=R1";
            }
            if (r2 != cl) {
              ok = false;
              bad = "R2!=L1";
            }
            internal.insert(induced_cut(in.graph, opt, inner));
          }
          std::ostringstream params, exp, obs;
          params << "x=" << x << ",x'=" << xp << ",r-b=" << d << ",L1=" << (cl ? "red" : "blue")
                 << ",R1=" << (cr ? "red" : "blue");
          exp << "rows_alternate;dev<=" << allowed << "@top1|top4;L2!=R1;R2=L1";
          if (d == 0) exp << ";internal=" << eval_switch_alter(x, xp);
          obs << "optima=" << res.optima_count << ";worst_dev=" << worst;
          if (!bad.empty()) obs << ";violation=" << bad;
          if (d == 0) {
            obs << ";internal=";
            bool firsti = true;
            for (auto v : internal) {
              obs << (firsti ? "" : "|") << v;
              firsti = false;
            }
            if (internal.size() != 1 || *internal.begin() != eval_switch_alter(x, xp)) ok = false;
          }
          obs << truncated_note(res);
          rep.lines.push_back({"switch", params.str(), exp.str(), obs.str(), ok});
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_compress(const CompressSuite& s) {
  SuiteReport rep;
  for (int c = 1; c <= 3; ++c) {
    for (Coord d = Coord(2) + s.step; d <= s.max_distance; d += s.step) {
      std::ostringstream params, obs;
      params << "case=" << c << ",d=" << decimal(d);
      bool ok = false;
      try {
        auto p = compress_placement(d, c);
        Coord a = p.layout.ports.at(0).anchor, e = p.layout.ports.at(1).anchor;
        auto g = realize(p, s.x);
        auto v = validate_gadget(g, compress_validation_options());
        ok = (e - a) == d && v.ok();
        obs << "j=" << p.j << ";realized=" << decimal(e - a) << (p.in_paper_range ? "" : ";outside_stated_range")
            << (v.ok() ? "" : ";invalid:" + std::to_string(v.violations.size()));
      } catch (const std::exception& ex) {
        obs << "error";
      }
      rep.lines.push_back({"compress", params.str(), "placement;exact;valid", obs.str(), ok});
    }
  }
  return rep;
}

}  // namespace ivc2
