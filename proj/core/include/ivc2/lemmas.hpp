#pragma once

#include "ivc2/coord.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivc2 {

// Raised when a requested parameter point sits below the paper's own "x large enough" bound.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "lemma params expected observed PASS|FAIL", no spaces inside fields.
struct ReportLine {
  std::string lemma;
  std::string params;
  std::string expected;
  std::string observed;
  bool pass = false;

  std::string str() const;
};

struct SuiteReport {
  std::vector<ReportLine> lines;
  bool pass() const;
  std::size_t failures() const;
  void write(std::ostream& os) const;
};

// Paper bounds used by the guard.
Coord three_block_threshold(const std::array<int, 4>& deltas);
Coord switch_threshold(int delta);

struct ThreeBlockSuite {
  std::vector<int> xs{6, 8, 10};
  int max_delta = 2;
  std::optional<std::array<int, 4>> only;  // a single profile instead of the grid
  bool guard = true;
};
SuiteReport verify_three_block(const ThreeBlockSuite& s);

struct VertexSuite {
  std::vector<int> xs{6, 8};
  std::vector<std::pair<int, int>> overlaps{{0, 0}, {1, 0}, {2, 0}, {0, 2}, {3, 1}};  // (r, b)
};
SuiteReport verify_vertex(const VertexSuite& s);

struct EdgeSuite {
  std::vector<int> ks{3, 5, 8};
  std::vector<int> deltas{-2, -1, 0, 1, 2};  // r - b of the overlapping family
};
SuiteReport verify_edge(const EdgeSuite& s);

struct LinkSuite {
  std::vector<int> xs{6, 8};
  std::vector<std::pair<int, int>> overlaps{{0, 0}, {1, 0}, {0, 2}};
};
SuiteReport verify_link(const LinkSuite& s);

struct SwitchSuite {
  std::vector<std::pair<int, int>> params{{5, 3}, {7, 4}};
  std::vector<int> deltas{0, 1, 2, -1, -2};
  bool guard = false;
};
SuiteReport verify_switch(const SwitchSuite& s);

struct CompressSuite {
  Coord max_distance = Coord(40);
  Coord step = Coord(1, 2);
  int x = 2;
};
SuiteReport verify_compress(const CompressSuite& s);

}  // namespace ivc2
