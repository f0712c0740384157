#include "ivc2/compress.hpp"

namespace ivc2 {

namespace {

std::pair<PortKind, PortKind> kinds(int c) {
  switch (c) {
    case 1: return {PortKind::ArriveIn, PortKind::ArriveIn};
    case 2: return {PortKind::ArriveIn, PortKind::LeaveFrom};
    case 3: return {PortKind::LeaveFrom, PortKind::ArriveIn};
  }
  throw ModelError("port case must be 1, 2 or 3");
}

std::vector<Coord> offsets(PortKind kind, const std::pair<Coord, Coord>& s) {
  std::vector<Coord> out;
  const Coord e(1, 8);
  if (kind == PortKind::ArriveIn) {
    for (Coord o(0); o < s.first; o += e) out.push_back(o);
  } else {
    for (Coord o = s.first + s.second + 1; o > s.first + 1; o -= e) out.push_back(o);
  }
  return out;
}

ThreeBlockGeom geom(const Coord& left, const std::pair<Coord, Coord>& s) { return {left, s.first, s.second}; }

const std::vector<std::pair<Coord, Coord>>& mids() {
  static const std::vector<std::pair<Coord, Coord>> m = {
      {Coord(1), Coord(1)}, {Coord(7, 8), Coord(7, 8)}, {Coord(3, 4), Coord(3, 4)}, {Coord(5, 8), Coord(5, 8)}};
  return m;
}

}  // namespace

std::pair<Coord, Coord> paper_range(int c, std::size_t j) {
  Coord jj(static_cast<std::int64_t>(j));
  switch (c) {
    case 1: return {2 * jj, 4 * jj};
    case 2: return {2 * jj + 2, 4 * jj + 3};
    case 3: return {2 * jj - 2, 4 * jj - 3};
  }
  throw ModelError("port case must be 1, 2 or 3");
}

std::optional<CompressPlacement> compress_with_j(const Coord& d, int c, std::size_t j) {
  auto [k1, k2] = kinds(c);
  if (c == 3 && j == 0) return std::nullopt;
  if (c == 1 && j == 0) return std::nullopt;
  for (const auto& s0 : block_shapes()) {
    for (const auto& o1 : offsets(k1, s0)) {
      ThreeBlockGeom b0 = geom(-o1, s0);
      if (j == 0) {
        if (port_fits(b0, k2, d)) {
          CompressPlacement cp{c, d, 0, true, finish_layout({b0}, {{k1, 0, Coord(0)}, {k2, 0, d}})};
          return cp;
        }
        continue;
      }
      for (const auto& s1 : block_shapes()) {
        for (const auto& o2 : offsets(k2, s1)) {
          Coord D = d - o2 - b0.left;
          for (const auto& sm : mids()) {
            std::vector<PitchRange> rs;
            if (j == 1) {
              rs.push_back(pitch_range_between(s0, s1));
            } else {
              rs.push_back(pitch_range_between(s0, sm));
              for (std::size_t i = 0; i + 2 < j; ++i) rs.push_back(pitch_range_between(sm, sm));
              rs.push_back(pitch_range_between(sm, s1));
            }
            Coord lo(0), hi(0);
            bool bad = false;
            for (const auto& r : rs) {
              bad = bad || r.empty;
              lo += r.lo;
              hi += r.hi;
            }
            if (bad || D < lo || D > hi) continue;
            auto pitch = distribute(rs, D);
            std::vector<ThreeBlockGeom> blocks{b0};
            Coord pos = b0.left;
            for (std::size_t i = 0; i < j; ++i) {
              pos += pitch[i];
              blocks.push_back(geom(pos, i + 1 == j ? s1 : sm));
            }
            auto layout = finish_layout(blocks, {{k1, 0, Coord(0)}, {k2, j, d}});
            if (!check_layout(layout).empty()) continue;
            return CompressPlacement{c, d, j, true, layout};
          }
        }
      }
    }
  }
  return std::nullopt;
}

CompressPlacement compress_placement(const Coord& d, int c) {
  kinds(c);
  if (d <= 2) throw ModelError("compress_placement: distance must exceed 2 (got " + decimal(d) + ")");
  if (!on_eighth_grid(d)) throw ModelError("compress_placement: distance must be on the eighth grid");
  const std::size_t first = c == 2 ? 0 : 1;
  const std::size_t last = static_cast<std::size_t>(boost::rational_cast<double>(d)) + 2;
  for (std::size_t j = first; j <= last; ++j) {
    auto [lo, hi] = paper_range(c, j);
    if (d > lo && d <= hi)
      if (auto cp = compress_with_j(d, c, j)) return *cp;
  }
  for (std::size_t j = first; j <= last; ++j) {
    if (auto cp = compress_with_j(d, c, j)) {
      cp->in_paper_range = false;
      return *cp;
    }
  }
  throw ModelError("compress_placement: no placement for distance " + decimal(d));
}

GadgetInstance realize(const CompressPlacement& p, int x, const Naming& naming) {
  return make_chain_gadget(p.layout, x, GadgetKind::Stretch, naming);
}

ValidationOptions compress_validation_options() {
  ValidationOptions o;
  o.same_type_min = Coord(2);
  o.opposite_min = Coord(2);
  return o;
}

}  // namespace ivc2
