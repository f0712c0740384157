#include "ivc2/render.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ivc2 {

namespace {

enum class Fill { None, Red, Blue, Mixed };

Fill fill_of(const RenderSpec& spec, std::size_t i, const Block& b) {
  if (!spec.colorize) return Fill::None;
  int r = spec.colorize->red.at(i);
  if (r == 0) return Fill::Blue;
  if (r == b.multiplicity) return Fill::Red;
  return Fill::Mixed;
}

std::int64_t floor_int(const Coord& c) {
  std::int64_t q = c.numerator() / c.denominator();
  if (c.numerator() % c.denominator() != 0 && c.numerator() < 0) --q;
  return q;
}

// Greedy packing: first row whose last interval ends strictly before this one starts.
template <class Key>
std::vector<int> pack(const std::vector<std::size_t>& idx, const IntervalModel& m, Key key) {
  std::vector<int> row(idx.size());
  std::vector<std::int64_t> last;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    auto [lo, hi] = key(m[idx[a]]);
    std::size_t r = 0;
    while (r < last.size() && last[r] >= lo) ++r;
    if (r == last.size()) last.push_back(hi);
    else last[r] = hi;
    row[a] = static_cast<int>(r);
  }
  return row;
}

void render_text(std::ostream& os, const IntervalModel& m, const RenderSpec& spec) {
  const Coord per = spec.scale.value_or(Coord(4));
  if (m.size() == 0) {
    os << "(empty model)\n";
    return;
  }
  Coord lo = m[0].left;
  for (const auto& b : m.blocks()) lo = std::min(lo, b.left);
  auto col = [&](const Coord& x) { return floor_int((x - lo) * per); };
  std::size_t inexact = 0;
  std::vector<std::size_t> shorts, longs;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (((m[i].left - lo) * per).denominator() != 1 || ((m[i].right() - lo) * per).denominator() != 1) ++inexact;
    (m.length_class(m[i]) == LengthClass::Short ? shorts : longs).push_back(i);
  }
  auto key = [&](const Block& b) { return std::make_pair(col(b.left), col(b.right())); };
  auto draw = [&](const std::vector<std::size_t>& idx, char body) {
    auto rows = pack(idx, m, key);
    int nrows = idx.empty() ? 0 : *std::max_element(rows.begin(), rows.end()) + 1;
    for (int r = 0; r < nrows; ++r) {
      std::string line;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (rows[a] != r) continue;
        const auto& b = m[idx[a]];
        auto [c0, c1] = key(b);
        if (line.size() < static_cast<std::size_t>(c1 + 1)) line.resize(c1 + 1, ' ');
        char ch = body;
        switch (fill_of(spec, idx[a], b)) {
          case Fill::Red: ch = 'R'; break;
          case Fill::Blue: ch = 'B'; break;
          case Fill::Mixed: ch = 'm'; break;
          case Fill::None: break;
        }
        for (auto c = c0; c <= c1; ++c) line[c] = ch;
        line[c0] = '[';
        line[c1] = ']';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
  };
  if (!spec.title.empty()) os << spec.title << "\n";
  draw(shorts, '#');
  if (!longs.empty()) {
    os << "\n";
    draw(longs, '=');
  }
  os << "\nlegend: 1 column = " << decimal(Coord(1) / per) << " unit, origin " << decimal(lo)
     << "; ends snap down to a column (error below one column)";
  if (inexact) os << "; " << inexact << " block(s) off the column grid";
  if (spec.colorize) os << "; R red, B blue, m mixed";
  os << "\n";
}

// Fixed three decimals, rounded half away from zero.
std::string px(const Coord& c) {
  Coord t = c * 1000;
  std::int64_t v = (2 * t.numerator() + (t.numerator() < 0 ? -t.denominator() : t.denominator())) /
                   (2 * t.denominator());
  std::string sign = v < 0 ? "-" : "";
  if (v < 0) v = -v;
  std::string out = sign + std::to_string(v / 1000);
  if (v % 1000) {
    std::string frac = std::to_string(v % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    while (frac.back() == '0') frac.pop_back();
    out += "." + frac;
  }
  return out;
}

void render_svg(std::ostream& os, const IntervalModel& m, const RenderSpec& spec) {
  const Coord upp = spec.scale.value_or(Coord(1, 40));
  const Coord row_h(20), box_h(16), margin(10);
  Coord lo(0), hi(0);
  if (m.size()) {
    lo = m[0].left;
    hi = m[0].right();
    for (const auto& b : m.blocks()) {
      lo = std::min(lo, b.left);
      hi = std::max(hi, b.right());
    }
  }
  auto X = [&](const Coord& x) { return (x - lo) / upp + margin; };
  std::vector<std::size_t> shorts, longs;
  for (std::size_t i = 0; i < m.size(); ++i)
    (m.length_class(m[i]) == LengthClass::Short ? shorts : longs).push_back(i);
  // pack on exact coordinates scaled to eighths
  auto key = [&](const Block& b) {
    return std::make_pair(floor_int((b.left - lo) * 8), floor_int((b.right() - lo) * 8));
  };
  auto srows = pack(shorts, m, key);
  auto lrows = pack(longs, m, key);
  int ns = shorts.empty() ? 0 : *std::max_element(srows.begin(), srows.end()) + 1;
  int nl = longs.empty() ? 0 : *std::max_element(lrows.begin(), lrows.end()) + 1;
  Coord width = X(hi) + margin;
  Coord height = row_h * (ns + nl + 1) + margin * 2;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\"" << px(height)
     << "\">\n";
  if (!spec.title.empty()) os << "<title>" << spec.title << "</title>\n";
  auto colour = [&](std::size_t i) {
    switch (fill_of(spec, i, m[i])) {
      case Fill::Red: return "#d62728";
      case Fill::Blue: return "#1f77b4";
      case Fill::Mixed: return "#9467bd";
      case Fill::None: break;
    }
    return "#d9d9d9";
  };
  for (std::size_t a = 0; a < shorts.size(); ++a) {
    const auto& b = m[shorts[a]];
    Coord y = margin + row_h * srows[a];
    os << "<rect x=\"" << px(X(b.left)) << "\" y=\"" << px(y) << "\" width=\"" << px(b.length / upp)
       << "\" height=\"" << px(box_h) << "\" fill=\"" << colour(shorts[a])
       << "\" stroke=\"#000\"><title>" << b.id << " x" << b.multiplicity << "</title></rect>\n";
  }
  for (std::size_t a = 0; a < longs.size(); ++a) {
    const auto& b = m[longs[a]];
    Coord y = margin + row_h * (ns + 1 + lrows[a]) + box_h / 2;
    const char* stroke = spec.colorize ? colour(longs[a]) : "#000";
    os << "<line x1=\"" << px(X(b.left)) << "\" y1=\"" << px(y) << "\" x2=\"" << px(X(b.right())) << "\" y2=\""
       << px(y) << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"><title>" << b.id << "</title></line>\n";
  }
  os << "</svg>\n";
}

}  // namespace

void render(std::ostream& os, const IntervalModel& model, const RenderSpec& spec) {
  if (spec.scale && *spec.scale <= Coord(0)) throw ModelError("render scale must be positive");
  if (spec.colorize && spec.colorize->red.size() != model.size())
    throw ModelError("colouring does not match the model");
  if (spec.format == RenderFormat::Svg) render_svg(os, model, spec);
  else render_text(os, model, spec);
}

std::string render_to_string(const IntervalModel& model, const RenderSpec& spec) {
  std::ostringstream os;
  render(os, model, spec);
  return os.str();
}

}  // namespace ivc2
