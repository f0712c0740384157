#include "ivc2/coord.hpp"

#include <charconv>
#include <sstream>

namespace ivc2 {

std::string format_coord(const Coord& c) {
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ModelError("bad rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Coord parse_coord(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den <= 0) throw ModelError("bad denominator in '" + std::string(text) + "'");
    return Coord(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool neg = !text.empty() && text[0] == '-';
    auto ip = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    auto fp = text.substr(dot + 1);
    if (fp.size() > 12) throw ModelError("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
    Coord v = Coord(whole) + Coord(frac, scale);
    return neg ? -v : v;
  }
  return Coord(parse_int(text, text));
}

bool on_eighth_grid(const Coord& c) { return 8 % c.denominator() == 0; }

std::string decimal(const Coord& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  std::int64_t d = c.denominator();
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return format_coord(c);
  int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = c.numerator() * (scale / c.denominator());
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string frac = std::to_string(scaled % scale);
  while (static_cast<int>(frac.size()) < digits) frac = "0" + frac;
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return (neg ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
}

}  // namespace ivc2
