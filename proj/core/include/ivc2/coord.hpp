#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ivc2 {

// One unit is the length of a short interval.
using Coord = boost::rational<std::int64_t>;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n/d" (always with the slash, lowest terms).
std::string format_coord(const Coord& c);

// Accepts "n/d", "n", or a decimal such as "6.5" / "-0.125".
Coord parse_coord(std::string_view text);

// True when the reduced denominator divides 8.
bool on_eighth_grid(const Coord& c);

inline Coord eighths(std::int64_t n) { return Coord(n, 8); }

// Human friendly decimal, e.g. 3.5 or 4.375. Exact for dyadic values.
std::string decimal(const Coord& c);

}  // namespace ivc2
