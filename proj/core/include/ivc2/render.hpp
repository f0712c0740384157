#pragma once

#include "ivc2/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace ivc2 {

enum class RenderFormat { Svg, Text };

struct RenderSpec {
  RenderFormat format = RenderFormat::Text;
  // svg: units per pixel; text: columns per unit
  std::optional<Coord> scale;
  std::optional<BlockAssignment> colorize;  // aligned with model order
  std::string title;
};

// Short blocks are packed into rows, long intervals get rows of their own below.
void render(std::ostream& os, const IntervalModel& model, const RenderSpec& spec);
std::string render_to_string(const IntervalModel& model, const RenderSpec& spec);

}  // namespace ivc2
