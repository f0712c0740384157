#pragma once

#include "ivc2/model.hpp"

#include <iosfwd>
#include <string>

namespace ivc2 {

// Header "alpha n/d", then "id left lengthClass multiplicity tag" per block.
// lengthClass is "short", "long" or an explicit rational for anything else.
void write_model(std::ostream& os, const IntervalModel& model);
std::string model_to_string(const IntervalModel& model);

IntervalModel read_model(std::istream& is);
IntervalModel model_from_string(const std::string& text);
IntervalModel load_model(const std::string& path);

}  // namespace ivc2
