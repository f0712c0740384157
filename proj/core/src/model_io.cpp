#include "ivc2/model_io.hpp"

#include <fstream>
#include <sstream>

namespace ivc2 {

void write_model(std::ostream& os, const IntervalModel& model) {
  os << "alpha " << format_coord(model.alpha()) << "\n";
  for (const auto& b : model.blocks()) {
    os << b.id << ' ' << format_coord(b.left) << ' ';
    switch (model.length_class(b)) {
      case LengthClass::Short: os << "short"; break;
      case LengthClass::Long: os << "long"; break;
      case LengthClass::Irregular: os << format_coord(b.length); break;
    }
    os << ' ' << b.multiplicity << ' ' << (b.tag.empty() ? "-" : b.tag) << "\n";
  }
}

std::string model_to_string(const IntervalModel& model) {
  std::ostringstream os;
  write_model(os, model);
  return os.str();
}

IntervalModel read_model(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<Coord> alpha;
  std::vector<Block> blocks;
  std::vector<std::string> lengths;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!alpha) {
      std::string key, value;
      ls >> key >> value;
      if (key != "alpha" || value.empty())
        throw ModelError("line " + std::to_string(lineno) + ": expected 'alpha <num>/<den>' header");
      alpha = parse_coord(value);
      continue;
    }
    Block b;
    std::string left, len;
    if (!(ls >> b.id >> left >> len >> b.multiplicity))
      throw ModelError("line " + std::to_string(lineno) + ": expected 'id left lengthClass multiplicity tag'");
    b.left = parse_coord(left);
    std::getline(ls >> std::ws, b.tag);
    if (b.tag == "-") b.tag.clear();
    blocks.push_back(std::move(b));
    lengths.push_back(len);
  }
  if (!alpha) throw ModelError("missing alpha header");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (lengths[i] == "short") blocks[i].length = Coord(1);
    else if (lengths[i] == "long") blocks[i].length = *alpha;
    else blocks[i].length = parse_coord(lengths[i]);
  }
  return IntervalModel(*alpha, std::move(blocks));
}

IntervalModel model_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_model(is);
}

IntervalModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  return read_model(in);
}

}  // namespace ivc2
