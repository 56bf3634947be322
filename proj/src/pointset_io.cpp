#include "canprod/pointset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace canprod {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_pointset_csv(const DiscretePointSet& X, std::ostream& out) {
  out << "x\n";
  for (double v : X.points) out << format_number(v) << "\n";
}

void write_pointset_csv(const DiscretePointSet& X, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_pointset_csv(X, out);
}

DiscretePointSet read_pointset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("pointset csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x") throw std::runtime_error("pointset csv: expected header 'x'");
  std::vector<double> pts;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    pts.push_back(std::stod(line));
  }
  return DiscretePointSet(std::move(pts));
}

DiscretePointSet read_pointset_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_pointset_csv(in);
}

}  // namespace canprod
