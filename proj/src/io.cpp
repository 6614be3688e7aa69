#include "rado/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rado {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& message) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + message);
}

}  // namespace

Coloring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open colouring file " + path.string());
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) fail(path, 1, "expected header \"N n\"");
  std::istringstream head(line);
  std::int64_t n_elements = 0;
  int n_colors = 0;
  std::string extra;
  if (!(head >> n_elements >> n_colors) || (head >> extra))
    fail(path, lineno, "expected header \"N n\"");
  if (n_elements < 1 || n_elements > 10'000'000)
    fail(path, lineno, "ground-set size out of range");
  if (n_colors < 1 || n_colors > 1'000'000) fail(path, lineno, "colour count out of range");

  std::vector<int> assign;
  assign.reserve(static_cast<std::size_t>(n_elements));
  for (std::int64_t i = 1; i <= n_elements; ++i) {
    if (!next_line()) fail(path, lineno + 1, "expected colour of element " + std::to_string(i));
    std::istringstream row(line);
    int col = 0;
    if (!(row >> col) || (row >> extra))
      fail(path, lineno, "expected a single colour index");
    if (col < 1 || col > n_colors)
      fail(path, lineno, "colour " + std::to_string(col) + " outside [1.." +
                             std::to_string(n_colors) + "]");
    assign.push_back(col);
  }
  if (next_line()) fail(path, lineno, "trailing content after the last element");
  return Coloring(n_colors, assign);
}

void save_coloring(const std::filesystem::path& path, const Coloring& c) {
  std::vector<int> assign = c.assignments();  // throws for oversized colourings
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write colouring file " + path.string());
  out << c.ground_size() << ' ' << c.num_colors() << '\n';
  for (int col : assign) out << col << '\n';
  if (!out) throw std::runtime_error("write failure on " + path.string());
}

std::vector<std::int64_t> load_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file " + path.string());
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::int64_t v = 0;
    std::string extra;
    if (!(row >> v) || (row >> extra)) fail(path, lineno, "expected a single integer");
    values.push_back(v);
  }
  return values;
}

}  // namespace rado
