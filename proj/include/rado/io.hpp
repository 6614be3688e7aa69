#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rado/coloring.hpp"

namespace rado {

// Colouring file: first line "N n", then N lines, line i holding the colour
// of integer i. Parse errors carry the file name and line number.
Coloring load_coloring(const std::filesystem::path& path);
void save_coloring(const std::filesystem::path& path, const Coloring& c);

// Set file: one integer per line; blank lines ignored.
std::vector<std::int64_t> load_set(const std::filesystem::path& path);

}  // namespace rado
