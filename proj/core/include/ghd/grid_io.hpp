#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ghd/design.hpp"

namespace ghd {

// Text grid: one line per row, cells separated by '|', symbols separated by
// whitespace, '#' starts a comment line. Symbol ids follow first appearance.
GhdArray parse_text_grid(std::string_view text, Params params = {});
std::string format_text_grid(const GhdArray& g);

nlohmann::json grid_to_json(const GhdArray& g);
GhdArray grid_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Dispatches on content: '{' means JSON, otherwise a text grid.
GhdArray load_grid(const std::filesystem::path& path);

}  // namespace ghd
