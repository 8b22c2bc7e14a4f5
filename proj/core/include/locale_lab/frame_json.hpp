#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "locale_lab/frame.hpp"

namespace locale_lab {

/// Reads { "elements": [label...], "leq": [[label, label]...] }. The relation
/// may list covers only. Labels must be unique. Structural problems throw
/// InvalidInput; order problems surface from validate_frame.
Frame frame_from_json(const nlohmann::json& doc, std::size_t max_elements = kDefaultValidationLimit);
Frame load_frame_file(const std::filesystem::path& path, std::size_t max_elements = kDefaultValidationLimit);

/// Writes the same format, with `leq` holding the covering pairs.
nlohmann::json frame_to_json(const Frame& L);

}  // namespace locale_lab
