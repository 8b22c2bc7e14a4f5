#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locale_lab/frame.hpp"
#include "locale_lab/frame_json.hpp"

namespace locale_lab::testing {

inline std::filesystem::path data_dir() { return LOCALE_LAB_TEST_DATA; }
inline std::filesystem::path golden_dir() { return LOCALE_LAB_TEST_GOLDEN; }

inline const nlohmann::json& oracle() {
  static const nlohmann::json doc = [] {
    std::ifstream in(golden_dir() / "oracle_values.json");
    return nlohmann::json::parse(in);
  }();
  return doc;
}

inline Frame data_frame(const std::string& name) { return load_frame_file(data_dir() / (name + ".json")); }

inline std::vector<std::string> sorted(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline Bitset members_of(const Frame& L, const std::vector<std::string>& labels) {
  Bitset b(L.size());
  for (const auto& s : labels) b.set(L.at(s));
  return b;
}

}  // namespace locale_lab::testing
