#include "locale_lab/frame_json.hpp"

#include <fstream>
#include <sstream>

namespace locale_lab {

Frame frame_from_json(const nlohmann::json& doc, std::size_t max_elements) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("leq"))
    throw LocaleError(ErrorKind::InvalidInput, "frame JSON needs \"elements\" and \"leq\"");
  const auto& elements = doc.at("elements");
  const auto& leq = doc.at("leq");
  if (!elements.is_array() || !leq.is_array())
    throw LocaleError(ErrorKind::InvalidInput, "\"elements\" and \"leq\" must be arrays");

  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) throw LocaleError(ErrorKind::InvalidInput, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw LocaleError(ErrorKind::InvalidInput, "duplicate element label", {labels[i]});

  std::vector<OrderPair> pairs;
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw LocaleError(ErrorKind::InvalidInput, "each \"leq\" entry must be a pair of labels");
    auto a = index.find(p[0].get<std::string>());
    auto b = index.find(p[1].get<std::string>());
    if (a == index.end() || b == index.end())
      throw LocaleError(ErrorKind::InvalidInput, "\"leq\" mentions an unknown label",
                        {p[0].get<std::string>(), p[1].get<std::string>()});
    pairs.emplace_back(a->second, b->second);
  }
  const std::size_t n = labels.size();
  return validate_frame(n, pairs, std::move(labels), max_elements);
}

Frame load_frame_file(const std::filesystem::path& path, std::size_t max_elements) {
  std::ifstream in(path);
  if (!in) throw LocaleError(ErrorKind::InvalidInput, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw LocaleError(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
  return frame_from_json(doc, max_elements);
}

nlohmann::json frame_to_json(const Frame& L) {
  nlohmann::json leq = nlohmann::json::array();
  for (auto [a, b] : L.covers()) leq.push_back({L.label(a), L.label(b)});
  return {{"elements", L.labels()}, {"leq", std::move(leq)}};
}

}  // namespace locale_lab
