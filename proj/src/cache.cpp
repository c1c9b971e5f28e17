#include "mcg/cache.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "mcg/canon.hpp"

namespace mcg {

namespace fs = std::filesystem;

std::string cache_path(const std::string &dir, int genus, int punctures) {
  return (fs::path(dir) / ("L-g" + std::to_string(genus) + "-p" + std::to_string(punctures) + ".json"))
      .string();
}

namespace {

std::optional<EnumerationResult> load_verified(const std::string &path, int genus, int punctures) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception &) {
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("graphs") || !doc["graphs"].is_array()) return std::nullopt;
  if (doc.value("genus", -1) != genus || doc.value("punctures", -1) != punctures) return std::nullopt;

  EnumerationResult result;
  result.note = doc.value("note", "");
  const int n = 2 * genus + punctures;
  for (const auto &entry : doc["graphs"]) {
    if (!entry.is_string()) return std::nullopt;
    OrderedGraph g;
    try {
      g = parse_graph(entry.get<std::string>());
    } catch (const ParseError &) {
      return std::nullopt;
    }
    if (!validate(g).ok()) return std::nullopt;
    if (g.others().size() != 2 || g.others()[0].size() != 3 || g.others()[1].size() != 3)
      return std::nullopt;
    if (static_cast<int>(g.base().size()) != 2 * n - 2) return std::nullopt;
    if (static_cast<int>(boundary_words(g).cycles.size()) != punctures) return std::nullopt;
    if (canonical_form_full(g).representative != g) return std::nullopt;
    result.graphs.push_back(std::move(g));
  }
  for (std::size_t i = 1; i < result.graphs.size(); ++i)
    if (!(result.graphs[i - 1] < result.graphs[i])) return std::nullopt;
  return result;
}

} // namespace

void store_L(const std::string &dir, int genus, int punctures, const EnumerationResult &result) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  nlohmann::ordered_json doc;
  doc["genus"] = genus;
  doc["punctures"] = punctures;
  doc["note"] = result.note;
  doc["graphs"] = nlohmann::json::array();
  for (const auto &g : result.graphs) doc["graphs"].push_back(encode(g));
  std::ofstream out(cache_path(dir, genus, punctures));
  out << doc.dump(2) << '\n';
}

EnumerationResult list_L_cached(int genus, int punctures, const std::string &dir, const Budget *budget,
                                CacheOutcome *outcome) {
  if (outcome) *outcome = {};
  if (!dir.empty()) {
    const std::string path = cache_path(dir, genus, punctures);
    if (fs::exists(path)) {
      if (auto cached = load_verified(path, genus, punctures)) {
        if (outcome) outcome->hit = true;
        return *cached;
      }
      if (outcome) outcome->corrupt = true;
    }
  }
  EnumerationResult result = list_L(genus, punctures, budget);
  store_L(dir, genus, punctures, result);
  return result;
}

} // namespace mcg
