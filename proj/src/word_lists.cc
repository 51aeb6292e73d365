// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/word_lists.h"

#include <fstream>

#include "topicgap/errors.h"
#include "topicgap/log.h"

namespace topicgap {

std::vector<WordList> ParseWordLists(const nlohmann::json& manifest,
                                     const TokenizerRules& rules) {
  if (!manifest.is_object() || !manifest.contains("lists") ||
      !manifest["lists"].is_array()) {
    throw DataError("word-list manifest needs a \"lists\" array");
  }
  std::vector<WordList> lists;
  std::set<std::string> labels;
  for (const auto& entry : manifest["lists"]) {
    if (!entry.is_object() || !entry.contains("label") ||
        !entry["label"].is_string()) {
      throw DataError("word list without a string \"label\"");
    }
    WordList list;
    list.label = entry["label"].get<std::string>();
    if (list.label.empty()) throw DataError("word list with empty label");
    if (!labels.insert(list.label).second) {
      throw DataError("duplicate word-list label '" + list.label + "'");
    }
    if (!entry.contains("words") || !entry["words"].is_array()) {
      throw DataError("word list '" + list.label + "' has no \"words\" array");
    }
    for (const auto& word : entry["words"]) {
      if (!word.is_string()) {
        throw DataError("word list '" + list.label + "' has a non-string word");
      }
      std::string normalized = NormalizeWord(word.get<std::string>(), rules);
      if (normalized.empty()) continue;
      if (!list.words.insert(normalized).second) {
        Warn("word list '{}': duplicate word '{}' dropped", list.label,
             normalized);
      }
    }
    if (list.words.empty()) {
      throw DataError("word list '" + list.label + "' is empty");
    }
    if (entry.contains("provenance") && entry["provenance"].is_string()) {
      list.provenance = entry["provenance"].get<std::string>();
    }
    if (list.provenance.empty()) {
      Warn("word list '{}' has no provenance note", list.label);
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

std::vector<WordList> RegisterWordLists(const std::filesystem::path& manifest,
                                        const TokenizerRules& rules) {
  std::ifstream in(manifest);
  if (!in) throw ConfigError("cannot open word-list manifest " + manifest.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(manifest.string() + ": " + e.what());
  }
  return ParseWordLists(j, rules);
}

nlohmann::json WordListsToJson(const std::vector<WordList>& lists) {
  nlohmann::json j;
  j["schema_version"] = 1;
  auto& out = j["lists"] = nlohmann::json::array();
  for (const auto& list : lists) {
    nlohmann::json entry;
    entry["label"] = list.label;
    entry["words"] = std::vector<std::string>(list.words.begin(),
                                              list.words.end());
    if (!list.provenance.empty()) entry["provenance"] = list.provenance;
    out.push_back(std::move(entry));
  }
  return j;
}

}  // namespace topicgap
