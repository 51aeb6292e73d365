// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/filters.h"

#include <fstream>

#include "topicgap/errors.h"
#include "topicgap/log.h"

namespace topicgap {

namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

FilterLists FilterLists::Make(const std::vector<std::string>& stopwords,
                              const std::vector<std::string>& curated,
                              const std::vector<std::string>& source_specific,
                              const TokenizerRules& rules) {
  FilterLists lists;
  auto fill = [&](const std::vector<std::string>& words,
                  std::set<std::string>& target, const char* name) {
    for (const auto& word : words) {
      std::string normalized = NormalizeWord(word, rules);
      if (normalized.empty()) continue;
      if (lists.Contains(normalized)) {
        if (!target.count(normalized)) {
          Warn("'{}' in {} list already filtered by another list", normalized,
               name);
        }
        continue;
      }
      target.insert(std::move(normalized));
    }
  };
  fill(stopwords, lists.stopwords, "stopword");
  fill(curated, lists.curated_exclusions, "curated exclusion");
  fill(source_specific, lists.source_specific_exclusions, "source exclusion");
  return lists;
}

bool FilterLists::Contains(const std::string& token) const {
  return stopwords.count(token) || curated_exclusions.count(token) ||
         source_specific_exclusions.count(token);
}

std::vector<std::string> ReadWordFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open word file " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = Trim(line);
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

std::vector<std::string> ApplyFilters(const std::vector<std::string>& tokens,
                                      const FilterLists& lists) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!lists.Contains(token)) kept.push_back(token);
  }
  return kept;
}

}  // namespace topicgap
