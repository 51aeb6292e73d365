// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_FILTERS_H_
#define TOPICGAP_FILTERS_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "topicgap/tokenizer.h"

namespace topicgap {

// Words removed before any counting. The three sets are kept disjoint:
// Make() drops an entry from a later set when an earlier set already holds
// it.
struct FilterLists {
  std::set<std::string> stopwords;
  std::set<std::string> curated_exclusions;
  std::set<std::string> source_specific_exclusions;

  static FilterLists Make(const std::vector<std::string>& stopwords,
                          const std::vector<std::string>& curated,
                          const std::vector<std::string>& source_specific,
                          const TokenizerRules& rules = {});

  bool Contains(const std::string& token) const;
  bool empty() const {
    return stopwords.empty() && curated_exclusions.empty() &&
           source_specific_exclusions.empty();
  }
};

// One word per line, '#' starts a comment, blank lines ignored.
std::vector<std::string> ReadWordFile(const std::filesystem::path& path);

std::vector<std::string> ApplyFilters(const std::vector<std::string>& tokens,
                                      const FilterLists& lists);

}  // namespace topicgap

#endif  // TOPICGAP_FILTERS_H_
