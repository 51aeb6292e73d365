// Apache License, Version 2.0, refer to LICENSE.txt
//
// Word lists are declared up front in a manifest; the analysis only accepts
// registered lists. Manifest schema (JSON):
//
//   {
//     "schema_version": 1,
//     "lists": [
//       {"label": "family", "words": ["hijos", "madre"],
//        "provenance": "why these words"}
//     ]
//   }
//
// Words are normalized with the tokenizer rules. "provenance" is optional.

#ifndef TOPICGAP_WORD_LISTS_H_
#define TOPICGAP_WORD_LISTS_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "topicgap/tokenizer.h"

namespace topicgap {

struct WordList {
  std::string label;
  std::set<std::string> words;
  std::string provenance;
};

// Throws DataError on unparseable input, an empty list, an empty or
// duplicate label.
std::vector<WordList> ParseWordLists(const nlohmann::json& manifest,
                                     const TokenizerRules& rules = {});
std::vector<WordList> RegisterWordLists(const std::filesystem::path& manifest,
                                        const TokenizerRules& rules = {});

nlohmann::json WordListsToJson(const std::vector<WordList>& lists);

}  // namespace topicgap

#endif  // TOPICGAP_WORD_LISTS_H_
