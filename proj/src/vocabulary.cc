// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/vocabulary.h"

#include <fmt/format.h>

#include "topicgap/errors.h"
#include "topicgap/spanish_stemmer.h"

namespace topicgap {

Vocabulary::Vocabulary(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!term_to_id_.emplace(entries_[i].stem, static_cast<int>(i)).second) {
      throw DataError("duplicate stem '" + entries_[i].stem +
                      "' in vocabulary");
    }
  }
}

int Vocabulary::Id(const std::string& stem) const {
  auto it = term_to_id_.find(stem);
  return it == term_to_id_.end() ? -1 : it->second;
}

std::vector<std::string> SurfaceTokens(const std::string& text,
                                       const TokenizerRules& rules,
                                       const FilterLists& lists) {
  return ApplyFilters(Tokenize(text, rules), lists);
}

Vocabulary BuildVocabulary(Corpus& corpus, const TokenizerRules& rules,
                           const FilterLists& lists, std::size_t min_count) {
  struct StemStats {
    std::size_t count = 0;
    std::size_t doc_freq = 0;
    std::size_t last_doc = static_cast<std::size_t>(-1);
    std::map<std::string, std::size_t> surfaces;
  };
  std::map<std::string, StemStats> stats;
  std::map<std::string, std::string> stem_cache;
  std::vector<std::vector<std::string>> doc_stems(corpus.size());

  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (auto& surface : SurfaceTokens(corpus[d].text, rules, lists)) {
      auto cached = stem_cache.find(surface);
      if (cached == stem_cache.end()) {
        cached = stem_cache.emplace(surface, StemSpanish(surface)).first;
      }
      const std::string& stem = cached->second;
      StemStats& s = stats[stem];
      ++s.count;
      if (s.last_doc != d) {
        ++s.doc_freq;
        s.last_doc = d;
      }
      ++s.surfaces[surface];
      doc_stems[d].push_back(stem);
    }
  }

  std::vector<Vocabulary::Entry> entries;
  for (const auto& [stem, s] : stats) {
    if (s.count < min_count) continue;
    Vocabulary::Entry entry{stem, {}, s.count, s.doc_freq};
    std::size_t best = 0;
    // Ascending key order: strict '>' keeps the smallest tied form.
    for (const auto& [surface, n] : s.surfaces) {
      if (n > best) {
        best = n;
        entry.surface = surface;
      }
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw DataError(fmt::format(
        "empty vocabulary (no stem reaches min_count={})", min_count));
  }
  Vocabulary vocab(std::move(entries));

  for (std::size_t d = 0; d < corpus.size(); ++d) {
    std::vector<int> ids;
    ids.reserve(doc_stems[d].size());
    for (const auto& stem : doc_stems[d]) {
      if (int id = vocab.Id(stem); id >= 0) ids.push_back(id);
    }
    corpus.SetTokens(d, std::move(ids));
  }
  return vocab;
}

}  // namespace topicgap
