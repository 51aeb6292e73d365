// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_VOCABULARY_H_
#define TOPICGAP_VOCABULARY_H_

#include <map>
#include <string>
#include <vector>

#include "topicgap/corpus.h"
#include "topicgap/filters.h"
#include "topicgap/tokenizer.h"

namespace topicgap {

// Stem vocabulary with dense ids in [0, size()). Ids are assigned in
// lexicographic stem order so the mapping does not depend on document order.
class Vocabulary {
 public:
  struct Entry {
    std::string stem;
    // Most frequent surface form of the stem; ties go to the
    // lexicographically smallest form.
    std::string surface;
    std::size_t count = 0;
    std::size_t doc_freq = 0;
  };

  Vocabulary() = default;
  explicit Vocabulary(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // -1 when unknown.
  int Id(const std::string& stem) const;
  const std::string& Term(int id) const { return entries_.at(id).stem; }
  const std::string& Destem(int id) const { return entries_.at(id).surface; }
  const Entry& entry(int id) const { return entries_.at(id); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, int> term_to_id_;
};

// Tokenize and filter, keeping surface forms (no stemming).
std::vector<std::string> SurfaceTokens(const std::string& text,
                                       const TokenizerRules& rules,
                                       const FilterLists& lists);

// Tokenizes, filters and stems every document, keeps stems with corpus
// frequency >= min_count, and attaches the resulting stem-id streams to the
// corpus documents. Throws DataError when no stem survives.
Vocabulary BuildVocabulary(Corpus& corpus, const TokenizerRules& rules,
                           const FilterLists& lists, std::size_t min_count = 1);

}  // namespace topicgap

#endif  // TOPICGAP_VOCABULARY_H_
