// Apache License, Version 2.0, refer to LICENSE.txt
//
// Document collection keyed by (source, year). A corpus is loaded once from
// a JSON-lines manifest and is read-only afterwards, apart from the token
// streams attached by the preprocessing stage.

#ifndef TOPICGAP_CORPUS_H_
#define TOPICGAP_CORPUS_H_

#include <compare>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace topicgap {

struct YearRange {
  int first = 2008;
  int last = 2018;

  bool Contains(int year) const { return year >= first && year <= last; }
};

struct Document {
  std::string id;
  std::string source;
  int year = 0;
  std::string text;
  // Stem ids, filled by BuildVocabulary.
  std::vector<int> tokens;
};

// One (source, year) partition cell.
struct CellKey {
  std::string source;
  int year = 0;

  auto operator<=>(const CellKey&) const = default;
};

struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t accepted = 0;
  // "line N: reason" for every rejected record.
  std::vector<std::string> rejected;
};

class Corpus {
 public:
  Corpus() = default;

  // Validates ids (unique), years (in range) and text (non-blank).
  // Throws DataError on a duplicate id, an invalid document, or an empty
  // collection.
  static Corpus FromDocuments(std::vector<Document> documents,
                              YearRange years = {});

  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  const Document& operator[](std::size_t i) const { return documents_[i]; }

  // Document indices of a cell in input order; empty for absent cells.
  const std::vector<std::size_t>& CellIndices(const CellKey& key) const;
  std::vector<const Document*> Partition(const std::string& source,
                                         int year) const;
  std::size_t DocCount(const CellKey& key) const;

  const std::map<CellKey, std::vector<std::size_t>>& partition_index() const {
    return partition_index_;
  }
  std::map<CellKey, std::size_t> DocCounts() const;

  std::vector<std::string> Sources() const;
  std::vector<int> Years() const;

  void SetTokens(std::size_t doc, std::vector<int> tokens) {
    documents_.at(doc).tokens = std::move(tokens);
  }

 private:
  std::vector<Document> documents_;
  std::map<CellKey, std::vector<std::size_t>> partition_index_;
};

// Reads one JSON object per line with keys id, source, year, text.
// Malformed records, out-of-range years and blank texts are skipped with a
// warning naming the line; a duplicate id or an empty result throws
// DataError.
Corpus LoadCorpus(const std::filesystem::path& path, YearRange years = {},
                  LoadReport* report = nullptr);

}  // namespace topicgap

#endif  // TOPICGAP_CORPUS_H_
