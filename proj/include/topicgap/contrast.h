// Apache License, Version 2.0, refer to LICENSE.txt
//
// Per-(source, year) series: topic prevalence (mean document-topic
// probability over a cell), word-list frequency (list hits over cell
// tokens), and per-year Fisher tests between two sources.

#ifndef TOPICGAP_CONTRAST_H_
#define TOPICGAP_CONTRAST_H_

#include <map>
#include <string>
#include <vector>

#include "topicgap/corpus.h"
#include "topicgap/filters.h"
#include "topicgap/lda.h"
#include "topicgap/tokenizer.h"
#include "topicgap/word_lists.h"

namespace topicgap {

struct TopicPrevalencePoint {
  std::string source;
  int year = 0;
  int topic = 0;
  double value = 0.0;
  std::size_t n_docs = 0;
};

// Mean of theta[d][topic] over each cell's documents. Documents that had no
// tokens are left out unless `include_unfitted`. Cells with no contributing
// document are omitted with a warning. Throws DataError if the model was
// not fitted on this corpus.
std::vector<TopicPrevalencePoint> TopicPrevalence(const TopicModel& model,
                                                  const Corpus& corpus,
                                                  int topic,
                                                  bool include_unfitted = false);

enum class Denominator {
  // Tokens left after stopword / exclusion filtering.
  kFiltered,
  // Every token produced by the tokenizer.
  kRaw,
};

// Surface-token histograms per cell, built once and shared by all lists.
struct CellTokenCounts {
  std::map<std::string, std::size_t> counts;
  std::size_t raw_total = 0;
  std::size_t filtered_total = 0;
};
using CellHistograms = std::map<CellKey, CellTokenCounts>;

CellHistograms BuildCellHistograms(const Corpus& corpus,
                                   const TokenizerRules& rules,
                                   const FilterLists& lists);

struct FrequencyPoint {
  std::string source;
  int year = 0;
  std::string label;
  std::size_t hits = 0;
  std::size_t total = 0;
  double value = 0.0;
};

// Unstemmed list hits over cell totals. Cells with a zero total are
// omitted with a warning.
std::vector<FrequencyPoint> WordFrequency(
    const CellHistograms& cells, const WordList& list,
    Denominator denominator = Denominator::kFiltered);
std::vector<FrequencyPoint> WordFrequency(
    const Corpus& corpus, const WordList& list, const TokenizerRules& rules,
    const FilterLists& filters = {},
    Denominator denominator = Denominator::kFiltered);

struct SignificanceResult {
  int year = 0;
  std::string label;
  std::string source_a;
  std::string source_b;
  // (hits_a, total_a - hits_a, hits_b, total_b - hits_b)
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
  double p_value = 1.0;
  bool significant = false;
};

// One Fisher test per year present in both series. Years present in only
// one series are skipped with a warning. Throws std::invalid_argument if
// the series mix labels or share a source.
std::vector<SignificanceResult> CompareSources(
    const std::vector<FrequencyPoint>& series_a,
    const std::vector<FrequencyPoint>& series_b, double alpha = 0.05);

// Points of one source, in input order.
template <typename Point>
std::vector<Point> ForSource(const std::vector<Point>& points,
                             const std::string& source) {
  std::vector<Point> out;
  for (const auto& p : points) {
    if (p.source == source) out.push_back(p);
  }
  return out;
}

}  // namespace topicgap

#endif  // TOPICGAP_CONTRAST_H_
