// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/contrast.h"

#include <set>
#include <stdexcept>

#include "topicgap/errors.h"
#include "topicgap/fisher.h"
#include "topicgap/log.h"

namespace topicgap {

std::vector<TopicPrevalencePoint> TopicPrevalence(const TopicModel& model,
                                                  const Corpus& corpus,
                                                  int topic,
                                                  bool include_unfitted) {
  if (topic < 0 || topic >= model.num_topics) {
    throw std::out_of_range("topic index out of range");
  }
  if (model.num_docs() != corpus.size()) {
    throw DataError("model and corpus disagree on the number of documents");
  }
  for (std::size_t d = 0; d < corpus.size() && d < model.doc_ids.size(); ++d) {
    if (model.doc_ids[d] != corpus[d].id) {
      throw DataError("model was fitted on a different corpus (document '" +
                      corpus[d].id + "')");
    }
  }

  std::vector<TopicPrevalencePoint> points;
  for (const auto& [key, indices] : corpus.partition_index()) {
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t d : indices) {
      if (!include_unfitted && !model.fitted[d]) continue;
      sum += model.ThetaRow(d)[topic];
      ++n;
    }
    if (n == 0) {
      Warn("no documents for ({}, {}); prevalence point omitted", key.source,
           key.year);
      continue;
    }
    points.push_back({key.source, key.year, topic, sum / n, n});
  }
  return points;
}

CellHistograms BuildCellHistograms(const Corpus& corpus,
                                   const TokenizerRules& rules,
                                   const FilterLists& lists) {
  CellHistograms cells;
  for (const auto& [key, indices] : corpus.partition_index()) {
    CellTokenCounts& cell = cells[key];
    for (std::size_t d : indices) {
      for (auto& token : Tokenize(corpus[d].text, rules)) {
        ++cell.raw_total;
        if (lists.Contains(token)) continue;
        ++cell.filtered_total;
        ++cell.counts[std::move(token)];
      }
    }
  }
  return cells;
}

std::vector<FrequencyPoint> WordFrequency(const CellHistograms& cells,
                                          const WordList& list,
                                          Denominator denominator) {
  std::vector<FrequencyPoint> points;
  for (const auto& [key, cell] : cells) {
    const std::size_t total = denominator == Denominator::kFiltered
                                  ? cell.filtered_total
                                  : cell.raw_total;
    if (total == 0) {
      Warn("no tokens in ({}, {}); frequency point for '{}' omitted",
           key.source, key.year, list.label);
      continue;
    }
    std::size_t hits = 0;
    for (const auto& word : list.words) {
      if (auto it = cell.counts.find(word); it != cell.counts.end()) {
        hits += it->second;
      }
    }
    points.push_back({key.source, key.year, list.label, hits, total,
                      static_cast<double>(hits) / static_cast<double>(total)});
  }
  return points;
}

std::vector<FrequencyPoint> WordFrequency(const Corpus& corpus,
                                          const WordList& list,
                                          const TokenizerRules& rules,
                                          const FilterLists& filters,
                                          Denominator denominator) {
  return WordFrequency(BuildCellHistograms(corpus, rules, filters), list,
                       denominator);
}

std::vector<SignificanceResult> CompareSources(
    const std::vector<FrequencyPoint>& series_a,
    const std::vector<FrequencyPoint>& series_b, double alpha) {
  auto index = [](const std::vector<FrequencyPoint>& series) {
    std::map<int, const FrequencyPoint*> by_year;
    for (const auto& p : series) {
      if (p.source != series.front().source ||
          p.label != series.front().label) {
        throw std::invalid_argument("series must hold one source and one list");
      }
      if (!by_year.emplace(p.year, &p).second) {
        throw std::invalid_argument("series has a repeated year");
      }
    }
    return by_year;
  };
  if (series_a.empty() || series_b.empty()) return {};
  if (series_a.front().label != series_b.front().label) {
    throw std::invalid_argument("cannot compare different word lists");
  }
  if (series_a.front().source == series_b.front().source) {
    throw std::invalid_argument("cannot compare a source with itself");
  }
  const auto by_year_a = index(series_a);
  const auto by_year_b = index(series_b);

  std::vector<SignificanceResult> results;
  for (const auto& [year, pa] : by_year_a) {
    auto it = by_year_b.find(year);
    if (it == by_year_b.end()) {
      Warn("'{}': year {} only present for {}; skipped", pa->label, year,
           pa->source);
      continue;
    }
    const FrequencyPoint* pb = it->second;
    SignificanceResult r;
    r.year = year;
    r.label = pa->label;
    r.source_a = pa->source;
    r.source_b = pb->source;
    r.a = pa->hits;
    r.b = pa->total - pa->hits;
    r.c = pb->hits;
    r.d = pb->total - pb->hits;
    r.p_value = FisherExactTwoSided(r.a, r.b, r.c, r.d);
    r.significant = r.p_value < alpha;
    results.push_back(std::move(r));
  }
  for (const auto& [year, pb] : by_year_b) {
    if (!by_year_a.count(year)) {
      Warn("'{}': year {} only present for {}; skipped", pb->label, year,
           pb->source);
    }
  }
  return results;
}

}  // namespace topicgap
