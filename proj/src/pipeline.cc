// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/pipeline.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "topicgap/contrast.h"
#include "topicgap/corpus.h"
#include "topicgap/csv.h"
#include "topicgap/errors.h"
#include "topicgap/hash.h"
#include "topicgap/lda.h"
#include "topicgap/log.h"
#include "topicgap/loess.h"
#include "topicgap/svg_chart.h"
#include "topicgap/topic_model_io.h"
#include "topicgap/vocabulary.h"
#include "topicgap/word_lists.h"

namespace topicgap {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "topicgap 1.0.0";

fs::path PreprocessDir(const RunConfig& c) { return c.output_dir / "preprocess"; }

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("failed writing " + path.string());
}

json ReadJson(const fs::path& path, const char* missing_hint) {
  std::ifstream in(path);
  if (!in) {
    throw DataError(fmt::format("missing {} ({})", path.string(), missing_hint));
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string FormatDouble(double v) { return fmt::format("{}", v); }

json InputHashes(const RunConfig& c) {
  json inputs;
  auto add = [&](const char* key, const fs::path& path) {
    inputs[key] = {{"path", path.string()}, {"sha256", Sha256File(path)}};
  };
  add("corpus", c.corpus);
  add("stopwords", c.stopwords);
  if (c.curated_exclusions) add("curated_exclusions", *c.curated_exclusions);
  if (c.source_exclusions) add("source_exclusions", *c.source_exclusions);
  add("word_lists", c.word_lists);
  return inputs;
}

// Merges one stage summary into run-manifest.json.
void UpdateRunManifest(const RunConfig& c, const std::string& stage,
                       json summary) {
  const fs::path path = c.output_dir / "run-manifest.json";
  json manifest;
  if (fs::exists(path)) {
    std::ifstream in(path);
    manifest = json::parse(in, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object()) manifest = json::object();
  }
  manifest["schema_version"] = kArtifactSchemaVersion;
  manifest["tool"] = kToolVersion;
  manifest["config"] = c.ToJson();
  manifest["inputs"] = InputHashes(c);
  manifest["stages"][stage] = std::move(summary);
  WriteText(path, manifest.dump(2) + "\n");
}

Corpus LoadConfiguredCorpus(const RunConfig& c) {
  LoadReport report;
  Corpus corpus = LoadCorpus(c.corpus, c.years, &report);
  if (!report.rejected.empty()) {
    Warn("{} corpus records rejected", report.rejected.size());
  }
  const auto sources = corpus.Sources();
  for (const auto& wanted : c.sources) {
    if (std::find(sources.begin(), sources.end(), wanted) == sources.end()) {
      throw DataError("contrast source '" + wanted + "' has no documents");
    }
  }
  for (const auto& s : sources) {
    if (s != c.sources[0] && s != c.sources[1]) {
      Warn("source '{}' is loaded but not part of the contrast", s);
    }
  }
  return corpus;
}

std::vector<std::vector<int>> ReadTokenStreams(const RunConfig& c,
                                               std::vector<std::string>* ids) {
  const json tokens =
      ReadJson(PreprocessDir(c) / "tokens.json", "run preprocess first");
  std::vector<std::vector<int>> streams;
  for (const auto& doc : tokens.at("documents")) {
    streams.push_back(doc.at("stems").get<std::vector<int>>());
    if (ids) ids->push_back(doc.at("id").get<std::string>());
  }
  return streams;
}

Vocabulary ReadVocabulary(const RunConfig& c) {
  const json vocab =
      ReadJson(PreprocessDir(c) / "vocabulary.json", "run preprocess first");
  std::vector<Vocabulary::Entry> entries;
  for (const auto& e : vocab.at("entries")) {
    entries.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                       e.at(2).get<std::size_t>(), e.at(3).get<std::size_t>()});
  }
  return Vocabulary(std::move(entries));
}

bool ParseBool(const std::string& s) { return s == "true"; }

}  // namespace

FilterLists LoadFilterLists(const RunConfig& c) {
  std::vector<std::string> curated, source_specific;
  if (c.curated_exclusions) curated = ReadWordFile(*c.curated_exclusions);
  if (c.source_exclusions) source_specific = ReadWordFile(*c.source_exclusions);
  return FilterLists::Make(ReadWordFile(c.stopwords), curated, source_specific,
                           c.tokenizer);
}

std::string ChartName(const std::string& kind, const std::string& label) {
  std::string name = kind + "-";
  for (unsigned char ch : label) {
    name.push_back(std::isalnum(ch) || ch == '-' || ch == '_' ? ch : '_');
  }
  return name;
}

void CmdPreprocess(const RunConfig& c) {
  c.Validate();
  Corpus corpus = LoadConfiguredCorpus(c);
  const FilterLists filters = LoadFilterLists(c);
  const Vocabulary vocab = BuildVocabulary(corpus, c.tokenizer, filters, c.min_count);

  fs::create_directories(PreprocessDir(c));
  json vocab_json;
  vocab_json["schema_version"] = kArtifactSchemaVersion;
  auto& entries = vocab_json["entries"] = json::array();
  for (const auto& e : vocab.entries()) {
    entries.push_back({e.stem, e.surface, e.count, e.doc_freq});
  }
  json tokens_json;
  tokens_json["schema_version"] = kArtifactSchemaVersion;
  auto& docs = tokens_json["documents"] = json::array();
  std::size_t total_stems = 0;
  std::size_t empty_docs = 0;
  for (const auto& doc : corpus.documents()) {
    const auto raw = Tokenize(doc.text, c.tokenizer);
    const auto filtered = ApplyFilters(raw, filters);
    docs.push_back({{"id", doc.id},
                    {"source", doc.source},
                    {"year", doc.year},
                    {"raw_tokens", raw.size()},
                    {"filtered_tokens", filtered.size()},
                    {"stems", doc.tokens}});
    total_stems += doc.tokens.size();
    if (doc.tokens.empty()) ++empty_docs;
  }
  const fs::path vocab_path = PreprocessDir(c) / "vocabulary.json";
  const fs::path tokens_path = PreprocessDir(c) / "tokens.json";
  WriteText(vocab_path, vocab_json.dump() + "\n");
  WriteText(tokens_path, tokens_json.dump() + "\n");

  json manifest;
  manifest["schema_version"] = kArtifactSchemaVersion;
  manifest["documents"] = corpus.size();
  manifest["empty_documents"] = empty_docs;
  manifest["vocabulary_size"] = vocab.size();
  manifest["stem_tokens"] = total_stems;
  manifest["artifacts"] = {{"vocabulary.json", Sha256File(vocab_path)},
                           {"tokens.json", Sha256File(tokens_path)}};
  WriteText(PreprocessDir(c) / "manifest.json", manifest.dump(2) + "\n");
  UpdateRunManifest(c, "preprocess", manifest);
  Info("preprocess: {} documents, vocabulary {}, {} stem tokens", corpus.size(),
       vocab.size(), total_stems);
}

void CmdFit(const RunConfig& c) {
  c.Validate();
  std::vector<std::string> ids;
  const auto streams = ReadTokenStreams(c, &ids);
  Vocabulary vocab = ReadVocabulary(c);

  TopicModel model = FitLda(streams, static_cast<int>(vocab.size()), c.lda);
  model.vocabulary = std::move(vocab);
  model.doc_ids = std::move(ids);
  fs::create_directories(c.output_dir);
  const fs::path model_path = c.output_dir / "model.bin";
  SaveModel(model, model_path);

  const int n = std::min(c.top_words, model.vocab_size);
  csv::Table topics;
  topics.header.push_back("topic");
  for (int r = 1; r <= n; ++r) topics.header.push_back(fmt::format("word_{}", r));
  for (int k = 0; k < model.num_topics; ++k) {
    csv::Row row{std::to_string(k)};
    for (auto& w : TopWords(model, k, n)) row.push_back(std::move(w));
    if (logger()->should_log(spdlog::level::info)) {
      std::cout << fmt::format("{:>4}  {}\n", k,
                               fmt::join(row.begin() + 1, row.end(), " "));
    }
    topics.rows.push_back(std::move(row));
  }
  const fs::path topics_path = c.output_dir / "topics.csv";
  csv::Write(topics_path, topics);

  UpdateRunManifest(c, "fit",
                    {{"num_topics", model.num_topics},
                     {"vocab_size", model.vocab_size},
                     {"seed", c.lda.seed},
                     {"artifacts",
                      {{"model.bin", Sha256File(model_path)},
                       {"topics.csv", Sha256File(topics_path)}}}});
}

void CmdAnalyze(const RunConfig& c) {
  c.Validate();
  const TopicModel model = LoadModel(c.output_dir / "model.bin");
  for (const auto& t : c.selected_topics) {
    if (t.id < 0 || t.id >= model.num_topics) {
      throw ConfigError(fmt::format("unknown topic id {} (model has {} topics)",
                                    t.id, model.num_topics));
    }
  }
  const Corpus corpus = LoadConfiguredCorpus(c);
  const FilterLists filters = LoadFilterLists(c);
  const auto lists = RegisterWordLists(c.word_lists, c.tokenizer);
  const std::set<std::string> contrast(c.sources.begin(), c.sources.end());

  csv::Table prevalence;
  prevalence.header = {"list_or_topic", "source", "year",   "hits",
                       "total",         "value",  "p_value", "significant"};
  csv::Table frequency;
  frequency.header = prevalence.header;
  csv::Table significance;
  significance.header = {"list",  "year", "source_a", "source_b", "a",
                         "b",     "c",    "d",        "p_value",  "significant",
                         "alpha"};

  for (const auto& t : c.selected_topics) {
    auto points = TopicPrevalence(model, corpus, t.id, c.include_unfitted);
    for (const auto& source : c.sources) {
      for (const auto& p : ForSource(points, source)) {
        prevalence.rows.push_back({t.label, p.source, std::to_string(p.year), "",
                                   std::to_string(p.n_docs),
                                   FormatDouble(p.value), "", ""});
      }
    }
  }

  if (lists.empty()) Warn("no word lists registered; frequency section empty");
  const CellHistograms cells = BuildCellHistograms(corpus, c.tokenizer, filters);
  std::size_t tests = 0;
  for (const auto& list : lists) {
    const auto points = WordFrequency(cells, list, c.denominator);
    const auto series_a = ForSource(points, c.sources[0]);
    const auto series_b = ForSource(points, c.sources[1]);
    const auto results = CompareSources(series_a, series_b, c.alpha);
    tests += results.size();
    std::map<int, const SignificanceResult*> by_year;
    for (const auto& r : results) {
      by_year[r.year] = &r;
      significance.rows.push_back(
          {r.label, std::to_string(r.year), r.source_a, r.source_b,
           std::to_string(r.a), std::to_string(r.b), std::to_string(r.c),
           std::to_string(r.d), FormatDouble(r.p_value),
           r.significant ? "true" : "false", FormatDouble(c.alpha)});
    }
    for (const auto* series : {&series_a, &series_b}) {
      for (const auto& p : *series) {
        csv::Row row{p.label,
                     p.source,
                     std::to_string(p.year),
                     std::to_string(p.hits),
                     std::to_string(p.total),
                     FormatDouble(p.value),
                     "",
                     ""};
        if (auto it = by_year.find(p.year); it != by_year.end()) {
          row[6] = FormatDouble(it->second->p_value);
          row[7] = it->second->significant ? "true" : "false";
        }
        frequency.rows.push_back(std::move(row));
      }
    }
  }

  fs::create_directories(c.output_dir);
  csv::Write(c.output_dir / "prevalence.csv", prevalence);
  csv::Write(c.output_dir / "frequency.csv", frequency);
  csv::Write(c.output_dir / "significance.csv", significance);
  std::vector<std::string> list_labels;
  for (const auto& l : lists) list_labels.push_back(l.label);
  UpdateRunManifest(
      c, "analyze",
      {{"selected_topics", c.selected_topics.size()},
       {"word_lists", list_labels},
       {"fisher_tests", tests},
       {"alpha", c.alpha},
       {"multiple_comparison_correction", "none"},
       {"artifacts",
        {{"prevalence.csv", Sha256File(c.output_dir / "prevalence.csv")},
         {"frequency.csv", Sha256File(c.output_dir / "frequency.csv")},
         {"significance.csv", Sha256File(c.output_dir / "significance.csv")}}}});
  Info("analyze: {} topics, {} word lists, {} Fisher tests", c.selected_topics.size(),
       lists.size(), tests);
}

namespace {

struct SeriesRows {
  // source -> (year, value)
  std::map<std::string, std::map<int, double>> by_source;
  std::vector<std::string> source_order;
};

// Label -> per-source points, preserving first-seen label order.
std::vector<std::pair<std::string, SeriesRows>> GroupSeries(
    const csv::Table& table) {
  const std::size_t label_col = table.Column("list_or_topic");
  const std::size_t source_col = table.Column("source");
  const std::size_t year_col = table.Column("year");
  const std::size_t value_col = table.Column("value");
  std::vector<std::pair<std::string, SeriesRows>> groups;
  std::map<std::string, std::size_t> index;
  for (const auto& row : table.rows) {
    auto [it, inserted] = index.emplace(row[label_col], groups.size());
    if (inserted) groups.push_back({row[label_col], {}});
    SeriesRows& series = groups[it->second].second;
    const std::string& source = row[source_col];
    if (!series.by_source.count(source)) series.source_order.push_back(source);
    series.by_source[source][std::stoi(row[year_col])] = std::stod(row[value_col]);
  }
  return groups;
}

ChartSpec BuildChart(const std::string& title, const std::string& y_label,
                     const SeriesRows& rows, const RunConfig& c) {
  ChartSpec spec;
  spec.title = title;
  spec.y_label = y_label;
  spec.y_scale = 100.0;
  for (const auto& source : rows.source_order) {
    ChartSeries s;
    s.name = source;
    for (const auto& [year, value] : rows.by_source.at(source)) {
      s.x.push_back(year);
      s.y.push_back(value);
    }
    try {
      s.smooth = LoessFit(s.x, s.y, c.smoothing);
    } catch (const std::invalid_argument& e) {
      Warn("{} / {}: no smoothing ({})", title, source, e.what());
    }
    spec.series.push_back(std::move(s));
  }
  return spec;
}

}  // namespace

void CmdReport(const RunConfig& c) {
  const fs::path charts_dir = c.output_dir / "charts";
  fs::create_directories(charts_dir);
  std::vector<std::string> written;
  std::set<std::string> names;
  std::string md = "# Analysis report\n\n";

  auto emit = [&](const std::string& kind, const std::string& label,
                  const ChartSpec& spec) {
    std::string name = ChartName(kind, label);
    for (int k = 2; !names.insert(name).second; ++k) {
      name = ChartName(kind, label) + "-" + std::to_string(k);
    }
    WriteText(charts_dir / (name + ".svg"), RenderSvg(spec));
    written.push_back("charts/" + name + ".svg");
    return name;
  };

  auto load = [&](const char* file) -> std::optional<csv::Table> {
    const fs::path path = c.output_dir / file;
    if (!fs::exists(path)) {
      Warn("{} missing; its charts are skipped", path.string());
      return std::nullopt;
    }
    return csv::Read(path);
  };

  md += "## Topic prevalence\n\n";
  if (auto prevalence = load("prevalence.csv")) {
    const auto groups = GroupSeries(*prevalence);
    if (groups.empty()) md += "No topics selected.\n";
    for (const auto& [label, rows] : groups) {
      const std::string name = emit(
          "topic", label,
          BuildChart("Topic: " + label, "mean topic probability (%)", rows, c));
      md += fmt::format("- `{}`: charts/{}.svg\n", label, name);
    }
  }

  md += "\n## Word-list frequency\n\n";
  std::size_t tests = 0, non_significant = 0;
  if (auto frequency = load("frequency.csv")) {
    std::map<std::string, std::vector<int>> shaded;
    if (auto significance = load("significance.csv")) {
      const std::size_t list_col = significance->Column("list");
      const std::size_t year_col = significance->Column("year");
      const std::size_t sig_col = significance->Column("significant");
      for (const auto& row : significance->rows) {
        ++tests;
        if (!ParseBool(row[sig_col])) {
          ++non_significant;
          shaded[row[list_col]].push_back(std::stoi(row[year_col]));
        }
      }
    }
    const auto groups = GroupSeries(*frequency);
    if (groups.empty()) md += "No word lists registered.\n";
    for (const auto& [label, rows] : groups) {
      ChartSpec spec =
          BuildChart("Word list: " + label, "frequency (% of words)", rows, c);
      if (auto it = shaded.find(label); it != shaded.end()) {
        spec.shaded_years = it->second;
      }
      const std::string name = emit("words", label, spec);
      md += fmt::format("- `{}`: charts/{}.svg ({} non-significant years)\n",
                        label, name, spec.shaded_years.size());
    }
  }

  md += fmt::format(
      "\n## Notes\n\n"
      "- Fisher exact tests run: {} ({} not significant at alpha = {}). "
      "No multiple-comparison correction is applied; word lists are fixed "
      "in the manifest before the analysis.\n"
      "- Grey vertical bands mark years whose between-source difference is "
      "not significant.\n"
      "- All curves are LOESS fits (local linear, tricube weights, span {}) "
      "with {}% pointwise confidence bands; the same smoother is used for "
      "topic and word-list charts.\n",
      tests, non_significant, FormatDouble(c.alpha), FormatDouble(c.smoothing.span),
      FormatDouble(c.smoothing.ci_level * 100));
  WriteText(c.output_dir / "report.md", md);
  UpdateRunManifest(c, "report", {{"charts", written}, {"fisher_tests", tests}});
}

void CmdPipeline(const RunConfig& c) {
  CmdPreprocess(c);
  CmdFit(c);
  CmdAnalyze(c);
  CmdReport(c);
}

}  // namespace topicgap
