// Apache License, Version 2.0, refer to LICENSE.txt
//
// Run configuration, read from a JSON document. Relative paths are
// resolved against the directory holding the config file. Keys:
//
//   corpus                  path to the JSON-lines corpus (required)
//   sources                 the two source ids to contrast (required)
//   year_range              [first, last], default [2008, 2018]
//   stopwords               word file, default: bundled Spanish list
//   curated_exclusions      word file, default: none
//   source_exclusions       word file, default: none
//   word_lists              manifest, default: bundled lists
//   tokenizer               {lowercase, strip_acute_accents, min_token_length}
//   min_count               default 1
//   lda                     {num_topics, alpha, beta, sweeps, burn_in,
//                            sample_lag, seed}; seed required here or on
//                            the command line
//   top_words               words per topic in topics.csv, default 10
//   selected_topics         [{"id": 4, "label": "business"}, ...]
//   analysis                {alpha, denominator: "filtered"|"raw",
//                            include_unfitted_documents}
//   smoothing               {span, ci_level, densify, densify_factor}
//   output_dir              default "out"

#ifndef TOPICGAP_RUN_CONFIG_H_
#define TOPICGAP_RUN_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "topicgap/contrast.h"
#include "topicgap/corpus.h"
#include "topicgap/lda.h"
#include "topicgap/loess.h"
#include "topicgap/tokenizer.h"

namespace topicgap {

struct SelectedTopic {
  int id = 0;
  std::string label;
};

struct RunConfig {
  std::filesystem::path corpus;
  YearRange years;
  std::vector<std::string> sources;
  std::filesystem::path stopwords;
  std::optional<std::filesystem::path> curated_exclusions;
  std::optional<std::filesystem::path> source_exclusions;
  std::filesystem::path word_lists;
  TokenizerRules tokenizer;
  std::size_t min_count = 1;
  LdaConfig lda;
  bool seed_given = false;
  int top_words = 10;
  std::vector<SelectedTopic> selected_topics;
  double alpha = 0.05;
  Denominator denominator = Denominator::kFiltered;
  bool include_unfitted = false;
  SmoothConfig smoothing;
  std::filesystem::path output_dir = "out";

  // Throws ConfigError on bad values or missing input files.
  void Validate() const;
  // Canonical JSON echo (absolute paths resolved).
  nlohmann::json ToJson() const;
};

std::filesystem::path BundledDataDir();

// Throws ConfigError.
RunConfig ParseRunConfig(const nlohmann::json& j,
                         const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Topic labels from a CSV file with header "topic,label". Throws
// ConfigError.
std::vector<SelectedTopic> ReadTopicLabels(const std::filesystem::path& path);

}  // namespace topicgap

#endif  // TOPICGAP_RUN_CONFIG_H_
