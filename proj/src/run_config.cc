// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/run_config.h"

#include <fstream>
#include <set>

#include "topicgap/csv.h"
#include "topicgap/errors.h"
#include "topicgap/topic_model_io.h"

namespace topicgap {

namespace fs = std::filesystem;

namespace {

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

std::optional<fs::path> OptionalPath(const nlohmann::json& j, const char* key,
                                     const fs::path& base) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return Resolve(base, j[key].get<std::string>());
}

void RequireFile(const fs::path& path, const char* what) {
  if (!fs::is_regular_file(path)) {
    throw ConfigError(std::string(what) + " not found: " + path.string());
  }
}

}  // namespace

fs::path BundledDataDir() { return fs::path(TOPICGAP_DATA_DIR); }

RunConfig ParseRunConfig(const nlohmann::json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  try {
    if (!j.contains("corpus")) throw ConfigError("config: 'corpus' is required");
    c.corpus = Resolve(base_dir, j["corpus"].get<std::string>());
    if (j.contains("year_range")) {
      const auto range = j["year_range"].get<std::vector<int>>();
      if (range.size() != 2) throw ConfigError("year_range needs two years");
      c.years = {range[0], range[1]};
    }
    if (j.contains("sources")) {
      c.sources = j["sources"].get<std::vector<std::string>>();
    }
    c.stopwords = j.contains("stopwords") && !j["stopwords"].is_null()
                      ? Resolve(base_dir, j["stopwords"].get<std::string>())
                      : BundledDataDir() / "stopwords_es.txt";
    c.curated_exclusions = OptionalPath(j, "curated_exclusions", base_dir);
    c.source_exclusions = OptionalPath(j, "source_exclusions", base_dir);
    c.word_lists = j.contains("word_lists") && !j["word_lists"].is_null()
                       ? Resolve(base_dir, j["word_lists"].get<std::string>())
                       : BundledDataDir() / "word_lists.json";
    if (j.contains("tokenizer")) {
      const auto& t = j["tokenizer"];
      c.tokenizer.lowercase = t.value("lowercase", c.tokenizer.lowercase);
      c.tokenizer.strip_acute_accents =
          t.value("strip_acute_accents", c.tokenizer.strip_acute_accents);
      c.tokenizer.min_token_length =
          t.value("min_token_length", c.tokenizer.min_token_length);
    }
    c.min_count = j.value("min_count", c.min_count);
    if (j.contains("lda")) {
      c.lda = LdaConfigFromJson(j["lda"]);
      c.seed_given = j["lda"].contains("seed");
    }
    c.top_words = j.value("top_words", c.top_words);
    if (j.contains("selected_topics")) {
      for (const auto& t : j["selected_topics"]) {
        c.selected_topics.push_back(
            {t.at("id").get<int>(), t.at("label").get<std::string>()});
      }
    }
    if (j.contains("analysis")) {
      const auto& a = j["analysis"];
      c.alpha = a.value("alpha", c.alpha);
      const std::string denominator = a.value("denominator", "filtered");
      if (denominator == "filtered") {
        c.denominator = Denominator::kFiltered;
      } else if (denominator == "raw") {
        c.denominator = Denominator::kRaw;
      } else {
        throw ConfigError("analysis.denominator must be 'filtered' or 'raw'");
      }
      c.include_unfitted =
          a.value("include_unfitted_documents", c.include_unfitted);
    }
    if (j.contains("smoothing")) {
      const auto& s = j["smoothing"];
      c.smoothing.span = s.value("span", c.smoothing.span);
      c.smoothing.ci_level = s.value("ci_level", c.smoothing.ci_level);
      c.smoothing.densify = s.value("densify", c.smoothing.densify);
      c.smoothing.densify_factor =
          s.value("densify_factor", c.smoothing.densify_factor);
    }
    if (j.contains("output_dir")) {
      c.output_dir = Resolve(base_dir, j["output_dir"].get<std::string>());
    } else {
      c.output_dir = Resolve(base_dir, "out");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig LoadRunConfig(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return ParseRunConfig(j, fs::absolute(path).parent_path());
}

std::vector<SelectedTopic> ReadTopicLabels(const fs::path& path) {
  RequireFile(path, "topic label file");
  std::vector<SelectedTopic> topics;
  try {
    const csv::Table table = csv::Read(path);
    const std::size_t id_col = table.Column("topic");
    const std::size_t label_col = table.Column("label");
    for (const auto& row : table.rows) {
      std::size_t used = 0;
      const int id = std::stoi(row[id_col], &used);
      if (used != row[id_col].size()) throw std::invalid_argument(row[id_col]);
      topics.push_back({id, row[label_col]});
    }
  } catch (const std::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return topics;
}

void RunConfig::Validate() const {
  RequireFile(corpus, "corpus file");
  RequireFile(stopwords, "stopword file");
  if (curated_exclusions) RequireFile(*curated_exclusions, "curated exclusions");
  if (source_exclusions) RequireFile(*source_exclusions, "source exclusions");
  RequireFile(word_lists, "word-list manifest");
  if (sources.size() != 2 || sources[0] == sources[1]) {
    throw ConfigError("exactly two distinct contrast sources are required");
  }
  if (years.first > years.last) throw ConfigError("year_range is reversed");
  if (tokenizer.min_token_length < 1) {
    throw ConfigError("tokenizer.min_token_length must be >= 1");
  }
  if (min_count < 1) throw ConfigError("min_count must be >= 1");
  if (!seed_given) {
    throw ConfigError("an LDA seed is required (lda.seed or --seed)");
  }
  lda.Validate();
  if (top_words < 1) throw ConfigError("top_words must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("analysis.alpha must lie in (0, 1)");
  }
  if (!(smoothing.span > 0.0 && smoothing.span <= 1.0)) {
    throw ConfigError("smoothing.span must lie in (0, 1]");
  }
  if (!(smoothing.ci_level > 0.0 && smoothing.ci_level < 1.0)) {
    throw ConfigError("smoothing.ci_level must lie in (0, 1)");
  }
  std::set<std::string> labels;
  for (const auto& t : selected_topics) {
    if (t.label.empty()) throw ConfigError("selected topic with empty label");
    if (!labels.insert(t.label).second) {
      throw ConfigError("duplicate selected-topic label '" + t.label + "'");
    }
  }
}

nlohmann::json RunConfig::ToJson() const {
  nlohmann::json j;
  j["corpus"] = corpus.string();
  j["year_range"] = {years.first, years.last};
  j["sources"] = sources;
  j["stopwords"] = stopwords.string();
  j["curated_exclusions"] =
      curated_exclusions ? nlohmann::json(curated_exclusions->string()) : nullptr;
  j["source_exclusions"] =
      source_exclusions ? nlohmann::json(source_exclusions->string()) : nullptr;
  j["word_lists"] = word_lists.string();
  j["tokenizer"] = {{"lowercase", tokenizer.lowercase},
                    {"strip_acute_accents", tokenizer.strip_acute_accents},
                    {"min_token_length", tokenizer.min_token_length}};
  j["min_count"] = min_count;
  j["lda"] = LdaConfigToJson(lda);
  j["top_words"] = top_words;
  auto& topics = j["selected_topics"] = nlohmann::json::array();
  for (const auto& t : selected_topics) {
    topics.push_back({{"id", t.id}, {"label", t.label}});
  }
  j["analysis"] = {
      {"alpha", alpha},
      {"denominator", denominator == Denominator::kFiltered ? "filtered" : "raw"},
      {"include_unfitted_documents", include_unfitted}};
  j["smoothing"] = {{"span", smoothing.span},
                    {"ci_level", smoothing.ci_level},
                    {"densify", smoothing.densify},
                    {"densify_factor", smoothing.densify_factor}};
  j["output_dir"] = output_dir.string();
  return j;
}

}  // namespace topicgap
