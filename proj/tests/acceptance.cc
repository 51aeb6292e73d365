// Apache License, Version 2.0, refer to LICENSE.txt
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "oracles.h"
#include "support.h"
#include "topicgap/contrast.h"
#include "topicgap/csv.h"
#include "topicgap/fisher.h"
#include "topicgap/hash.h"
#include "topicgap/lda.h"
#include "topicgap/loess.h"
#include "topicgap/log.h"
#include "topicgap/spanish_stemmer.h"
#include "topicgap/topic_model_io.h"
#include "topicgap/vocabulary.h"

using namespace topicgap;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int RunTool(const fs::path& config, const std::string& args) {
  const std::string cmd = testing::ToolPath().string() + " --config " +
                          config.string() + " --quiet " + args;
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::map<std::string, std::string> TreeHashes(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) {
      out[fs::relative(entry.path(), root).string()] = Sha256File(entry.path());
    }
  }
  return out;
}

// Pseudo-words that tokenize to themselves and are their own stems.
std::vector<std::string> PseudoWords(std::size_t n, std::uint64_t seed) {
  static const char* kOnsets[] = {"b", "d", "f", "g", "k", "l", "m",
                                  "p", "r", "t", "v", "z", "br", "tr"};
  static const char* kVowels[] = {"a", "e", "i", "o", "u"};
  static const char* kCodas[] = {"k", "t", "x", "p", "f"};
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<std::string> words;
  while (words.size() < n) {
    std::string w;
    for (int s = 0; s < 3; ++s) {
      w += kOnsets[rng.Below(std::size(kOnsets))];
      w += kVowels[rng.Below(std::size(kVowels))];
    }
    w += kCodas[rng.Below(std::size(kCodas))];
    if (StemSpanish(std::string_view(w)) != w) continue;
    if (seen.insert(w).second) words.push_back(w);
  }
  return words;
}

// ---------------------------------------------------------------------------

Outcome GibbsInvariants() {
  const auto start = Clock::now();
  Rng data(101);
  const auto streams = testing::RandomStreams(data, 200, 300, 5, 80);
  std::size_t expected_tokens = 0;
  for (const auto& s : streams) expected_tokens += s.size();
  LdaConfig config;
  config.num_topics = 10;
  config.sweeps = 100;
  config.burn_in = 90;
  config.sample_lag = 5;
  config.seed = 1;
  std::size_t violations = 0;
  int sweeps = 0;
  FitLda(streams, 300, config, [&](int, const LdaState& s) {
    ++sweeps;
    violations += s.CountViolations();
    if (s.total_tokens() != expected_tokens) ++violations;
    std::size_t sum_d = 0;
    for (std::size_t d = 0; d < s.num_docs(); ++d) {
      int row = 0;
      for (int k = 0; k < s.num_topics(); ++k) row += s.doc_topic(d, k);
      if (row != s.doc_length(d)) ++violations;
      sum_d += s.doc_length(d);
    }
    for (int k = 0; k < s.num_topics(); ++k) {
      int row = 0;
      for (int w = 0; w < s.vocab_size(); ++w) row += s.topic_word(k, w);
      if (row != s.topic_total(k)) ++violations;
    }
    if (sum_d != expected_tokens) ++violations;
  });
  const double t = Seconds(start);
  return {violations == 0 && sweeps == 100 && t < 10.0,
          fmt::format("{} violations over {} sweeps, {:.2f} s", violations,
                      sweeps, t)};
}

Outcome SingleTopicCollapse() {
  Rng data(202);
  const auto streams = testing::RandomStreams(data, 120, 40, 1, 50);
  LdaConfig config;
  config.num_topics = 1;
  config.sweeps = 50;
  config.burn_in = 30;
  config.seed = 2;
  const TopicModel m = FitLda(streams, 40, config);
  bool theta_exact = true;
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    theta_exact = theta_exact && m.ThetaRow(d)[0] == 1.0;
  }
  std::vector<double> count(40, 0.0);
  double n = 0;
  for (const auto& s : streams) {
    for (int w : s) {
      count[w] += 1;
      n += 1;
    }
  }
  double worst = 0.0;
  for (int w = 0; w < 40; ++w) {
    const double expected = (count[w] + config.beta) / (n + 40 * config.beta);
    worst = std::max(worst, std::abs(m.PhiRow(0)[w] - expected));
  }
  return {theta_exact && worst <= 1e-12,
          fmt::format("theta exact: {}, max phi error {:.3g}", theta_exact, worst)};
}

Outcome PlantedRecovery() {
  const auto start = Clock::now();
  Rng data(303);
  const auto planted = testing::MakePlantedCorpus(data, 500, 3, 60, 0.1, 50);
  LdaConfig config;
  config.num_topics = 3;
  config.alpha = 0.1;
  config.seed = 3;
  const TopicModel m = FitLda(planted.streams, 60, config);
  const double score = testing::MatchedMeanCosine(m.phi, planted.phi, 3, 60);
  const double t = Seconds(start);
  return {score >= 0.8 && t < 60.0,
          fmt::format("matched mean cosine {:.4f}, {:.2f} s", score, t)};
}

Outcome PrevalenceOracle() {
  Rng data(404);
  const std::vector<std::string> words = {
      "familia", "hijos", "empresa", "mercado", "moda",   "ropa",
      "ciencia", "niños", "colegio", "cocina",  "receta", "viaje"};
  Corpus corpus = Corpus::FromDocuments(testing::RandomDocuments(
      data, 100, {"brando", "ohlala"}, 2008, 2012, words, 3, 30));
  const Vocabulary vocab = BuildVocabulary(corpus, {}, {});
  std::vector<std::vector<int>> streams;
  for (const auto& doc : corpus.documents()) streams.push_back(doc.tokens);
  LdaConfig config;
  config.num_topics = 5;
  config.sweeps = 100;
  config.burn_in = 50;
  config.seed = 4;
  TopicModel m = FitLda(streams, static_cast<int>(vocab.size()), config);
  for (const auto& doc : corpus.documents()) m.doc_ids.push_back(doc.id);

  double worst = 0.0, worst_sum = 0.0;
  std::map<CellKey, double> sums;
  std::size_t points = 0;
  for (int k = 0; k < 5; ++k) {
    for (const auto& p : TopicPrevalence(m, corpus, k)) {
      double naive = 0.0;
      int n = 0;
      for (std::size_t d = 0; d < corpus.size(); ++d) {
        if (corpus[d].source == p.source && corpus[d].year == p.year) {
          naive += m.theta[d * 5 + k];
          ++n;
        }
      }
      worst = std::max(worst, std::abs(p.value - naive / n));
      sums[{p.source, p.year}] += p.value;
      ++points;
    }
  }
  for (const auto& [key, sum] : sums) worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  return {points == 5 * sums.size() && sums.size() == 10 && worst <= 1e-12 &&
              worst_sum <= 1e-9,
          fmt::format("{} points, max mean error {:.3g}, max cell-sum error {:.3g}",
                      points, worst, worst_sum)};
}

Outcome FrequencyOracle() {
  const std::vector<Document> docs = {
      {"d1", "brando", 2010, "La madre y el padre", {}},
      {"d2", "brando", 2010, "Autos rápidos de carrera", {}},
      {"d3", "brando", 2010, "Hijos y familia, familia", {}},
      {"d4", "brando", 2011, "Fútbol de primera", {}},
      {"d5", "brando", 2011, "El padre mira fútbol", {}},
      {"d6", "brando", 2011, "Cerveza y asado", {}},
      {"d7", "ohlala", 2010, "La familia de la madre", {}},
      {"d8", "ohlala", 2010, "Moda y estilo", {}},
      {"d9", "ohlala", 2010, "Madres e hijas", {}},
      {"d10", "ohlala", 2011, "Hijos, hijos, hijos", {}},
      {"d11", "ohlala", 2011, "Recetas de cocina", {}},
      {"d12", "ohlala", 2011, "El HORÓSCOPO de la semana", {}},
  };
  const Corpus corpus = Corpus::FromDocuments(docs);
  const FilterLists stop = FilterLists::Make({"la", "el", "y", "de"}, {}, {});
  const WordList family{"family", {"madre", "padre", "hijos", "familia"}, ""};
  const WordList signs{"horoscope", {"horoscopo", "tauro"}, ""};
  // Hand counts: (hits, total) per cell.
  const std::map<std::pair<std::string, int>, std::pair<int, int>> family_hand = {
      {{"brando", 2010}, {5, 8}},
      {{"brando", 2011}, {1, 7}},
      {{"ohlala", 2010}, {2, 6}},
      {{"ohlala", 2011}, {3, 7}}};
  bool exact = true;
  const auto fam = WordFrequency(corpus, family, {}, stop);
  exact = exact && fam.size() == 4;
  for (const auto& p : fam) {
    const auto [hits, total] = family_hand.at({p.source, p.year});
    exact = exact && p.hits == static_cast<std::size_t>(hits) &&
            p.total == static_cast<std::size_t>(total) &&
            p.value == static_cast<double>(hits) / total;
  }
  for (const auto& p : WordFrequency(corpus, signs, {}, stop)) {
    const int hits = p.source == "ohlala" && p.year == 2011 ? 1 : 0;
    exact = exact && p.hits == static_cast<std::size_t>(hits);
  }

  Rng rng(505);
  const std::vector<std::string> pool = {"uno", "dos",  "tres", "cuatro",
                                         "cinco", "seis", "la",   "el"};
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto random_docs = testing::RandomDocuments(
        rng, 1 + rng.Below(20), {"a", "b"}, 2008, 2010, pool, 1, 15);
    std::set<std::string> words;
    for (const auto& w : pool) {
      if (rng.Below(2)) words.insert(w);
    }
    if (words.empty()) words.insert("uno");
    const WordList list{"l", words, ""};
    try {
      testing::LogCapture quiet;
      for (const auto& p :
           WordFrequency(Corpus::FromDocuments(random_docs), list, {}, stop)) {
        if (!(p.value >= 0.0 && p.value <= 1.0) || p.hits > p.total || p.total == 0) {
          ++violations;
        }
      }
    } catch (const std::exception&) {
      ++violations;
    }
  }
  return {exact && violations == 0,
          fmt::format("hand counts exact: {}, bound violations {} / 1000 cases",
                      exact, violations)};
}

Outcome FisherExhaustive() {
  const auto start = Clock::now();
  const testing::Binomials binom(120);
  double worst = 0.0;
  std::size_t tables = 0, asymmetric = 0;
  for (int r1 = 0; r1 <= 60; ++r1) {
    for (int r2 = 0; r2 <= 60; ++r2) {
      for (int c1 = std::max(0, r1 + r2 - 60); c1 <= std::min(60, r1 + r2); ++c1) {
        const auto oracle = testing::FisherOracle(binom, r1, r2, c1);
        for (std::size_t i = 0; i < oracle.p.size(); ++i) {
          const std::uint64_t a = oracle.a_min + i;
          const std::uint64_t b = r1 - a, c = c1 - a, d = r2 - c;
          const double p = FisherExactTwoSided(a, b, c, d);
          worst = std::max(worst, std::abs(p - static_cast<double>(oracle.p[i])));
          if (FisherExactTwoSided(c, d, a, b) != p ||
              FisherExactTwoSided(b, a, d, c) != p) {
            ++asymmetric;
          }
          ++tables;
        }
      }
    }
  }
  const double balanced = FisherExactTwoSided(5, 5, 5, 5);
  return {worst <= 1e-10 && asymmetric == 0 && balanced == 1.0,
          fmt::format("{} tables, max |p - oracle| {:.3g}, {} symmetry breaks, "
                      "(5,5,5,5) -> {}, {:.1f} s",
                      tables, worst, asymmetric, balanced, Seconds(start))};
}

Outcome LoessChecks() {
  std::vector<double> years, line;
  for (int y = 2008; y <= 2018; ++y) {
    years.push_back(y);
    line.push_back(-0.02 * y + 41.0);
  }
  SmoothConfig dense;
  dense.densify = true;
  const auto fit_line = LoessFit(years, line, dense);
  double line_err = 0.0;
  for (std::size_t i = 0; i < fit_line.x.size(); ++i) {
    line_err = std::max(line_err, std::abs(fit_line.fitted[i] - (-0.02 * fit_line.x[i] + 41.0)));
  }

  Rng rng(707);
  std::vector<double> x, y;
  for (int i = 0; i < 50; ++i) {
    x.push_back(i * 0.25 + 0.1 * rng.Uniform());
    y.push_back(std::sin(x.back()) + 0.4 * (rng.Uniform() - 0.5));
  }
  SmoothConfig config;
  config.span = 0.5;
  const auto fit = LoessFit(x, y, config);
  double oracle_err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    oracle_err = std::max(
        oracle_err, std::abs(fit.fitted[i] - testing::NaiveLoessAt(x, y, fit.x[i], 0.5).fitted));
  }
  std::vector<double> shifted, scaled;
  for (double v : y) {
    shifted.push_back(v + 7.0);
    scaled.push_back(3.0 * v);
  }
  const auto fs = LoessFit(x, shifted, config);
  const auto fa = LoessFit(x, scaled, config);
  double equiv_err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    equiv_err = std::max(equiv_err, std::abs(fs.fitted[i] - fit.fitted[i] - 7.0));
    equiv_err = std::max(equiv_err, std::abs(fa.fitted[i] - 3.0 * fit.fitted[i]));
  }
  return {line_err <= 1e-9 && oracle_err <= 1e-9 && equiv_err <= 1e-9,
          fmt::format("line error {:.3g}, oracle error {:.3g}, equivariance error {:.3g}",
                      line_err, oracle_err, equiv_err)};
}

// Two sources over 2008-2018; the planted topic's prevalence gap closes
// linearly from 0.30 to 0.00 and a word list occurs three times as often in
// the first source.
Outcome GapStudy() {
  const auto start = Clock::now();
  constexpr int kTopics = 5;
  constexpr int kBlock = 30;
  constexpr int kDocs = 50;
  constexpr int kTokens = 200;
  constexpr double kBase = 0.10;
  const std::vector<std::string> list_words = {"familia", "hijos", "madre"};
  const std::map<std::string, double> list_rate = {{"brando", 0.006},
                                                   {"ohlala", 0.002}};
  const auto vocab = PseudoWords(kTopics * kBlock, 808);
  auto planted_gap = [](int year) { return 0.30 * (2018 - year) / 10.0; };

  testing::TempDir dir;
  Rng rng(809);
  std::string corpus;
  int id = 0;
  for (const std::string source : {"brando", "ohlala"}) {
    for (int year = 2008; year <= 2018; ++year) {
      const double p_star = kBase + (source == "brando" ? planted_gap(year) : 0.0);
      for (int d = 0; d < kDocs; ++d) {
        // Shares ramp from 0 to 2 * p_star across the cell; the mean is p_star.
        const double share = 2.0 * p_star * d / (kDocs - 1);
        const auto n_star = static_cast<int>(std::lround(share * kTokens));
        std::vector<int> topic_of(kTokens, 1 + static_cast<int>(rng.Below(kTopics - 1)));
        std::fill(topic_of.begin(), topic_of.begin() + n_star, 0);
        std::shuffle(topic_of.begin(), topic_of.end(), rng.engine());
        std::string text;
        for (int i = 0; i < kTokens; ++i) {
          std::string word;
          if (rng.Uniform() < list_rate.at(source)) {
            word = list_words[rng.Below(list_words.size())];
          } else {
            word = vocab[topic_of[i] * kBlock + rng.Below(kBlock)];
          }
          text += word + ' ';
        }
        corpus += testing::CorpusLine(fmt::format("g{}", id++), source, year, text) + "\n";
      }
    }
  }
  testing::WriteFile(dir / "corpus.jsonl", corpus);
  testing::WriteFile(dir / "lists.json",
                     json{{"schema_version", 1},
                          {"lists", {{{"label", "family"},
                                      {"words", list_words},
                                      {"provenance", "planted 3:1 list"}}}}}
                         .dump());
  const json config = {
      {"corpus", "corpus.jsonl"},
      {"sources", {"brando", "ohlala"}},
      {"word_lists", "lists.json"},
      {"lda", {{"num_topics", kTopics}, {"alpha", 0.1}, {"seed", 8}}},
      {"output_dir", "out"}};
  testing::WriteFile(dir / "config.json", config.dump(2));

  if (RunTool(dir / "config.json", "preprocess") != 0 ||
      RunTool(dir / "config.json", "fit") != 0) {
    return {false, "preprocess or fit failed"};
  }
  // Identify the planted topic by its word block.
  const TopicModel model = LoadModel(dir / "out/model.bin");
  int planted_topic = -1;
  double best_mass = -1.0;
  for (int k = 0; k < model.num_topics; ++k) {
    double mass = 0.0;
    for (int w = 0; w < model.vocab_size; ++w) {
      const std::string& term = model.vocabulary.Term(w);
      if (std::find(vocab.begin(), vocab.begin() + kBlock, term) != vocab.begin() + kBlock) {
        mass += model.PhiRow(k)[w];
      }
    }
    if (mass > best_mass) {
      best_mass = mass;
      planted_topic = k;
    }
  }
  testing::WriteFile(dir / "labels.csv", fmt::format("topic,label\n{},planted\n", planted_topic));
  const std::string labels = "--labels " + (dir / "labels.csv").string();
  if (RunTool(dir / "config.json", "analyze " + labels) != 0 ||
      RunTool(dir / "config.json", "report " + labels) != 0) {
    return {false, "analyze or report failed"};
  }

  const csv::Table prevalence = csv::Read(dir / "out/prevalence.csv");
  std::map<std::string, std::map<int, double>> series;
  for (const auto& r : prevalence.rows) series[r[1]][std::stoi(r[2])] = std::stod(r[5]);
  std::vector<double> years, gap;
  for (int year = 2008; year <= 2018; ++year) {
    years.push_back(year);
    gap.push_back(series["brando"].at(year) - series["ohlala"].at(year));
  }
  const auto smooth = LoessFit(years, gap);
  double worst_rise = -1.0, worst_track = 0.0;
  for (std::size_t i = 0; i < years.size(); ++i) {
    if (i > 0) worst_rise = std::max(worst_rise, smooth.fitted[i] - smooth.fitted[i - 1]);
    worst_track = std::max(worst_track,
                           std::abs(smooth.fitted[i] - planted_gap(static_cast<int>(years[i]))));
  }
  const bool monotone = worst_rise <= 0.03 && worst_track <= 0.03 &&
                        smooth.fitted.front() > smooth.fitted.back();

  const csv::Table significance = csv::Read(dir / "out/significance.csv");
  int significant = 0;
  for (const auto& r : significance.rows) significant += r[9] == "true";
  const csv::Table frequency = csv::Read(dir / "out/frequency.csv");
  bool cell_sizes = frequency.rows.size() == 22;
  for (const auto& r : frequency.rows) cell_sizes = cell_sizes && r[4] == "10000";

  const double t = Seconds(start);
  return {monotone && significant >= 9 && cell_sizes && t < 300.0,
          fmt::format("smoothed gap {:.3f} -> {:.3f}, max rise {:.4f}, max deviation "
                      "from planted {:.4f}; significant years {}/11; {:.1f} s",
                      smooth.fitted.front(), smooth.fitted.back(), worst_rise,
                      worst_track, significant, t)};
}

Outcome Determinism() {
  testing::TempDir dir;
  Rng rng(909);
  const std::vector<std::string> words = {
      "familia", "hijos", "madre", "empresa", "mercado", "moda", "ropa",
      "estilo",  "ciencia", "niños", "colegio", "horóscopo", "tauro", "aborto",
      "feminismo", "cocina", "viaje", "música", "los", "de"};
  std::string corpus;
  for (const auto& doc : testing::RandomDocuments(rng, 220, {"brando", "ohlala"},
                                                  2008, 2018, words, 10, 40)) {
    corpus += testing::CorpusLine(doc.id, doc.source, doc.year, doc.text) + "\n";
  }
  testing::WriteFile(dir / "corpus.jsonl", corpus);
  const json config = {
      {"corpus", "corpus.jsonl"},
      {"sources", {"brando", "ohlala"}},
      {"lda", {{"num_topics", 8}, {"sweeps", 200}, {"burn_in", 150}, {"seed", 9}}},
      {"selected_topics", {{{"id", 1}, {"label", "a"}}, {{"id", 5}, {"label", "b"}}}},
      {"output_dir", "out"}};
  testing::WriteFile(dir / "config.json", config.dump(2));
  if (RunTool(dir / "config.json", "pipeline") != 0) return {false, "first run failed"};
  const auto first = TreeHashes(dir / "out");
  fs::remove_all(dir / "out");
  if (RunTool(dir / "config.json", "pipeline") != 0) return {false, "second run failed"};
  const auto second = TreeHashes(dir / "out");
  std::size_t differing = 0;
  for (const auto& [file, hash] : first) {
    auto it = second.find(file);
    if (it == second.end() || it->second != hash) ++differing;
  }
  return {first == second && first.size() >= 12,
          fmt::format("{} files hashed, {} differ", first.size(), differing)};
}

Outcome StemmerConformance() {
  std::ifstream in(testing::StemmerReferencePath());
  std::string line;
  std::size_t total = 0, agree = 0;
  std::vector<std::string> exceptions;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word, stem;
    fields >> word >> stem;
    ++total;
    if (StemSpanish(std::string_view(word)) == stem) {
      ++agree;
    } else if (exceptions.size() < 10) {
      exceptions.push_back(word);
    }
  }
  const double rate = total ? static_cast<double>(agree) / total : 0.0;
  std::string detail = fmt::format("{}/{} agree ({:.4f}%)", agree, total, 100 * rate);
  if (!exceptions.empty()) detail += fmt::format("; first exceptions: {}", fmt::join(exceptions, " "));
  return {total > 0 && rate >= 0.99, detail};
}

}  // namespace

int main() {
  logger()->set_level(spdlog::level::err);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Gibbs count invariants", GibbsInvariants},
      {"single-topic collapse", SingleTopicCollapse},
      {"planted-topic recovery", PlantedRecovery},
      {"topic prevalence oracle", PrevalenceOracle},
      {"word-list frequency oracle", FrequencyOracle},
      {"Fisher exact test", FisherExhaustive},
      {"LOESS", LoessChecks},
      {"synthetic gap study", GapStudy},
      {"end-to-end determinism", Determinism},
      {"stemmer conformance", StemmerConformance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << fmt::format("[{}] criterion {}: {} ({})", outcome.pass ? "PASS" : "FAIL",
                             i + 1, criteria[i].first, outcome.detail)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures,
                           criteria.size())
            << std::endl;
  return failures == 0 ? 0 : 1;
}
