// Apache License, Version 2.0, refer to LICENSE.txt
//
// Shared fixtures for the test binaries: temporary directories, log capture
// and synthetic corpus generators.

#ifndef TOPICGAP_TESTS_SUPPORT_H_
#define TOPICGAP_TESTS_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "topicgap/corpus.h"
#include "topicgap/lda.h"

namespace topicgap::testing {

// Fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

void WriteFile(const std::filesystem::path& path, const std::string& text);
std::string ReadFile(const std::filesystem::path& path);

// Routes library log output into a buffer while alive.
class LogCapture {
 public:
  LogCapture();
  ~LogCapture();

  std::string text() const;
  std::size_t warnings() const;
  bool Contains(const std::string& needle) const {
    return text().find(needle) != std::string::npos;
  }

 private:
  std::ostringstream buffer_;
  std::vector<spdlog::sink_ptr> saved_sinks_;
  spdlog::level::level_enum saved_level_;
};

// Uniform random stem-id streams.
std::vector<std::vector<int>> RandomStreams(Rng& rng, std::size_t docs,
                                            int vocab_size, int min_len,
                                            int max_len);

std::vector<double> SampleDirichlet(Rng& rng, double alpha, int k);
int SampleCategorical(Rng& rng, const std::vector<double>& p);

struct PlantedCorpus {
  std::vector<std::vector<int>> streams;
  // num_topics x vocab_size, row-major.
  std::vector<double> phi;
  int num_topics = 0;
  int vocab_size = 0;
};

// Topics with disjoint supports of vocab_size / num_topics words each
// (mass `sharpness` spread over the support, the rest over everything).
PlantedCorpus MakePlantedCorpus(Rng& rng, std::size_t docs, int num_topics,
                                int vocab_size, double alpha, int doc_len,
                                double sharpness = 0.95);

double Cosine(const double* a, const double* b, int n);
// Best one-to-one matching of estimated rows to true rows (exhaustive over
// permutations), returned as the mean cosine of matched pairs.
double MatchedMeanCosine(const std::vector<double>& estimated,
                         const std::vector<double>& truth, int rows, int cols);

// JSON line for one corpus record.
std::string CorpusLine(const std::string& id, const std::string& source,
                       int year, const std::string& text);

// Two sources x years corpus with random texts drawn from `words`.
std::vector<Document> RandomDocuments(Rng& rng, std::size_t docs,
                                      const std::vector<std::string>& sources,
                                      int first_year, int last_year,
                                      const std::vector<std::string>& words,
                                      int min_len, int max_len);

struct XmlElement {
  std::string tag;
  std::map<std::string, std::string> attributes;
};
// Every element of a well-formed XML document in document order; throws
// on malformed input.
std::vector<XmlElement> ParseXmlElements(const std::string& xml);
// Elements whose class attribute equals `cls`.
std::vector<XmlElement> ElementsWithClass(const std::string& xml,
                                          const std::string& cls);

std::filesystem::path StemmerReferencePath();
std::filesystem::path ToolPath();

}  // namespace topicgap::testing

#endif  // TOPICGAP_TESTS_SUPPORT_H_
