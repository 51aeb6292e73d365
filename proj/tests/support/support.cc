// Apache License, Version 2.0, refer to LICENSE.txt

#include "support.h"

#include <stdlib.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>

#include "topicgap/log.h"

namespace topicgap::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  std::string pattern = (fs::temp_directory_path() / "topicgap-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void WriteFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LogCapture::LogCapture() {
  auto log = logger();
  saved_sinks_ = log->sinks();
  saved_level_ = log->level();
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(buffer_);
  sink->set_pattern("[%l] %v");
  log->sinks() = {sink};
  log->set_level(spdlog::level::info);
}

LogCapture::~LogCapture() {
  auto log = logger();
  log->sinks() = saved_sinks_;
  log->set_level(saved_level_);
}

std::string LogCapture::text() const { return buffer_.str(); }

std::size_t LogCapture::warnings() const {
  const std::string s = text();
  std::size_t count = 0;
  for (auto pos = s.find("[warning]"); pos != std::string::npos;
       pos = s.find("[warning]", pos + 1)) {
    ++count;
  }
  return count;
}

std::vector<std::vector<int>> RandomStreams(Rng& rng, std::size_t docs,
                                            int vocab_size, int min_len,
                                            int max_len) {
  std::vector<std::vector<int>> streams(docs);
  for (auto& s : streams) {
    const int len = min_len + static_cast<int>(rng.Below(max_len - min_len + 1));
    for (int i = 0; i < len; ++i) {
      s.push_back(static_cast<int>(rng.Below(vocab_size)));
    }
  }
  return streams;
}

std::vector<double> SampleDirichlet(Rng& rng, double alpha, int k) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> p(k);
  double total = 0.0;
  for (double& v : p) total += v = gamma(rng.engine());
  if (total <= 0.0) {
    // Every draw underflowed: put all mass on one component.
    std::fill(p.begin(), p.end(), 0.0);
    p[rng.Below(k)] = 1.0;
    return p;
  }
  for (double& v : p) v /= total;
  return p;
}

int SampleCategorical(Rng& rng, const std::vector<double>& p) {
  const double u = rng.Uniform();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cumulative += p[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  return static_cast<int>(p.size()) - 1;
}

PlantedCorpus MakePlantedCorpus(Rng& rng, std::size_t docs, int num_topics,
                                int vocab_size, double alpha, int doc_len,
                                double sharpness) {
  PlantedCorpus out;
  out.num_topics = num_topics;
  out.vocab_size = vocab_size;
  out.phi.assign(static_cast<std::size_t>(num_topics) * vocab_size, 0.0);
  const int block = vocab_size / num_topics;
  for (int k = 0; k < num_topics; ++k) {
    for (int w = 0; w < vocab_size; ++w) {
      double p = (1.0 - sharpness) / vocab_size;
      if (w / block == k) p += sharpness / block;
      out.phi[static_cast<std::size_t>(k) * vocab_size + w] = p;
    }
  }
  for (std::size_t d = 0; d < docs; ++d) {
    const auto theta = SampleDirichlet(rng, alpha, num_topics);
    std::vector<int> stream;
    for (int i = 0; i < doc_len; ++i) {
      const int k = SampleCategorical(rng, theta);
      std::vector<double> row(out.phi.begin() + k * vocab_size,
                              out.phi.begin() + (k + 1) * vocab_size);
      stream.push_back(SampleCategorical(rng, row));
    }
    out.streams.push_back(std::move(stream));
  }
  return out;
}

double Cosine(const double* a, const double* b, int n) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (int i = 0; i < n; ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

double MatchedMeanCosine(const std::vector<double>& estimated,
                         const std::vector<double>& truth, int rows, int cols) {
  std::vector<int> perm(rows);
  std::iota(perm.begin(), perm.end(), 0);
  double best = -1.0;
  do {
    double total = 0.0;
    for (int r = 0; r < rows; ++r) {
      total += Cosine(&estimated[static_cast<std::size_t>(perm[r]) * cols],
                      &truth[static_cast<std::size_t>(r) * cols], cols);
    }
    best = std::max(best, total / rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string CorpusLine(const std::string& id, const std::string& source,
                       int year, const std::string& text) {
  return nlohmann::json{{"id", id}, {"source", source}, {"year", year},
                        {"text", text}}
      .dump();
}

std::vector<Document> RandomDocuments(Rng& rng, std::size_t docs,
                                      const std::vector<std::string>& sources,
                                      int first_year, int last_year,
                                      const std::vector<std::string>& words,
                                      int min_len, int max_len) {
  std::vector<Document> out;
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.id = "doc" + std::to_string(d);
    doc.source = sources[rng.Below(sources.size())];
    doc.year = first_year + static_cast<int>(rng.Below(last_year - first_year + 1));
    const int len = min_len + static_cast<int>(rng.Below(max_len - min_len + 1));
    for (int i = 0; i < len; ++i) {
      if (i) doc.text += ' ';
      doc.text += words[rng.Below(words.size())];
    }
    out.push_back(std::move(doc));
  }
  return out;
}

namespace {

void Collect(const std::string& tag, const boost::property_tree::ptree& node,
             std::vector<XmlElement>& out) {
  XmlElement element{tag, {}};
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [name, value] : *attrs) {
      element.attributes[name] = value.data();
    }
  }
  out.push_back(std::move(element));
  for (const auto& [child_tag, child] : node) {
    if (child_tag == "<xmlattr>" || child_tag == "<xmlcomment>") continue;
    Collect(child_tag, child, out);
  }
}

}  // namespace

std::vector<XmlElement> ParseXmlElements(const std::string& xml) {
  std::istringstream in(xml);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  std::vector<XmlElement> out;
  for (const auto& [tag, child] : tree) Collect(tag, child, out);
  return out;
}

std::vector<XmlElement> ElementsWithClass(const std::string& xml,
                                          const std::string& cls) {
  std::vector<XmlElement> out;
  for (auto& e : ParseXmlElements(xml)) {
    auto it = e.attributes.find("class");
    if (it != e.attributes.end() && it->second == cls) out.push_back(std::move(e));
  }
  return out;
}

fs::path StemmerReferencePath() { return TOPICGAP_STEMMER_REFERENCE; }
fs::path ToolPath() { return TOPICGAP_TOOL_PATH; }

}  // namespace topicgap::testing
