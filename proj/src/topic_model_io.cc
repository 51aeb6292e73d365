// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/topic_model_io.h"

#include <bit>
#include <cstring>
#include <fstream>

#include "topicgap/errors.h"

namespace topicgap {

namespace {

constexpr char kMagic[8] = {'T', 'G', 'M', 'O', 'D', 'E', 'L', '\0'};

static_assert(std::endian::native == std::endian::little,
              "model IO assumes a little-endian host");

template <typename T>
void WriteRaw(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T ReadRaw(std::istream& in, const std::string& path) {
  T value;
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw DataError("truncated model file " + path);
  }
  return value;
}

}  // namespace

nlohmann::json LdaConfigToJson(const LdaConfig& config) {
  nlohmann::json j;
  j["num_topics"] = config.num_topics;
  if (config.alpha) {
    j["alpha"] = *config.alpha;
  } else {
    j["alpha"] = nullptr;
  }
  j["beta"] = config.beta;
  j["sweeps"] = config.sweeps;
  j["burn_in"] = config.burn_in;
  j["sample_lag"] = config.sample_lag;
  j["seed"] = config.seed;
  return j;
}

LdaConfig LdaConfigFromJson(const nlohmann::json& j) {
  LdaConfig config;
  config.num_topics = j.value("num_topics", config.num_topics);
  if (j.contains("alpha") && !j["alpha"].is_null()) {
    config.alpha = j["alpha"].get<double>();
  }
  config.beta = j.value("beta", config.beta);
  config.sweeps = j.value("sweeps", config.sweeps);
  config.burn_in = j.value("burn_in", config.burn_in);
  config.sample_lag = j.value("sample_lag", config.sample_lag);
  config.seed = j.value("seed", config.seed);
  return config;
}

void SaveModel(const TopicModel& model, const std::filesystem::path& path) {
  nlohmann::json header;
  header["schema_version"] = kModelSchemaVersion;
  header["config"] = LdaConfigToJson(model.config);
  header["num_topics"] = model.num_topics;
  header["vocab_size"] = model.vocab_size;
  header["num_docs"] = model.num_docs();
  auto& vocab = header["vocabulary"] = nlohmann::json::array();
  for (const auto& e : model.vocabulary.entries()) {
    vocab.push_back({e.stem, e.surface, e.count, e.doc_freq});
  }
  header["doc_ids"] = model.doc_ids;
  std::vector<int> fitted(model.fitted.begin(), model.fitted.end());
  header["fitted"] = fitted;
  const std::string text = header.dump();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write model file " + path.string());
  out.write(kMagic, sizeof(kMagic));
  WriteRaw(out, kModelSchemaVersion);
  WriteRaw(out, static_cast<std::uint64_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.write(reinterpret_cast<const char*>(model.phi.data()),
            static_cast<std::streamsize>(model.phi.size() * sizeof(double)));
  out.write(reinterpret_cast<const char*>(model.theta.data()),
            static_cast<std::streamsize>(model.theta.size() * sizeof(double)));
  if (!out) throw DataError("failed writing model file " + path.string());
}

TopicModel LoadModel(const std::filesystem::path& path) {
  const std::string name = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model file " + name);
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw DataError(name + " is not a topic model file");
  }
  const auto version = ReadRaw<std::uint32_t>(in, name);
  if (version != kModelSchemaVersion) {
    throw DataError(name + ": unsupported model schema version " +
                    std::to_string(version));
  }
  const auto header_size = ReadRaw<std::uint64_t>(in, name);
  std::string text(header_size, '\0');
  if (!in.read(text.data(), static_cast<std::streamsize>(header_size))) {
    throw DataError("truncated model file " + name);
  }

  TopicModel model;
  try {
    const auto header = nlohmann::json::parse(text);
    model.config = LdaConfigFromJson(header.at("config"));
    model.num_topics = header.at("num_topics").get<int>();
    model.vocab_size = header.at("vocab_size").get<int>();
    std::vector<Vocabulary::Entry> entries;
    for (const auto& e : header.at("vocabulary")) {
      entries.push_back({e.at(0).get<std::string>(),
                         e.at(1).get<std::string>(), e.at(2).get<std::size_t>(),
                         e.at(3).get<std::size_t>()});
    }
    model.vocabulary = Vocabulary(std::move(entries));
    model.doc_ids = header.at("doc_ids").get<std::vector<std::string>>();
    for (int f : header.at("fitted").get<std::vector<int>>()) {
      model.fitted.push_back(f != 0);
    }
    if (header.at("num_docs").get<std::size_t>() != model.fitted.size()) {
      throw DataError(name + ": inconsistent document count");
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(name + ": bad model header: " + e.what());
  }

  model.phi.resize(static_cast<std::size_t>(model.num_topics) *
                   model.vocab_size);
  model.theta.resize(model.fitted.size() * model.num_topics);
  for (auto* table : {&model.phi, &model.theta}) {
    const auto bytes =
        static_cast<std::streamsize>(table->size() * sizeof(double));
    if (!in.read(reinterpret_cast<char*>(table->data()), bytes)) {
      throw DataError("truncated model file " + name);
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw DataError(name + ": trailing bytes after the model tables");
  }
  return model;
}

}  // namespace topicgap
