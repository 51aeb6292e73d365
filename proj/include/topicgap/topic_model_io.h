// Apache License, Version 2.0, refer to LICENSE.txt
//
// Model file layout (all integers little-endian):
//
//   bytes 0..7    magic "TGMODEL\0"
//   bytes 8..11   uint32 schema version (currently 1)
//   bytes 12..19  uint64 header length H
//   next H bytes  UTF-8 JSON header: config, num_topics, vocab_size,
//                 num_docs, vocabulary entries, doc ids, fitted flags
//   then          num_topics * vocab_size float64 (phi, row-major)
//   then          num_docs * num_topics float64 (theta, row-major)
//
// Doubles are stored bit-exact, so a save/load round trip is lossless.

#ifndef TOPICGAP_TOPIC_MODEL_IO_H_
#define TOPICGAP_TOPIC_MODEL_IO_H_

#include <filesystem>

#include <json.hpp>

#include "topicgap/lda.h"

namespace topicgap {

inline constexpr std::uint32_t kModelSchemaVersion = 1;

nlohmann::json LdaConfigToJson(const LdaConfig& config);
LdaConfig LdaConfigFromJson(const nlohmann::json& j);

void SaveModel(const TopicModel& model, const std::filesystem::path& path);
// Throws DataError on a malformed or truncated file.
TopicModel LoadModel(const std::filesystem::path& path);

}  // namespace topicgap

#endif  // TOPICGAP_TOPIC_MODEL_IO_H_
