// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_HASH_H_
#define TOPICGAP_HASH_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace topicgap {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::filesystem::path& path);

}  // namespace topicgap

#endif  // TOPICGAP_HASH_H_
