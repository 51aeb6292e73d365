// Apache License, Version 2.0, refer to LICENSE.txt
//
// Minimal RFC 4180 reading and writing for the analysis tables.

#ifndef TOPICGAP_CSV_H_
#define TOPICGAP_CSV_H_

#include <filesystem>
#include <string>
#include <vector>

namespace topicgap::csv {

using Row = std::vector<std::string>;

std::string Escape(const std::string& field);
std::string FormatRow(const Row& row);

struct Table {
  Row header;
  std::vector<Row> rows;

  // Column index by name; throws DataError when absent.
  std::size_t Column(const std::string& name) const;
};

// Throws DataError on unreadable files or ragged rows.
Table Read(const std::filesystem::path& path);
void Write(const std::filesystem::path& path, const Table& table);

}  // namespace topicgap::csv

#endif  // TOPICGAP_CSV_H_
