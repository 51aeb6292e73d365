// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "topicgap/errors.h"
#include "topicgap/log.h"

namespace topicgap {

namespace {

bool IsBlank(const std::string& text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  });
}

const std::vector<std::size_t>& EmptyCell() {
  static const std::vector<std::size_t> empty;
  return empty;
}

// Returns an empty string when the document is acceptable.
std::string Validate(const Document& doc, const YearRange& years) {
  if (doc.id.empty()) return "empty id";
  if (doc.source.empty()) return "empty source";
  if (!years.Contains(doc.year)) {
    return fmt::format("year {} outside {}-{}", doc.year, years.first,
                       years.last);
  }
  if (IsBlank(doc.text)) return "blank text";
  return {};
}

}  // namespace

Corpus Corpus::FromDocuments(std::vector<Document> documents,
                             YearRange years) {
  if (documents.empty()) throw DataError("corpus has no documents");
  Corpus corpus;
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const Document& doc = documents[i];
    if (auto problem = Validate(doc, years); !problem.empty()) {
      throw DataError(fmt::format("document '{}': {}", doc.id, problem));
    }
    if (!ids.insert(doc.id).second) {
      throw DataError(fmt::format("duplicate document id '{}'", doc.id));
    }
    corpus.partition_index_[CellKey{doc.source, doc.year}].push_back(i);
  }
  corpus.documents_ = std::move(documents);
  return corpus;
}

const std::vector<std::size_t>& Corpus::CellIndices(const CellKey& key) const {
  auto it = partition_index_.find(key);
  return it == partition_index_.end() ? EmptyCell() : it->second;
}

std::vector<const Document*> Corpus::Partition(const std::string& source,
                                               int year) const {
  std::vector<const Document*> out;
  for (std::size_t i : CellIndices(CellKey{source, year})) {
    out.push_back(&documents_[i]);
  }
  return out;
}

std::size_t Corpus::DocCount(const CellKey& key) const {
  return CellIndices(key).size();
}

std::map<CellKey, std::size_t> Corpus::DocCounts() const {
  std::map<CellKey, std::size_t> counts;
  for (const auto& [key, indices] : partition_index_) {
    counts[key] = indices.size();
  }
  return counts;
}

std::vector<std::string> Corpus::Sources() const {
  std::set<std::string> sources;
  for (const auto& [key, indices] : partition_index_) sources.insert(key.source);
  return {sources.begin(), sources.end()};
}

std::vector<int> Corpus::Years() const {
  std::set<int> years;
  for (const auto& [key, indices] : partition_index_) years.insert(key.year);
  return {years.begin(), years.end()};
}

Corpus LoadCorpus(const std::filesystem::path& path, YearRange years,
                  LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + path.string());

  LoadReport local;
  LoadReport& stats = report ? *report : local;
  stats = LoadReport{};

  std::vector<Document> documents;
  std::unordered_set<std::string> ids;
  std::set<std::string> warned_keys;
  std::string line;
  std::size_t line_no = 0;
  auto reject = [&](const std::string& reason) {
    std::string message = fmt::format("line {}: {}", line_no, reason);
    Warn("{}: record rejected, {}", path.string(), message);
    stats.rejected.push_back(std::move(message));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    ++stats.lines_read;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      reject(std::string("invalid JSON: ") + e.what());
      continue;
    }
    if (!record.is_object()) {
      reject("record is not a JSON object");
      continue;
    }
    Document doc;
    std::string missing;
    for (const char* key : {"id", "source", "year", "text"}) {
      if (!record.contains(key)) {
        missing = key;
        break;
      }
    }
    if (!missing.empty()) {
      reject("missing field '" + missing + "'");
      continue;
    }
    const auto& year = record["year"];
    if (!record["id"].is_string() || !record["source"].is_string() ||
        !record["text"].is_string()) {
      reject("fields id, source and text must be strings");
      continue;
    }
    if (!year.is_number_integer()) {
      reject("year is not an integer");
      continue;
    }
    for (const auto& [key, value] : record.items()) {
      if (key != "id" && key != "source" && key != "year" && key != "text" &&
          warned_keys.insert(key).second) {
        Warn("{}: line {}: unknown key '{}' ignored", path.string(), line_no,
             key);
      }
    }
    doc.id = record["id"].get<std::string>();
    doc.source = record["source"].get<std::string>();
    doc.year = year.get<int>();
    doc.text = record["text"].get<std::string>();
    if (auto problem = Validate(doc, years); !problem.empty()) {
      reject(problem);
      continue;
    }
    if (!ids.insert(doc.id).second) {
      throw DataError(path.string(), line_no,
                      "duplicate document id '" + doc.id + "'");
    }
    documents.push_back(std::move(doc));
  }
  stats.accepted = documents.size();
  if (documents.empty()) {
    throw DataError("no valid documents in " + path.string());
  }
  return Corpus::FromDocuments(std::move(documents), years);
}

}  // namespace topicgap
