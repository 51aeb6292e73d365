// Apache License, Version 2.0, refer to LICENSE.txt

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "support.h"
#include "topicgap/spanish_stemmer.h"

using topicgap::StemSpanish;

namespace {

struct Pair {
  std::string word;
  std::string stem;
};

std::vector<Pair> LoadReference() {
  std::ifstream in(topicgap::testing::StemmerReferencePath());
  REQUIRE(in.good());
  std::vector<Pair> pairs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Pair p;
    fields >> p.word >> p.stem;
    pairs.push_back(p);
  }
  return pairs;
}

std::string Stem(const std::string& w) { return StemSpanish(std::string_view(w)); }

}  // namespace

TEST_CASE("agrees with the reference vocabulary") {
  const auto pairs = LoadReference();
  REQUIRE(pairs.size() > 30000);
  std::size_t mismatches = 0;
  for (const auto& p : pairs) {
    if (Stem(p.word) != p.stem) {
      if (++mismatches <= 20) MESSAGE(p.word << " -> " << Stem(p.word)
                                             << " (expected " << p.stem << ")");
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("known stems") {
  CHECK(Stem("niños") == "niñ");
  CHECK(Stem("diseño") == "diseñ");
  CHECK(Stem("tecnología") == "tecnolog");
  CHECK(Stem("colección") == "coleccion");
  CHECK(Stem("a") == "a");
  CHECK(Stem("") == "");
}

TEST_CASE("stems of reference stems agree with the reference") {
  // Stemming is not idempotent; stems that are reference words must still
  // stem as the reference says.
  const auto pairs = LoadReference();
  std::map<std::string, std::string> table;
  for (const auto& p : pairs) table[p.word] = p.stem;
  std::size_t checked = 0;
  for (const auto& p : pairs) {
    auto it = table.find(p.stem);
    if (it == table.end()) continue;
    ++checked;
    CHECK(Stem(p.stem) == it->second);
  }
  CHECK(checked > 1000);
}

TEST_CASE("fixed points stay fixed") {
  const auto pairs = LoadReference();
  std::size_t fixed = 0;
  for (const auto& p : pairs) {
    if (p.word != p.stem) continue;
    ++fixed;
    CHECK(Stem(p.word) == p.word);
  }
  CHECK(fixed > 1000);
}

TEST_CASE("deterministic and accent-insensitive in the final step") {
  CHECK(Stem("canción") == Stem("canción"));
  for (const char* w : {"está", "también", "aquí", "según", "así"}) {
    const std::string s = Stem(w);
    CHECK(s.find("á") == std::string::npos);
    CHECK(s.find("é") == std::string::npos);
    CHECK(s.find("í") == std::string::npos);
    CHECK(s.find("ó") == std::string::npos);
    CHECK(s.find("ú") == std::string::npos);
  }
}
