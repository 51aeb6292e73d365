// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/spanish_stemmer.h"

#include <algorithm>
#include <initializer_list>

#include "topicgap/utf8.h"

namespace topicgap {

namespace {

struct Suffix {
  std::u32string_view text;
  int kind;
};

bool IsVowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

bool EndsWith(const std::u32string& w, std::u32string_view suffix) {
  return w.size() >= suffix.size() &&
         std::u32string_view(w).substr(w.size() - suffix.size()) == suffix;
}

// Longest entry of `table` that is a suffix of w[0, end) and starts at or
// after `lower`. Returns nullptr when nothing matches.
const Suffix* LongestMatch(const std::u32string& w, std::size_t end,
                           std::initializer_list<Suffix> table,
                           std::size_t lower = 0) {
  const Suffix* best = nullptr;
  const std::u32string_view head = std::u32string_view(w).substr(0, end);
  for (const Suffix& s : table) {
    if (s.text.size() > end || end - s.text.size() < lower) continue;
    if (head.substr(end - s.text.size()) != s.text) continue;
    if (!best || s.text.size() > best->text.size()) best = &s;
  }
  return best;
}

// Index just past the first non-vowel that follows a vowel, searching from
// `start`; w.size() when there is none.
std::size_t RegionAfter(const std::u32string& w, std::size_t start) {
  const std::size_t n = w.size();
  std::size_t i = start;
  while (i < n && !IsVowel(w[i])) ++i;
  if (i == n) return n;
  ++i;
  while (i < n && IsVowel(w[i])) ++i;
  if (i == n) return n;
  return i + 1;
}

std::size_t FindRV(const std::u32string& w) {
  const std::size_t n = w.size();
  if (n < 2) return n;
  auto next = [&](bool want_vowel) {
    for (std::size_t i = 2; i < n; ++i) {
      if (IsVowel(w[i]) == want_vowel) return i + 1;
    }
    return n;
  };
  if (IsVowel(w[0])) {
    return IsVowel(w[1]) ? next(false) : next(true);
  }
  if (!IsVowel(w[1])) return next(true);
  return std::min<std::size_t>(3, n);
}

class Stemmer {
 public:
  explicit Stemmer(std::u32string word) : w_(std::move(word)) {
    rv_ = FindRV(w_);
    r1_ = RegionAfter(w_, 0);
    r2_ = r1_ < w_.size() ? RegionAfter(w_, r1_) : w_.size();
  }

  std::u32string Run() {
    AttachedPronoun();
    if (!StandardSuffix() && !YVerbSuffix()) VerbSuffix();
    ResidualSuffix();
    for (char32_t& c : w_) c = utf8::StripAcute(c);
    return std::move(w_);
  }

 private:
  void AttachedPronoun() {
    const Suffix* pronoun = LongestMatch(
        w_, w_.size(),
        {{U"me", 0}, {U"se", 0}, {U"sela", 0}, {U"selo", 0}, {U"selas", 0},
         {U"selos", 0}, {U"la", 0}, {U"le", 0}, {U"lo", 0}, {U"las", 0},
         {U"les", 0}, {U"los", 0}, {U"nos", 0}});
    if (!pronoun) return;
    const std::size_t pronoun_start = w_.size() - pronoun->text.size();
    // kind 0: drop the pronoun; 1: drop it and de-accent the verb ending;
    // 2: drop it only after 'u'.
    const Suffix* verb = LongestMatch(
        w_, pronoun_start,
        {{U"ando", 0}, {U"iendo", 0}, {U"yendo", 2}, {U"ándo", 1},
         {U"iéndo", 1}, {U"ar", 0}, {U"er", 0}, {U"ir", 0}, {U"ár", 1},
         {U"ér", 1}, {U"ír", 1}});
    if (!verb) return;
    const std::size_t verb_start = pronoun_start - verb->text.size();
    if (verb_start < rv_) return;
    switch (verb->kind) {
      case 1: {
        std::u32string plain(verb->text);
        for (char32_t& c : plain) c = utf8::StripAcute(c);
        w_.replace(verb_start, std::u32string::npos, plain);
        break;
      }
      case 2:
        if (verb_start == 0 || w_[verb_start - 1] != U'u') return;
        w_.erase(pronoun_start);
        break;
      default:
        w_.erase(pronoun_start);
    }
  }

  // Deletes a trailing `suffix` when it starts inside R2.
  bool DeleteInR2(std::u32string_view suffix) {
    if (!EndsWith(w_, suffix) || w_.size() - suffix.size() < r2_) return false;
    w_.erase(w_.size() - suffix.size());
    return true;
  }

  bool StandardSuffix() {
    const Suffix* s = LongestMatch(
        w_, w_.size(),
        {{U"anza", 1},     {U"anzas", 1},    {U"ico", 1},      {U"ica", 1},
         {U"icos", 1},     {U"icas", 1},     {U"ismo", 1},     {U"ismos", 1},
         {U"able", 1},     {U"ables", 1},    {U"ible", 1},     {U"ibles", 1},
         {U"ista", 1},     {U"istas", 1},    {U"oso", 1},      {U"osa", 1},
         {U"osos", 1},     {U"osas", 1},     {U"amiento", 1},  {U"amientos", 1},
         {U"imiento", 1},  {U"imientos", 1},
         {U"adora", 2},    {U"ador", 2},     {U"ación", 2},    {U"acion", 2},
         {U"adoras", 2},   {U"adores", 2},   {U"aciones", 2},  {U"ante", 2},
         {U"antes", 2},    {U"ancia", 2},    {U"ancias", 2},
         {U"logía", 3},    {U"logías", 3},
         {U"ución", 4},    {U"ucion", 4},    {U"uciones", 4},
         {U"encia", 5},    {U"encias", 5},
         {U"amente", 6},
         {U"mente", 7},
         {U"idad", 8},     {U"idades", 8},
         {U"iva", 9},      {U"ivo", 9},      {U"ivas", 9},     {U"ivos", 9}});
    if (!s) return false;
    const std::size_t start = w_.size() - s->text.size();
    if (s->kind == 6 ? start < r1_ : start < r2_) return false;
    switch (s->kind) {
      case 1:
        w_.erase(start);
        break;
      case 2:
        w_.erase(start);
        DeleteInR2(U"ic");
        break;
      case 3:
        w_.replace(start, std::u32string::npos, U"log");
        break;
      case 4:
        w_.replace(start, std::u32string::npos, U"u");
        break;
      case 5:
        w_.replace(start, std::u32string::npos, U"ente");
        break;
      case 6: {
        w_.erase(start);
        const Suffix* next = LongestMatch(
            w_, w_.size(), {{U"iv", 1}, {U"os", 0}, {U"ic", 0}, {U"ad", 0}});
        if (next && DeleteInR2(next->text) && next->kind == 1) {
          DeleteInR2(U"at");
        }
        break;
      }
      case 7: {
        w_.erase(start);
        const Suffix* next = LongestMatch(
            w_, w_.size(), {{U"ante", 0}, {U"able", 0}, {U"ible", 0}});
        if (next) DeleteInR2(next->text);
        break;
      }
      case 8: {
        w_.erase(start);
        const Suffix* next = LongestMatch(
            w_, w_.size(), {{U"abil", 0}, {U"ic", 0}, {U"iv", 0}});
        if (next) DeleteInR2(next->text);
        break;
      }
      case 9:
        w_.erase(start);
        DeleteInR2(U"at");
        break;
    }
    return true;
  }

  bool YVerbSuffix() {
    const Suffix* s = LongestMatch(
        w_, w_.size(),
        {{U"ya", 0}, {U"ye", 0}, {U"yan", 0}, {U"yen", 0}, {U"yeron", 0},
         {U"yendo", 0}, {U"yo", 0}, {U"yó", 0}, {U"yas", 0}, {U"yes", 0},
         {U"yais", 0}, {U"yamos", 0}},
        rv_);
    if (!s) return false;
    const std::size_t start = w_.size() - s->text.size();
    if (start == 0 || w_[start - 1] != U'u') return false;
    w_.erase(start);
    return true;
  }

  // kind 1 endings also drop the 'u' of a preceding "gu".
  bool VerbSuffix() {
    const Suffix* s = LongestMatch(
        w_, w_.size(),
        {{U"en", 1},      {U"es", 1},      {U"éis", 1},     {U"emos", 1},
         {U"arían", 2},   {U"arías", 2},   {U"arán", 2},    {U"arás", 2},
         {U"aríais", 2},  {U"aría", 2},    {U"aréis", 2},   {U"aríamos", 2},
         {U"aremos", 2},  {U"ará", 2},     {U"aré", 2},     {U"erían", 2},
         {U"erías", 2},   {U"erán", 2},    {U"erás", 2},    {U"eríais", 2},
         {U"ería", 2},    {U"eréis", 2},   {U"eríamos", 2}, {U"eremos", 2},
         {U"erá", 2},     {U"eré", 2},     {U"irían", 2},   {U"irías", 2},
         {U"irán", 2},    {U"irás", 2},    {U"iríais", 2},  {U"iría", 2},
         {U"iréis", 2},   {U"iríamos", 2}, {U"iremos", 2},  {U"irá", 2},
         {U"iré", 2},     {U"aba", 2},     {U"ada", 2},     {U"ida", 2},
         {U"ía", 2},      {U"ara", 2},     {U"iera", 2},    {U"ad", 2},
         {U"ed", 2},      {U"id", 2},      {U"ase", 2},     {U"iese", 2},
         {U"aste", 2},    {U"iste", 2},    {U"an", 2},      {U"aban", 2},
         {U"ían", 2},     {U"aran", 2},    {U"ieran", 2},   {U"asen", 2},
         {U"iesen", 2},   {U"aron", 2},    {U"ieron", 2},   {U"ado", 2},
         {U"ido", 2},     {U"ando", 2},    {U"iendo", 2},   {U"ió", 2},
         {U"ar", 2},      {U"er", 2},      {U"ir", 2},      {U"as", 2},
         {U"abas", 2},    {U"adas", 2},    {U"idas", 2},    {U"ías", 2},
         {U"aras", 2},    {U"ieras", 2},   {U"ases", 2},    {U"ieses", 2},
         {U"ís", 2},      {U"áis", 2},     {U"abais", 2},   {U"íais", 2},
         {U"arais", 2},   {U"ierais", 2},  {U"aseis", 2},   {U"ieseis", 2},
         {U"asteis", 2},  {U"isteis", 2},  {U"ados", 2},    {U"idos", 2},
         {U"amos", 2},    {U"ábamos", 2},  {U"íamos", 2},   {U"imos", 2},
         {U"áramos", 2},  {U"iéramos", 2}, {U"iésemos", 2}, {U"ásemos", 2}},
        rv_);
    if (!s) return false;
    std::size_t start = w_.size() - s->text.size();
    if (s->kind == 1 && start >= 2 && w_[start - 1] == U'u' &&
        w_[start - 2] == U'g') {
      --start;
    }
    w_.erase(start);
    return true;
  }

  void ResidualSuffix() {
    const Suffix* s = LongestMatch(
        w_, w_.size(),
        {{U"os", 1}, {U"a", 1}, {U"o", 1}, {U"á", 1}, {U"í", 1}, {U"ó", 1},
         {U"e", 2}, {U"é", 2}});
    if (!s) return;
    const std::size_t start = w_.size() - s->text.size();
    if (start < rv_) return;
    w_.erase(start);
    if (s->kind == 2 && start >= 2 && w_[start - 1] == U'u' &&
        w_[start - 2] == U'g' && start - 1 >= rv_) {
      w_.erase(start - 1);
    }
  }

  std::u32string w_;
  std::size_t rv_;
  std::size_t r1_;
  std::size_t r2_;
};

}  // namespace

std::u32string StemSpanish(std::u32string word) {
  return Stemmer(std::move(word)).Run();
}

std::string StemSpanish(std::string_view word) {
  return utf8::Encode(StemSpanish(utf8::Decode(word)));
}

}  // namespace topicgap
