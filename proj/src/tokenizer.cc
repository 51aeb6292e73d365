// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/tokenizer.h"

#include "topicgap/utf8.h"

namespace topicgap {

namespace {

char32_t NormalizeChar(char32_t c, const TokenizerRules& rules) {
  if (rules.lowercase) c = utf8::ToLower(c);
  if (rules.strip_acute_accents) c = utf8::StripAcute(c);
  return c;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerRules& rules) {
  std::vector<std::string> tokens;
  std::u32string current;
  auto flush = [&] {
    if (!current.empty() &&
        static_cast<int>(current.size()) >= rules.min_token_length) {
      tokens.push_back(utf8::Encode(current));
    }
    current.clear();
  };
  for (char32_t c : utf8::Decode(text)) {
    if (utf8::IsLetter(c)) {
      current.push_back(NormalizeChar(c, rules));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string NormalizeWord(std::string_view word, const TokenizerRules& rules) {
  std::u32string out;
  for (char32_t c : utf8::Decode(word)) out.push_back(NormalizeChar(c, rules));
  return utf8::Encode(out);
}

}  // namespace topicgap
