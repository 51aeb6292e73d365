// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_TOKENIZER_H_
#define TOPICGAP_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace topicgap {

struct TokenizerRules {
  bool lowercase = true;
  // á é í ó ú -> a e i o u; ñ and ü are kept.
  bool strip_acute_accents = true;
  // In code points.
  int min_token_length = 2;
};

// Maximal runs of letters, normalized per `rules`, shorter tokens dropped.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerRules& rules = {});

// Normalizes a single word the same way Tokenize normalizes tokens, without
// splitting or length filtering. Non-letters are kept.
std::string NormalizeWord(std::string_view word,
                          const TokenizerRules& rules = {});

}  // namespace topicgap

#endif  // TOPICGAP_TOKENIZER_H_
