// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_UTF8_H_
#define TOPICGAP_UTF8_H_

#include <string>
#include <string_view>

namespace topicgap::utf8 {

// Decodes UTF-8; invalid sequences become U+FFFD.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
std::string Encode(char32_t c);

// Letter classification covering Latin, Greek, Cyrillic and the common
// CJK / Arabic / Hebrew blocks. Not a full Unicode database.
bool IsLetter(char32_t c);
char32_t ToLower(char32_t c);
// Maps vowels carrying an acute accent to the bare vowel. Other marks
// (ñ, ü, grave, circumflex) are untouched.
char32_t StripAcute(char32_t c);

}  // namespace topicgap::utf8

#endif  // TOPICGAP_UTF8_H_
