// Apache License, Version 2.0, refer to LICENSE.txt
//
// Spanish suffix-stripping stemmer compatible with the Snowball Spanish
// algorithm (attached pronouns, standard suffixes, y-verb and verb suffixes,
// residual suffixes, acute accent removal). Input is expected lowercase.

#ifndef TOPICGAP_SPANISH_STEMMER_H_
#define TOPICGAP_SPANISH_STEMMER_H_

#include <string>
#include <string_view>

namespace topicgap {

std::u32string StemSpanish(std::u32string word);
// UTF-8 in, UTF-8 out.
std::string StemSpanish(std::string_view word);

}  // namespace topicgap

#endif  // TOPICGAP_SPANISH_STEMMER_H_
