// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/utf8.h"

namespace topicgap::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct Range {
  char32_t lo;
  char32_t hi;
};

constexpr Range kLetterRanges[] = {
    {U'A', U'Z'},      {U'a', U'z'},      {0x00AA, 0x00AA},  {0x00B5, 0x00B5},
    {0x00BA, 0x00BA},  {0x00C0, 0x00D6},  {0x00D8, 0x00F6},  {0x00F8, 0x02AF},
    {0x0370, 0x0373},  {0x0376, 0x0377},  {0x037B, 0x037D},  {0x0386, 0x0386},
    {0x0388, 0x03FF},  {0x0400, 0x0481},  {0x048A, 0x052F},  {0x05D0, 0x05EA},
    {0x0620, 0x064A},  {0x1E00, 0x1FFF},  {0x3040, 0x30FF},  {0x4E00, 0x9FFF},
    {0xAC00, 0xD7A3},
};

}  // namespace

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= text.size()) {
        ok = false;
        break;
      }
      const auto bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string Encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) out += Encode(c);
  return out;
}

bool IsLetter(char32_t c) {
  for (const Range& r : kLetterRanges) {
    if (c >= r.lo && c <= r.hi) return true;
  }
  return false;
}

char32_t ToLower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 32;
  // Latin Extended-A: upper/lower pairs alternate.
  if (c >= 0x0100 && c <= 0x0137 && c % 2 == 0) return c + 1;
  if (c >= 0x0139 && c <= 0x0148 && c % 2 == 1) return c + 1;
  if (c >= 0x014A && c <= 0x0177 && c % 2 == 0) return c + 1;
  if (c >= 0x0391 && c <= 0x03AB && c != 0x03A2) return c + 32;
  if (c >= 0x0410 && c <= 0x042F) return c + 32;
  if (c >= 0x0400 && c <= 0x040F) return c + 80;
  return c;
}

char32_t StripAcute(char32_t c) {
  switch (c) {
    case 0x00E1: return U'a';
    case 0x00E9: return U'e';
    case 0x00ED: return U'i';
    case 0x00F3: return U'o';
    case 0x00FA: return U'u';
    case 0x00FD: return U'y';
    case 0x00C1: return U'A';
    case 0x00C9: return U'E';
    case 0x00CD: return U'I';
    case 0x00D3: return U'O';
    case 0x00DA: return U'U';
    case 0x00DD: return U'Y';
    default: return c;
  }
}

}  // namespace topicgap::utf8
