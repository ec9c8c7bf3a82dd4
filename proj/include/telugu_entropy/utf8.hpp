#ifndef TELUGU_ENTROPY_UTF8_HPP
#define TELUGU_ENTROPY_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "telugu_entropy/error.hpp"

namespace telugu_entropy::utf8 {

struct Decoded {
  char32_t codepoint;
  std::size_t length;  // bytes consumed
};

// Decodes one scalar value starting at `pos`. Malformed bytes raise
// kUndecodableSequence with the byte offset.
inline Decoded decode(std::string_view s, std::size_t pos) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    throw Error(ErrorCode::kUndecodableSequence, "invalid UTF-8 lead byte", pos);
  }
  if (pos + len > s.size())
    throw Error(ErrorCode::kUndecodableSequence, "truncated UTF-8 sequence", pos);
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80)
      throw Error(ErrorCode::kUndecodableSequence, "invalid UTF-8 continuation", pos);
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    throw Error(ErrorCode::kUndecodableSequence, "non-canonical UTF-8", pos);
  return {cp, len};
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::u32string decode_all(std::string_view s) {
  std::u32string out;
  for (std::size_t pos = 0; pos < s.size();) {
    const Decoded d = decode(s, pos);
    out.push_back(d.codepoint);
    pos += d.length;
  }
  return out;
}

inline std::string encode_all(std::u32string_view cps) {
  std::string out;
  for (char32_t cp : cps) append(out, cp);
  return out;
}

constexpr bool is_telugu_block(char32_t cp) { return cp >= 0x0C00 && cp <= 0x0C7F; }

}  // namespace telugu_entropy::utf8

#endif
