#ifndef TELUGU_ENTROPY_TRANSLITERATOR_HPP
#define TELUGU_ENTROPY_TRANSLITERATOR_HPP

#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "telugu_entropy/error.hpp"
#include "telugu_entropy/mapping_table.hpp"
#include "telugu_entropy/utf8.hpp"

namespace telugu_entropy {

namespace detail {

inline std::string codepoint_label(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace detail

/// Telugu (UTF-8, NFC) to the case-sensitive Roman scheme.
///
/// A consonant with no vowel sign gets the inherent vowel. A virama directly
/// followed by a consonant joins the cluster and emits nothing ("dma"); any
/// other virama emits '^'. Characters outside the Telugu block pass through.
inline std::string to_roman(std::string_view text,
                            const MappingTable& table = MappingTable::builtin()) {
  std::u32string cps;
  std::vector<std::size_t> byte_offsets;
  for (std::size_t pos = 0; pos < text.size();) {
    const utf8::Decoded d = utf8::decode(text, pos);
    cps.push_back(d.codepoint);
    byte_offsets.push_back(pos);
    pos += d.length;
  }

  const std::string& inherent = table.inherent_vowel().token;
  std::string out;
  bool bare_consonant = false;  // last consonant still waits for its vowel
  auto close_consonant = [&] {
    if (bare_consonant) out += inherent;
    bare_consonant = false;
  };

  for (std::size_t i = 0; i < cps.size();) {
    const MappingEntry* entry = table.match_telugu(cps, i);
    if (!entry) {
      if (utf8::is_telugu_block(cps[i]))
        throw Error(ErrorCode::kUnmappedCodepoint, detail::codepoint_label(cps[i]),
                    byte_offsets[i]);
      close_consonant();
      utf8::append(out, cps[i]);
      ++i;
      continue;
    }
    const std::size_t here = i;
    i += entry->telugu.size();
    switch (entry->category) {
      case Category::kConsonant:
        close_consonant();
        out += entry->roman;
        bare_consonant = true;
        break;
      case Category::kVowelSign:
        if (!bare_consonant)
          throw Error(ErrorCode::kMisplacedSign, "vowel sign without a consonant",
                      byte_offsets[here]);
        out += entry->roman;
        bare_consonant = false;
        break;
      case Category::kVirama: {
        const MappingEntry* next = i < cps.size() ? table.match_telugu(cps, i) : nullptr;
        const bool joins_cluster =
            bare_consonant && next && next->category == Category::kConsonant;
        if (!joins_cluster) out += entry->roman;
        bare_consonant = false;
        break;
      }
      case Category::kVowelIndependent:
      case Category::kAnusvara:
      case Category::kVisarga:
        close_consonant();
        out += entry->roman;
        break;
    }
  }
  close_consonant();
  return out;
}

/// Roman scheme back to Telugu; the left inverse of to_roman. Offsets in
/// errors count characters of `text`.
inline std::string to_telugu(std::string_view text,
                             const MappingTable& table = MappingTable::builtin()) {
  std::u32string virama;
  for (const auto& [token, sym] : table.roman_symbols())
    if (sym.cls == RomanClass::kVirama) virama = sym.telugu;

  std::string out;
  bool bare_consonant = false;
  std::size_t char_index = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kUndecodableSequence, why, char_index);
  };

  for (std::size_t pos = 0; pos < text.size();) {
    const RomanSymbol* sym =
        detail::is_roman_token_char(text[pos]) ? table.match_roman(text, pos) : nullptr;
    if (!sym) {
      if (detail::is_roman_token_char(text[pos]))
        fail(std::string("no token starts with '") + text[pos] + "'");
      if (bare_consonant) fail("consonant without vowel or '^'");
      const utf8::Decoded d = utf8::decode(text, pos);
      utf8::append(out, d.codepoint);
      pos += d.length;
      ++char_index;
      continue;
    }
    switch (sym->cls) {
      case RomanClass::kConsonant:
        if (bare_consonant) out += utf8::encode_all(virama);
        out += utf8::encode_all(sym->telugu);
        bare_consonant = true;
        break;
      case RomanClass::kVowel:
        if (bare_consonant) {
          if (sym->token != table.inherent_vowel().token) {
            if (sym->vowel_sign.empty()) fail("vowel '" + sym->token + "' has no sign form");
            out += utf8::encode_all(sym->vowel_sign);
          }
        } else {
          if (!sym->has_independent) fail("vowel '" + sym->token + "' has no independent form");
          out += utf8::encode_all(sym->telugu);
        }
        bare_consonant = false;
        break;
      case RomanClass::kVirama:
        out += utf8::encode_all(sym->telugu);
        bare_consonant = false;
        break;
      case RomanClass::kAnusvara:
      case RomanClass::kVisarga:
        if (bare_consonant) fail("marker '" + sym->token + "' after a bare consonant");
        out += utf8::encode_all(sym->telugu);
        break;
    }
    pos += sym->token.size();
    char_index += sym->token.size();
  }
  if (bare_consonant) fail("text ends in a bare consonant");
  return out;
}

}  // namespace telugu_entropy

#endif
