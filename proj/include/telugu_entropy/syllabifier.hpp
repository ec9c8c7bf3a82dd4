#ifndef TELUGU_ENTROPY_SYLLABIFIER_HPP
#define TELUGU_ENTROPY_SYLLABIFIER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "telugu_entropy/error.hpp"
#include "telugu_entropy/mapping_table.hpp"

namespace telugu_entropy {

/// One akshara on the Roman side: consonant onset, optional vowel nucleus,
/// then anusvara/visarga/virama markers.
struct Akshara {
  std::vector<std::string> onset;
  std::optional<std::string> nucleus;
  std::vector<std::string> coda;

  std::string surface() const {
    std::string s;
    for (const auto& c : onset) s += c;
    if (nucleus) s += *nucleus;
    for (const auto& m : coda) s += m;
    return s;
  }

  friend bool operator==(const Akshara&, const Akshara&) = default;
};

struct Word {
  std::string surface;
  std::vector<Akshara> syllables;

  friend bool operator==(const Word&, const Word&) = default;
};

enum class ShortWordPolicy {
  kWholeWord,  // a word shorter than n contributes itself as one window
  kSkip,       // a word shorter than n contributes nothing
};

struct WindowSpec {
  std::size_t n = 1;
  ShortWordPolicy short_word_policy = ShortWordPolicy::kWholeWord;
};

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// ASCII punctuation other than '^', which is part of the Roman alphabet.
inline bool is_separator_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  const bool punct = (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) ||
                     (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E);
  return punct && c != '^';
}

}  // namespace detail

/// Splits Roman text into word surfaces. Whitespace and ASCII punctuation
/// (except '^') separate words; empty tokens are dropped.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (detail::is_space(c) || detail::is_separator_punct(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

/// Segments one Roman word into aksharas. Every consonant between two vowels
/// joins the following vowel; 'M'/'H' attach to the syllable they follow; a
/// consonant run closed by '^' forms its own syllable.
inline std::vector<Akshara> syllabify(std::string_view word,
                                      const MappingTable& table = MappingTable::builtin()) {
  std::vector<Akshara> out;
  Akshara pending;
  for (std::size_t pos = 0; pos < word.size();) {
    const RomanSymbol* sym = table.match_roman(word, pos);
    if (!sym)
      throw Error(ErrorCode::kUnknownSymbol,
                  "'" + std::string(1, word[pos]) + "' in '" + std::string(word) + "'", pos);
    switch (sym->cls) {
      case RomanClass::kConsonant:
        pending.onset.push_back(sym->token);
        break;
      case RomanClass::kVowel:
        pending.nucleus = sym->token;
        out.push_back(std::move(pending));
        pending = {};
        break;
      case RomanClass::kVirama:
        if (pending.onset.empty())
          throw Error(ErrorCode::kOrphanMarker, "'^' without a consonant in '" + std::string(word) + "'",
                      pos);
        pending.coda.push_back(sym->token);
        out.push_back(std::move(pending));
        pending = {};
        break;
      case RomanClass::kAnusvara:
      case RomanClass::kVisarga:
        if (!pending.onset.empty() || out.empty())
          throw Error(ErrorCode::kOrphanMarker,
                      "'" + sym->token + "' has nothing to attach to in '" + std::string(word) + "'",
                      pos);
        out.back().coda.push_back(sym->token);
        break;
    }
    pos += sym->token.size();
  }
  if (!pending.onset.empty())
    throw Error(ErrorCode::kUnterminatedCluster,
                "word '" + std::string(word) + "' ends in a bare consonant", word.size());
  return out;
}

inline Word make_word(std::string surface, const MappingTable& table = MappingTable::builtin()) {
  Word w{std::move(surface), {}};
  w.syllables = syllabify(w.surface, table);
  return w;
}

/// Overlapping n-syllable windows inside one word, stride one syllable.
inline std::vector<std::string> windows(const Word& word, const WindowSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::kBadConfig, "window size must be at least 1");
  const std::size_t s = word.syllables.size();
  std::vector<std::string> out;
  if (s < spec.n) {
    if (s > 0 && spec.short_word_policy == ShortWordPolicy::kWholeWord) out.push_back(word.surface);
    return out;
  }
  out.reserve(s - spec.n + 1);
  for (std::size_t i = 0; i + spec.n <= s; ++i) {
    std::string token;
    for (std::size_t k = i; k < i + spec.n; ++k) token += word.syllables[k].surface();
    out.push_back(std::move(token));
  }
  return out;
}

}  // namespace telugu_entropy

#endif
