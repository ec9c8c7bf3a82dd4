#ifndef TELUGU_ENTROPY_MAPPING_TABLE_HPP
#define TELUGU_ENTROPY_MAPPING_TABLE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "telugu_entropy/error.hpp"
#include "telugu_entropy/utf8.hpp"

namespace telugu_entropy {

enum class Category {
  kVowelIndependent,
  kVowelSign,
  kConsonant,
  kAnusvara,
  kVisarga,
  kVirama,
};

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::kVowelIndependent: return "VOWEL_INDEPENDENT";
    case Category::kVowelSign: return "VOWEL_SIGN";
    case Category::kConsonant: return "CONSONANT";
    case Category::kAnusvara: return "ANUSVARA";
    case Category::kVisarga: return "VISARGA";
    case Category::kVirama: return "VIRAMA";
  }
  return "?";
}

inline std::optional<Category> parse_category(std::string_view s) {
  static constexpr std::array<Category, 6> kAll = {
      Category::kVowelIndependent, Category::kVowelSign, Category::kConsonant,
      Category::kAnusvara,         Category::kVisarga,   Category::kVirama};
  for (Category c : kAll)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

struct MappingEntry {
  std::u32string telugu;  // one or two codepoints
  std::string roman;      // 1-3 chars from [A-Za-z^]
  Category category;

  friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

/// How a Roman token behaves when decoding. Independent vowels and vowel signs
/// share a token and collapse into one kVowel symbol.
enum class RomanClass { kConsonant, kVowel, kAnusvara, kVisarga, kVirama };

struct RomanSymbol {
  std::string token;
  RomanClass cls;
  std::u32string telugu;       // consonant, marker, or independent vowel form
  std::u32string vowel_sign;   // empty for the inherent vowel
  bool has_independent = false;
};

/// Bidirectional Telugu <-> Roman mapping. Immutable after construction and
/// safe to share between threads.
class MappingTable {
 public:
  static constexpr std::size_t kMaxTeluguUnit = 2;
  static constexpr std::size_t kMaxRomanToken = 3;

  /// Validates `entries`; throws Error on duplicate tokens or a table that
  /// lacks an inherent vowel or virama.
  static MappingTable from_entries(std::vector<MappingEntry> entries);

  static const MappingTable& builtin();

  const std::vector<MappingEntry>& entries() const { return entries_; }

  /// Longest Telugu unit starting at `pos`, or nullptr.
  const MappingEntry* match_telugu(std::u32string_view text, std::size_t pos) const {
    for (std::size_t len = std::min(kMaxTeluguUnit, text.size() - pos); len > 0; --len) {
      auto it = by_telugu_.find(std::u32string(text.substr(pos, len)));
      if (it != by_telugu_.end()) return &entries_[it->second];
    }
    return nullptr;
  }

  /// Longest Roman token starting at `pos`, or nullptr.
  const RomanSymbol* match_roman(std::string_view text, std::size_t pos) const {
    for (std::size_t len = std::min(kMaxRomanToken, text.size() - pos); len > 0; --len) {
      auto it = by_roman_.find(std::string(text.substr(pos, len)));
      if (it != by_roman_.end()) return &it->second;
    }
    return nullptr;
  }

  const RomanSymbol& inherent_vowel() const { return by_roman_.at(inherent_vowel_); }
  const std::map<std::string, RomanSymbol>& roman_symbols() const { return by_roman_; }

  friend bool operator==(const MappingTable& a, const MappingTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  MappingTable() = default;

  std::vector<MappingEntry> entries_;
  std::map<std::u32string, std::size_t> by_telugu_;
  std::map<std::string, RomanSymbol> by_roman_;
  std::string inherent_vowel_;
};

namespace detail {

inline RomanClass roman_class(Category c) {
  switch (c) {
    case Category::kVowelIndependent:
    case Category::kVowelSign: return RomanClass::kVowel;
    case Category::kConsonant: return RomanClass::kConsonant;
    case Category::kAnusvara: return RomanClass::kAnusvara;
    case Category::kVisarga: return RomanClass::kVisarga;
    case Category::kVirama: return RomanClass::kVirama;
  }
  return RomanClass::kConsonant;
}

inline bool is_roman_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '^';
}

}  // namespace detail

inline MappingTable MappingTable::from_entries(std::vector<MappingEntry> entries) {
  MappingTable table;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const MappingEntry& e = entries[i];
    const std::string where = "entry " + std::to_string(i + 1);
    if (e.telugu.empty() || e.telugu.size() > kMaxTeluguUnit)
      throw Error(ErrorCode::kMalformedRow, where + ": telugu unit must be 1-2 codepoints");
    if (e.roman.empty() || e.roman.size() > kMaxRomanToken ||
        !std::all_of(e.roman.begin(), e.roman.end(), detail::is_roman_token_char))
      throw Error(ErrorCode::kMalformedRow,
                  where + ": roman token must be 1-3 characters from [A-Za-z^]");

    if (!table.by_telugu_.emplace(e.telugu, i).second)
      throw Error(ErrorCode::kDuplicateToken, where + ": telugu unit listed twice");

    const RomanClass cls = detail::roman_class(e.category);
    auto [it, inserted] = table.by_roman_.try_emplace(e.roman, RomanSymbol{e.roman, cls, {}, {}});
    RomanSymbol& sym = it->second;
    if (!inserted && sym.cls != cls)
      throw Error(ErrorCode::kDuplicateToken,
                  where + ": roman token '" + e.roman + "' used by two categories");
    switch (e.category) {
      case Category::kVowelIndependent:
        if (sym.has_independent)
          throw Error(ErrorCode::kDuplicateToken,
                      where + ": two independent vowels share '" + e.roman + "'");
        sym.telugu = e.telugu;
        sym.has_independent = true;
        break;
      case Category::kVowelSign:
        if (!sym.vowel_sign.empty())
          throw Error(ErrorCode::kDuplicateToken,
                      where + ": two vowel signs share '" + e.roman + "'");
        sym.vowel_sign = e.telugu;
        break;
      default:
        if (!inserted)
          throw Error(ErrorCode::kDuplicateToken,
                      where + ": roman token '" + e.roman + "' listed twice");
        sym.telugu = e.telugu;
        break;
    }
  }

  bool has_virama = false;
  for (const auto& [token, sym] : table.by_roman_) {
    if (sym.cls == RomanClass::kVirama) has_virama = true;
    if (sym.cls == RomanClass::kVowel && sym.vowel_sign.empty()) {
      if (!sym.has_independent) continue;
      if (!table.inherent_vowel_.empty())
        throw Error(ErrorCode::kMalformedRow, "more than one vowel without a sign form ('" +
                                                  table.inherent_vowel_ + "', '" + token + "')");
      table.inherent_vowel_ = token;
    }
  }
  if (table.inherent_vowel_.empty())
    throw Error(ErrorCode::kMalformedRow, "no inherent vowel (independent vowel without sign)");
  if (!has_virama) throw Error(ErrorCode::kMalformedRow, "table has no VIRAMA entry");

  table.entries_ = std::move(entries);
  return table;
}

namespace detail {

struct BuiltinRow {
  std::u32string_view telugu;
  std::string_view roman;
  Category category;
};

// Long vowels uppercase, aspirates take 'h', retroflexes uppercase.
// Must stay identical to data/mapping/telugu_roman.tsv.
inline constexpr BuiltinRow kBuiltinRows[] = {
    {U"అ", "a", Category::kVowelIndependent},
    {U"ఆ", "A", Category::kVowelIndependent},
    {U"ఇ", "i", Category::kVowelIndependent},
    {U"ఈ", "I", Category::kVowelIndependent},
    {U"ఉ", "u", Category::kVowelIndependent},
    {U"ఊ", "U", Category::kVowelIndependent},
    {U"ఋ", "R", Category::kVowelIndependent},
    {U"ౠ", "RU", Category::kVowelIndependent},
    {U"ఎ", "e", Category::kVowelIndependent},
    {U"ఏ", "E", Category::kVowelIndependent},
    {U"ఐ", "ai", Category::kVowelIndependent},
    {U"ఒ", "o", Category::kVowelIndependent},
    {U"ఓ", "O", Category::kVowelIndependent},
    {U"ఔ", "au", Category::kVowelIndependent},
    {U"ా", "A", Category::kVowelSign},
    {U"ి", "i", Category::kVowelSign},
    {U"ీ", "I", Category::kVowelSign},
    {U"ు", "u", Category::kVowelSign},
    {U"ూ", "U", Category::kVowelSign},
    {U"ృ", "R", Category::kVowelSign},
    {U"ౄ", "RU", Category::kVowelSign},
    {U"ె", "e", Category::kVowelSign},
    {U"ే", "E", Category::kVowelSign},
    {U"ై", "ai", Category::kVowelSign},
    {U"ొ", "o", Category::kVowelSign},
    {U"ో", "O", Category::kVowelSign},
    {U"ౌ", "au", Category::kVowelSign},
    {U"ం", "M", Category::kAnusvara},
    {U"ః", "H", Category::kVisarga},
    {U"్", "^", Category::kVirama},
    {U"క", "k", Category::kConsonant},
    {U"ఖ", "kh", Category::kConsonant},
    {U"గ", "g", Category::kConsonant},
    {U"ఘ", "gh", Category::kConsonant},
    {U"ఙ", "G", Category::kConsonant},
    {U"చ", "c", Category::kConsonant},
    {U"ఛ", "ch", Category::kConsonant},
    {U"జ", "j", Category::kConsonant},
    {U"ఝ", "jh", Category::kConsonant},
    {U"ఞ", "J", Category::kConsonant},
    {U"ట", "T", Category::kConsonant},
    {U"ఠ", "Th", Category::kConsonant},
    {U"డ", "D", Category::kConsonant},
    {U"ఢ", "Dh", Category::kConsonant},
    {U"ణ", "N", Category::kConsonant},
    {U"త", "t", Category::kConsonant},
    {U"థ", "th", Category::kConsonant},
    {U"ద", "d", Category::kConsonant},
    {U"ధ", "dh", Category::kConsonant},
    {U"న", "n", Category::kConsonant},
    {U"ప", "p", Category::kConsonant},
    {U"ఫ", "ph", Category::kConsonant},
    {U"బ", "b", Category::kConsonant},
    {U"భ", "bh", Category::kConsonant},
    {U"మ", "m", Category::kConsonant},
    {U"య", "y", Category::kConsonant},
    {U"ర", "r", Category::kConsonant},
    {U"ఱ", "X", Category::kConsonant},
    {U"ల", "l", Category::kConsonant},
    {U"ళ", "L", Category::kConsonant},
    {U"వ", "v", Category::kConsonant},
    {U"శ", "S", Category::kConsonant},
    {U"ష", "Sh", Category::kConsonant},
    {U"స", "s", Category::kConsonant},
    {U"హ", "h", Category::kConsonant},
};

}  // namespace detail

inline const MappingTable& MappingTable::builtin() {
  static const MappingTable table = [] {
    std::vector<MappingEntry> entries;
    for (const auto& row : detail::kBuiltinRows)
      entries.push_back({std::u32string(row.telugu), std::string(row.roman), row.category});
    return from_entries(std::move(entries));
  }();
  return table;
}

/// Parses the three-column mapping TSV (telugu_unit, roman_token, category).
/// Blank lines and lines starting with '#' are ignored.
inline MappingTable parse_mapping_tsv(std::string_view content) {
  std::vector<MappingEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos; start = tab + 1)
      fields.push_back(line.substr(start, tab - start));
    fields.push_back(line.substr(start));

    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != 3)
      throw Error(ErrorCode::kMalformedRow, where + ": expected 3 tab-separated columns");
    const auto category = parse_category(fields[2]);
    if (!category)
      throw Error(ErrorCode::kBadCategory, where + ": unknown category '" + std::string(fields[2]) + "'");
    std::u32string telugu;
    try {
      telugu = utf8::decode_all(fields[0]);
    } catch (const Error&) {
      throw Error(ErrorCode::kMalformedRow, where + ": telugu unit is not valid UTF-8");
    }
    entries.push_back({std::move(telugu), std::string(fields[1]), *category});
  }
  return MappingTable::from_entries(std::move(entries));
}

/// Loads a mapping TSV, or returns the built-in table when `source` is empty.
inline MappingTable load_mapping(const std::optional<std::filesystem::path>& source = std::nullopt) {
  if (!source) return MappingTable::builtin();
  std::ifstream in(*source, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open mapping file " + source->string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mapping_tsv(buf.str());
}

}  // namespace telugu_entropy

#endif
