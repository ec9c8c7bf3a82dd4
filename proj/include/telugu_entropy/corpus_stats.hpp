#ifndef TELUGU_ENTROPY_CORPUS_STATS_HPP
#define TELUGU_ENTROPY_CORPUS_STATS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telugu_entropy/entropy.hpp"
#include "telugu_entropy/error.hpp"
#include "telugu_entropy/mapping_table.hpp"
#include "telugu_entropy/syllabifier.hpp"
#include "telugu_entropy/transliterator.hpp"
#include "telugu_entropy/utf8.hpp"

namespace telugu_entropy {

struct Document {
  std::string id;
  std::string raw;    // UTF-8 as read
  std::string roman;  // to_roman(raw), untruncated
  std::vector<Word> words;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Words are the maximal runs of Telugu-block characters in each document;
/// anything else separates words. `char_budget` limits the statistics stream
/// (words joined by single spaces) to whole words.
struct Corpus {
  std::vector<Document> documents;
  std::optional<std::size_t> char_budget;

  std::size_t word_count() const {
    std::size_t n = 0;
    for (const auto& d : documents) n += d.words.size();
    return n;
  }
  bool empty() const { return word_count() == 0; }

  std::vector<Word> all_words() const {
    std::vector<Word> out;
    out.reserve(word_count());
    for (const auto& d : documents) out.insert(out.end(), d.words.begin(), d.words.end());
    return out;
  }

  /// Roman words separated by one space, across documents in order.
  std::string char_stream() const {
    std::string s;
    for (const auto& d : documents)
      for (const auto& w : d.words) {
        if (!s.empty()) s.push_back(' ');
        s += w.surface;
      }
    return s;
  }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Splits UTF-8 text into runs of Telugu-block characters.
inline std::vector<std::pair<std::size_t, std::string>> telugu_runs(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> runs;
  std::size_t start = std::string_view::npos;
  for (std::size_t pos = 0; pos < text.size();) {
    const utf8::Decoded d = utf8::decode(text, pos);
    if (utf8::is_telugu_block(d.codepoint)) {
      if (start == std::string_view::npos) start = pos;
    } else if (start != std::string_view::npos) {
      runs.emplace_back(start, std::string(text.substr(start, pos - start)));
      start = std::string_view::npos;
    }
    pos += d.length;
  }
  if (start != std::string_view::npos)
    runs.emplace_back(start, std::string(text.substr(start)));
  return runs;
}

inline Document make_document(std::string id, std::string raw,
                              const MappingTable& table = MappingTable::builtin()) {
  Document doc{std::move(id), std::move(raw), {}, {}};
  auto located = [&](const Error& e, std::size_t base) {
    const std::optional<std::size_t> off =
        e.offset() ? std::optional<std::size_t>(*e.offset() + base) : std::nullopt;
    return Error(e.code(), "in " + doc.id + ": " + e.what(), off);
  };
  try {
    doc.roman = to_roman(doc.raw, table);
  } catch (const Error& e) {
    throw located(e, 0);
  }
  for (auto& [offset, run] : telugu_runs(doc.raw)) {
    try {
      doc.words.push_back(make_word(to_roman(run, table), table));
    } catch (const Error& e) {
      throw located(e, offset);
    }
  }
  return doc;
}

inline void apply_char_budget(Corpus& corpus, std::size_t budget) {
  corpus.char_budget = budget;
  std::size_t used = 0;
  bool full = false;
  for (auto& doc : corpus.documents) {
    std::size_t keep = 0;
    for (; !full && keep < doc.words.size(); ++keep) {
      const std::size_t need = (used == 0 ? 0 : 1) + doc.words[keep].surface.size();
      if (used + need > budget) {
        full = true;
        break;
      }
      used += need;
    }
    doc.words.resize(keep);
  }
}

/// In-memory ingestion of (id, text) pairs.
inline Corpus ingest_texts(std::vector<std::pair<std::string, std::string>> texts,
                           const MappingTable& table = MappingTable::builtin(),
                           std::optional<std::size_t> char_budget = std::nullopt) {
  Corpus corpus;
  for (auto& [id, text] : texts) corpus.documents.push_back(make_document(id, std::move(text), table));
  if (char_budget) apply_char_budget(corpus, *char_budget);
  return corpus;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return buf.str();
}

inline Corpus ingest(const std::vector<std::filesystem::path>& paths,
                     const MappingTable& table = MappingTable::builtin(),
                     std::optional<std::size_t> char_budget = std::nullopt) {
  std::vector<std::pair<std::string, std::string>> texts;
  for (const auto& p : paths) texts.emplace_back(p.string(), read_file(p));
  return ingest_texts(std::move(texts), table, char_budget);
}

struct LetterFrequencyRow {
  char symbol;
  std::uint64_t count;
  double percent;  // rounded to 2 decimals
};

/// Symbols of the letter table in presentation order: a-z, A-Z, space, '^'.
inline const std::array<char, 54>& letter_table_symbols() {
  static const std::array<char, 54> symbols = [] {
    std::array<char, 54> s{};
    std::size_t i = 0;
    for (char c = 'a'; c <= 'z'; ++c) s[i++] = c;
    for (char c = 'A'; c <= 'Z'; ++c) s[i++] = c;
    s[i++] = ' ';
    s[i++] = '^';
    return s;
  }();
  return symbols;
}

inline double round_percent(std::uint64_t count, std::uint64_t total) {
  // Hundredths of a percent, rounded half up in integer arithmetic.
  const std::uint64_t hundredths = (count * 20000 + total) / (2 * total);
  return static_cast<double>(hundredths) / 100.0;
}

inline std::vector<LetterFrequencyRow> letter_table(const FrequencyTable& chars) {
  if (chars.empty()) throw Error(ErrorCode::kEmptyTable, "no letters counted");
  std::vector<LetterFrequencyRow> rows;
  for (char c : letter_table_symbols()) {
    const std::uint64_t k = chars.count(std::string_view(&c, 1));
    rows.push_back({c, k, round_percent(k, chars.total())});
  }
  return rows;
}

/// Case-sensitive letter percentages; zero rows are kept.
inline std::vector<LetterFrequencyRow> letter_table(const Corpus& corpus) {
  return letter_table(char_counts(corpus.char_stream()));
}

enum class LengthUnit { kAkshara, kChar };

struct WordLengthHistogram {
  std::map<std::size_t, std::uint64_t> counts;
  std::map<std::size_t, double> fractions;
  std::uint64_t total_words = 0;

  /// Sum of the fractions of lengths strictly below `threshold`, ascending.
  double fraction_below(std::size_t threshold) const {
    double sum = 0;
    for (const auto& [len, f] : fractions) {
      if (len >= threshold) break;
      sum += f;
    }
    return sum;
  }
};

inline WordLengthHistogram word_length_histogram(const Corpus& corpus,
                                                 LengthUnit unit = LengthUnit::kAkshara) {
  WordLengthHistogram h;
  for (const auto& doc : corpus.documents)
    for (const auto& w : doc.words) {
      const std::size_t len = unit == LengthUnit::kAkshara ? w.syllables.size() : w.surface.size();
      ++h.counts[len];
      ++h.total_words;
    }
  if (h.total_words == 0) throw Error(ErrorCode::kEmptyTable, "corpus has no words");
  for (const auto& [len, c] : h.counts)
    h.fractions[len] = static_cast<double>(c) / static_cast<double>(h.total_words);
  return h;
}

}  // namespace telugu_entropy

#endif
