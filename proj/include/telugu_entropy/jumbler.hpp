#ifndef TELUGU_ENTROPY_JUMBLER_HPP
#define TELUGU_ENTROPY_JUMBLER_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telugu_entropy/entropy.hpp"
#include "telugu_entropy/error.hpp"
#include "telugu_entropy/mapping_table.hpp"
#include "telugu_entropy/syllabifier.hpp"

namespace telugu_entropy {

enum class Granularity { kChar, kSyllable };

inline std::string_view to_string(Granularity g) {
  return g == Granularity::kChar ? "char" : "syllable";
}

struct JumbleConfig {
  std::uint64_t seed = 0;
  Granularity granularity = Granularity::kSyllable;
  std::size_t min_length = 4;  // words shorter than this are left alone

  void validate() const {
    if (min_length < 3) throw Error(ErrorCode::kBadConfig, "min_length must be at least 3");
  }
};

/// Single random stream for a jumble run: std::mt19937_64 seeded with the
/// config seed, bounded draws by rejection so results do not depend on the
/// standard library's distribution implementation.
class ShuffleRng {
 public:
  explicit ShuffleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates over the interior; first and last symbols stay in place.
/// Identity draws are kept.
template <typename T>
std::vector<T> jumble_word(std::vector<T> symbols, const JumbleConfig& cfg, ShuffleRng& rng) {
  const std::size_t len = symbols.size();
  if (len < cfg.min_length || len < 3) return symbols;
  for (std::size_t i = len - 2; i > 1; --i) {
    const std::size_t j = 1 + static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(symbols[i], symbols[j]);
  }
  return symbols;
}

/// Jumbles every maximal run of Roman letters ([A-Za-z^]) in document order
/// from one seeded stream. Everything between runs is copied unchanged.
inline std::string jumble_text(std::string_view roman, const JumbleConfig& cfg,
                               const MappingTable& table = MappingTable::builtin()) {
  cfg.validate();
  ShuffleRng rng(cfg.seed);
  std::string out;
  out.reserve(roman.size());
  for (std::size_t pos = 0; pos < roman.size();) {
    if (!detail::is_roman_token_char(roman[pos])) {
      out.push_back(roman[pos++]);
      continue;
    }
    std::size_t end = pos;
    while (end < roman.size() && detail::is_roman_token_char(roman[end])) ++end;
    const std::string_view word = roman.substr(pos, end - pos);
    if (cfg.granularity == Granularity::kChar) {
      const auto shuffled = jumble_word(std::vector<char>(word.begin(), word.end()), cfg, rng);
      out.append(shuffled.begin(), shuffled.end());
    } else {
      std::vector<std::string> parts;
      for (const Akshara& a : syllabify(word, table)) parts.push_back(a.surface());
      for (const std::string& p : jumble_word(std::move(parts), cfg, rng)) out += p;
    }
    pos = end;
  }
  return out;
}

struct EntropyComparison {
  EntropyReport original;
  EntropyReport jumbled;
  double delta = 0;  // |H_original - H_jumbled|
};

inline std::vector<Word> words_of(std::string_view roman, const MappingTable& table) {
  std::vector<Word> words;
  for (std::string& surface : tokenize(roman)) words.push_back(make_word(std::move(surface), table));
  return words;
}

inline EntropyComparison compare_entropy(std::string_view original, std::string_view jumbled,
                                         Mode mode, const WindowSpec& spec = {}, double base = 2.0,
                                         const MappingTable& table = MappingTable::builtin()) {
  EntropyComparison c;
  if (mode == Mode::kChar) {
    c.original = char_entropy(original, base);
    c.jumbled = char_entropy(jumbled, base);
  } else {
    c.original = syllable_ngram_entropy(words_of(original, table), spec, base);
    c.jumbled = syllable_ngram_entropy(words_of(jumbled, table), spec, base);
  }
  c.delta = std::fabs(c.original.entropy_bits - c.jumbled.entropy_bits);
  return c;
}

}  // namespace telugu_entropy

#endif
