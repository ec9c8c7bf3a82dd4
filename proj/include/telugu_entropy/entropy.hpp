#ifndef TELUGU_ENTROPY_ENTROPY_HPP
#define TELUGU_ENTROPY_ENTROPY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telugu_entropy/error.hpp"
#include "telugu_entropy/syllabifier.hpp"

namespace telugu_entropy {

/// Symbol counts. Zero counts are never stored and `total()` always equals
/// the sum of the counts.
class FrequencyTable {
 public:
  using Map = std::map<std::string, std::uint64_t>;

  void add(std::string_view symbol, std::uint64_t k = 1) {
    if (k == 0) return;
    counts_[std::string(symbol)] += k;
    total_ += k;
  }

  FrequencyTable& merge(const FrequencyTable& other) {
    for (const auto& [sym, c] : other.counts_) counts_[sym] += c;
    total_ += other.total_;
    return *this;
  }

  std::uint64_t count(std::string_view symbol) const {
    auto it = counts_.find(std::string(symbol));
    return it == counts_.end() ? 0 : it->second;
  }

  const Map& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return total_ == 0; }

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

template <typename Range>
FrequencyTable count(const Range& stream) {
  FrequencyTable t;
  for (const auto& symbol : stream) t.add(symbol);
  return t;
}

inline FrequencyTable merge(FrequencyTable a, const FrequencyTable& b) { return a.merge(b); }

/// Outcome probabilities, kept sorted by descending probability (ties by
/// symbol) so every consumer sums in the same order.
class ProbabilityDistribution {
 public:
  using Entry = std::pair<std::string, double>;

  explicit ProbabilityDistribution(std::vector<Entry> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorCode::kEmptyTable, "distribution has no outcomes");
    long double sum = 0;
    for (const auto& [sym, p] : probs_) {
      if (!(p > 0.0 && p <= 1.0))
        throw Error(ErrorCode::kBadConfig, "probability of '" + sym + "' outside (0, 1]");
      sum += p;
    }
    if (std::fabs(static_cast<double>(sum - 1.0L)) > 1e-12)
      throw Error(ErrorCode::kBadConfig, "probabilities do not sum to 1");
    std::sort(probs_.begin(), probs_.end(), [](const Entry& a, const Entry& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
  }

  const std::vector<Entry>& entries() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  double probability(std::string_view symbol) const {
    for (const auto& [sym, p] : probs_)
      if (sym == symbol) return p;
    return 0.0;
  }

 private:
  std::vector<Entry> probs_;
};

inline ProbabilityDistribution to_distribution(const FrequencyTable& t) {
  if (t.empty()) throw Error(ErrorCode::kEmptyTable, "no symbols counted");
  std::vector<ProbabilityDistribution::Entry> probs;
  probs.reserve(t.distinct());
  const auto total = static_cast<long double>(t.total());
  for (const auto& [sym, c] : t.counts())
    probs.emplace_back(sym, static_cast<double>(static_cast<long double>(c) / total));
  return ProbabilityDistribution(std::move(probs));
}

/// -sum p log_base p, accumulated in long double in descending-probability
/// order. The result is clamped to [0, log_base(outcomes)] so rounding never
/// escapes the analytic bounds.
inline double shannon_entropy(const ProbabilityDistribution& d, double base = 2.0) {
  if (!(base > 1.0) || !std::isfinite(base))
    throw Error(ErrorCode::kBadBase, "log base must be finite and > 1");
  long double acc = 0;
  for (const auto& [sym, p] : d.entries()) {
    const long double lp = static_cast<long double>(p);
    acc -= lp * std::log2(lp);
  }
  long double h = acc;
  long double upper = std::log2(static_cast<long double>(d.size()));
  if (base != 2.0) {
    const long double scale = std::log2(static_cast<long double>(base));
    h /= scale;
    upper /= scale;
  }
  h = std::clamp(h, 0.0L, upper);
  return static_cast<double>(h);
}

enum class Mode { kChar, kSyllable };

inline std::string_view to_string(Mode m) { return m == Mode::kChar ? "char" : "syllable"; }

struct EntropyReport {
  Mode mode = Mode::kChar;
  std::size_t n = 1;
  double entropy_bits = 0;  // in units of log_base; bits when log_base == 2
  double per_syllable_rate = 0;
  std::size_t distinct = 0;
  std::uint64_t total_tokens = 0;
  double log_base = 2.0;

  friend bool operator==(const EntropyReport&, const EntropyReport&) = default;
};

inline EntropyReport make_report(const FrequencyTable& t, Mode mode, std::size_t n, double base) {
  EntropyReport r;
  r.mode = mode;
  r.n = n;
  r.entropy_bits = shannon_entropy(to_distribution(t), base);
  r.per_syllable_rate = r.entropy_bits / static_cast<double>(n);
  r.distinct = t.distinct();
  r.total_tokens = t.total();
  r.log_base = base;
  return r;
}

/// Letters a-z/A-Z, space and '^' count; everything else is skipped.
constexpr bool is_countable_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == ' ' || c == '^';
}

inline FrequencyTable char_counts(std::string_view roman) {
  FrequencyTable t;
  for (char c : roman)
    if (is_countable_char(c)) t.add(std::string_view(&c, 1));
  return t;
}

inline EntropyReport char_entropy(std::string_view roman, double base = 2.0) {
  return make_report(char_counts(roman), Mode::kChar, 1, base);
}

inline FrequencyTable window_counts(std::span<const Word> words, const WindowSpec& spec) {
  FrequencyTable t;
  for (const Word& w : words)
    for (const std::string& token : windows(w, spec)) t.add(token);
  return t;
}

/// Block entropy of the pooled n-syllable windows of all words, plus H_n/n.
inline EntropyReport syllable_ngram_entropy(std::span<const Word> words, const WindowSpec& spec,
                                            double base = 2.0) {
  return make_report(window_counts(words, spec), Mode::kSyllable, spec.n, base);
}

}  // namespace telugu_entropy

#endif
