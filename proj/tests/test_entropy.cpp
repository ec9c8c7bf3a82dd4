#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle/entropy_oracle.hpp"
#include "telugu_entropy/entropy.hpp"
#include "telugu_entropy/transliterator.hpp"
#include "test_support.hpp"

namespace te = telugu_entropy;

using Strings = std::vector<std::string>;

TEST(Count, Examples) {
  const auto t = te::count(Strings{"a", "b", "a"});
  EXPECT_EQ(t.count("a"), 2u);
  EXPECT_EQ(t.count("b"), 1u);
  EXPECT_EQ(t.total(), 3u);

  const auto empty = te::count(Strings{});
  EXPECT_EQ(empty.total(), 0u);
  EXPECT_EQ(empty.distinct(), 0u);

  const auto syl = te::count(te::windows(te::make_word("padmavibhUShaN^"), {1}));
  EXPECT_EQ(syl.total(), 6u);
  for (const char* s : {"pa", "dma", "vi", "bhU", "Sha", "N^"}) EXPECT_EQ(syl.count(s), 1u) << s;
}

TEST(Merge, PointwiseSumIdentityCommutativity) {
  const auto a = te::count(Strings{"a"});
  const auto b = te::count(Strings{"a", "a", "b"});
  const auto ab = te::merge(a, b);
  EXPECT_EQ(ab.count("a"), 3u);
  EXPECT_EQ(ab.count("b"), 1u);
  EXPECT_EQ(ab.total(), 4u);
  EXPECT_EQ(te::merge(b, te::FrequencyTable{}), b);
  EXPECT_EQ(te::merge(a, b), te::merge(b, a));
}

TEST(ToDistribution, Examples) {
  const auto uniform = te::to_distribution(te::count(Strings{"a", "a", "b", "b"}));
  EXPECT_EQ(uniform.probability("a"), 0.5);
  EXPECT_EQ(uniform.probability("b"), 0.5);

  const auto skew = te::to_distribution(te::count(Strings{"a", "a", "a", "b"}));
  EXPECT_EQ(skew.probability("a"), 0.75);
  EXPECT_EQ(skew.probability("b"), 0.25);

  try {
    te::to_distribution(te::FrequencyTable{});
    FAIL();
  } catch (const te::Error& e) {
    EXPECT_EQ(e.code(), te::ErrorCode::kEmptyTable);
  }
}

TEST(ProbabilityDistribution, RejectsInvalidInput) {
  EXPECT_THROW(te::ProbabilityDistribution({{"a", 0.5}, {"b", 0.4}}), te::Error);
  EXPECT_THROW(te::ProbabilityDistribution({{"a", 1.0}, {"b", 0.0}}), te::Error);
  EXPECT_THROW(te::ProbabilityDistribution({}), te::Error);
}

TEST(ShannonEntropy, UniformAndDegenerate) {
  EXPECT_DOUBLE_EQ(te::shannon_entropy(te::to_distribution(te::count(Strings{"a", "b", "c", "d"}))),
                   2.0);
  EXPECT_EQ(te::shannon_entropy(te::to_distribution(te::count(Strings{"a"}))), 0.0);
}

TEST(ShannonEntropy, BaseHandling) {
  const auto d = te::to_distribution(te::count(Strings{"a", "b", "c", "d"}));
  EXPECT_NEAR(te::shannon_entropy(d, 4.0), 1.0, 1e-15);
  EXPECT_NEAR(te::shannon_entropy(d, std::exp(1.0)), std::log(4.0), 1e-15);
  for (double bad : {1.0, 0.5, -2.0}) {
    try {
      te::shannon_entropy(d, bad);
      FAIL() << bad;
    } catch (const te::Error& e) {
      EXPECT_EQ(e.code(), te::ErrorCode::kBadBase);
    }
  }
}

TEST(ShannonEntropy, LetterTableMatchesOracle) {
  const auto weights = oracle::letter_table_weights();
  double total = 0;
  for (double w : weights) total += w;
  std::vector<te::ProbabilityDistribution::Entry> probs;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] > 0) probs.emplace_back("s" + std::to_string(i), weights[i] / total);
  const double h = te::shannon_entropy(te::ProbabilityDistribution(probs));
  EXPECT_NEAR(h, oracle::weighted_entropy(weights), 1e-9);
  EXPECT_NEAR(h, oracle::kLetterTableEntropyBits, 1e-9);
}

TEST(CharEntropy, AaBb) {
  const auto r = te::char_entropy("aa bb");
  EXPECT_EQ(r.mode, te::Mode::kChar);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.distinct, 3u);
  EXPECT_EQ(r.total_tokens, 5u);
  EXPECT_NEAR(r.entropy_bits, oracle::kAaBbEntropyBits, 1e-12);
  EXPECT_NEAR(r.entropy_bits, oracle::weighted_entropy({2, 2, 1}), 1e-12);
}

TEST(CharEntropy, CountsCaretAndSkipsPunctuation) {
  const auto t = te::char_counts("padmavibhUShaN^");
  EXPECT_EQ(t.count("^"), 1u);
  EXPECT_EQ(t.count("a"), 3u);
  EXPECT_EQ(t.total(), 15u);
  const auto p = te::char_counts("ab, 12.c!");
  EXPECT_EQ(p.total(), 4u);  // a b space c
  EXPECT_EQ(p.count(" "), 1u);
}

TEST(CharEntropy, EmptyCorpusIsEmptyTable) {
  try {
    te::char_entropy("");
    FAIL();
  } catch (const te::Error& e) {
    EXPECT_EQ(e.code(), te::ErrorCode::kEmptyTable);
  }
}

TEST(SyllableEntropy, Examples) {
  const std::vector<te::Word> padma{te::make_word("padmavibhUShaN^")};
  const auto r1 = te::syllable_ngram_entropy(padma, {1});
  EXPECT_NEAR(r1.entropy_bits, std::log2(6.0), 1e-12);
  EXPECT_EQ(r1.distinct, 6u);

  const std::vector<te::Word> karya{te::make_word("kAryAlayaM")};
  const auto r4 = te::syllable_ngram_entropy(karya, {4});
  EXPECT_EQ(r4.entropy_bits, 0.0);
  EXPECT_EQ(r4.total_tokens, 1u);
  EXPECT_EQ(r4.per_syllable_rate, 0.0);

  const std::vector<te::Word> once{te::make_word("vayassu")};
  const std::vector<te::Word> twice{te::make_word("vayassu"), te::make_word("vayassu")};
  EXPECT_EQ(te::syllable_ngram_entropy(once, {1}).entropy_bits,
            te::syllable_ngram_entropy(twice, {1}).entropy_bits);

  EXPECT_THROW(te::syllable_ngram_entropy(std::vector<te::Word>{}, {1}), te::Error);
  EXPECT_THROW(te::syllable_ngram_entropy(karya, {5, te::ShortWordPolicy::kSkip}), te::Error);
}

TEST(SyllableEntropy, ReportsRate) {
  const std::vector<te::Word> words{te::make_word("padmavibhUShaN^"), te::make_word("sAdhyamainaMta")};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r = te::syllable_ngram_entropy(words, {n});
    EXPECT_EQ(r.n, n);
    EXPECT_EQ(r.per_syllable_rate, r.entropy_bits / static_cast<double>(n));
  }
}

namespace {

std::vector<te::Word> random_words(std::mt19937_64& rng, std::size_t count) {
  test_support::TeluguWordGenerator gen(rng());
  std::vector<te::Word> words;
  for (std::size_t i = 0; i < count; ++i) words.push_back(te::make_word(te::to_roman(gen.next())));
  return words;
}

}  // namespace

TEST(EntropyProperties, BoundsAndDuplicationInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto words = random_words(rng, 1 + rng() % 40);
    auto doubled = words;
    doubled.insert(doubled.end(), words.begin(), words.end());
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = te::syllable_ngram_entropy(words, {n});
      EXPECT_GE(r.entropy_bits, 0.0);
      EXPECT_LE(r.entropy_bits, std::log2(static_cast<double>(r.distinct)));
      EXPECT_NEAR(te::syllable_ngram_entropy(doubled, {n}).entropy_bits, r.entropy_bits, 1e-12);
    }
  }
}

TEST(EntropyProperties, MatchesBruteForceOnSmallCorpora) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto words = random_words(rng, 1 + rng() % 12);
    for (std::size_t n = 1; n <= 3; ++n) {
      Strings stream;
      for (const auto& w : words)
        for (auto& t : te::windows(w, {n})) stream.push_back(t);
      if (stream.size() > 50) continue;
      ++checked;
      EXPECT_NEAR(te::syllable_ngram_entropy(words, {n}).entropy_bits,
                  oracle::brute_force_entropy(stream), 1e-12);
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EntropyProperties, PartitionedCountsMergeToWhole) {
  std::mt19937_64 rng(3);
  const auto words = random_words(rng, 300);
  const auto whole = te::window_counts(words, {2});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<te::Word>> parts(5);
    for (const auto& w : words) parts[rng() % parts.size()].push_back(w);
    te::FrequencyTable merged;
    for (const auto& p : parts) merged.merge(te::window_counts(p, {2}));
    EXPECT_EQ(merged, whole);
  }
}

TEST(EntropyProperties, IidSourceConverges) {
  const std::vector<std::string> symbols{"ka", "ma", "ru", "tI"};
  std::discrete_distribution<int> source({0.4, 0.3, 0.2, 0.1});
  std::mt19937_64 rng(17);
  std::vector<te::Word> words;
  std::size_t syllables = 0;
  while (syllables < 100000) {
    std::string surface;
    for (int i = 0; i < 50; ++i) surface += symbols[source(rng)];
    syllables += 50;
    words.push_back(te::make_word(surface));
  }
  const auto r = te::syllable_ngram_entropy(words, {1});
  EXPECT_NEAR(r.entropy_bits, oracle::kFourSymbolEntropyBits, 0.05);
  EXPECT_NEAR(oracle::weighted_entropy({0.4, 0.3, 0.2, 0.1}), 1.846, 5e-4);
}
