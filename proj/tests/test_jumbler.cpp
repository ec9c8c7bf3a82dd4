#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "telugu_entropy/jumbler.hpp"
#include "telugu_entropy/transliterator.hpp"
#include "test_support.hpp"

namespace te = telugu_entropy;

using Strings = std::vector<std::string>;

TEST(JumbleWord, ShortWordsUntouched) {
  te::ShuffleRng rng(1);
  const te::JumbleConfig cfg{1, te::Granularity::kChar, 4};
  EXPECT_EQ(te::jumble_word(std::vector<char>{'a', 'b', 'c'}, cfg, rng),
            (std::vector<char>{'a', 'b', 'c'}));
}

TEST(JumbleWord, FourCharsKeepEnds) {
  const te::JumbleConfig cfg{0, te::Granularity::kChar, 4};
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    te::ShuffleRng rng(seed);
    const auto out = te::jumble_word(std::vector<char>{'a', 'b', 'c', 'd'}, cfg, rng);
    seen.emplace(out.begin(), out.end());
  }
  EXPECT_EQ(seen, (std::set<std::string>{"abcd", "acbd"}));
}

TEST(JumbleWord, SyllablesOfKaryalayam) {
  // Enumerate both admissible outputs and check membership.
  const Strings input{"kA", "ryA", "la", "yaM"};
  const std::set<Strings> admissible{{"kA", "ryA", "la", "yaM"}, {"kA", "la", "ryA", "yaM"}};
  const te::JumbleConfig cfg{0, te::Granularity::kSyllable, 4};
  std::set<Strings> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    te::ShuffleRng rng(seed);
    const auto out = te::jumble_word(input, cfg, rng);
    EXPECT_TRUE(admissible.count(out));
    seen.insert(out);
  }
  EXPECT_EQ(seen, admissible);
}

TEST(JumbleWord, InteriorPermutationsAreUniform) {
  // 5 symbols: 3! interior orders, each should appear about 1/6 of the time.
  const te::JumbleConfig cfg{0, te::Granularity::kChar, 4};
  te::ShuffleRng rng(12345);
  std::map<std::string, int> freq;
  const int trials = 60000;
  for (int i = 0; i < trials; ++i) {
    const auto out = te::jumble_word(std::vector<char>{'a', 'b', 'c', 'd', 'e'}, cfg, rng);
    ++freq[std::string(out.begin(), out.end())];
  }
  EXPECT_EQ(freq.size(), 6u);
  for (const auto& [k, v] : freq) EXPECT_NEAR(v, trials / 6.0, 500) << k;
}

TEST(ShuffleRng, BelowStaysInRangeAndIsReproducible) {
  te::ShuffleRng a(99), b(99);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 100; ++i) {
      const auto x = a.below(bound);
      EXPECT_LT(x, bound);
      EXPECT_EQ(x, b.below(bound));
    }
  }
}

TEST(ShuffleRng, FixedEngineSequence) {
  // std::mt19937_64's 10000th output is fixed by the standard.
  std::mt19937_64 e(5489u);
  e.discard(9999);
  EXPECT_EQ(e(), 9981545732273789042ull);
}

TEST(JumbleConfig, MinLengthBelowThreeRejected) {
  EXPECT_THROW(te::jumble_text("abcd", {0, te::Granularity::kChar, 2}), te::Error);
}

TEST(JumbleText, DeterministicAndShapePreserving) {
  const std::string text = "kAryAlayaM, padmavibhUShaN^ vayassu\nsAdhyamainaMta ka.";
  for (auto g : {te::Granularity::kChar, te::Granularity::kSyllable}) {
    const te::JumbleConfig cfg{42, g, 4};
    const auto once = te::jumble_text(text, cfg);
    EXPECT_EQ(once, te::jumble_text(text, cfg));
    ASSERT_EQ(once.size(), text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!te::detail::is_roman_token_char(text[i])) {
        EXPECT_EQ(once[i], text[i]);
      }
    const auto a = te::tokenize(text), b = te::tokenize(once);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].front(), b[i].front());
      EXPECT_EQ(a[i].back(), b[i].back());
      auto sa = a[i], sb = b[i];
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      EXPECT_EQ(sa, sb);
    }
  }
}

TEST(JumbleText, ShortWordCorpusIsUnchanged) {
  const std::string text = "ka vayassu la, sA";
  EXPECT_EQ(te::jumble_text(text, {9, te::Granularity::kSyllable, 4}), text);
  EXPECT_EQ(te::jumble_text("the cat sat", {9, te::Granularity::kChar, 4}), "the cat sat");
}

TEST(JumbleText, SyllableGranularityPermutesAksharas) {
  const std::string roman = "pratipAdiMcinaTlu padmavibhUShaN^";
  const auto out = te::jumble_text(roman, {7, te::Granularity::kSyllable, 4});
  const auto before = te::tokenize(roman), after = te::tokenize(out);
  for (std::size_t i = 0; i < before.size(); ++i) {
    auto s1 = te::make_word(before[i]).syllables, s2 = te::make_word(after[i]).syllables;
    ASSERT_EQ(s1.front(), s2.front());
    ASSERT_EQ(s1.back(), s2.back());
    auto key = [](const te::Akshara& x, const te::Akshara& y) { return x.surface() < y.surface(); };
    std::sort(s1.begin(), s1.end(), key);
    std::sort(s2.begin(), s2.end(), key);
    EXPECT_EQ(s1, s2);
  }
}

TEST(CompareEntropy, UnigramDeltaIsZero) {
  test_support::TeluguWordGenerator gen(4);
  std::string roman;
  for (int i = 0; i < 400; ++i) roman += te::to_roman(gen.next()) + " ";
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto chars = te::jumble_text(roman, {seed, te::Granularity::kChar, 4});
    EXPECT_EQ(te::compare_entropy(roman, chars, te::Mode::kChar).delta, 0.0);
    const auto syl = te::jumble_text(roman, {seed, te::Granularity::kSyllable, 4});
    EXPECT_EQ(te::compare_entropy(roman, syl, te::Mode::kSyllable, {1}).delta, 0.0);
    EXPECT_EQ(te::compare_entropy(roman, syl, te::Mode::kChar).delta, 0.0);
  }
}

TEST(CompareEntropy, BigramDeltaMatchesRecount) {
  const std::string roman = "pratipAdiMcinaTlu padmavibhUShaN^ sAdhyamainaMta kAryAlayaM";
  const auto jumbled = te::jumble_text(roman, {3, te::Granularity::kSyllable, 4});
  const auto c = te::compare_entropy(roman, jumbled, te::Mode::kSyllable, {2});
  // Recount the jumbled windows independently of compare_entropy.
  te::FrequencyTable recount;
  for (const auto& w : te::tokenize(jumbled)) {
    const auto syl = te::syllabify(w);
    for (std::size_t i = 0; i + 2 <= syl.size(); ++i)
      recount.add(syl[i].surface() + syl[i + 1].surface());
  }
  EXPECT_EQ(c.jumbled.entropy_bits, te::shannon_entropy(te::to_distribution(recount)));
  EXPECT_EQ(c.delta, std::fabs(c.original.entropy_bits - c.jumbled.entropy_bits));
}
