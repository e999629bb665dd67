// Copyright (c) 2026 The WordVIS Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "wordvis/scoring.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {
namespace {

using Sums = std::array<std::int64_t, 3>;

TEST(DefaultTable, HasThirtySixEntriesTwelvePerChannel) {
  const ScoreTable t = build_default_table();
  EXPECT_EQ(t.name(), "default-ascending");
  EXPECT_EQ(t.size(), 36u);
  for (Channel c : kChannels) EXPECT_EQ(t.count(c), 12u);
  for (const auto& [ch, e] : t.entries()) {
    EXPECT_GE(e.score, 1);
    EXPECT_LE(e.score, 9);
  }
}

TEST(DefaultTable, AscendingRuns) {
  const ScoreTable t = build_default_table();
  EXPECT_EQ(t.lookup(U'a'), (ScoreEntry{Channel::Red, 1}));
  EXPECT_EQ(t.lookup(U'i'), (ScoreEntry{Channel::Red, 9}));
  EXPECT_EQ(t.lookup(U'j'), (ScoreEntry{Channel::Green, 1}));
  EXPECT_EQ(t.lookup(U'r'), (ScoreEntry{Channel::Green, 9}));
  EXPECT_EQ(t.lookup(U's'), (ScoreEntry{Channel::Blue, 1}));
  EXPECT_EQ(t.lookup(U'z'), (ScoreEntry{Channel::Blue, 8}));
  EXPECT_EQ(t.lookup(U'0'), (ScoreEntry{Channel::Red, 1}));
  EXPECT_EQ(t.lookup(U'2'), (ScoreEntry{Channel::Red, 3}));
  EXPECT_EQ(t.lookup(U'3'), (ScoreEntry{Channel::Green, 1}));
  EXPECT_EQ(t.lookup(U'5'), (ScoreEntry{Channel::Green, 3}));
  EXPECT_EQ(t.lookup(U'6'), (ScoreEntry{Channel::Blue, 1}));
  EXPECT_EQ(t.lookup(U'9'), (ScoreEntry{Channel::Blue, 4}));
}

TEST(DefaultTable, SpecialCharactersUnscored) {
  const ScoreTable t = build_default_table();
  EXPECT_FALSE(t.lookup(U'!'));
  EXPECT_FALSE(t.lookup(U','));
  EXPECT_FALSE(t.lookup(U' '));
  EXPECT_FALSE(t.lookup(U'é'));
}

TEST(DefaultTable, LookupFoldsCase) {
  const ScoreTable t = build_default_table();
  EXPECT_EQ(t.lookup(U'J'), t.lookup(U'j'));
}

TEST(WorkedExampleTable, PinsExampleScores) {
  const ScoreTable t = build_worked_example_table();
  const ScoreTable d = build_default_table();
  EXPECT_EQ(t.name(), "worked-example");
  EXPECT_EQ(t.lookup(U'd'), (ScoreEntry{Channel::Red, 3}));
  EXPECT_EQ(t.lookup(U'e'), (ScoreEntry{Channel::Red, 5}));
  EXPECT_EQ(t.lookup(U'p'), (ScoreEntry{Channel::Green, 7}));
  EXPECT_EQ(t.lookup(U'q'), (ScoreEntry{Channel::Green, 8}));
  // Everything not pinned falls back to the ascending fill.
  EXPECT_EQ(t.lookup(U'a'), (ScoreEntry{Channel::Red, 1}));
  EXPECT_EQ(t.lookup(U'a'), d.lookup(U'a'));
  std::size_t differing = 0;
  for (const auto& [c, e] : d.entries()) differing += (t.lookup(c) != e);
  EXPECT_EQ(differing, 1u);  // only d moves (4 -> 3); e, p, q already match
}

TEST(NormalizeToken, TrimsAndFolds) {
  EXPECT_EQ(normalize_token("Deep "), "deep");
  EXPECT_EQ(normalize_token("you"), "you");
  EXPECT_EQ(normalize_token("1995,"), "1995,");
  EXPECT_EQ(normalize_token("  \t "), "");
  EXPECT_EQ(normalize_token("ÉCOLE"), "école");
  EXPECT_EQ(normalize_token("\xC2\xA0WORD\xC2\xA0"), "word");  // NBSP trimmed
}

TEST(MultiplyingFactor, CountsScalars) {
  EXPECT_EQ(multiplying_factor("deep"), 4);
  EXPECT_EQ(multiplying_factor(""), 0);
  EXPECT_EQ(multiplying_factor("a1!"), 3);
  EXPECT_EQ(multiplying_factor("école"), 5);  // 6 bytes, 5 scalars
}

TEST(WordColor, WorkedExample) {
  const ScoreTable t = build_worked_example_table();
  const auto deep = word_color(t, "deep");
  EXPECT_EQ(deep.m_factor, 4);
  EXPECT_EQ(deep.raw_sums, (Sums{52, 28, 0}));
  EXPECT_EQ(deep.color, (WordColor{52, 28, 0}));
  const auto deeq = word_color(t, "deeq");
  EXPECT_EQ(deeq.raw_sums, (Sums{52, 32, 0}));
  EXPECT_EQ(deeq.color, (WordColor{52, 32, 0}));
}

TEST(WordColor, EmptyToken) {
  const auto b = word_color(build_default_table(), "");
  EXPECT_EQ(b.m_factor, 0);
  EXPECT_EQ(b.color, (WordColor{0, 0, 0}));
}

TEST(WordColor, SaturatesAt255) {
  // i = (Red, 9), ten of them: 9 * 10 * 10 = 900.
  const auto b = word_color(build_default_table(), "iiiiiiiiii");
  EXPECT_EQ(b.raw_sums, (Sums{900, 0, 0}));
  EXPECT_EQ(b.color, (WordColor{255, 0, 0}));
}

TEST(WordColor, BlueRun) {
  // s = 1, z = 8, M = 2: (1 + 8) * 2 = 18.
  const auto b = word_color(build_default_table(), "sz");
  EXPECT_EQ(b.raw_sums, (Sums{0, 0, 18}));
}

TEST(WordColor, UnscoredCharactersStretchTheFactor) {
  const ScoreTable t = build_default_table();
  EXPECT_EQ(word_color(t, "a").color, (WordColor{1, 0, 0}));
  EXPECT_EQ(word_color(t, "a!").color, (WordColor{2, 0, 0}));
  EXPECT_EQ(word_color(t, "a!!!").color, (WordColor{4, 0, 0}));
}

TEST(WordColor, BreakdownKeepsTokenAndAgreesWithColorOf) {
  const ScoreTable t = build_default_table();
  const auto b = word_color(t, "abc");
  EXPECT_EQ(b.token, "abc");
  EXPECT_EQ(color_of(t, U"abc"), b.color);
}

TEST(WordColorType, CheckedConstructionCoversExactlyTheCube) {
  EXPECT_EQ(WordColor::checked(0, 0, 0), (WordColor{0, 0, 0}));
  EXPECT_EQ(WordColor::checked(255, 255, 255), (WordColor{255, 255, 255}));
  EXPECT_THROW(WordColor::checked(256, 0, 0), std::out_of_range);
  EXPECT_THROW(WordColor::checked(0, -1, 0), std::out_of_range);
  EXPECT_THROW(WordColor::checked(0, 0, 1000), std::out_of_range);
}

TEST(ScoreTableCtor, RejectsOutOfRangeAndFoldedDuplicates) {
  EXPECT_THROW(ScoreTable("t", {{U'a', {Channel::Red, 0}}}), TableError);
  EXPECT_THROW(ScoreTable("t", {{U'a', {Channel::Red, 10}}}), TableError);
  try {
    ScoreTable("t", {{U'A', {Channel::Red, 1}}, {U'a', {Channel::Green, 2}}});
    FAIL() << "expected duplicate error";
  } catch (const TableError& e) {
    EXPECT_EQ(e.kind(), TableError::Kind::Duplicate);
  }
}

// Property checks over random tokens drawn from scored letters, digits,
// punctuation and a few non-ASCII characters.
class ScoringProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240917};
  ScoreTable table = build_default_table();

  std::u32string random_token(std::size_t max_len) {
    static const std::u32string pool = U"abcdefghijklmnopqrstuvwxyz0123456789ABCDEFXYZ!.,;-'é€";
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::u32string s(len(rng), U' ');
    for (auto& c : s) c = pool[pick(rng)];
    return s;
  }
};

TEST_F(ScoringProperties, PermutationInvariance) {
  for (int i = 0; i < 2000; ++i) {
    std::u32string t = random_token(40);
    const auto before = word_color(table, normalize_token(unicode::encode_utf8(t))).color;
    std::shuffle(t.begin(), t.end(), rng);
    EXPECT_EQ(word_color(table, normalize_token(unicode::encode_utf8(t))).color, before);
  }
  const ScoreTable ex = build_worked_example_table();
  EXPECT_EQ(word_color(ex, "deep").color, word_color(ex, "peed").color);
}

TEST_F(ScoringProperties, CaseInvariance) {
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 2000; ++i) {
    std::u32string t = random_token(40);
    std::u32string mixed = t;
    for (auto& c : mixed) {
      if (c >= U'a' && c <= U'z' && flip(rng)) c -= 32;
    }
    EXPECT_EQ(word_color(table, normalize_token(unicode::encode_utf8(t))),
              word_color(table, normalize_token(unicode::encode_utf8(mixed))));
  }
}

TEST_F(ScoringProperties, ChannelSeparation) {
  const std::u32string reds = U"abcdefghi012";
  std::uniform_int_distribution<std::size_t> pick(0, reds.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::u32string t(1 + i % 30, U'a');
    for (auto& c : t) c = reds[pick(rng)];
    const auto color = color_of(table, t);
    EXPECT_EQ(color.g, 0);
    EXPECT_EQ(color.b, 0);
    EXPECT_GT(color.r, 0);
  }
}

TEST_F(ScoringProperties, RepetitionLaw) {
  for (const auto& [c, e] : table.entries()) {
    for (int n = 1; n <= 12; ++n) {
      const auto color = color_of(table, std::u32string(static_cast<std::size_t>(n), c));
      const int expected = std::min(e.score * n * n, 255);
      for (Channel ch : kChannels) {
        EXPECT_EQ(color.channel(ch), ch == e.channel ? expected : 0);
      }
    }
  }
}

TEST_F(ScoringProperties, SingleSubstitutionBound) {
  const std::u32string alphabet = table.alphabet() + U"!é";
  for (int i = 0; i < 300; ++i) {
    std::u32string t = random_token(25);
    if (t.empty()) continue;
    const auto base = color_of(table, t);
    const int bound = 9 * static_cast<int>(t.size());
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
      const char32_t keep = t[pos];
      for (char32_t sub : alphabet) {
        t[pos] = sub;
        const auto c = color_of(table, t);
        for (Channel ch : kChannels) {
          ASSERT_LE(std::abs(int{c.channel(ch)} - int{base.channel(ch)}), bound);
        }
      }
      t[pos] = keep;
    }
  }
}

}  // namespace
}  // namespace wordvis
