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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordvis {

enum class Channel : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Channel, 3> kChannels = {Channel::Red, Channel::Green,
                                                     Channel::Blue};

char channel_letter(Channel c);
std::string_view channel_name(Channel c);

inline constexpr int kMinScore = 1;
inline constexpr int kMaxScore = 9;
inline constexpr int kChannelMax = 255;

struct ScoreEntry {
  Channel channel;
  int score;

  friend bool operator==(const ScoreEntry&, const ScoreEntry&) = default;
};

/// Raised for malformed or invalid score-table configs. `line`/`column` are
/// 1-based and 0 when the problem is not tied to a source position.
class TableError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Range, Duplicate, Channel };

  TableError(Kind kind, std::string message, int line = 0, int column = 0);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Immutable character -> (channel, score) map. Keys are stored case-folded;
/// lookups fold the probe the same way. Characters without an entry are
/// unscored.
class ScoreTable {
 public:
  using Entries = std::map<char32_t, ScoreEntry>;

  /// Throws TableError on a score outside [1, 9] or on two keys that fold to
  /// the same character.
  ScoreTable(std::string name, const Entries& entries);

  const std::string& name() const noexcept { return name_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t count(Channel channel) const;

  std::optional<ScoreEntry> lookup(char32_t c) const;

  /// Every scored character, in ascending code point order.
  std::u32string alphabet() const;

  friend bool operator==(const ScoreTable& a, const ScoreTable& b) {
    return a.name_ == b.name_ && a.entries_ == b.entries_;
  }

 private:
  std::string name_;
  Entries entries_;
  // ASCII fast path; score 0 marks "unscored".
  std::array<ScoreEntry, 128> ascii_{};
};

inline constexpr std::string_view kDefaultTableName = "default-ascending";
inline constexpr std::string_view kWorkedExampleTableName = "worked-example";

/// a-i -> Red 1..9, j-r -> Green 1..9, s-z -> Blue 1..8, then digits 0-2 Red
/// 1..3, 3-5 Green 1..3, 6-9 Blue 1..4. 36 entries, 12 per channel.
ScoreTable build_default_table();

/// The default table with d=(Red,3), e=(Red,5), p=(Green,7), q=(Green,8)
/// pinned so that "deep" -> (52,28,0) and "deeq" -> (52,32,0).
ScoreTable build_worked_example_table();

/// Parses the line-oriented table format:
///
///     # comment
///     a R 1
///     j G 1   # trailing comments are allowed too
///
/// Each entry is `<char> <R|G|B> <score>` separated by whitespace, where
/// `<char>` is exactly one Unicode scalar. Blank lines are ignored.
ScoreTable parse_table(std::string_view source, std::string name);

ScoreTable load_table_file(const std::filesystem::path& path);

/// Built-in name ("default-ascending", "worked-example") or a file path.
ScoreTable resolve_table(std::string_view name_or_path);

/// Inverse of parse_table; entries in code point order.
std::string format_table(const ScoreTable& table);

/// An 8-bit RGB triple.
struct WordColor {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  /// Throws std::out_of_range unless every channel lies in [0, 255].
  static WordColor checked(std::int64_t r, std::int64_t g, std::int64_t b);

  std::uint8_t channel(Channel c) const {
    return c == Channel::Red ? r : (c == Channel::Green ? g : b);
  }

  friend bool operator==(const WordColor&, const WordColor&) = default;
  friend auto operator<=>(const WordColor&, const WordColor&) = default;
};

struct TokenScoreBreakdown {
  std::string token;
  std::int64_t m_factor = 0;
  std::array<std::int64_t, 3> raw_sums{};  // indexed by Channel
  WordColor color;

  friend bool operator==(const TokenScoreBreakdown&, const TokenScoreBreakdown&) = default;
};

/// Trims surrounding whitespace and lowercases. Everything else is kept.
std::string normalize_token(std::string_view raw);

/// Scalar count of a normalized token, unscored characters included.
std::int64_t multiplying_factor(std::string_view token);

/// Per channel: sum of score * M over the token's scored characters, where
/// M is the token length; each sum saturates at 255.
TokenScoreBreakdown word_color(const ScoreTable& table, std::string_view token);

/// Same result as word_color(table, token).color without the breakdown.
WordColor color_of(const ScoreTable& table, std::u32string_view token);

}  // namespace wordvis
