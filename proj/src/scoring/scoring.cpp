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

#include "wordvis/scoring.hpp"

#include <algorithm>

#include "wordvis/unicode.hpp"

namespace wordvis {

char channel_letter(Channel c) {
  switch (c) {
    case Channel::Red: return 'R';
    case Channel::Green: return 'G';
    case Channel::Blue: return 'B';
  }
  return '?';
}

std::string_view channel_name(Channel c) {
  switch (c) {
    case Channel::Red: return "red";
    case Channel::Green: return "green";
    case Channel::Blue: return "blue";
  }
  return "?";
}

TableError::TableError(Kind kind, std::string message, int line, int column)
    : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

ScoreTable::ScoreTable(std::string name, const Entries& entries) : name_(std::move(name)) {
  for (const auto& [raw, entry] : entries) {
    const char32_t key = unicode::fold_case(raw);
    const std::string shown = unicode::encode_utf8(std::u32string(1, raw));
    if (entry.score < kMinScore || entry.score > kMaxScore) {
      throw TableError(TableError::Kind::Range,
                       "score " + std::to_string(entry.score) + " for character '" + shown +
                           "' is outside [1, 9]");
    }
    if (entry.channel != Channel::Red && entry.channel != Channel::Green &&
        entry.channel != Channel::Blue) {
      throw TableError(TableError::Kind::Channel, "invalid channel for character '" + shown + "'");
    }
    if (!entries_.emplace(key, entry).second) {
      throw TableError(TableError::Kind::Duplicate,
                       "character '" + shown + "' appears more than once");
    }
    if (key < 128) ascii_[key] = entry;
  }
}

std::size_t ScoreTable::count(Channel channel) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [&](const auto& kv) { return kv.second.channel == channel; }));
}

std::optional<ScoreEntry> ScoreTable::lookup(char32_t c) const {
  c = unicode::fold_case(c);
  if (c < 128) {
    const ScoreEntry& e = ascii_[c];
    if (e.score == 0) return std::nullopt;
    return e;
  }
  const auto it = entries_.find(c);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::u32string ScoreTable::alphabet() const {
  std::u32string out;
  out.reserve(entries_.size());
  for (const auto& kv : entries_) out.push_back(kv.first);
  return out;
}

namespace {

void add_run(ScoreTable::Entries& e, char32_t first, char32_t last, Channel ch) {
  int score = 1;
  for (char32_t c = first; c <= last; ++c) e[c] = ScoreEntry{ch, score++};
}

ScoreTable::Entries default_entries() {
  ScoreTable::Entries e;
  add_run(e, U'a', U'i', Channel::Red);
  add_run(e, U'j', U'r', Channel::Green);
  add_run(e, U's', U'z', Channel::Blue);
  add_run(e, U'0', U'2', Channel::Red);
  add_run(e, U'3', U'5', Channel::Green);
  add_run(e, U'6', U'9', Channel::Blue);
  return e;
}

}  // namespace

ScoreTable build_default_table() {
  return ScoreTable(std::string(kDefaultTableName), default_entries());
}

ScoreTable build_worked_example_table() {
  auto e = default_entries();
  e[U'd'] = {Channel::Red, 3};
  e[U'e'] = {Channel::Red, 5};
  e[U'p'] = {Channel::Green, 7};
  e[U'q'] = {Channel::Green, 8};
  return ScoreTable(std::string(kWorkedExampleTableName), e);
}

WordColor WordColor::checked(std::int64_t r, std::int64_t g, std::int64_t b) {
  const auto ok = [](std::int64_t v) { return v >= 0 && v <= kChannelMax; };
  if (!ok(r) || !ok(g) || !ok(b)) throw std::out_of_range("color channel outside [0, 255]");
  return WordColor{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                   static_cast<std::uint8_t>(b)};
}

std::string normalize_token(std::string_view raw) {
  const std::u32string decoded = unicode::decode_utf8(raw);
  std::u32string folded(unicode::trim(decoded));
  for (char32_t& c : folded) c = unicode::fold_case(c);
  return unicode::encode_utf8(folded);
}

std::int64_t multiplying_factor(std::string_view token) {
  return static_cast<std::int64_t>(unicode::scalar_count(token));
}

namespace {

std::array<std::int64_t, 3> channel_sums(const ScoreTable& table, std::u32string_view token) {
  const auto factor = static_cast<std::int64_t>(token.size());
  std::array<std::int64_t, 3> sums{};
  for (char32_t c : token) {
    if (const auto e = table.lookup(c)) {
      sums[static_cast<std::size_t>(e->channel)] += static_cast<std::int64_t>(e->score) * factor;
    }
  }
  return sums;
}

WordColor saturate(const std::array<std::int64_t, 3>& sums) {
  const auto clamp = [](std::int64_t v) { return std::clamp<std::int64_t>(v, 0, kChannelMax); };
  return WordColor::checked(clamp(sums[0]), clamp(sums[1]), clamp(sums[2]));
}

}  // namespace

TokenScoreBreakdown word_color(const ScoreTable& table, std::string_view token) {
  const std::u32string scalars = unicode::decode_utf8(token);
  TokenScoreBreakdown out;
  out.token = std::string(token);
  out.m_factor = static_cast<std::int64_t>(scalars.size());
  out.raw_sums = channel_sums(table, scalars);
  out.color = saturate(out.raw_sums);
  return out;
}

WordColor color_of(const ScoreTable& table, std::u32string_view token) {
  return saturate(channel_sums(table, token));
}

}  // namespace wordvis
