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

#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordvis/scoring.hpp"

namespace wordvis {

class AnalysisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One token per line, normalized; blank lines skipped, order kept.
std::vector<std::string> read_word_list(const std::filesystem::path& path);
std::vector<std::string> parse_word_list(std::string_view text);

struct CollisionClass {
  WordColor color;
  std::vector<std::string> words;  // sorted
};

struct CollisionReport {
  std::size_t lexicon_size = 0;     // distinct normalized words
  std::size_t distinct_colors = 0;
  std::size_t singleton_count = 0;  // words alone in their color class
  std::vector<CollisionClass> collision_classes;  // size >= 2, by descending size then color
  std::size_t anagram_collision_pairs = 0;
  std::size_t non_anagram_collision_pairs = 0;

  const CollisionClass* largest() const {
    return collision_classes.empty() ? nullptr : &collision_classes.front();
  }
};

/// Groups the (deduplicated) lexicon by word color. Colliding pairs are
/// split into anagram pairs (same multiset of characters) and the rest.
CollisionReport collision_report(const std::vector<std::string>& lexicon, const ScoreTable& table);

struct WordPerturbation {
  std::string word;
  std::int64_t length = 0;
  int max_delta = 0;       // max |channel change| over all substitutions
  std::int64_t bound = 0;  // 9 * length
};

struct PerturbationReport {
  std::vector<WordPerturbation> words;
  int max_delta = 0;
  double mean_delta = 0.0;  // mean of the per-word maxima
  std::size_t bound_violations = 0;
};

/// Tries every single-position substitution by every `alphabet` character
/// and records the largest per-channel change of the clamped color.
PerturbationReport perturbation_report(const std::vector<std::string>& lexicon, const ScoreTable& table,
                                       std::u32string_view alphabet);

struct WordHue {
  std::string word;
  WordColor color;
  Channel dominant = Channel::Red;  // argmax, ties broken R > G > B
  bool tied = false;
  int spread = 0;                   // max channel - min channel
  bool stopword = false;
};

struct HueProfile {
  std::vector<WordHue> words;
  std::size_t stopword_count = 0;
  std::size_t tie_count = 0;
  double stopword_green_fraction = 0.0;  // 0 when no stop-words present
  double mean_spread_stopwords = 0.0;
  double mean_spread_others = 0.0;
  /// others minus stop-words; 0 when either group is empty.
  double spread_difference = 0.0;
};

HueProfile hue_profile(const std::vector<std::string>& lexicon, const ScoreTable& table,
                       const std::set<std::string>& stopwords);

std::string to_json(const CollisionReport& r);
std::string to_json(const PerturbationReport& r);
std::string to_json(const HueProfile& r);

std::string to_text(const CollisionReport& r);
std::string to_text(const PerturbationReport& r);
std::string to_text(const HueProfile& r);

}  // namespace wordvis
