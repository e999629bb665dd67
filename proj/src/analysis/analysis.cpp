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

#include "wordvis/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {

using nlohmann::ordered_json;

std::vector<std::string> parse_word_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string token = normalize_token(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (!token.empty()) out.push_back(std::move(token));
  }
  return out;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AnalysisError("cannot open word list '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_list(buf.str());
}

namespace {

std::vector<std::string> unique_in_order(const std::vector<std::string>& words) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  for (const auto& w : words) {
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

std::size_t pairs(std::size_t k) { return k * (k - 1) / 2; }

}  // namespace

CollisionReport collision_report(const std::vector<std::string>& lexicon, const ScoreTable& table) {
  if (lexicon.empty()) throw AnalysisError("collision report needs a non-empty lexicon");
  const std::vector<std::string> words = unique_in_order(lexicon);

  std::map<WordColor, std::vector<std::string>> classes;
  for (const auto& w : words) classes[word_color(table, w).color].push_back(w);

  CollisionReport r;
  r.lexicon_size = words.size();
  r.distinct_colors = classes.size();
  for (auto& [color, members] : classes) {
    if (members.size() == 1) {
      ++r.singleton_count;
      continue;
    }
    std::map<std::u32string, std::size_t> by_letters;
    for (const auto& m : members) {
      std::u32string key = unicode::decode_utf8(m);
      std::sort(key.begin(), key.end());
      ++by_letters[key];
    }
    std::size_t anagram = 0;
    for (const auto& kv : by_letters) anagram += pairs(kv.second);
    r.anagram_collision_pairs += anagram;
    r.non_anagram_collision_pairs += pairs(members.size()) - anagram;

    std::sort(members.begin(), members.end());
    r.collision_classes.push_back({color, std::move(members)});
  }
  std::stable_sort(r.collision_classes.begin(), r.collision_classes.end(),
                   [](const CollisionClass& a, const CollisionClass& b) {
                     return a.words.size() > b.words.size();
                   });
  return r;
}

PerturbationReport perturbation_report(const std::vector<std::string>& lexicon, const ScoreTable& table,
                                       std::u32string_view alphabet) {
  if (lexicon.empty()) throw AnalysisError("perturbation report needs a non-empty lexicon");
  PerturbationReport r;
  double total = 0.0;
  for (const auto& w : unique_in_order(lexicon)) {
    std::u32string scalars = unicode::decode_utf8(w);
    const WordColor base = color_of(table, scalars);
    WordPerturbation p;
    p.word = w;
    p.length = static_cast<std::int64_t>(scalars.size());
    p.bound = static_cast<std::int64_t>(kMaxScore) * p.length;
    for (std::size_t pos = 0; pos < scalars.size(); ++pos) {
      const char32_t original = scalars[pos];
      for (char32_t sub : alphabet) {
        if (sub == original) continue;
        scalars[pos] = sub;
        const WordColor c = color_of(table, scalars);
        for (Channel ch : kChannels) {
          p.max_delta = std::max(p.max_delta, std::abs(int{c.channel(ch)} - int{base.channel(ch)}));
        }
      }
      scalars[pos] = original;
    }
    if (p.max_delta > p.bound) ++r.bound_violations;
    r.max_delta = std::max(r.max_delta, p.max_delta);
    total += p.max_delta;
    r.words.push_back(std::move(p));
  }
  r.mean_delta = total / static_cast<double>(r.words.size());
  return r;
}

HueProfile hue_profile(const std::vector<std::string>& lexicon, const ScoreTable& table,
                       const std::set<std::string>& stopwords) {
  if (lexicon.empty()) throw AnalysisError("hue profile needs a non-empty lexicon");
  HueProfile h;
  std::size_t green_stop = 0;
  double spread_stop = 0.0;
  double spread_other = 0.0;
  for (const auto& w : unique_in_order(lexicon)) {
    WordHue hue;
    hue.word = w;
    hue.color = word_color(table, w).color;
    const int rgb[3] = {hue.color.r, hue.color.g, hue.color.b};
    const int hi = std::max({rgb[0], rgb[1], rgb[2]});
    const int lo = std::min({rgb[0], rgb[1], rgb[2]});
    hue.spread = hi - lo;
    hue.dominant = rgb[0] == hi ? Channel::Red : (rgb[1] == hi ? Channel::Green : Channel::Blue);
    hue.tied = std::count(std::begin(rgb), std::end(rgb), hi) > 1;
    hue.stopword = stopwords.contains(w);
    if (hue.tied) ++h.tie_count;
    if (hue.stopword) {
      ++h.stopword_count;
      spread_stop += hue.spread;
      if (hue.dominant == Channel::Green) ++green_stop;
    } else {
      spread_other += hue.spread;
    }
    h.words.push_back(std::move(hue));
  }
  const std::size_t others = h.words.size() - h.stopword_count;
  if (h.stopword_count > 0) {
    h.stopword_green_fraction = static_cast<double>(green_stop) / static_cast<double>(h.stopword_count);
    h.mean_spread_stopwords = spread_stop / static_cast<double>(h.stopword_count);
  }
  if (others > 0) h.mean_spread_others = spread_other / static_cast<double>(others);
  if (h.stopword_count > 0 && others > 0) {
    h.spread_difference = h.mean_spread_others - h.mean_spread_stopwords;
  }
  return h;
}

namespace {

ordered_json color_json(const WordColor& c) { return ordered_json::array({c.r, c.g, c.b}); }

std::string dump(const ordered_json& j) {
  return j.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string color_text(const WordColor& c) {
  return "(" + std::to_string(c.r) + ", " + std::to_string(c.g) + ", " + std::to_string(c.b) + ")";
}

}  // namespace

std::string to_json(const CollisionReport& r) {
  ordered_json j;
  j["lexicon_size"] = r.lexicon_size;
  j["distinct_colors"] = r.distinct_colors;
  j["singletons"] = r.singleton_count;
  j["collision_classes"] = r.collision_classes.size();
  j["anagram_collision_pairs"] = r.anagram_collision_pairs;
  j["non_anagram_collision_pairs"] = r.non_anagram_collision_pairs;
  if (const CollisionClass* big = r.largest()) {
    j["largest_class"] = {{"color", color_json(big->color)}, {"words", big->words}};
  } else {
    j["largest_class"] = nullptr;
  }
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.collision_classes) {
    classes.push_back({{"color", color_json(c.color)}, {"words", c.words}});
  }
  j["classes"] = std::move(classes);
  return dump(j);
}

std::string to_json(const PerturbationReport& r) {
  ordered_json j;
  j["words"] = r.words.size();
  j["max_delta"] = r.max_delta;
  j["mean_delta"] = r.mean_delta;
  j["bound_violations"] = r.bound_violations;
  ordered_json rows = ordered_json::array();
  for (const auto& w : r.words) {
    rows.push_back({{"word", w.word}, {"length", w.length}, {"max_delta", w.max_delta}, {"bound", w.bound}});
  }
  j["per_word"] = std::move(rows);
  return dump(j);
}

std::string to_json(const HueProfile& h) {
  ordered_json j;
  j["words"] = h.words.size();
  j["stopwords"] = h.stopword_count;
  j["ties"] = h.tie_count;
  j["stopword_green_fraction"] = h.stopword_green_fraction;
  j["mean_spread_stopwords"] = h.mean_spread_stopwords;
  j["mean_spread_others"] = h.mean_spread_others;
  j["spread_difference"] = h.spread_difference;
  ordered_json rows = ordered_json::array();
  for (const auto& w : h.words) {
    rows.push_back({{"word", w.word},
                    {"color", color_json(w.color)},
                    {"dominant", channel_name(w.dominant)},
                    {"tied", w.tied},
                    {"spread", w.spread},
                    {"stopword", w.stopword}});
  }
  j["per_word"] = std::move(rows);
  return dump(j);
}

std::string to_text(const CollisionReport& r) {
  std::string s;
  s += "lexicon size            " + std::to_string(r.lexicon_size) + "\n";
  s += "distinct colors         " + std::to_string(r.distinct_colors) + "\n";
  s += "collision classes       " + std::to_string(r.collision_classes.size()) + "\n";
  s += "anagram pairs           " + std::to_string(r.anagram_collision_pairs) + "\n";
  s += "non-anagram pairs       " + std::to_string(r.non_anagram_collision_pairs) + "\n";
  if (const CollisionClass* big = r.largest()) {
    s += "largest class           " + color_text(big->color) + " x" + std::to_string(big->words.size()) + ":";
    for (std::size_t i = 0; i < big->words.size() && i < 10; ++i) s += " " + big->words[i];
    if (big->words.size() > 10) s += " ...";
    s += "\n";
  }
  return s;
}

std::string to_text(const PerturbationReport& r) {
  std::string s;
  s += "words                   " + std::to_string(r.words.size()) + "\n";
  s += "max channel delta       " + std::to_string(r.max_delta) + "\n";
  s += "mean per-word max       " + fmt("%.3f", r.mean_delta) + "\n";
  s += "bound (9 x length) hits " + std::to_string(r.bound_violations) + " violations\n";
  return s;
}

std::string to_text(const HueProfile& h) {
  std::string s;
  s += "word                 color            dominant  spread  stop\n";
  for (const auto& w : h.words) {
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %-16s %-9s %6d  %s\n", w.word.c_str(), color_text(w.color).c_str(),
                  (std::string(channel_name(w.dominant)) + (w.tied ? "*" : "")).c_str(), w.spread,
                  w.stopword ? "yes" : "");
    s += line;
  }
  s += "\nstop-words              " + std::to_string(h.stopword_count) + "\n";
  s += "green among stop-words  " + fmt("%.3f", h.stopword_green_fraction) + "\n";
  s += "mean spread (stop)      " + fmt("%.3f", h.mean_spread_stopwords) + "\n";
  s += "mean spread (other)     " + fmt("%.3f", h.mean_spread_others) + "\n";
  s += "spread difference       " + fmt("%.3f", h.spread_difference) + "\n";
  if (h.tie_count > 0) s += "(* = tied dominant channel, " + std::to_string(h.tie_count) + " words)\n";
  return s;
}

}  // namespace wordvis
