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

#include <fstream>
#include <sstream>
#include <vector>

#include "wordvis/scoring.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {

namespace {

struct Field {
  std::u32string text;
  int column;  // 1-based, in scalars
};

std::vector<Field> split_fields(std::u32string_view line) {
  std::vector<Field> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && unicode::is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !unicode::is_space(line[i])) ++i;
    fields.push_back({std::u32string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return fields;
}

std::string show(std::u32string_view s) { return unicode::encode_utf8(s); }

}  // namespace

ScoreTable parse_table(std::string_view source, std::string name) {
  const std::u32string text = unicode::decode_utf8(source);
  ScoreTable::Entries entries;
  std::map<char32_t, int> first_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find(U'\n', pos);
    if (eol == std::u32string::npos) eol = text.size();
    const std::u32string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto fields = split_fields(line);
    // A field starting with '#' opens a comment, so '#' itself cannot be scored.
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (fields[k].text.front() == U'#') {
        fields.resize(k);
        break;
      }
    }
    if (fields.empty()) continue;

    const auto syntax = [&](const std::string& msg, int column) {
      return TableError(TableError::Kind::Syntax,
                        "line " + std::to_string(line_no) + ", column " + std::to_string(column) +
                            ": " + msg,
                        line_no, column);
    };

    if (fields.size() != 3) {
      const int column = fields.size() > 3 ? fields[3].column : static_cast<int>(line.size()) + 1;
      throw syntax("expected '<char> <R|G|B> <score>', found " + std::to_string(fields.size()) +
                       " field(s)",
                   column);
    }
    const Field& ch = fields[0];
    const Field& chan = fields[1];
    const Field& score = fields[2];

    if (ch.text.size() != 1) {
      throw syntax("character field must be a single character, got '" + show(ch.text) + "'",
                   ch.column);
    }

    Channel channel{};
    if (chan.text == U"R" || chan.text == U"r") {
      channel = Channel::Red;
    } else if (chan.text == U"G" || chan.text == U"g") {
      channel = Channel::Green;
    } else if (chan.text == U"B" || chan.text == U"b") {
      channel = Channel::Blue;
    } else {
      throw TableError(TableError::Kind::Channel,
                       "line " + std::to_string(line_no) + ", column " +
                           std::to_string(chan.column) + ": channel must be R, G or B, got '" +
                           show(chan.text) + "'",
                       line_no, chan.column);
    }

    int value = 0;
    bool digits = !score.text.empty() && score.text.size() <= 6;
    for (char32_t c : score.text) {
      if (c < U'0' || c > U'9') {
        digits = false;
        break;
      }
      value = value * 10 + static_cast<int>(c - U'0');
    }
    if (!digits) {
      throw syntax("score must be a non-negative integer, got '" + show(score.text) + "'",
                   score.column);
    }

    const char32_t key = unicode::fold_case(ch.text[0]);
    const std::string shown = show(ch.text);
    if (value < kMinScore || value > kMaxScore) {
      throw TableError(TableError::Kind::Range,
                       "line " + std::to_string(line_no) + ": score " + std::to_string(value) +
                           " for character '" + shown + "' is outside [1, 9]",
                       line_no, score.column);
    }
    if (const auto [it, fresh] = first_seen.emplace(key, line_no); !fresh) {
      throw TableError(TableError::Kind::Duplicate,
                       "line " + std::to_string(line_no) + ": character '" + shown +
                           "' already defined on line " + std::to_string(it->second),
                       line_no, ch.column);
    }
    entries[key] = ScoreEntry{channel, value};
  }
  return ScoreTable(std::move(name), entries);
}

ScoreTable load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open score table '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), path.stem().string());
}

ScoreTable resolve_table(std::string_view name_or_path) {
  if (name_or_path == kDefaultTableName) return build_default_table();
  if (name_or_path == kWorkedExampleTableName) return build_worked_example_table();
  return load_table_file(std::filesystem::path(name_or_path));
}

std::string format_table(const ScoreTable& table) {
  std::string out = "# score table: " + table.name() + "\n";
  for (const auto& [c, e] : table.entries()) {
    unicode::append_utf8(out, c);
    out += ' ';
    out += channel_letter(e.channel);
    out += ' ';
    out += std::to_string(e.score);
    out += '\n';
  }
  return out;
}

}  // namespace wordvis
