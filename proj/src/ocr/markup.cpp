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

#include "markup.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "wordvis/ocr.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis::markup {

const std::string* Node::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Document::text_content(std::int32_t index) const {
  std::string out;
  std::vector<std::int32_t> stack{index};
  while (!stack.empty()) {
    const Node& n = nodes[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (n.kind == Node::Kind::Text) {
      out += n.text;
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 16> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr", "basefont", "frame"};

bool is_void(std::string_view name) {
  return std::find(kVoidElements.begin(), kVoidElements.end(), name) != kVoidElements.end();
}

bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || c == ':' || u >= 0x80;
}

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return is_name_start(c) || std::isdigit(u) || c == '-' || c == '.';
}

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  Document run() {
    doc_.nodes.push_back(Node{Node::Kind::Element, "#document", {}, {}, -1, {}});
    open_.push_back(0);
    while (pos_ < src_.size()) {
      if (src_[pos_] == '<') {
        markup();
      } else {
        text();
      }
    }
    if (open_.size() > 1) {
      const Node& n = doc_.nodes[static_cast<std::size_t>(open_.back())];
      fail("element <" + n.name + "> is never closed", src_.size());
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw OcrParseError("hOCR: line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + msg,
                        line, column);
  }

  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  void skip_until(std::string_view terminator, std::string_view what) {
    const std::size_t start = pos_;
    const std::size_t end = src_.find(terminator, pos_);
    if (end == std::string_view::npos) fail("unterminated " + std::string(what), start);
    pos_ = end + terminator.size();
  }

  std::int32_t add_node(Node node) {
    const auto index = static_cast<std::int32_t>(doc_.nodes.size());
    node.parent = open_.back();
    doc_.nodes[static_cast<std::size_t>(node.parent)].children.push_back(index);
    doc_.nodes.push_back(std::move(node));
    return index;
  }

  void text() {
    const std::size_t end = std::min(src_.find('<', pos_), src_.size());
    std::string decoded = decode_entities(src_.substr(pos_, end - pos_));
    pos_ = end;
    Node n;
    n.kind = Node::Kind::Text;
    n.text = std::move(decoded);
    add_node(std::move(n));
  }

  void markup() {
    const std::size_t start = pos_;
    if (starts_with("<!--")) {
      skip_until("-->", "comment");
    } else if (starts_with("<![CDATA[")) {
      pos_ += 9;
      const std::size_t end = src_.find("]]>", pos_);
      if (end == std::string_view::npos) fail("unterminated CDATA section", start);
      Node n;
      n.text = std::string(src_.substr(pos_, end - pos_));
      add_node(std::move(n));
      pos_ = end + 3;
    } else if (starts_with("<?")) {
      skip_until("?>", "processing instruction");
    } else if (starts_with("<!")) {
      declaration(start);
    } else if (starts_with("</")) {
      end_tag(start);
    } else {
      start_tag(start);
    }
  }

  void declaration(std::size_t start) {
    int bracket = 0;
    for (pos_ += 2; pos_ < src_.size(); ++pos_) {
      const char c = src_[pos_];
      if (c == '[') ++bracket;
      if (c == ']') --bracket;
      if (c == '>' && bracket <= 0) {
        ++pos_;
        return;
      }
    }
    fail("unterminated declaration", start);
  }

  std::string read_name(std::size_t start) {
    if (pos_ >= src_.size() || !is_name_start(src_[pos_])) fail("expected a tag name", start);
    const std::size_t b = pos_;
    while (pos_ < src_.size() && is_name_char(src_[pos_])) ++pos_;
    return lower(src_.substr(b, pos_ - b));
  }

  void skip_ws() {
    while (pos_ < src_.size() && is_ws(src_[pos_])) ++pos_;
  }

  void start_tag(std::size_t start) {
    ++pos_;
    Node n;
    n.kind = Node::Kind::Element;
    n.name = read_name(start);
    bool self_closing = false;
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) fail("unterminated tag <" + n.name + ">", start);
      const char c = src_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          self_closing = true;
          break;
        }
        fail("unexpected '/' in tag <" + n.name + ">", pos_);
      }
      const std::size_t attr_at = pos_;
      if (!is_name_start(c)) fail("unexpected character in tag <" + n.name + ">", pos_);
      std::string key = read_name(attr_at);
      skip_ws();
      std::string value;
      if (pos_ < src_.size() && src_[pos_] == '=') {
        ++pos_;
        skip_ws();
        if (pos_ >= src_.size()) fail("unterminated attribute '" + key + "'", attr_at);
        const char q = src_[pos_];
        if (q == '"' || q == '\'') {
          const std::size_t end = src_.find(q, pos_ + 1);
          if (end == std::string_view::npos) fail("unterminated attribute value", pos_);
          value = decode_entities(src_.substr(pos_ + 1, end - pos_ - 1));
          pos_ = end + 1;
        } else {
          const std::size_t b = pos_;
          while (pos_ < src_.size() && !is_ws(src_[pos_]) && src_[pos_] != '>' &&
                 src_[pos_] != '<' && src_[pos_] != '"' && src_[pos_] != '\'' &&
                 !(src_[pos_] == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>')) {
            ++pos_;
          }
          if (pos_ == b) fail("missing value for attribute '" + key + "'", attr_at);
          value = decode_entities(src_.substr(b, pos_ - b));
        }
      }
      n.attributes.emplace_back(std::move(key), std::move(value));
    }
    const bool leaf = self_closing || is_void(n.name);
    const std::int32_t index = add_node(std::move(n));
    if (!leaf) open_.push_back(index);
  }

  void end_tag(std::size_t start) {
    pos_ += 2;
    const std::string name = read_name(start);
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != '>') fail("unterminated end tag </" + name + ">", start);
    ++pos_;
    const Node& top = doc_.nodes[static_cast<std::size_t>(open_.back())];
    if (open_.size() > 1 && top.name == name) {
      open_.pop_back();
      return;
    }
    if (is_void(name)) return;  // stray </br> and friends
    if (open_.size() == 1) fail("end tag </" + name + "> without a matching start tag", start);
    fail("end tag </" + name + "> does not match open element <" + top.name + ">", start);
  }

  static std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != '&') {
        out.push_back(s[i++]);
        continue;
      }
      const std::size_t semi = s.find(';', i);
      if (semi == std::string_view::npos || semi - i > 12) {
        out.push_back(s[i++]);
        continue;
      }
      const std::string_view ent = s.substr(i + 1, semi - i - 1);
      std::string replacement;
      if (ent == "amp") {
        replacement = "&";
      } else if (ent == "lt") {
        replacement = "<";
      } else if (ent == "gt") {
        replacement = ">";
      } else if (ent == "quot") {
        replacement = "\"";
      } else if (ent == "apos") {
        replacement = "'";
      } else if (ent == "nbsp") {
        unicode::append_utf8(replacement, 0xA0);
      } else if (ent.size() > 1 && ent[0] == '#') {
        const bool hex = ent[1] == 'x' || ent[1] == 'X';
        const std::string_view digits = ent.substr(hex ? 2 : 1);
        std::uint32_t cp = 0;
        const auto [p, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
        if (ec == std::errc() && p == digits.data() + digits.size() && !digits.empty()) {
          unicode::append_utf8(replacement, static_cast<char32_t>(cp));
        }
      }
      if (replacement.empty()) {
        out.push_back(s[i++]);  // unknown entity: keep verbatim
        continue;
      }
      out += replacement;
      i = semi + 1;
    }
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Document doc_;
  std::vector<std::int32_t> open_;
};

}  // namespace

Document parse(std::string_view source) { return Scanner(source).run(); }

}  // namespace wordvis::markup
