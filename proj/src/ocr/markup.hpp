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

// Minimal tolerant XHTML/HTML scanner used by the hOCR reader. Produces a
// flat node arena in document order; nothing here recurses, so arbitrarily
// deep nesting cannot exhaust the stack.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordvis::markup {

struct Node {
  enum class Kind : std::uint8_t { Element, Text };

  Kind kind = Kind::Text;
  std::string name;  // lowercased element name
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // entity-decoded text content (Text nodes only)
  std::int32_t parent = -1;
  std::vector<std::int32_t> children;

  const std::string* attribute(std::string_view key) const;
};

/// Index 0 is a synthetic root element named "#document".
struct Document {
  std::vector<Node> nodes;

  /// Concatenated text of every Text node under `index`.
  std::string text_content(std::int32_t index) const;
};

/// Throws OcrParseError with line/column on markup that is not well formed:
/// unterminated tags, comments or attribute values, mismatched or unclosed
/// elements. HTML void elements (meta, br, ...) need no end tag.
Document parse(std::string_view source);

}  // namespace wordvis::markup
