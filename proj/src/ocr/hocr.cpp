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

#include <charconv>
#include <cmath>
#include <sstream>

#include "markup.hpp"
#include "ocr_common.hpp"
#include "wordvis/ocr.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {

namespace {

bool has_class(const markup::Node& n, std::string_view cls) {
  const std::string* attr = n.attribute("class");
  if (attr == nullptr) return false;
  std::istringstream in(*attr);
  std::string token;
  while (in >> token) {
    if (token == cls) return true;
  }
  return false;
}

// Looks up `key` in a title like "bbox 10 20 50 40; x_wconf 91" and returns
// its raw value tokens.
std::optional<std::vector<std::string>> title_property(std::string_view title,
                                                       std::string_view key) {
  std::size_t pos = 0;
  while (pos <= title.size()) {
    std::size_t end = title.find(';', pos);
    if (end == std::string_view::npos) end = title.size();
    std::istringstream in{std::string(title.substr(pos, end - pos))};
    std::string name;
    if (in >> name && name == key) {
      std::vector<std::string> values;
      std::string v;
      while (in >> v) values.push_back(v);
      return values;
    }
    pos = end + 1;
  }
  return std::nullopt;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Corners {
  std::int64_t x0, y0, x1, y1;
};

std::optional<Corners> read_bbox(const markup::Node& n) {
  const std::string* title = n.attribute("title");
  if (title == nullptr) return std::nullopt;
  const auto values = title_property(*title, "bbox");
  if (!values || values->size() != 4) return std::nullopt;
  std::int64_t c[4];
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = to_int((*values)[k]);
    if (!v || *v < INT32_MIN || *v > INT32_MAX) return std::nullopt;
    c[k] = *v;
  }
  return Corners{c[0], c[1], c[2], c[3]};
}

}  // namespace

DocumentOcr parse_hocr(std::string_view text, Warnings* warnings) {
  const markup::Document dom = markup::parse(text);
  DocumentOcr doc;
  doc.source_format = OcrFormat::Hocr;

  // page_of[i]: ordinal of the ocr_page enclosing node i (0 = none).
  std::vector<int> page_of(dom.nodes.size(), 0);
  int pages = 0;
  bool warned_extra_pages = false;

  for (std::size_t i = 1; i < dom.nodes.size(); ++i) {
    const markup::Node& n = dom.nodes[i];
    page_of[i] = page_of[static_cast<std::size_t>(n.parent)];
    if (n.kind != markup::Node::Kind::Element) continue;

    if (has_class(n, "ocr_page")) {
      page_of[i] = ++pages;
      if (pages == 1) {
        if (const auto c = read_bbox(n)) {
          doc.page = PageSize{detail::saturate_i32(std::max<std::int64_t>(0, c->x1 - c->x0)),
                              detail::saturate_i32(std::max<std::int64_t>(0, c->y1 - c->y0))};
        }
      } else if (!warned_extra_pages) {
        warned_extra_pages = true;
        detail::warn(warnings, "hOCR: only the first ocr_page is ingested; later pages ignored");
      }
      continue;
    }
    if (page_of[i] > 1 || !has_class(n, "ocrx_word")) continue;

    const std::string word_text =
        detail::sanitize_utf8(unicode::trim_utf8(dom.text_content(static_cast<std::int32_t>(i))));
    const std::string* id = n.attribute("id");
    const std::string label = id != nullptr ? "'" + *id + "'" : "'" + word_text + "'";
    if (word_text.empty()) continue;

    const auto corners = read_bbox(n);
    if (!corners) {
      detail::warn(warnings, "hOCR: word " + label + " has no valid bbox; skipped");
      continue;
    }
    if (corners->x1 < corners->x0 || corners->y1 < corners->y0) {
      detail::warn(warnings, "hOCR: word " + label + " has inverted bbox corners; clamped to zero extent");
    }

    OcrWord w;
    w.text = word_text;
    w.box = BoundingBox{static_cast<std::int32_t>(corners->x0),
                        static_cast<std::int32_t>(corners->y0),
                        detail::saturate_i32(std::max<std::int64_t>(0, corners->x1 - corners->x0)),
                        detail::saturate_i32(std::max<std::int64_t>(0, corners->y1 - corners->y0))};

    if (const std::string* title = n.attribute("title")) {
      if (const auto conf = title_property(*title, "x_wconf")) {
        double v = NAN;
        if (conf->size() == 1) {
          const std::string& s = conf->front();
          const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
          if (ec != std::errc() || p != s.data() + s.size()) v = NAN;
        }
        if (std::isfinite(v) && v >= 0.0 && v <= 100.0) {
          w.confidence = v;
        } else {
          detail::warn(warnings, "hOCR: word " + label + " has an invalid x_wconf; confidence dropped");
        }
      }
    }
    w.order_index = static_cast<std::int64_t>(doc.words.size());
    doc.words.push_back(std::move(w));
  }
  return doc;
}

}  // namespace wordvis
