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

#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include "ocr_common.hpp"
#include "wordvis/ocr.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {

namespace {

constexpr std::array<std::string_view, 12> kHeader = {
    "level", "page_num", "block_num", "par_num", "line_num", "word_num",
    "left",  "top",      "width",     "height",  "conf",     "text"};

enum Column { kLevel = 0, kPage = 1, kLeft = 6, kTop = 7, kWidth = 8, kHeight = 9, kConf = 10, kText = 11 };

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

DocumentOcr parse_tesseract_tsv(std::string_view text, Warnings* warnings) {
  DocumentOcr doc;
  doc.source_format = OcrFormat::TesseractTsv;

  bool header_seen = false;
  int row = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split_tabs(line);
    const std::string where = "TSV row " + std::to_string(row);

    if (!header_seen) {
      if (fields.size() != kHeader.size() ||
          !std::equal(kHeader.begin(), kHeader.end(), fields.begin())) {
        throw OcrParseError(where + ": missing or malformed Tesseract TSV header", row, 1);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != kHeader.size()) {
      throw OcrParseError(where + ": expected 12 columns, found " + std::to_string(fields.size()),
                          row, 1);
    }

    std::array<std::int32_t, 10> ints{};
    for (std::size_t k = 0; k < ints.size(); ++k) {
      const std::string_view f = fields[k];
      const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), ints[k]);
      if (f.empty() || ec != std::errc() || p != f.data() + f.size()) {
        throw OcrParseError(where + ": column '" + std::string(kHeader[k]) +
                                "' is not an integer: '" + std::string(f) + "'",
                            row, static_cast<int>(k) + 1);
      }
    }

    double conf = 0.0;
    {
      const std::string_view f = fields[kConf];
      const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), conf);
      if (f.empty() || ec != std::errc() || p != f.data() + f.size() || !std::isfinite(conf)) {
        throw OcrParseError(where + ": column 'conf' is not a number: '" + std::string(f) + "'",
                            row, kConf + 1);
      }
    }

    const std::int32_t level = ints[kLevel];
    if (level == 1 && !doc.page && ints[kPage] <= 1) {
      doc.page = PageSize{std::max(0, ints[kWidth]), std::max(0, ints[kHeight])};
    }
    if (level != 5) continue;

    const std::string word_text = detail::sanitize_utf8(unicode::trim_utf8(fields[kText]));
    if (word_text.empty()) continue;

    OcrWord w;
    w.text = word_text;
    w.box = BoundingBox{ints[kLeft], ints[kTop], ints[kWidth], ints[kHeight]};
    if (w.box.width < 0 || w.box.height < 0) {
      detail::warn(warnings, where + ": negative word extent clamped to zero");
      w.box.width = std::max(0, w.box.width);
      w.box.height = std::max(0, w.box.height);
    }
    if (conf == -1.0) {
      // structural rows carry -1; no confidence
    } else if (conf >= 0.0 && conf <= 100.0) {
      w.confidence = conf;
    } else {
      detail::warn(warnings, where + ": confidence outside [0, 100] dropped");
    }
    w.order_index = static_cast<std::int64_t>(doc.words.size());
    doc.words.push_back(std::move(w));
  }
  if (!header_seen) throw OcrParseError("TSV row 1: missing Tesseract TSV header", 1, 1);
  return doc;
}

}  // namespace wordvis
