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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordvis {

/// Pixel rectangle, origin top-left. Parsed boxes always have non-negative
/// extents; left/top may be anything until clipped against an image.
struct BoundingBox {
  std::int32_t left = 0;
  std::int32_t top = 0;
  std::int32_t width = 0;
  std::int32_t height = 0;

  bool empty() const { return width <= 0 || height <= 0; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct OcrWord {
  std::string text;
  BoundingBox box;
  std::optional<double> confidence;  // [0, 100]
  std::int64_t order_index = 0;

  friend bool operator==(const OcrWord&, const OcrWord&) = default;
};

enum class OcrFormat { Hocr, TesseractTsv, CanonicalJson };

std::string_view format_name(OcrFormat f);      // "hocr" | "tsv" | "json"
std::string_view format_extension(OcrFormat f);  // ".hocr" | ".tsv" | ".json"
std::optional<OcrFormat> parse_format_name(std::string_view name);

struct PageSize {
  std::int32_t width = 0;
  std::int32_t height = 0;

  friend bool operator==(const PageSize&, const PageSize&) = default;
};

struct DocumentOcr {
  std::optional<PageSize> page;
  std::vector<OcrWord> words;  // strictly increasing order_index
  OcrFormat source_format = OcrFormat::CanonicalJson;

  friend bool operator==(const DocumentOcr&, const DocumentOcr&) = default;
};

/// Structured failure from any OCR parser. `line`/`column` are 1-based for
/// text formats (0 if unknown); `path` names the offending JSON field
/// (e.g. "words[0].box") for schema violations.
class OcrParseError : public std::runtime_error {
 public:
  OcrParseError(std::string message, int line = 0, int column = 0, std::string path = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  int line_;
  int column_;
  std::string path_;
};

/// Non-fatal issues (skipped words, clamped boxes) are appended to
/// `warnings` when it is non-null.
using Warnings = std::vector<std::string>;

/// hOCR subset: `ocr_page` and `ocrx_word` classes with `bbox` / `x_wconf`
/// title properties. Only the first page is ingested.
DocumentOcr parse_hocr(std::string_view text, Warnings* warnings = nullptr);

/// Tesseract's 12-column TSV. Only level-5 (word) rows become words.
DocumentOcr parse_tesseract_tsv(std::string_view text, Warnings* warnings = nullptr);

DocumentOcr parse_canonical_json(std::string_view text, Warnings* warnings = nullptr);
std::string serialize_canonical_json(const DocumentOcr& doc);

DocumentOcr parse_ocr(std::string_view text, OcrFormat format, Warnings* warnings = nullptr);

}  // namespace wordvis
