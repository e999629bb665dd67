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

#include "wordvis/ocr.hpp"

namespace wordvis {

OcrParseError::OcrParseError(std::string message, int line, int column, std::string path)
    : std::runtime_error(std::move(message)), line_(line), column_(column), path_(std::move(path)) {}

std::string_view format_name(OcrFormat f) {
  switch (f) {
    case OcrFormat::Hocr: return "hocr";
    case OcrFormat::TesseractTsv: return "tsv";
    case OcrFormat::CanonicalJson: return "json";
  }
  return "json";
}

std::string_view format_extension(OcrFormat f) {
  switch (f) {
    case OcrFormat::Hocr: return ".hocr";
    case OcrFormat::TesseractTsv: return ".tsv";
    case OcrFormat::CanonicalJson: return ".json";
  }
  return ".json";
}

std::optional<OcrFormat> parse_format_name(std::string_view name) {
  if (name == "hocr") return OcrFormat::Hocr;
  if (name == "tsv") return OcrFormat::TesseractTsv;
  if (name == "json") return OcrFormat::CanonicalJson;
  return std::nullopt;
}

DocumentOcr parse_ocr(std::string_view text, OcrFormat format, Warnings* warnings) {
  switch (format) {
    case OcrFormat::Hocr: return parse_hocr(text, warnings);
    case OcrFormat::TesseractTsv: return parse_tesseract_tsv(text, warnings);
    case OcrFormat::CanonicalJson: return parse_canonical_json(text, warnings);
  }
  return parse_canonical_json(text, warnings);
}

}  // namespace wordvis
