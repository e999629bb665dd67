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

#include <cmath>

#include "json.hpp"
#include "ocr_common.hpp"
#include "wordvis/ocr.hpp"
#include "wordvis/unicode.hpp"

namespace wordvis {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw OcrParseError("canonical JSON: " + path + ": " + what, 0, 0, path);
}

std::int32_t get_i32(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > INT32_MAX) schema_error(path, "out of range");
  if (x < INT32_MIN || x > INT32_MAX) schema_error(path, "out of range");
  return static_cast<std::int32_t>(x);
}

std::int32_t get_extent(const json& v, const std::string& path) {
  const std::int32_t x = get_i32(v, path);
  if (x < 0) schema_error(path, "must be non-negative");
  return x;
}

}  // namespace

DocumentOcr parse_canonical_json(std::string_view text, Warnings* warnings) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw OcrParseError("canonical JSON: " + std::string(e.what()), 0, static_cast<int>(e.byte), "$");
  } catch (const json::exception& e) {
    // e.g. a number literal that overflows a double
    throw OcrParseError("canonical JSON: " + std::string(e.what()), 0, 0, "$");
  }
  if (!root.is_object()) schema_error("$", "top level must be an object");

  DocumentOcr doc;
  doc.source_format = OcrFormat::CanonicalJson;

  if (const auto it = root.find("v"); it != root.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() != kSchemaVersion) {
      schema_error("v", "unsupported schema version");
    }
  }
  if (const auto it = root.find("source"); it != root.end()) {
    if (!it->is_string()) schema_error("source", "expected a string");
    const auto f = parse_format_name(it->get<std::string>());
    if (!f) schema_error("source", "unknown format name");
    doc.source_format = *f;
  }
  if (const auto it = root.find("page"); it != root.end() && !it->is_null()) {
    if (!it->is_object()) schema_error("page", "expected an object or null");
    if (!it->contains("width")) schema_error("page.width", "missing");
    if (!it->contains("height")) schema_error("page.height", "missing");
    doc.page = PageSize{get_extent((*it)["width"], "page.width"),
                        get_extent((*it)["height"], "page.height")};
  }

  const auto words = root.find("words");
  if (words == root.end()) schema_error("words", "missing");
  if (!words->is_array()) schema_error("words", "expected an array");

  std::optional<std::int64_t> last_order;
  for (std::size_t i = 0; i < words->size(); ++i) {
    const json& w = (*words)[i];
    const std::string at = "words[" + std::to_string(i) + "]";
    if (!w.is_object()) schema_error(at, "expected an object");

    const auto t = w.find("text");
    if (t == w.end()) schema_error(at + ".text", "missing");
    if (!t->is_string()) schema_error(at + ".text", "expected a string");

    const auto b = w.find("box");
    if (b == w.end()) schema_error(at + ".box", "missing");
    if (!b->is_array() || b->size() != 4) schema_error(at + ".box", "expected [left, top, width, height]");

    OcrWord word;
    word.box = BoundingBox{get_i32((*b)[0], at + ".box[0]"), get_i32((*b)[1], at + ".box[1]"),
                           get_extent((*b)[2], at + ".box[2]"), get_extent((*b)[3], at + ".box[3]")};

    if (const auto c = w.find("conf"); c != w.end() && !c->is_null()) {
      if (!c->is_number()) schema_error(at + ".conf", "expected a number");
      const double v = c->get<double>();
      if (!std::isfinite(v) || v < 0.0 || v > 100.0) schema_error(at + ".conf", "outside [0, 100]");
      word.confidence = v;
    }

    std::int64_t order = last_order ? *last_order + 1 : 0;
    if (const auto o = w.find("order"); o != w.end()) {
      if (!o->is_number_integer()) schema_error(at + ".order", "expected an integer");
      if (o->is_number_unsigned() && o->get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        schema_error(at + ".order", "out of range");
      }
      order = o->get<std::int64_t>();
      if (last_order && order <= *last_order) schema_error(at + ".order", "must be strictly increasing");
    }
    last_order = order;

    word.text = detail::sanitize_utf8(unicode::trim_utf8(t->get<std::string>()));
    if (word.text.empty()) {
      detail::warn(warnings, "canonical JSON: " + at + " has empty text; dropped");
      continue;
    }
    word.order_index = order;
    doc.words.push_back(std::move(word));
  }
  return doc;
}

std::string serialize_canonical_json(const DocumentOcr& doc) {
  ordered_json root;
  root["v"] = kSchemaVersion;
  root["source"] = format_name(doc.source_format);
  if (doc.page) {
    root["page"] = ordered_json{{"width", doc.page->width}, {"height", doc.page->height}};
  } else {
    root["page"] = nullptr;
  }
  ordered_json words = ordered_json::array();
  for (const OcrWord& w : doc.words) {
    ordered_json o;
    o["text"] = w.text;
    o["box"] = {w.box.left, w.box.top, w.box.width, w.box.height};
    if (w.confidence) o["conf"] = *w.confidence;
    o["order"] = w.order_index;
    words.push_back(std::move(o));
  }
  root["words"] = std::move(words);
  return root.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

}  // namespace wordvis
