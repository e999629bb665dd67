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

#include <algorithm>
#include <cctype>

#include "wordvis/pipeline.hpp"

namespace wordvis {

namespace {

bool is_image_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

Discovery discover_pairs(const fs::path& input_root, const fs::path& ocr_root, OcrFormat format) {
  std::error_code ec;
  if (!fs::is_directory(input_root, ec)) {
    throw PipelineError("input root '" + input_root.string() + "' is not a readable directory");
  }
  if (!fs::is_directory(ocr_root, ec)) {
    throw PipelineError("OCR root '" + ocr_root.string() + "' is not a readable directory");
  }

  Discovery out;
  fs::recursive_directory_iterator it(input_root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw PipelineError("cannot read '" + input_root.string() + "': " + ec.message());

  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) throw PipelineError("cannot read '" + input_root.string() + "': " + ec.message());
    if (!it->is_regular_file(ec) || !is_image_extension(it->path())) continue;

    const fs::path rel = it->path().lexically_relative(input_root);
    fs::path ocr = ocr_root / rel;
    ocr.replace_extension(std::string(format_extension(format)));
    if (!fs::is_regular_file(ocr, ec)) {
      out.warnings.push_back("no OCR file for '" + rel.generic_string() + "' (expected '" +
                             ocr.string() + "')");
      continue;
    }
    out.pairs.push_back({it->path(), ocr, rel.generic_string()});
  }

  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const ImageOcrPair& a, const ImageOcrPair& b) { return a.relative < b.relative; });
  std::sort(out.warnings.begin(), out.warnings.end());
  return out;
}

}  // namespace wordvis
