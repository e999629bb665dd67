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

#include "wordvis/render.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wordvis {

std::string_view fill_mode_name(FillMode m) {
  return m == FillMode::SolidBox ? "solid" : "glyph";
}

std::optional<FillMode> parse_fill_mode(std::string_view name) {
  if (name == "solid") return FillMode::SolidBox;
  if (name == "glyph") return FillMode::GlyphMask;
  return std::nullopt;
}

void RenderConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (glyph_threshold < 0 || glyph_threshold > 255) {
    throw std::invalid_argument("glyph threshold must lie in [0, 255]");
  }
  if (!(min_confidence >= 0.0 && min_confidence <= 100.0)) {
    throw std::invalid_argument("minimum confidence must lie in [0, 100]");
  }
}

BoundingBox clip_box(const BoundingBox& box, std::int32_t width, std::int32_t height) {
  const auto clip = [](std::int64_t lo, std::int64_t extent, std::int64_t limit) {
    const std::int64_t b = std::clamp<std::int64_t>(lo, 0, limit);
    const std::int64_t e = std::clamp<std::int64_t>(lo + std::max<std::int64_t>(extent, 0), 0, limit);
    return std::pair{b, std::max<std::int64_t>(e - b, 0)};
  };
  const auto [x, w] = clip(box.left, box.width, std::max(width, 0));
  const auto [y, h] = clip(box.top, box.height, std::max(height, 0));
  return BoundingBox{static_cast<std::int32_t>(x), static_cast<std::int32_t>(y),
                     static_cast<std::int32_t>(w), static_cast<std::int32_t>(h)};
}

ColorizeResult colorize(const RasterImage& image, const DocumentOcr& doc, const ScoreTable& table,
                        const RenderConfig& config, const kernels::KernelSet& kernels) {
  config.validate();
  if (image.empty()) throw RenderError("cannot colorize a zero-dimension image");
  if (doc.page && doc.page->width > 0 && doc.page->height > 0 &&
      (doc.page->width != image.width() || doc.page->height != image.height())) {
    throw RenderError("OCR page is " + std::to_string(doc.page->width) + "x" +
                      std::to_string(doc.page->height) + " but the image is " +
                      std::to_string(image.width()) + "x" + std::to_string(image.height()));
  }

  ColorizeResult result{image, {}};
  RasterImage& out = result.image;
  RenderReport& report = result.report;

  std::vector<const OcrWord*> order;
  order.reserve(doc.words.size());
  for (const OcrWord& w : doc.words) order.push_back(&w);
  std::stable_sort(order.begin(), order.end(),
                   [](const OcrWord* a, const OcrWord* b) { return a->order_index < b->order_index; });

  const auto alpha = static_cast<float>(config.alpha);
  std::vector<std::uint8_t> mask;

  for (const OcrWord* word : order) {
    if (word->confidence && *word->confidence < config.min_confidence) {
      ++report.skipped_low_confidence;
      continue;
    }
    const BoundingBox box = clip_box(word->box, image.width(), image.height());
    if (box.empty()) {
      ++report.skipped_empty;
      continue;
    }
    if (box != word->box) ++report.clipped;
    ++report.painted;

    if (alpha == 0.0f) continue;
    const WordColor c = word_color(table, normalize_token(word->text)).color;
    const kernels::Rgb rgb{c.r, c.g, c.b};
    const auto span = static_cast<std::size_t>(box.width);

    for (std::int32_t y = box.top; y < box.top + box.height; ++y) {
      std::uint8_t* dst = out.at(box.left, y);
      if (config.fill_mode == FillMode::SolidBox) {
        if (alpha == 1.0f) {
          kernels.fill(dst, span, rgb);
        } else {
          kernels.blend(dst, span, rgb, alpha);
        }
      } else {
        // Ink is detected on the source image so earlier words cannot
        // change which pixels a later word treats as glyphs.
        mask.resize(span);
        kernels.ink_mask(image.at(box.left, y), span, config.glyph_threshold, mask.data());
        kernels.blend_masked(dst, span, mask.data(), rgb, alpha);
      }
    }
  }
  return result;
}

}  // namespace wordvis
