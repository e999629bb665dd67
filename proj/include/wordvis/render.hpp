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
#include <string_view>

#include "wordvis/kernels.hpp"
#include "wordvis/ocr.hpp"
#include "wordvis/raster.hpp"
#include "wordvis/scoring.hpp"

namespace wordvis {

enum class FillMode { SolidBox, GlyphMask };

std::string_view fill_mode_name(FillMode m);  // "solid" | "glyph"
std::optional<FillMode> parse_fill_mode(std::string_view name);

struct RenderConfig {
  FillMode fill_mode = FillMode::SolidBox;
  double alpha = 1.0;          // [0, 1]; 1 paints the word color opaquely
  int glyph_threshold = 128;   // [0, 255]; GlyphMask only
  double min_confidence = 0.0; // [0, 100]; words without a confidence always pass

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct RenderReport {
  std::size_t painted = 0;
  std::size_t skipped_low_confidence = 0;
  std::size_t skipped_empty = 0;  // zero extent after clipping
  std::size_t clipped = 0;        // boxes that crossed the image frame

  std::size_t skipped() const { return skipped_low_confidence + skipped_empty; }
};

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intersection of `box` with [0, width) x [0, height); a disjoint box comes
/// back with zero width or height.
BoundingBox clip_box(const BoundingBox& box, std::int32_t width, std::int32_t height);

/// round(0.299 r + 0.587 g + 0.114 b), computed exactly in integers.
inline int luminance(int r, int g, int b) { return kernels::luminance(r, g, b); }

struct ColorizeResult {
  RasterImage image;
  RenderReport report;
};

/// Paints every word's color over its clipped box (SolidBox) or over the
/// ink pixels inside it (GlyphMask), in order_index order. Pixels outside
/// the painted regions are left untouched. Throws RenderError on an empty
/// image or when the document declares a page size different from the
/// image, and std::invalid_argument on a bad config.
ColorizeResult colorize(const RasterImage& image, const DocumentOcr& doc, const ScoreTable& table,
                        const RenderConfig& config,
                        const kernels::KernelSet& kernels = kernels::active_kernels());

}  // namespace wordvis
