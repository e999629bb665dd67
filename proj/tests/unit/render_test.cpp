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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wordvis/kernels.hpp"
#include "wordvis/render.hpp"

namespace wordvis {
namespace {

DocumentOcr single_word(std::string text, BoundingBox box, std::optional<double> conf = std::nullopt) {
  DocumentOcr doc;
  doc.words.push_back(OcrWord{std::move(text), box, conf, 0});
  return doc;
}

std::array<std::uint8_t, 3> pixel(const RasterImage& img, int x, int y) {
  const std::uint8_t* p = img.at(x, y);
  return {p[0], p[1], p[2]};
}

using Px = std::array<std::uint8_t, 3>;

TEST(Luminance, RoundedIntegerWeights) {
  EXPECT_EQ(luminance(52, 28, 0), 32);
  EXPECT_EQ(luminance(255, 255, 255), 255);
  EXPECT_EQ(luminance(0, 0, 0), 0);
  EXPECT_EQ(luminance(0, 0, 255), 29);  // 29.07
  EXPECT_EQ(luminance(255, 0, 0), 76);  // 76.245
  EXPECT_TRUE(kernels::is_ink(0, 0, 0, 1));
  EXPECT_FALSE(kernels::is_ink(0, 0, 0, 0));
  EXPECT_TRUE(kernels::is_ink(127, 127, 127, 128));
  EXPECT_FALSE(kernels::is_ink(128, 128, 128, 128));
}

TEST(ClipBox, CornersAndDisjoint) {
  EXPECT_EQ(clip_box({-5, -5, 10, 10}, 100, 100), (BoundingBox{0, 0, 5, 5}));
  EXPECT_EQ(clip_box({95, 98, 10, 10}, 100, 100), (BoundingBox{95, 98, 5, 2}));
  EXPECT_TRUE(clip_box({200, 200, 10, 10}, 100, 100).empty());
  EXPECT_TRUE(clip_box({-50, 0, 10, 10}, 100, 100).empty());
  EXPECT_EQ(clip_box({INT32_MAX, INT32_MIN, INT32_MAX, INT32_MAX}, 100, 100).width, 0);
  EXPECT_EQ(clip_box({INT32_MIN, INT32_MIN, INT32_MAX, INT32_MAX}, 100, 100), (BoundingBox{0, 0, 0, 0}));
}

TEST(ClipBox, ResultAlwaysInsideFrame) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int32_t> any(INT32_MIN, INT32_MAX);
  std::uniform_int_distribution<std::int32_t> dim(1, 5000);
  for (int i = 0; i < 100000; ++i) {
    const std::int32_t w = dim(rng), h = dim(rng);
    const BoundingBox in{any(rng), any(rng), any(rng), any(rng)};
    const BoundingBox c = clip_box(in, w, h);
    ASSERT_GE(c.left, 0);
    ASSERT_GE(c.top, 0);
    ASSERT_GE(c.width, 0);
    ASSERT_GE(c.height, 0);
    ASSERT_LE(std::int64_t{c.left} + c.width, w);
    ASSERT_LE(std::int64_t{c.top} + c.height, h);
  }
}

TEST(Colorize, SolidBoxPaintsExactlyTheBox) {
  const RasterImage page(20, 10);
  const auto doc = single_word("deep", {2, 3, 4, 2});
  const auto [img, report] = colorize(page, doc, build_worked_example_table(), RenderConfig{});
  EXPECT_EQ(report.painted, 1u);
  EXPECT_EQ(report.clipped, 0u);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 20; ++x) {
      const bool inside = x >= 2 && x < 6 && y >= 3 && y < 5;
      EXPECT_EQ(pixel(img, x, y), (inside ? Px{52, 28, 0} : Px{255, 255, 255})) << x << "," << y;
    }
  }
}

TEST(Colorize, HalfAlphaOnWhite) {
  const RasterImage page(4, 4);
  RenderConfig cfg;
  cfg.alpha = 0.5;
  const auto r = colorize(page, single_word("deep", {0, 0, 1, 1}), build_worked_example_table(), cfg);
  // floor(0.5 * 52 + 0.5 * 255 + 0.5) = 154, floor(0.5 * 28 + 127.5 + 0.5) = 142
  EXPECT_EQ(pixel(r.image, 0, 0), (Px{154, 142, 128}));
}

TEST(Colorize, AlphaZeroIsIdentity) {
  const auto doc = testing::make_document(3);
  RenderConfig cfg;
  cfg.alpha = 0.0;
  for (FillMode m : {FillMode::SolidBox, FillMode::GlyphMask}) {
    cfg.fill_mode = m;
    const auto r = colorize(doc.image, doc.ocr, build_default_table(), cfg);
    EXPECT_EQ(r.image, doc.image);
  }
}

TEST(Colorize, OpaqueSolidIsIdempotent) {
  const auto doc = testing::make_document(4);
  const auto once = colorize(doc.image, doc.ocr, build_default_table(), RenderConfig{});
  const auto twice = colorize(once.image, doc.ocr, build_default_table(), RenderConfig{});
  EXPECT_EQ(once.image, twice.image);
}

TEST(Colorize, GlyphMaskOnlyTouchesInk) {
  RasterImage page(6, 1);
  page.at(1, 0)[0] = page.at(1, 0)[1] = page.at(1, 0)[2] = 0;
  page.at(4, 0)[0] = page.at(4, 0)[1] = page.at(4, 0)[2] = 100;
  RenderConfig cfg;
  cfg.fill_mode = FillMode::GlyphMask;
  const auto r = colorize(page, single_word("a", {0, 0, 5, 1}), build_default_table(), cfg);
  EXPECT_EQ(pixel(r.image, 0, 0), (Px{255, 255, 255}));
  EXPECT_EQ(pixel(r.image, 1, 0), (Px{1, 0, 0}));
  EXPECT_EQ(pixel(r.image, 4, 0), (Px{1, 0, 0}));
  EXPECT_EQ(pixel(r.image, 5, 0), (Px{255, 255, 255}));
}

TEST(Colorize, LaterWordsPaintOverEarlierOnes) {
  DocumentOcr doc;
  doc.words.push_back(OcrWord{"b", {0, 0, 2, 1}, std::nullopt, 7});
  doc.words.push_back(OcrWord{"a", {0, 0, 2, 1}, std::nullopt, 3});
  const auto r = colorize(RasterImage(2, 1), doc, build_default_table(), RenderConfig{});
  EXPECT_EQ(pixel(r.image, 0, 0), (Px{2, 0, 0}));  // "b" has the higher order index
}

TEST(Colorize, ConfidenceThreshold) {
  DocumentOcr doc;
  doc.words.push_back(OcrWord{"a", {0, 0, 1, 1}, 10.0, 0});
  doc.words.push_back(OcrWord{"b", {1, 0, 1, 1}, 60.0, 1});
  doc.words.push_back(OcrWord{"c", {2, 0, 1, 1}, std::nullopt, 2});
  RenderConfig cfg;
  cfg.min_confidence = 50;
  const auto r = colorize(RasterImage(3, 1), doc, build_default_table(), cfg);
  EXPECT_EQ(r.report.painted, 2u);
  EXPECT_EQ(r.report.skipped_low_confidence, 1u);
  EXPECT_EQ(pixel(r.image, 0, 0), (Px{255, 255, 255}));
  EXPECT_EQ(pixel(r.image, 1, 0), (Px{2, 0, 0}));
  EXPECT_EQ(pixel(r.image, 2, 0), (Px{3, 0, 0}));
}

TEST(Colorize, ClippingAndEmptyBoxesAreCounted) {
  DocumentOcr doc;
  doc.words.push_back(OcrWord{"a", {-2, -2, 4, 4}, std::nullopt, 0});
  doc.words.push_back(OcrWord{"b", {50, 50, 4, 4}, std::nullopt, 1});
  doc.words.push_back(OcrWord{"c", {1, 1, 0, 3}, std::nullopt, 2});
  const auto r = colorize(RasterImage(5, 5), doc, build_default_table(), RenderConfig{});
  EXPECT_EQ(r.report.painted, 1u);
  EXPECT_EQ(r.report.clipped, 1u);
  EXPECT_EQ(r.report.skipped_empty, 2u);
  EXPECT_EQ(pixel(r.image, 1, 1), (Px{1, 0, 0}));
  EXPECT_EQ(pixel(r.image, 2, 2), (Px{255, 255, 255}));
}

TEST(Colorize, RejectsBadInputs) {
  const DocumentOcr doc = single_word("a", {0, 0, 1, 1});
  EXPECT_THROW(colorize(RasterImage(), doc, build_default_table(), {}), RenderError);
  DocumentOcr sized = doc;
  sized.page = PageSize{10, 10};
  EXPECT_THROW(colorize(RasterImage(5, 5), sized, build_default_table(), {}), RenderError);
  sized.page = PageSize{0, 0};
  EXPECT_NO_THROW(colorize(RasterImage(5, 5), sized, build_default_table(), {}));
  RenderConfig bad;
  bad.alpha = 1.5;
  EXPECT_THROW(colorize(RasterImage(5, 5), doc, build_default_table(), bad), std::invalid_argument);
  bad = {};
  bad.glyph_threshold = 256;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = {};
  bad.min_confidence = -1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Colorize, DiffSetEqualsClippedBoxUnion) {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const auto doc = testing::make_document(seed);
    const auto r = colorize(doc.image, doc.ocr, build_default_table(), RenderConfig{});
    std::vector<bool> covered(static_cast<std::size_t>(doc.image.width()) * doc.image.height());
    for (const auto& w : doc.ocr.words) {
      const auto b = clip_box(w.box, doc.image.width(), doc.image.height());
      for (int y = b.top; y < b.top + b.height; ++y)
        for (int x = b.left; x < b.left + b.width; ++x) covered[static_cast<std::size_t>(y) * doc.image.width() + x] = true;
    }
    for (int y = 0; y < doc.image.height(); ++y) {
      for (int x = 0; x < doc.image.width(); ++x) {
        const bool changed = pixel(r.image, x, y) != pixel(doc.image, x, y);
        ASSERT_EQ(changed, covered[static_cast<std::size_t>(y) * doc.image.width() + x])
            << "seed " << seed << " at " << x << "," << y;
      }
    }
  }
}

TEST(FillModeNames, RoundTrip) {
  EXPECT_EQ(parse_fill_mode("solid"), FillMode::SolidBox);
  EXPECT_EQ(parse_fill_mode("glyph"), FillMode::GlyphMask);
  EXPECT_EQ(fill_mode_name(FillMode::GlyphMask), "glyph");
  EXPECT_FALSE(parse_fill_mode("box"));
}

TEST(Raster, PngRoundTripAndBadBuffer) {
  const auto doc = testing::make_document(9, 33, 17, 3);
  testing::TempDir dir;
  write_image(dir / "x.png", doc.image);
  EXPECT_EQ(read_image(dir / "x.png"), doc.image);
  EXPECT_THROW(RasterImage(2, 2, std::vector<std::uint8_t>(5)), std::invalid_argument);
  EXPECT_THROW(read_image(dir / "missing.png"), std::runtime_error);
  testing::write_file(dir / "junk.png", "not an image");
  EXPECT_THROW(read_image(dir / "junk.png"), std::runtime_error);
}

TEST(Raster, JpegDecodesToSameSize) {
  const auto doc = testing::make_document(10, 40, 30, 3);
  testing::TempDir dir;
  write_image(dir / "x.jpg", doc.image, ImageEncoding::Jpeg);
  const RasterImage back = read_image(dir / "x.jpg");
  EXPECT_EQ(back.width(), 40);
  EXPECT_EQ(back.height(), 30);
}

}  // namespace
}  // namespace wordvis
