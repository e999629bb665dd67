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
#include "wordvis/ocr.hpp"

namespace wordvis {
namespace {

using testing::data_dir;
using testing::read_file;

OcrWord word(std::string text, BoundingBox box, std::optional<double> conf, std::int64_t order) {
  return OcrWord{std::move(text), box, conf, order};
}

bool mentions(const Warnings& ws, std::string_view needle) {
  for (const auto& w : ws) {
    if (w.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(Hocr, SampleFixture) {
  Warnings warnings;
  const DocumentOcr doc = parse_hocr(read_file(data_dir() / "sample.hocr"), &warnings);
  EXPECT_EQ(doc.source_format, OcrFormat::Hocr);
  ASSERT_TRUE(doc.page);
  EXPECT_EQ(*doc.page, (PageSize{200, 120}));
  const std::vector<OcrWord> expected = {
      word("deep", {10, 20, 40, 20}, 91, 0),
      word("Learning", {60, 20, 40, 20}, 87, 1),
      word("&co", {110, 20, 40, 20}, 42, 2),
      word("flipped", {80, 45, 0, 15}, 66, 3),
      word("1995,", {120, 45, 70, 15}, std::nullopt, 4),
  };
  EXPECT_EQ(doc.words, expected);
  EXPECT_TRUE(mentions(warnings, "word_1_5"));
  EXPECT_TRUE(mentions(warnings, "word_1_6"));
  EXPECT_TRUE(mentions(warnings, "page"));
}

TEST(Hocr, CornerBoxBecomesWidthHeight) {
  const auto doc = parse_hocr(
      "<html><body><div class='ocr_page' title='bbox 0 0 100 100'>"
      "<span class='ocrx_word' title='bbox 10 20 50 40'>x</span></div></body></html>");
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0].box, (BoundingBox{10, 20, 40, 20}));
  EXPECT_FALSE(doc.words[0].confidence);
}

TEST(Hocr, WordsOutsideAPageAreStillRead) {
  const auto doc = parse_hocr("<body><span class='ocrx_word' title='bbox 1 2 3 4'>hi</span></body>");
  EXPECT_FALSE(doc.page);
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0].text, "hi");
}

TEST(Hocr, MultipleClassesAndNestedText) {
  const auto doc = parse_hocr(
      "<div class=\"ocr_page\" title=\"bbox 0 0 9 9\"><span class=\"foo ocrx_word\" "
      "title=\"bbox 0 0 5 5;x_wconf 12\">a<em>b</em>c</span></div>");
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0].text, "abc");
  EXPECT_EQ(doc.words[0].confidence, 12.0);
}

TEST(Hocr, OutOfRangeConfidenceIsDroppedWithWarning) {
  Warnings w;
  const auto doc = parse_hocr("<span class='ocrx_word' title='bbox 0 0 5 5; x_wconf 140'>a</span>", &w);
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_FALSE(doc.words[0].confidence);
  EXPECT_FALSE(w.empty());
}

TEST(Hocr, MalformedMarkupThrowsWithPosition) {
  try {
    parse_hocr("<html>\n<body>\n<span class='ocrx_word' title='bbox 0 0 1 1'>a</div>\n</html>");
    FAIL() << "expected OcrParseError";
  } catch (const OcrParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(parse_hocr("<html><body>"), OcrParseError);
  EXPECT_THROW(parse_hocr("<html><!-- never closed"), OcrParseError);
  EXPECT_THROW(parse_hocr("<span title='unterminated>x</span>"), OcrParseError);
}

TEST(Hocr, InvalidUtf8InTextIsReplaced) {
  const auto doc = parse_hocr("<span class='ocrx_word' title='bbox 0 0 1 1'>a\xFF</span>");
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0].text, "a\xEF\xBF\xBD");
}

TEST(Tsv, SampleFixture) {
  Warnings warnings;
  const DocumentOcr doc = parse_tesseract_tsv(read_file(data_dir() / "sample.tsv"), &warnings);
  EXPECT_EQ(doc.source_format, OcrFormat::TesseractTsv);
  ASSERT_TRUE(doc.page);
  EXPECT_EQ(*doc.page, (PageSize{200, 120}));
  const std::vector<OcrWord> expected = {
      word("deep", {10, 20, 40, 20}, 96.5, 0),
      word("Learning", {60, 20, 40, 20}, std::nullopt, 1),
      word("1995,", {120, 45, 70, 15}, 88.25, 2),
  };
  EXPECT_EQ(doc.words, expected);
}

TEST(Tsv, MissingHeader) {
  EXPECT_THROW(parse_tesseract_tsv("5\t1\t1\t1\t1\t1\t0\t0\t1\t1\t90\tx\n"), OcrParseError);
  EXPECT_THROW(parse_tesseract_tsv(""), OcrParseError);
}

TEST(Tsv, BadRowsNameTheRow) {
  const std::string header =
      "level\tpage_num\tblock_num\tpar_num\tline_num\tword_num\tleft\ttop\twidth\theight\tconf\ttext\n";
  try {
    parse_tesseract_tsv(header + "5\t1\t1\t1\t1\t1\t0\tzero\t1\t1\t90\tx\n");
    FAIL();
  } catch (const OcrParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_tesseract_tsv(header + "5\t1\t1\t1\t1\t1\t0\t0\t1\t1\t90\n"), OcrParseError);
  EXPECT_THROW(parse_tesseract_tsv(header + "5\t1\t1\t1\t1\t1\t0\t0\t1\t1\tnan?\tx\n"), OcrParseError);
}

TEST(Tsv, CrlfAndNoTrailingNewline) {
  const std::string text =
      "level\tpage_num\tblock_num\tpar_num\tline_num\tword_num\tleft\ttop\twidth\theight\tconf\ttext\r\n"
      "5\t1\t1\t1\t1\t1\t3\t4\t5\t6\t50\tword";
  const auto doc = parse_tesseract_tsv(text);
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0], word("word", {3, 4, 5, 6}, 50, 0));
  EXPECT_FALSE(doc.page);
}

TEST(CanonicalJson, SampleFixture) {
  const DocumentOcr doc = parse_canonical_json(read_file(data_dir() / "sample.json"));
  ASSERT_TRUE(doc.page);
  EXPECT_EQ(*doc.page, (PageSize{200, 120}));
  const std::vector<OcrWord> expected = {
      word("deep", {10, 20, 40, 20}, 91, 0),
      word("Learning", {60, 20, 40, 20}, std::nullopt, 1),
      word("1995,", {120, 45, 70, 15}, 66.5, 2),
  };
  EXPECT_EQ(doc.words, expected);
}

TEST(CanonicalJson, SchemaErrorsCarryPath) {
  try {
    parse_canonical_json(R"({"v":1,"words":[{"text":"a","box":[0,0,-1,1]}]})");
    FAIL();
  } catch (const OcrParseError& e) {
    EXPECT_EQ(e.path(), "words[0].box[2]");
  }
  EXPECT_THROW(parse_canonical_json(R"({"v":2,"words":[]})"), OcrParseError);
  EXPECT_THROW(parse_canonical_json(R"({"words":[{"text":"a","box":[0,0,1]}]})"), OcrParseError);
  EXPECT_THROW(parse_canonical_json(R"({"words":[{"text":"a","box":[0,0,1,1],"conf":101}]})"),
               OcrParseError);
  EXPECT_THROW(parse_canonical_json(
                   R"({"words":[{"text":"a","box":[0,0,1,1],"order":3},{"text":"b","box":[0,0,1,1],"order":3}]})"),
               OcrParseError);
  EXPECT_THROW(parse_canonical_json("[1,2"), OcrParseError);
  EXPECT_THROW(parse_canonical_json(R"({"words":[{"text":"a","box":[0,0,1,1],"conf":41e4001}]})"), OcrParseError);
  EXPECT_THROW(parse_canonical_json("[]"), OcrParseError);
}

TEST(CanonicalJson, RoundTripsParsedFixtures) {
  for (const auto& [file, format] : {std::pair{"sample.hocr", OcrFormat::Hocr},
                                     std::pair{"sample.tsv", OcrFormat::TesseractTsv},
                                     std::pair{"sample.json", OcrFormat::CanonicalJson}}) {
    const DocumentOcr doc = parse_ocr(read_file(data_dir() / file), format);
    const std::string json = serialize_canonical_json(doc);
    EXPECT_EQ(parse_canonical_json(json), doc) << file;
    EXPECT_EQ(serialize_canonical_json(parse_canonical_json(json)), json) << file;
  }
}

TEST(CanonicalJson, RoundTripsRandomDocuments) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int32_t> coord(INT32_MIN, INT32_MAX);
  std::uniform_int_distribution<std::int32_t> extent(0, INT32_MAX);
  std::uniform_real_distribution<double> conf(0.0, 100.0);
  for (int n = 0; n < 200; ++n) {
    DocumentOcr doc;
    doc.source_format = static_cast<OcrFormat>(n % 3);
    if (n % 4 != 0) doc.page = PageSize{extent(rng), extent(rng)};
    std::int64_t order = -5;
    for (int i = 0; i < n % 9; ++i) {
      order += 1 + static_cast<std::int64_t>(rng() % 1000);
      std::string text = "w" + std::to_string(rng() % 100000) + (i % 2 ? "é\"\\" : "");
      std::optional<double> c;
      if (rng() % 3) c = conf(rng);
      doc.words.push_back(word(text, {coord(rng), coord(rng), extent(rng), extent(rng)}, c, order));
    }
    EXPECT_EQ(parse_canonical_json(serialize_canonical_json(doc)), doc);
  }
}

TEST(OcrFormatNames, RoundTrip) {
  for (OcrFormat f : {OcrFormat::Hocr, OcrFormat::TesseractTsv, OcrFormat::CanonicalJson}) {
    EXPECT_EQ(parse_format_name(format_name(f)), f);
  }
  EXPECT_EQ(format_extension(OcrFormat::Hocr), ".hocr");
  EXPECT_FALSE(parse_format_name("xml"));
}

}  // namespace
}  // namespace wordvis
