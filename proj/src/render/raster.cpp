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

#include "wordvis/raster.hpp"

#include <fstream>
#include <stdexcept>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

namespace wordvis {

RasterImage::RasterImage(std::int32_t width, std::int32_t height, std::uint8_t r, std::uint8_t g,
                         std::uint8_t b)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) throw std::invalid_argument("image dimensions must be non-negative");
  pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = r;
    pixels_[i + 1] = g;
    pixels_[i + 2] = b;
  }
}

RasterImage::RasterImage(std::int32_t width, std::int32_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0) throw std::invalid_argument("image dimensions must be non-negative");
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3) {
    throw std::invalid_argument("pixel buffer length must equal width * height * 3");
  }
}

namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open image '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

RasterImage read_image(const std::filesystem::path& path) {
  // Decoding from memory sidesteps OpenCV's silent empty-Mat on path issues.
  const std::vector<std::uint8_t> bytes = read_bytes(path);
  if (bytes.empty()) throw std::runtime_error("image '" + path.string() + "' is empty");
  cv::Mat bgr = cv::imdecode(bytes, cv::IMREAD_COLOR | cv::IMREAD_IGNORE_ORIENTATION);
  if (bgr.empty()) throw std::runtime_error("cannot decode image '" + path.string() + "'");
  if (bgr.depth() != CV_8U) bgr.convertTo(bgr, CV_8U);

  cv::Mat rgb;
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  if (!rgb.isContinuous()) rgb = rgb.clone();
  std::vector<std::uint8_t> pixels(rgb.data, rgb.data + rgb.total() * 3);
  return RasterImage(rgb.cols, rgb.rows, std::move(pixels));
}

std::vector<std::uint8_t> encode_image(const RasterImage& image, ImageEncoding encoding,
                                       int jpeg_quality) {
  if (image.empty()) throw std::runtime_error("cannot encode an empty image");
  const cv::Mat rgb(image.height(), image.width(), CV_8UC3,
                    const_cast<std::uint8_t*>(image.pixels().data()));
  cv::Mat bgr;
  cv::cvtColor(rgb, bgr, cv::COLOR_RGB2BGR);
  std::vector<std::uint8_t> out;
  const std::vector<int> params =
      encoding == ImageEncoding::Png ? std::vector<int>{cv::IMWRITE_PNG_COMPRESSION, 6}
                                     : std::vector<int>{cv::IMWRITE_JPEG_QUALITY, jpeg_quality};
  if (!cv::imencode(encoding == ImageEncoding::Png ? ".png" : ".jpg", bgr, out, params)) {
    throw std::runtime_error("image encoding failed");
  }
  return out;
}

void write_image(const std::filesystem::path& path, const RasterImage& image, ImageEncoding encoding) {
  const std::vector<std::uint8_t> bytes = encode_image(image, encoding);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace wordvis
