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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace wordvis {

/// Row-major, tightly packed 8-bit RGB.
class RasterImage {
 public:
  RasterImage() = default;
  /// Throws std::invalid_argument if either dimension is negative.
  RasterImage(std::int32_t width, std::int32_t height, std::uint8_t r = 255, std::uint8_t g = 255,
              std::uint8_t b = 255);
  /// Adopts `pixels`; throws std::invalid_argument unless its size is
  /// width * height * 3.
  RasterImage(std::int32_t width, std::int32_t height, std::vector<std::uint8_t> pixels);

  std::int32_t width() const noexcept { return width_; }
  std::int32_t height() const noexcept { return height_; }
  bool empty() const noexcept { return width_ == 0 || height_ == 0; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  std::uint8_t* row(std::int32_t y) { return pixels_.data() + static_cast<std::size_t>(y) * stride(); }
  const std::uint8_t* row(std::int32_t y) const {
    return pixels_.data() + static_cast<std::size_t>(y) * stride();
  }
  std::size_t stride() const noexcept { return static_cast<std::size_t>(width_) * 3; }

  const std::uint8_t* at(std::int32_t x, std::int32_t y) const { return row(y) + static_cast<std::size_t>(x) * 3; }
  std::uint8_t* at(std::int32_t x, std::int32_t y) { return row(y) + static_cast<std::size_t>(x) * 3; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::int32_t width_ = 0;
  std::int32_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Decodes PNG or JPEG. Grayscale, paletted and alpha inputs are promoted to
/// RGB. Throws std::runtime_error when the file cannot be decoded.
RasterImage read_image(const std::filesystem::path& path);

enum class ImageEncoding { Png, Jpeg };

std::vector<std::uint8_t> encode_image(const RasterImage& image, ImageEncoding encoding,
                                       int jpeg_quality = 95);

/// Writes through a temporary sibling file and renames it into place.
void write_image(const std::filesystem::path& path, const RasterImage& image,
                 ImageEncoding encoding = ImageEncoding::Png);

}  // namespace wordvis
