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

#include "wordvis/kernels.hpp"

namespace wordvis::kernels {

namespace {

void fill_scalar(std::uint8_t* px, std::size_t count, Rgb color) {
  for (std::size_t i = 0; i < count; ++i, px += 3) {
    px[0] = color.r;
    px[1] = color.g;
    px[2] = color.b;
  }
}

inline std::uint8_t blend_one(float weighted_color, float keep, std::uint8_t original) {
  const float v = std::floor(weighted_color + keep * static_cast<float>(original) + 0.5f);
  return static_cast<std::uint8_t>(v < 0.0f ? 0.0f : (v > 255.0f ? 255.0f : v));
}

void blend_scalar(std::uint8_t* px, std::size_t count, Rgb color, float alpha) {
  const float keep = 1.0f - alpha;
  const float wr = alpha * static_cast<float>(color.r);
  const float wg = alpha * static_cast<float>(color.g);
  const float wb = alpha * static_cast<float>(color.b);
  for (std::size_t i = 0; i < count; ++i, px += 3) {
    px[0] = blend_one(wr, keep, px[0]);
    px[1] = blend_one(wg, keep, px[1]);
    px[2] = blend_one(wb, keep, px[2]);
  }
}

void ink_mask_scalar(const std::uint8_t* px, std::size_t count, int threshold, std::uint8_t* mask) {
  for (std::size_t i = 0; i < count; ++i, px += 3) {
    mask[i] = is_ink(px[0], px[1], px[2], threshold) ? 0xFF : 0x00;
  }
}

void blend_masked_scalar(std::uint8_t* px, std::size_t count, const std::uint8_t* mask, Rgb color,
                         float alpha) {
  const float keep = 1.0f - alpha;
  const float wr = alpha * static_cast<float>(color.r);
  const float wg = alpha * static_cast<float>(color.g);
  const float wb = alpha * static_cast<float>(color.b);
  for (std::size_t i = 0; i < count; ++i, px += 3) {
    if (mask[i] == 0) continue;
    px[0] = blend_one(wr, keep, px[0]);
    px[1] = blend_one(wg, keep, px[1]);
    px[2] = blend_one(wb, keep, px[2]);
  }
}

constexpr KernelSet kScalar{"scalar", fill_scalar, blend_scalar, ink_mask_scalar, blend_masked_scalar};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace wordvis::kernels
