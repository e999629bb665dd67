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

// Pixel kernels behind colorize(). Every variant must produce byte-identical
// output to the scalar reference; the SIMD paths only change throughput.
//
// Blend: out = floor(alpha * c + (1 - alpha) * o + 0.5) in float32, evaluated
// as (a*c) + ((1-a)*o) without fused multiply-add so that all variants round
// identically.
//
// Ink: a pixel is ink when round(0.299 r + 0.587 g + 0.114 b) < threshold,
// evaluated exactly as 299 r + 587 g + 114 b + 500 < 1000 * threshold.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wordvis::kernels {

struct Rgb {
  std::uint8_t r, g, b;
};

struct KernelSet {
  std::string_view name;

  /// Sets `count` RGB pixels to `color`.
  void (*fill)(std::uint8_t* px, std::size_t count, Rgb color);

  /// Blends `color` over `count` RGB pixels.
  void (*blend)(std::uint8_t* px, std::size_t count, Rgb color, float alpha);

  /// mask[i] = 0xFF when pixel i is ink, else 0.
  void (*ink_mask)(const std::uint8_t* px, std::size_t count, int threshold, std::uint8_t* mask);

  /// Blends `color` over the pixels whose mask byte is non-zero.
  void (*blend_masked)(std::uint8_t* px, std::size_t count, const std::uint8_t* mask, Rgb color,
                       float alpha);
};

const KernelSet& scalar_kernels();

/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

/// Best available set. Setting WORDVIS_SIMD=scalar forces the reference path.
const KernelSet& active_kernels();

/// Exact integer Rec.601 luma, round-half-up.
inline constexpr int luminance(int r, int g, int b) {
  return (299 * r + 587 * g + 114 * b + 500) / 1000;
}

inline constexpr bool is_ink(int r, int g, int b, int threshold) {
  return 299 * r + 587 * g + 114 * b + 500 < 1000 * threshold;
}

}  // namespace wordvis::kernels
