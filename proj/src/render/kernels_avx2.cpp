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

#include "wordvis/kernels.hpp"

#if defined(WORDVIS_HAVE_AVX2)

#include <immintrin.h>

#include <cstring>

#define WORDVIS_AVX2 __attribute__((target("avx2")))

namespace wordvis::kernels {

namespace {

// Eight interleaved channel bytes <-> eight floats.
WORDVIS_AVX2 inline __m256 load8_ps(const std::uint8_t* p) {
  return _mm256_cvtepi32_ps(_mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(p))));
}

WORDVIS_AVX2 inline __m128i pack8_epu8(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i words = _mm_packus_epi32(lo, hi);
  return _mm_packus_epi16(words, words);
}

// Blended bytes for eight channel values; `weighted` holds alpha * color for
// the matching channel positions.
WORDVIS_AVX2 inline __m128i blend8(const std::uint8_t* p, __m256 weighted, __m256 keep) {
  const __m256 half = _mm256_set1_ps(0.5f);
  const __m256 orig = load8_ps(p);
  const __m256 v = _mm256_add_ps(_mm256_add_ps(weighted, _mm256_mul_ps(keep, orig)), half);
  return pack8_epu8(_mm256_cvttps_epi32(_mm256_floor_ps(v)));
}

// 24 floats: alpha * color repeated with period 3 (eight RGB pixels).
struct WeightedPattern {
  __m256 v[3];
};

WORDVIS_AVX2 inline WeightedPattern weighted_pattern(Rgb color, float alpha) {
  const float w[3] = {alpha * static_cast<float>(color.r), alpha * static_cast<float>(color.g),
                      alpha * static_cast<float>(color.b)};
  alignas(32) float buf[24];
  for (int i = 0; i < 24; ++i) buf[i] = w[i % 3];
  return {{_mm256_load_ps(buf), _mm256_load_ps(buf + 8), _mm256_load_ps(buf + 16)}};
}

WORDVIS_AVX2 void fill_avx2(std::uint8_t* px, std::size_t count, Rgb color) {
  // 96 bytes = 32 pixels = three 32-byte stores.
  alignas(32) std::uint8_t pattern[96];
  for (int i = 0; i < 96; i += 3) {
    pattern[i] = color.r;
    pattern[i + 1] = color.g;
    pattern[i + 2] = color.b;
  }
  const __m256i p0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern));
  const __m256i p1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 32));
  const __m256i p2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 64));
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32, px += 96) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(px), p0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(px + 32), p1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(px + 64), p2);
  }
  scalar_kernels().fill(px, count - i, color);
}

WORDVIS_AVX2 void blend_avx2(std::uint8_t* px, std::size_t count, Rgb color, float alpha) {
  const WeightedPattern w = weighted_pattern(color, alpha);
  const __m256 keep = _mm256_set1_ps(1.0f - alpha);
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8, px += 24) {
    for (int k = 0; k < 3; ++k) {
      _mm_storel_epi64(reinterpret_cast<__m128i*>(px + 8 * k), blend8(px + 8 * k, w.v[k], keep));
    }
  }
  scalar_kernels().blend(px, count - i, color, alpha);
}

WORDVIS_AVX2 void ink_mask_avx2(const std::uint8_t* px, std::size_t count, int threshold,
                                std::uint8_t* mask) {
  const __m256i offsets = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
  const __m256i byte = _mm256_set1_epi32(0xFF);
  const __m256i wr = _mm256_set1_epi32(299);
  const __m256i wg = _mm256_set1_epi32(587);
  const __m256i wb = _mm256_set1_epi32(114);
  const __m256i bias = _mm256_set1_epi32(500);
  const __m256i limit = _mm256_set1_epi32(1000 * threshold);
  std::size_t i = 0;
  // Each gather lane reads four bytes, one past its pixel, so keep a pixel
  // of slack after the chunk.
  for (; i + 9 <= count; i += 8, px += 24, mask += 8) {
    const __m256i raw = _mm256_i32gather_epi32(reinterpret_cast<const int*>(px), offsets, 1);
    const __m256i r = _mm256_and_si256(raw, byte);
    const __m256i g = _mm256_and_si256(_mm256_srli_epi32(raw, 8), byte);
    const __m256i b = _mm256_and_si256(_mm256_srli_epi32(raw, 16), byte);
    __m256i n = _mm256_add_epi32(_mm256_mullo_epi32(r, wr), _mm256_mullo_epi32(g, wg));
    n = _mm256_add_epi32(_mm256_add_epi32(n, _mm256_mullo_epi32(b, wb)), bias);
    const __m256i ink = _mm256_cmpgt_epi32(limit, n);
    const __m128i words = _mm_packs_epi32(_mm256_castsi256_si128(ink), _mm256_extracti128_si256(ink, 1));
    _mm_storel_epi64(reinterpret_cast<__m128i*>(mask), _mm_packs_epi16(words, words));
  }
  scalar_kernels().ink_mask(px, count - i, threshold, mask);
}

WORDVIS_AVX2 void blend_masked_avx2(std::uint8_t* px, std::size_t count, const std::uint8_t* mask,
                                    Rgb color, float alpha) {
  const WeightedPattern w = weighted_pattern(color, alpha);
  const __m256 keep = _mm256_set1_ps(1.0f - alpha);
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8, px += 24, mask += 8) {
    std::uint64_t pixel_bits = 0;
    std::memcpy(&pixel_bits, mask, 8);
    if (pixel_bits == 0) continue;
    alignas(16) std::uint8_t byte_mask[24];
    for (int j = 0; j < 24; ++j) byte_mask[j] = mask[j / 3] != 0 ? 0xFF : 0x00;
    for (int k = 0; k < 3; ++k) {
      const __m128i orig = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(px + 8 * k));
      const __m128i sel = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(byte_mask + 8 * k));
      const __m128i mixed = _mm_blendv_epi8(orig, blend8(px + 8 * k, w.v[k], keep), sel);
      _mm_storel_epi64(reinterpret_cast<__m128i*>(px + 8 * k), mixed);
    }
  }
  scalar_kernels().blend_masked(px, count - i, mask, color, alpha);
}

constexpr KernelSet kAvx2{"avx2", fill_avx2, blend_avx2, ink_mask_avx2, blend_masked_avx2};

}  // namespace

const KernelSet* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace wordvis::kernels

#else

namespace wordvis::kernels {

const KernelSet* avx2_kernels() { return nullptr; }

}  // namespace wordvis::kernels

#endif
