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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordvis/ocr.hpp"
#include "wordvis/raster.hpp"
#include "wordvis/render.hpp"

namespace wordvis {

namespace fs = std::filesystem;

/// Fatal batch/split problems (unreadable roots, unwritable output, bad
/// split parameters). Per-document failures never raise this.
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ImageOcrPair {
  fs::path image;     // absolute or as given
  fs::path ocr;
  std::string relative;  // image path relative to the input root, '/'-separated
};

struct Discovery {
  std::vector<ImageOcrPair> pairs;  // sorted by `relative`
  Warnings warnings;                // one per unpaired image
};

/// Pairs every .png/.jpg/.jpeg (any case) under `input_root` with the file
/// at the same relative path and stem under `ocr_root` carrying the format's
/// extension.
Discovery discover_pairs(const fs::path& input_root, const fs::path& ocr_root, OcrFormat format);

struct JobSpec {
  fs::path input_root;
  fs::path ocr_root;
  fs::path output_root;
  std::string table_ref = "default-ascending";
  RenderConfig render;
  OcrFormat ocr_format = OcrFormat::Hocr;
  ImageEncoding output_encoding = ImageEncoding::Png;
  unsigned concurrency = 1;
  /// Seed for the split lists written when `emit_splits` is set.
  std::uint64_t seed = 0;
  bool emit_splits = false;
};

inline constexpr int kManifestVersion = 1;
inline constexpr std::string_view kManifestFileName = "manifest.jsonl";

struct ManifestRecord {
  std::string input;   // relative to input_root
  std::string output;  // relative to output_root
  std::string label;   // immediate parent directory name, "" at the root
  std::size_t painted = 0;
  std::size_t skipped = 0;
  std::size_t clipped = 0;
  std::string table;
  FillMode mode = FillMode::SolidBox;
  double alpha = 1.0;
  std::string digest;  // sha256 of the output file, lowercase hex

  friend bool operator==(const ManifestRecord&, const ManifestRecord&) = default;
};

struct ManifestFailure {
  std::string input;
  std::string error;

  friend bool operator==(const ManifestFailure&, const ManifestFailure&) = default;
};

struct Manifest {
  std::vector<ManifestRecord> records;  // sorted by input
  std::vector<ManifestFailure> failures;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// JSON Lines: one object per record or failure, each tagged with "v" and
/// "kind". No timestamps, so identical runs produce identical bytes.
std::string serialize_manifest(const Manifest& manifest);
Manifest parse_manifest(std::string_view text);
Manifest read_manifest(const fs::path& path);

/// Writes via a temporary sibling and rename, so readers never observe a
/// partial manifest.
void write_atomically(const fs::path& path, std::string_view contents);

struct BatchResult {
  Manifest manifest;
  Warnings warnings;
  fs::path manifest_path;

  bool partial_failure() const { return !manifest.failures.empty(); }
};

/// Colorizes every discovered pair into `output_root`, mirroring the input
/// tree, then writes `output_root/manifest.jsonl` last. Throws PipelineError
/// when a root is unusable.
BatchResult process_batch(const JobSpec& job);

/// SHA-256 of `bytes`, lowercase hex.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const fs::path& path);

enum class Split { Train, Validation, Test };

std::string_view split_name(Split s);  // "train" | "val" | "test"

struct SplitAssignment {
  std::string output;  // the record's output path
  std::string label;
  Split split = Split::Train;

  friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

struct SplitOptions {
  double train_fraction = 0.8;
  double val_fraction_of_train = 0.1;
  std::uint64_t seed = 0;
  /// Exact (train, validation, test) sizes; overrides the fractions.
  std::optional<std::array<std::size_t, 3>> counts;
  /// Apply the fraction rule within each class label separately.
  bool stratify = false;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;

  friend bool operator==(const SplitSizes&, const SplitSizes&) = default;
};

/// T = round(n * train_fraction), test = n - T, validation =
/// round(T * val_fraction_of_train), train = T - validation. Rounding is
/// half away from zero.
SplitSizes split_sizes(std::size_t n, double train_fraction, double val_fraction_of_train);

/// Sorts records by output path, shuffles them with a seeded Mersenne
/// Twister (64-bit) Fisher-Yates, then deals Test, Validation, Train in that
/// order. The result is sorted by output path and depends only on the
/// paths, labels, options and seed.
std::vector<SplitAssignment> split_dataset(const Manifest& manifest, const SplitOptions& options);

SplitSizes count_splits(const std::vector<SplitAssignment>& assignments);

/// Writes train.txt, val.txt and test.txt (always all three) into `dir`,
/// one output path per line, sorted.
void emit_split_lists(const std::vector<SplitAssignment>& assignments, const fs::path& dir);

}  // namespace wordvis
