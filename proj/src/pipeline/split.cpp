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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>

#include "wordvis/pipeline.hpp"

namespace wordvis {

std::string_view split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Validation: return "val";
    case Split::Test: return "test";
  }
  return "train";
}

SplitSizes split_sizes(std::size_t n, double train_fraction, double val_fraction_of_train) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw PipelineError("train fraction must lie strictly between 0 and 1");
  }
  if (!(val_fraction_of_train >= 0.0 && val_fraction_of_train < 1.0)) {
    throw PipelineError("validation fraction must lie in [0, 1)");
  }
  const auto trainval = static_cast<std::size_t>(std::llround(static_cast<double>(n) * train_fraction));
  const auto val = static_cast<std::size_t>(std::llround(static_cast<double>(trainval) * val_fraction_of_train));
  return SplitSizes{trainval - val, val, n - trainval};
}

namespace {

// Unbiased draw from [0, bound) using raw 64-bit engine output, so results
// do not depend on a standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= reject_below) return r % bound;
  }
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// splitmix64 finalizer; derives independent per-class seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void deal(std::vector<SplitAssignment>& group, const SplitSizes& sizes, std::uint64_t seed) {
  std::sort(group.begin(), group.end(),
            [](const SplitAssignment& a, const SplitAssignment& b) { return a.output < b.output; });
  std::mt19937_64 rng(seed);
  fisher_yates(group, rng);
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (i < sizes.test) {
      group[i].split = Split::Test;
    } else if (i < sizes.test + sizes.validation) {
      group[i].split = Split::Validation;
    } else {
      group[i].split = Split::Train;
    }
  }
}

}  // namespace

std::vector<SplitAssignment> split_dataset(const Manifest& manifest, const SplitOptions& options) {
  const std::size_t n = manifest.records.size();
  if (n == 0) throw PipelineError("cannot split an empty manifest");

  std::vector<SplitAssignment> all;
  all.reserve(n);
  for (const ManifestRecord& r : manifest.records) all.push_back({r.output, r.label, Split::Train});
  {
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(),
              [](const SplitAssignment& a, const SplitAssignment& b) { return a.output < b.output; });
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end(),
                                        [](const auto& a, const auto& b) { return a.output == b.output; });
    if (dup != sorted.end()) throw PipelineError("manifest lists output '" + dup->output + "' twice");
  }

  if (options.counts) {
    if (options.stratify) throw PipelineError("explicit counts cannot be combined with stratification");
    const auto& c = *options.counts;
    if (c[0] + c[1] + c[2] != n) {
      throw PipelineError("explicit counts " + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                          std::to_string(c[2]) + " do not sum to the " + std::to_string(n) +
                          " manifest records");
    }
    deal(all, SplitSizes{c[0], c[1], c[2]}, options.seed);
  } else if (!options.stratify) {
    deal(all, split_sizes(n, options.train_fraction, options.val_fraction_of_train), options.seed);
  } else {
    std::map<std::string, std::vector<SplitAssignment>> by_label;
    for (auto& a : all) by_label[a.label].push_back(std::move(a));
    all.clear();
    std::uint64_t k = 0;
    for (auto& [label, group] : by_label) {
      const SplitSizes sizes = split_sizes(group.size(), options.train_fraction, options.val_fraction_of_train);
      deal(group, sizes, mix(options.seed ^ mix(++k)));
      for (auto& a : group) all.push_back(std::move(a));
    }
  }

  std::sort(all.begin(), all.end(),
            [](const SplitAssignment& a, const SplitAssignment& b) { return a.output < b.output; });
  return all;
}

SplitSizes count_splits(const std::vector<SplitAssignment>& assignments) {
  SplitSizes s;
  for (const auto& a : assignments) {
    switch (a.split) {
      case Split::Train: ++s.train; break;
      case Split::Validation: ++s.validation; break;
      case Split::Test: ++s.test; break;
    }
  }
  return s;
}

void emit_split_lists(const std::vector<SplitAssignment>& assignments, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const Split s : {Split::Train, Split::Validation, Split::Test}) {
    std::vector<std::string> lines;
    for (const auto& a : assignments) {
      if (a.split == s) lines.push_back(a.output);
    }
    std::sort(lines.begin(), lines.end());
    std::string body;
    for (const auto& l : lines) body += l + '\n';
    write_atomically(dir / (std::string(split_name(s)) + ".txt"), body);
  }
}

}  // namespace wordvis
