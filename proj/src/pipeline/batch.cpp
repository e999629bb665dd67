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

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <variant>

#include "wordvis/pipeline.hpp"

namespace wordvis {

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string output_relative(const std::string& input_relative, ImageEncoding encoding) {
  fs::path p(input_relative);
  p.replace_extension(encoding == ImageEncoding::Png ? ".png" : ".jpg");
  return p.generic_string();
}

bool is_within(const fs::path& path, const fs::path& root) {
  const fs::path rel = fs::weakly_canonical(path).lexically_relative(fs::weakly_canonical(root));
  return !rel.empty() && *rel.begin() != "..";
}

using Outcome = std::variant<ManifestRecord, ManifestFailure>;

Outcome process_one(const ImageOcrPair& pair, const std::string& output_rel, const JobSpec& job,
                    const ScoreTable& table) {
  try {
    const RasterImage image = read_image(pair.image);
    const DocumentOcr doc = parse_ocr(read_text(pair.ocr), job.ocr_format);
    const ColorizeResult result = colorize(image, doc, table, job.render);

    const fs::path out_path = job.output_root / fs::path(output_rel);
    fs::create_directories(out_path.parent_path());
    write_image(out_path, result.image, job.output_encoding);

    ManifestRecord r;
    r.input = pair.relative;
    r.output = output_rel;
    const fs::path parent = fs::path(pair.relative).parent_path();
    r.label = parent.empty() ? std::string() : parent.filename().string();
    r.painted = result.report.painted;
    r.skipped = result.report.skipped();
    r.clipped = result.report.clipped;
    r.table = table.name();
    r.mode = job.render.fill_mode;
    r.alpha = job.render.alpha;
    r.digest = sha256_file(out_path);
    return r;
  } catch (const std::exception& e) {
    return ManifestFailure{pair.relative, e.what()};
  }
}

}  // namespace

BatchResult process_batch(const JobSpec& job) {
  job.render.validate();
  const ScoreTable table = resolve_table(job.table_ref);

  std::error_code ec;
  fs::create_directories(job.output_root, ec);
  if (ec || !fs::is_directory(job.output_root)) {
    throw PipelineError("output root '" + job.output_root.string() + "' is not writable");
  }
  {
    // Probe writability up front so an unwritable root fails fast.
    const fs::path probe = job.output_root / ".wordvis-write-probe";
    std::ofstream out(probe);
    if (!out) throw PipelineError("output root '" + job.output_root.string() + "' is not writable");
    out.close();
    fs::remove(probe, ec);
  }

  Discovery found = discover_pairs(job.input_root, job.ocr_root, job.ocr_format);
  BatchResult result;
  result.warnings = std::move(found.warnings);

  // Never re-ingest our own outputs when the output tree sits inside the input tree.
  std::erase_if(found.pairs, [&](const ImageOcrPair& p) { return is_within(p.image, job.output_root); });

  std::vector<std::string> outputs(found.pairs.size());
  std::vector<std::optional<Outcome>> outcomes(found.pairs.size());
  std::map<std::string, std::string> claimed;
  for (std::size_t i = 0; i < found.pairs.size(); ++i) {
    outputs[i] = output_relative(found.pairs[i].relative, job.output_encoding);
    const auto [it, fresh] = claimed.emplace(outputs[i], found.pairs[i].relative);
    if (!fresh) {
      outcomes[i] = ManifestFailure{found.pairs[i].relative,
                                    "output '" + outputs[i] + "' already produced by '" + it->second + "'"};
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < found.pairs.size(); i = next++) {
      if (outcomes[i]) continue;
      outcomes[i] = process_one(found.pairs[i], outputs[i], job, table);
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(job.concurrency, static_cast<unsigned>(found.pairs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (auto& o : outcomes) {
    if (auto* r = std::get_if<ManifestRecord>(&*o)) {
      result.manifest.records.push_back(std::move(*r));
    } else {
      result.manifest.failures.push_back(std::get<ManifestFailure>(std::move(*o)));
    }
  }

  if (job.emit_splits && !result.manifest.records.empty()) {
    SplitOptions options;
    options.seed = job.seed;
    emit_split_lists(split_dataset(result.manifest, options), job.output_root);
  }

  result.manifest_path = job.output_root / kManifestFileName;
  write_atomically(result.manifest_path, serialize_manifest(result.manifest));
  return result;
}

}  // namespace wordvis
