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

// wordvis: colorize document images with per-word RGB encodings, batch a
// dataset tree, derive train/val/test splits and analyse score tables.
//
// Exit status: 0 success, 1 fatal error, 2 partial failure (batch only).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wordvis/analysis.hpp"
#include "wordvis/ocr.hpp"
#include "wordvis/pipeline.hpp"
#include "wordvis/render.hpp"
#include "wordvis/scoring.hpp"
#include "wordvis/unicode.hpp"

namespace {

using namespace wordvis;

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitPartial = 2;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("WORDVIS_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    std::cerr << "wordvis: ignoring invalid WORDVIS_JOBS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

OcrFormat format_for(const std::string& flag, const fs::path& ocr) {
  if (!flag.empty()) return *parse_format_name(flag);
  const std::string ext = ocr.extension().string();
  if (ext == ".tsv") return OcrFormat::TesseractTsv;
  if (ext == ".json") return OcrFormat::CanonicalJson;
  return OcrFormat::Hocr;
}

struct RenderFlags {
  std::string table = std::string(kDefaultTableName);
  std::string mode = "solid";
  double alpha = 1.0;
  double min_conf = 0.0;
  int threshold = 128;
  std::string format;
  bool jpeg = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--table", table, "Built-in table name or table file")->capture_default_str();
    cmd.add_option("--mode", mode, "Fill mode")->check(CLI::IsMember({"solid", "glyph"}))->capture_default_str();
    cmd.add_option("--alpha", alpha, "Blend factor of the word color")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    cmd.add_option("--min-conf", min_conf, "Skip words below this OCR confidence")->check(CLI::Range(0.0, 100.0));
    cmd.add_option("--threshold", threshold, "Ink luminance threshold (glyph mode)")->check(CLI::Range(0, 255))->capture_default_str();
    cmd.add_option("--format", format, "OCR format")->check(CLI::IsMember({"hocr", "tsv", "json"}));
    cmd.add_flag("--jpeg", jpeg, "Write JPEG instead of PNG (lossy; pixel-exact guarantees do not apply)");
  }

  RenderConfig config() const {
    RenderConfig c;
    c.fill_mode = *parse_fill_mode(mode);
    c.alpha = alpha;
    c.min_confidence = min_conf;
    c.glyph_threshold = threshold;
    return c;
  }

  ImageEncoding encoding() const {
    if (jpeg) std::cerr << "wordvis: warning: JPEG output is lossy; pixel-exact locality does not hold\n";
    return jpeg ? ImageEncoding::Jpeg : ImageEncoding::Png;
  }
};

void print_warnings(const Warnings& warnings) {
  for (const auto& w : warnings) std::cerr << "wordvis: warning: " << w << "\n";
}

void emit_report(const std::string& text, const std::string& json, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << json;
    return;
  }
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
    out << json;
  }
}

std::array<std::size_t, 3> parse_counts(const std::string& s) {
  std::array<std::size_t, 3> out{};
  std::istringstream in(s);
  std::string part;
  std::size_t k = 0;
  while (std::getline(in, part, ',')) {
    if (k == 3) throw CLI::ValidationError("--counts", "expected three comma-separated integers");
    std::size_t used = 0;
    out[k++] = std::stoull(part, &used);
    if (used != part.size()) throw CLI::ValidationError("--counts", "'" + part + "' is not an integer");
  }
  if (k != 3) throw CLI::ValidationError("--counts", "expected three comma-separated integers");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encode word text as RGB colors painted over document images"};
  app.require_subcommand(1);
  int status = kExitOk;

  // colorize
  auto* colorize_cmd = app.add_subcommand("colorize", "Colorize a single image");
  std::string image_path;
  std::string ocr_path;
  std::string out_path;
  RenderFlags single;
  colorize_cmd->add_option("image", image_path, "Input image (PNG/JPEG)")->required()->check(CLI::ExistingFile);
  colorize_cmd->add_option("ocr", ocr_path, "OCR file (hOCR, TSV or canonical JSON)")->required()->check(CLI::ExistingFile);
  colorize_cmd->add_option("-o,--output", out_path, "Output image (default: <image>_wordvis.png)");
  single.attach(*colorize_cmd);
  colorize_cmd->callback([&] {
    const ScoreTable table = resolve_table(single.table);
    Warnings warnings;
    const DocumentOcr doc = parse_ocr(slurp(ocr_path), format_for(single.format, ocr_path), &warnings);
    print_warnings(warnings);
    const ColorizeResult result = colorize(read_image(image_path), doc, table, single.config());
    const ImageEncoding encoding = single.encoding();
    fs::path out = out_path;
    if (out.empty()) {
      out = fs::path(image_path);
      out.replace_filename(out.stem().string() + "_wordvis" + (single.jpeg ? ".jpg" : ".png"));
    }
    write_image(out, result.image, encoding);
    std::cerr << "painted " << result.report.painted << ", skipped " << result.report.skipped()
              << ", clipped " << result.report.clipped << " -> " << out.string() << "\n";
  });

  // batch
  auto* batch_cmd = app.add_subcommand("batch", "Colorize a dataset tree and write a manifest");
  JobSpec job;
  RenderFlags batch_flags;
  std::string input_root;
  std::string ocr_root;
  std::string output_root;
  unsigned jobs = 0;
  batch_cmd->add_option("--input", input_root, "Image root")->required();
  batch_cmd->add_option("--ocr", ocr_root, "OCR root mirroring the image tree")->required();
  batch_cmd->add_option("--out", output_root, "Output root")->required();
  batch_cmd->add_option("--jobs", jobs, "Concurrent documents (default: WORDVIS_JOBS or CPU count)")->check(CLI::PositiveNumber);
  batch_cmd->add_option("--seed", job.seed, "Seed for --split");
  batch_cmd->add_flag("--split", job.emit_splits, "Also write train/val/test lists (80/20, 10% validation)");
  batch_flags.attach(*batch_cmd);
  batch_cmd->callback([&] {
    job.input_root = input_root;
    job.ocr_root = ocr_root;
    job.output_root = output_root;
    job.table_ref = batch_flags.table;
    job.render = batch_flags.config();
    job.ocr_format = batch_flags.format.empty() ? OcrFormat::Hocr : *parse_format_name(batch_flags.format);
    job.output_encoding = batch_flags.encoding();
    job.concurrency = jobs > 0 ? jobs : default_jobs();
    const BatchResult result = process_batch(job);
    print_warnings(result.warnings);
    for (const auto& f : result.manifest.failures) {
      std::cerr << "wordvis: failed: " << f.input << ": " << f.error << "\n";
    }
    std::cerr << result.manifest.records.size() << " processed, " << result.manifest.failures.size()
              << " failed; manifest " << result.manifest_path.string() << "\n";
    if (result.partial_failure()) status = kExitPartial;
  });

  // split
  auto* split_cmd = app.add_subcommand("split", "Assign manifest records to train/val/test");
  std::string manifest_path;
  std::string split_out;
  std::string counts;
  SplitOptions split_options;
  split_cmd->add_option("--manifest", manifest_path, "Manifest (JSON Lines)")->required()->check(CLI::ExistingFile);
  split_cmd->add_option("--train", split_options.train_fraction, "Train+validation fraction")->capture_default_str();
  split_cmd->add_option("--val", split_options.val_fraction_of_train, "Validation fraction of the training part")->capture_default_str();
  split_cmd->add_option("--seed", split_options.seed, "Shuffle seed")->capture_default_str();
  split_cmd->add_option("--counts", counts, "Exact sizes: train,val,test");
  split_cmd->add_flag("--stratify", split_options.stratify, "Split each class label separately");
  split_cmd->add_option("--out", split_out, "Directory for train.txt/val.txt/test.txt (default: manifest directory)");
  split_cmd->callback([&] {
    if (!counts.empty()) split_options.counts = parse_counts(counts);
    const Manifest manifest = read_manifest(manifest_path);
    const auto assignments = split_dataset(manifest, split_options);
    const fs::path dir = split_out.empty() ? fs::path(manifest_path).parent_path() : fs::path(split_out);
    emit_split_lists(assignments, dir.empty() ? fs::path(".") : dir);
    const SplitSizes s = count_splits(assignments);
    std::cout << "train " << s.train << "\nval " << s.validation << "\ntest " << s.test << "\n";
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "Inspect score tables");
  table_cmd->require_subcommand(1);
  std::string table_ref;
  auto* show_cmd = table_cmd->add_subcommand("show", "Print a table in config format");
  show_cmd->add_option("table", table_ref, "Built-in name or file")->required();
  show_cmd->callback([&] { std::cout << format_table(resolve_table(table_ref)); });
  auto* check_cmd = table_cmd->add_subcommand("check", "Validate a table file");
  check_cmd->add_option("file", table_ref, "Table file")->required();
  check_cmd->callback([&] {
    const ScoreTable t = load_table_file(table_ref);
    std::cout << t.name() << ": " << t.size() << " entries (R " << t.count(Channel::Red) << ", G "
              << t.count(Channel::Green) << ", B " << t.count(Channel::Blue) << ")\n";
  });

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Collision, perturbation and hue reports");
  analyze_cmd->require_subcommand(1);
  std::string lexicon_path;
  std::string analyze_table = std::string(kDefaultTableName);
  std::string json_path;
  std::string stopwords_path;
  std::string alphabet;
  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", lexicon_path, "One token per line")->required()->check(CLI::ExistingFile);
    cmd->add_option("--table", analyze_table, "Built-in table name or table file")->capture_default_str();
    cmd->add_option("--json", json_path, "Also write the JSON report here ('-' prints only JSON)");
  };
  auto* collisions_cmd = analyze_cmd->add_subcommand("collisions", "Group words by color");
  common(collisions_cmd);
  collisions_cmd->callback([&] {
    const auto r = collision_report(read_word_list(lexicon_path), resolve_table(analyze_table));
    emit_report(to_text(r), to_json(r), json_path);
  });
  auto* perturb_cmd = analyze_cmd->add_subcommand("perturb", "Color change under single-character substitutions");
  common(perturb_cmd);
  perturb_cmd->add_option("--alphabet", alphabet, "Substitution characters (default: the table's characters)");
  perturb_cmd->callback([&] {
    const ScoreTable table = resolve_table(analyze_table);
    const std::u32string chars = alphabet.empty() ? table.alphabet() : unicode::decode_utf8(alphabet);
    const auto r = perturbation_report(read_word_list(lexicon_path), table, chars);
    emit_report(to_text(r), to_json(r), json_path);
  });
  auto* hues_cmd = analyze_cmd->add_subcommand("hues", "Dominant channel and spread, stop-words vs the rest");
  common(hues_cmd);
  hues_cmd->add_option("--stopwords", stopwords_path, "Stop-word list")->required()->check(CLI::ExistingFile);
  hues_cmd->callback([&] {
    const auto stop_list = read_word_list(stopwords_path);
    const std::set<std::string> stop(stop_list.begin(), stop_list.end());
    const auto r = hue_profile(read_word_list(lexicon_path), resolve_table(analyze_table), stop);
    emit_report(to_text(r), to_json(r), json_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "wordvis: error: " << e.what() << "\n";
    return kExitFatal;
  }
  return status;
}
