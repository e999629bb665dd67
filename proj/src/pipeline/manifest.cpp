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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wordvis/pipeline.hpp"

namespace wordvis {

using nlohmann::json;
using nlohmann::ordered_json;

std::string serialize_manifest(const Manifest& manifest) {
  std::string out;
  for (const ManifestRecord& r : manifest.records) {
    ordered_json j;
    j["v"] = kManifestVersion;
    j["kind"] = "record";
    j["input"] = r.input;
    j["output"] = r.output;
    j["label"] = r.label;
    j["painted"] = r.painted;
    j["skipped"] = r.skipped;
    j["clipped"] = r.clipped;
    j["table"] = r.table;
    j["mode"] = fill_mode_name(r.mode);
    j["alpha"] = r.alpha;
    j["digest"] = r.digest;
    out += j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
    out += '\n';
  }
  for (const ManifestFailure& f : manifest.failures) {
    ordered_json j;
    j["v"] = kManifestVersion;
    j["kind"] = "failure";
    j["input"] = f.input;
    j["error"] = f.error;
    out += j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::string where = "manifest line " + std::to_string(line_no);
    try {
      const json j = json::parse(line);
      if (j.at("v").get<int>() != kManifestVersion) {
        throw PipelineError(where + ": unsupported manifest version");
      }
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "record") {
        ManifestRecord r;
        r.input = j.at("input").get<std::string>();
        r.output = j.at("output").get<std::string>();
        r.label = j.at("label").get<std::string>();
        r.painted = j.at("painted").get<std::size_t>();
        r.skipped = j.at("skipped").get<std::size_t>();
        r.clipped = j.value("clipped", std::size_t{0});
        r.table = j.at("table").get<std::string>();
        const auto mode = parse_fill_mode(j.at("mode").get<std::string>());
        if (!mode) throw PipelineError(where + ": unknown render mode");
        r.mode = *mode;
        r.alpha = j.value("alpha", 1.0);
        r.digest = j.at("digest").get<std::string>();
        m.records.push_back(std::move(r));
      } else if (kind == "failure") {
        m.failures.push_back({j.at("input").get<std::string>(), j.at("error").get<std::string>()});
      } else {
        throw PipelineError(where + ": unknown entry kind '" + kind + "'");
      }
    } catch (const json::exception& e) {
      throw PipelineError(where + ": " + e.what());
    }
  }
  return m;
}

Manifest read_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PipelineError("cannot open manifest '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

void write_atomically(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PipelineError("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw PipelineError("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw PipelineError("cannot move '" + tmp.string() + "' into place: " + ec.message());
}

}  // namespace wordvis
