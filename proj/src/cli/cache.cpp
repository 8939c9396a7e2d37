// Copyright 2026 The uplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#include "uplab/cli.hpp"

#ifndef UPLAB_VERSION
#define UPLAB_VERSION "0.0.0"
#endif

namespace uplab::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

DistanceCache::DistanceCache(std::filesystem::path file, std::ostream& warn) : file_(std::move(file)), warn_(warn) {
  std::ifstream in(file_);
  if (!in) return;  // absent file is an empty cache
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      DistanceResult d;
      d.lower = j.at("d_lower").get<int>();
      d.upper = j.at("d_upper").get<int>();
      d.work = j.at("work").get<std::uint64_t>();
      const auto method = parse_distance_method(j.at("method").get<std::string>());
      if (!method || !j.at("exact").get<bool>() || !d.exact() || d.lower < 1) throw std::runtime_error("bad entry");
      d.method = *method;
      known_.insert(j.at("q").get<u64>(), j.at("n").get<int>(), j.at("gen").get<std::string>(), d);
    } catch (const std::exception&) {
      ++skipped_;
      warn_ << "warning: skipping corrupt cache line " << lineno << " in " << file_.string() << '\n';
    }
  }
}

void DistanceCache::put(u64 q, int n, const std::string& gen, int dim, const DistanceResult& d) {
  if (!d.exact() || !writable_ || known_.find(q, n, gen) != nullptr) return;
  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  std::ofstream out(file_, std::ios::app);
  if (!out) {
    writable_ = false;
    warn_ << "warning: cache " << file_.string() << " is not writable; continuing without it\n";
    return;
  }
  Json j = distance_json(q, n, gen, dim, d);
  j["version"] = UPLAB_VERSION;
  j["ts"] = utc_timestamp();
  out << j.dump() << '\n';
  known_.insert(q, n, gen, d);
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag, const char* env) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace uplab::cli
