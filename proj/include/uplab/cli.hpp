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

#ifndef UPLAB_CLI_HPP
#define UPLAB_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "uplab/cyclic.hpp"
#include "uplab/serialize.hpp"

namespace uplab::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kPartial = 3, kInternal = 4 };

enum class Format { json, csv, table };

std::optional<Format> parse_format(std::string_view s);

/// A command result. `rows`, when an array, is what csv and table print;
/// otherwise the document itself is printed as a single row.
struct Report {
  Json doc;
  Json rows;
  int exit_code = kOk;
};

void render(const Report& r, Format f, std::ostream& out);

/// Exact minimum distances, one JSON object per line. Only exact results
/// are stored; anything unreadable is skipped with a warning.
class DistanceCache {
 public:
  static constexpr const char* kFileName = "distances.jsonl";

  DistanceCache(std::filesystem::path file, std::ostream& warn);

  const KnownDistances& snapshot() const { return known_; }
  const std::filesystem::path& path() const { return file_; }
  std::size_t size() const { return known_.size(); }
  std::size_t skipped() const { return skipped_; }
  bool writable() const { return writable_; }

  /// Appends the entry unless it is inexact or already present.
  void put(u64 q, int n, const std::string& gen, int dim, const DistanceResult& d);

 private:
  std::filesystem::path file_;
  std::ostream& warn_;
  KnownDistances known_;
  std::size_t skipped_ = 0;
  bool writable_ = true;
};

/// Cache directory: the flag wins over UPLAB_CACHE_DIR; neither means no cache.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag, const char* env);

/// Reference values of mu(F_2, p) for the primes that have one.
std::optional<int> reference_mu(u64 q, u64 p);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uplab::cli

#endif  // UPLAB_CLI_HPP
