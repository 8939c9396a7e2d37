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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "uplab/cli.hpp"

namespace uplab::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "uplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("uplab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { ::unsetenv("UPLAB_CACHE_DIR"); }
  void TearDown() override { ::unsetenv("UPLAB_CACHE_DIR"); }
};

TEST_F(CliTest, MuSeven) {
  const auto r = invoke({"mu", "--q", "2", "--n", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["mu"], 7);
  EXPECT_EQ(j["witness"]["d_lower"].get<int>() + j["witness"]["dim"].get<int>(), 7);
  for (const char* key : {"q", "n", "gen", "dim", "d_lower", "d_upper", "exact", "method", "work"}) {
    EXPECT_TRUE(j["witness"].contains(key)) << key;
  }
}

TEST_F(CliTest, TableRows) {
  const auto r = invoke({"table", "--q", "2", "--primes", "7,17,23"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 3u);
  const int expected[] = {7, 14, 19};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(rows[i]["mu"], expected[i]);
    EXPECT_EQ(rows[i]["status"], "match");
  }
}

TEST_F(CliTest, TableBracketIsNotAMismatch) {
  const auto r = invoke({"table", "--q", "2", "--primes", "31", "--budget", "1000"});
  const auto row = r.json()["rows"][0];
  if (row["status"] == "bracket") {
    EXPECT_EQ(r.code, kOk);
    EXPECT_LE(row["mu_lower"].get<int>(), 20);
    EXPECT_GE(row["mu_upper"].get<int>(), 20);
  } else {
    EXPECT_EQ(row["status"], "match");
  }
}

TEST_F(CliTest, MsAllOnes) {
  const auto r = invoke({"ms", "--q", "2", "--n", "7", "--word", "1111111"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["w"], 7);
  EXPECT_EQ(j["w_hat"], 1);
  EXPECT_EQ(j["conjugacy"], true);
  EXPECT_EQ(j["values"].size(), 7u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"mu", "--q", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"mu", "--q", "2", "--n", "seven"}).code, kUsage);
  EXPECT_EQ(invoke({"mu", "--q", "2", "--n", "6"}).code, kUsage);  // gcd(n, q) != 1
  EXPECT_EQ(invoke({"mu", "--q", "6", "--n", "7"}).code, kUsage);
  EXPECT_EQ(invoke({"--format", "xml", "mu", "--q", "2", "--n", "7"}).code, kUsage);
  EXPECT_EQ(invoke({"ms", "--q", "2", "--n", "7", "--word", "12"}).code, kUsage);
  EXPECT_EQ(invoke({"ramsey", "ap", "--m", "3", "--n", "50"}).code, kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, BudgetPartial) {
  // A quadratic-residue code of length 47: dimension 24, far beyond the budget.
  const std::string gen = invoke({"factor", "--n", "47", "--q", "2"}).json()["factors"][1]["poly"];
  const auto r = invoke({"mindist", "--q", "2", "--n", "47", "--gen", gen, "--budget", "100"});
  EXPECT_EQ(r.code, kPartial) << r.out;
  const auto j = r.json();
  EXPECT_FALSE(j["exact"].get<bool>());
  EXPECT_LE(j["d_lower"].get<int>(), j["d_upper"].get<int>());
}

TEST_F(CliTest, FormatsAndOptionPlacement) {
  const auto csv = invoke({"mu", "--q", "2", "--n", "7", "--format", "csv"});
  ASSERT_EQ(csv.code, kOk);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "q,n,gen,dim,d_lower,d_upper,exact,method,work,pruned,source");
  const auto table = invoke({"--format", "table", "factor", "--n", "7", "--q", "2"});
  ASSERT_EQ(table.code, kOk);
  EXPECT_NE(table.out.find("1101"), std::string::npos);
  EXPECT_NE(table.out.find("-----"), std::string::npos);
}

TEST_F(CliTest, DeterministicOutput) {
  const std::vector<std::vector<std::string>> commands = {
      {"mu", "--q", "2", "--n", "23"},
      {"up-scan", "--q", "2", "--n", "15", "--mode", "random", "--trials", "200", "--seed", "5"},
      {"asym", "construct", "--q", "2", "--p", "5", "--seed", "9"},
      {"ramsey", "bound", "--n", "11", "--q", "2", "--grid"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, OtherCommands) {
  EXPECT_EQ(invoke({"ramsey", "ap", "--m", "3", "--n", "9"}).json()["value"], 4);
  EXPECT_EQ(invoke({"ramsey", "grid", "--delta", "2", "--s", "0", "--n", "7"}).json()["value"], 0);
  const auto b9 = invoke({"ramsey", "bound", "--n", "9", "--q", "2"}).json();
  EXPECT_EQ(b9["ap"]["value"], 8);
  EXPECT_EQ(b9["valid_lower_bound"], false);
  EXPECT_NEAR(invoke({"asym", "entropy", "--x", "0.25"}).json()["H"].get<double>(), 0.811278, 1e-6);
  EXPECT_EQ(invoke({"asym", "plotkin", "--q", "4"}).json()["cap"], "3/4");
  EXPECT_EQ(invoke({"asym", "ball", "--n", "7", "--alpha", "0.5", "--q", "2"}).json()["exact"], "63");
  EXPECT_EQ(invoke({"asym", "falpha", "--p", "11,13", "--alpha", "0.4"}).json()["rows"].size(), 2u);
  const auto w = invoke({"witness", "--p", "5", "--q", "2"}).json();
  EXPECT_EQ(w["q_primitive"], true);
  EXPECT_EQ(w["mu"], 6);
  const auto up = invoke({"up-scan", "--q", "2", "--n", "7"}).json();
  EXPECT_EQ(up["violations"], 0);
  EXPECT_EQ(up["min_product"], 7);
  const auto weak = invoke({"weak-up", "--q", "2", "--eps", "0.2", "--lambda", "0.6", "--pmax", "31"}).json();
  EXPECT_EQ(weak["rows"].back()["p"], 31);
  EXPECT_EQ(weak["rows"].back()["both"], true);
}

TEST_F(CliTest, CacheRoundTrip) {
  TempDir dir;
  std::ostringstream warn;
  DistanceCache cache(dir.path() / DistanceCache::kFileName, warn);
  EXPECT_EQ(cache.size(), 0u);
  DistanceResult d{5, 5, DistanceMethod::exhaustive, 511};
  cache.put(2, 17, "111010111", 9, d);
  cache.put(2, 17, "111010111", 9, d);  // idempotent
  cache.put(2, 17, "0", 9, DistanceResult{3, 4, DistanceMethod::bz, 1});  // inexact: ignored
  DistanceCache reloaded(dir.path() / DistanceCache::kFileName, warn);
  ASSERT_EQ(reloaded.size(), 1u);
  const auto* hit = reloaded.snapshot().find(2, 17, "111010111");
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(*hit, d);
  std::ifstream in(dir.path() / DistanceCache::kFileName);
  std::string line;
  std::getline(in, line);
  const auto j = Json::parse(line);
  for (const char* key : {"q", "n", "gen", "dim", "d_lower", "d_upper", "exact", "method", "work", "version", "ts"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(warn.str().empty());
}

TEST_F(CliTest, CorruptCacheLinesAreSkipped) {
  TempDir dir;
  {
    std::ofstream f(dir.path() / DistanceCache::kFileName);
    f << R"({"q":2,"n":7,"gen":"1101","dim":4,"d_lower":3,"d_upper":3,"exact":true,"method":"exhaustive","work":15})" << '\n';
    f << "{not json\n";
    f << R"({"q":2,"n":7,"gen":"11","dim":6})" << '\n';
    f << R"({"q":2,"n":7,"gen":"111111","dim":1,"d_lower":7,"d_upper":7,"exact":true,"method":"bz","work":3})" << '\n';
  }
  std::ostringstream warn;
  DistanceCache cache(dir.path() / DistanceCache::kFileName, warn);
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(cache.skipped(), 2u);
  EXPECT_NE(warn.str().find("line 2"), std::string::npos);
  EXPECT_NE(warn.str().find("line 3"), std::string::npos);
}

TEST_F(CliTest, UnwritableCacheWarnsAndContinues) {
  TempDir dir;
  const fs::path blocker = dir.path() / "file";
  std::ofstream(blocker) << "x";
  const auto r = invoke({"mu", "--q", "2", "--n", "7", "--cache", (blocker / "sub").string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["mu"], 7);
  EXPECT_NE(r.err.find("not writable"), std::string::npos) << r.err;
}

TEST_F(CliTest, CachedDistanceReusedByMu) {
  TempDir dir;
  const std::string cache = dir.path().string();
  // Find the [17,9] generators and cache one distance through mindist.
  const auto fac = invoke({"factor", "--n", "17", "--q", "2"}).json();
  const std::string gen = fac["factors"][1]["poly"];
  const auto first = invoke({"mindist", "--q", "2", "--n", "17", "--gen", gen, "--cache", cache});
  ASSERT_EQ(first.code, kOk);
  EXPECT_EQ(first.json()["source"], "computed");
  const auto second = invoke({"mindist", "--q", "2", "--n", "17", "--gen", gen, "--cache", cache});
  EXPECT_EQ(second.json()["source"], "cache");
  EXPECT_EQ(second.json()["work"], 0);
  EXPECT_EQ(second.json()["d_lower"], first.json()["d_lower"]);

  const auto m = invoke({"mu", "--q", "2", "--n", "17", "--no-prune", "--cache", cache}).json();
  EXPECT_EQ(m["mu"], 14);
  bool reused = false;
  for (const auto& d : m["divisors"]) {
    if (d["gen"] == gen) {
      EXPECT_EQ(d["source"], "cache");
      EXPECT_EQ(d["work"], 0);
      reused = true;
    }
  }
  EXPECT_TRUE(reused);
}

TEST_F(CliTest, CacheDirectoryResolution) {
  EXPECT_FALSE(resolve_cache_dir("", nullptr));
  EXPECT_FALSE(resolve_cache_dir("", ""));
  EXPECT_EQ(*resolve_cache_dir("", "/env"), fs::path("/env"));
  EXPECT_EQ(*resolve_cache_dir("/flag", "/env"), fs::path("/flag"));

  TempDir env_dir, flag_dir;
  ::setenv("UPLAB_CACHE_DIR", env_dir.path().c_str(), 1);
  invoke({"mindist", "--q", "2", "--n", "7", "--gen", "1101"});
  EXPECT_TRUE(fs::exists(env_dir.path() / DistanceCache::kFileName));
  invoke({"mindist", "--q", "2", "--n", "7", "--gen", "1011", "--cache", flag_dir.path().string()});
  EXPECT_TRUE(fs::exists(flag_dir.path() / DistanceCache::kFileName));
  std::ifstream env_file(env_dir.path() / DistanceCache::kFileName);
  std::string content((std::istreambuf_iterator<char>(env_file)), {});
  EXPECT_EQ(content.find("1011"), std::string::npos);
}

TEST(Reference, Values) {
  EXPECT_EQ(reference_mu(2, 43), 28);
  EXPECT_EQ(reference_mu(2, 97), 64);
  EXPECT_FALSE(reference_mu(2, 11));
  EXPECT_FALSE(reference_mu(3, 7));
}

TEST(Render, CsvQuotingAndTableAlignment) {
  Report r;
  r.doc = Json::object();
  r.rows = Json::array({Json{{"a", "x,y"}, {"b", 1}}, Json{{"a", "z"}, {"c", nullptr}}});
  std::ostringstream csv, table;
  render(r, Format::csv, csv);
  EXPECT_EQ(csv.str(), "a,b,c\n\"x,y\",1,\nz,,\n");
  render(r, Format::table, table);
  EXPECT_EQ(table.str(), "a    b  c\n---  -  -\nx,y  1  \nz       \n");
}

}  // namespace
}  // namespace uplab::cli
