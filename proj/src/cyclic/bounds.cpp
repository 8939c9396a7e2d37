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

#include <algorithm>
#include <numeric>

#include "uplab/cyclic.hpp"
#include "uplab/errors.hpp"

namespace uplab {

namespace {

std::vector<char> membership(std::span<const int> zeros, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int z : zeros) {
    if (z < 0 || z >= n) throw DomainError("zero exponent outside Z/nZ");
    in[z] = 1;
  }
  return in;
}

// run[a] = length of the run a, a+b, a+2b, ... inside the set, capped at n.
std::vector<int> runs_along(const std::vector<char>& in, int n, int b) {
  std::vector<int> run(static_cast<std::size_t>(n), 0);
  // b is a unit, so the orbit of 0 under +b visits every residue once.
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int t = 0, x = 0; t < n; ++t, x = (x + b) % n) cycle[t] = x;
  if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) {
    std::fill(run.begin(), run.end(), n);
    return run;
  }
  // Walk backwards twice around the cycle so wrapped runs are counted.
  int len = 0;
  for (int t = 2 * n - 1; t >= 0; --t) {
    const int x = cycle[t % n];
    len = in[x] ? len + 1 : 0;
    if (t < n) run[x] = std::min(len, n);
  }
  return run;
}

}  // namespace

int bch_bound(std::span<const int> zeros, int n) {
  if (n < 1) throw DomainError("bch_bound: n must be positive");
  if (zeros.empty()) return 1;
  const auto in = membership(zeros, n);
  int best = 0;
  for (int b = 0; b < n; ++b) {
    if (std::gcd(b, n) != 1) continue;
    const auto run = runs_along(in, n, b);
    best = std::max(best, *std::max_element(run.begin(), run.end()));
  }
  return best + 1;
}

int ht_bound(std::span<const int> zeros, int n) {
  if (n < 1) throw DomainError("ht_bound: n must be positive");
  if (zeros.empty()) return 1;
  const auto in = membership(zeros, n);
  int best = bch_bound(zeros, n);
  std::vector<int> units;
  for (int b = 0; b < n; ++b) {
    if (std::gcd(b, n) == 1) units.push_back(b);
  }
  for (int b : units) {
    const auto run = runs_along(in, n, b);
    for (int c : units) {
      for (int a = 0; a < n; ++a) {
        // Rows a + r c, each needing a b-run of length delta - 1.
        int shortest = n;
        for (int r = 0, x = a; r < n; ++r, x = (x + c) % n) {
          shortest = std::min(shortest, run[x]);
          if (shortest == 0) break;
          best = std::max(best, shortest + 1 + r);
        }
      }
    }
  }
  return best;
}

}  // namespace uplab
