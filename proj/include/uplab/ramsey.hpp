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

#ifndef UPLAB_RAMSEY_HPP
#define UPLAB_RAMSEY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uplab/numtheory.hpp"

namespace uplab {

enum class PatternKind { ap, grid };

/// Forbidden-pattern family over Z/nZ: arithmetic progressions of length m
/// (difference b != 0), or grids A(delta, s) with unit steps b and c.
struct APParams {
  PatternKind kind = PatternKind::ap;
  int n = 0;
  int m = 0;      // ap
  int delta = 0;  // grid
  int s = 0;      // grid

  static APParams ap(int m, int n);
  static APParams grid(int delta, int s, int n);
};

struct RamseyResult {
  APParams params;
  int value = 0;
  std::vector<int> witness;  // sorted, attains value, pattern-free
  std::uint64_t nodes = 0;
  /// Some pattern of this shape covers a whole coset of a nontrivial
  /// subgroup (m >= smallest prime factor of n); boundary values then
  /// depend on the literal set reading.
  bool wraps = false;
};

struct ApWitness {
  int a = 0;
  int b = 0;
};

struct GridWitness {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// First (a, b), a then b increasing, with {a + k b : 0 <= k < m} inside S.
std::optional<ApWitness> contains_ap(std::span<const int> set, int m, int n);
std::optional<GridWitness> contains_grid(std::span<const int> set, int delta, int s, int n);

inline constexpr int kApSearchCap = 40;
inline constexpr int kGridSearchCap = 24;

/// r_m(n) by branch and bound; n <= 40.
RamseyResult szemeredi_r(int m, int n);
/// r_{delta,s}(n) by branch and bound; n <= 24.
RamseyResult szemeredi_grid(int delta, int s, int n);

struct ApBound {
  int n = 0;
  int value = 0;          // min over m of m + n - r_m(n)
  int argmin = 0;         // first m attaining it
  std::vector<int> r;     // r[m-1] = r_m(n)
};

struct GridBound {
  int n = 0;
  int value = 0;  // min over (delta, s) of delta + s - 1 + n - r_{delta,s}(n)
  int argmin_delta = 0;
  int argmin_s = 0;
  std::uint64_t searches = 0;
};

/// min_m {m + n - r_m(n)} for any modulus n (no primality requirement).
ApBound ap_scan_bound(int n);
/// Same value for prime p coprime to q, where it lower-bounds mu(F_q, p).
ApBound prop_ram_lower(u64 p, u64 q);
GridBound prop_ram_grid_lower(u64 p, u64 q);

}  // namespace uplab

#endif  // UPLAB_RAMSEY_HPP
