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

#include "uplab/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "uplab/errors.hpp"

namespace uplab {

namespace {

using Mask = std::uint64_t;

Mask bit(int x) { return Mask{1} << x; }

Mask to_mask(std::span<const int> set, int n) {
  Mask m = 0;
  for (int x : set) {
    if (x < 0 || x >= n) throw DomainError("set element outside Z/nZ");
    m |= bit(x);
  }
  return m;
}

Mask ap_mask(int a, int b, int m, int n) {
  Mask s = 0;
  for (int k = 0, x = a; k < m; ++k, x = (x + b) % n) s |= bit(x);
  return s;
}

Mask grid_mask(int a, int b, int c, int delta, int s, int n) {
  Mask out = 0;
  for (int r = 0; r <= s; ++r) {
    const int row = (a + r * c) % n;
    for (int k = 0, x = row; k <= delta - 2; ++k, x = (x + b) % n) out |= bit(x);
  }
  return out;
}

std::vector<int> units_of(int n) {
  std::vector<int> u;
  for (int b = 0; b < n; ++b) {
    if (std::gcd(b, n) == 1) u.push_back(b);
  }
  return u;
}

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

// Branch and bound for the largest subset of Z/nZ containing none of the
// given patterns. Residues are decided in increasing order, include first.
class PatternFreeSearch {
 public:
  PatternFreeSearch(int n, std::vector<Mask> patterns) : n_(n), by_max_(static_cast<std::size_t>(n)) {
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    for (Mask p : patterns) by_max_[63 - std::countl_zero(p)].push_back(p);
  }

  void run(RamseyResult& out) {
    // Every family here is translation invariant, so a nonempty optimum can
    // be shifted to contain 0.
    if (!completes(0, bit(0))) {
      best_ = 1;
      best_set_ = bit(0);
      descend(1, bit(0), 1);
    }
    out.value = best_;
    out.witness.clear();
    for (int x = 0; x < n_; ++x) {
      if (best_set_ >> x & 1) out.witness.push_back(x);
    }
    out.nodes = nodes_;
  }

 private:
  bool completes(int x, Mask with_x) const {
    for (Mask p : by_max_[x]) {
      if ((p & ~with_x) == 0) return true;
    }
    return false;
  }

  void descend(int x, Mask cur, int size) {
    ++nodes_;
    if (size + (n_ - x) <= best_) return;
    if (x == n_) {
      best_ = size;
      best_set_ = cur;
      return;
    }
    const Mask with_x = cur | bit(x);
    if (!completes(x, with_x)) descend(x + 1, with_x, size + 1);
    descend(x + 1, cur, size);
  }

  int n_;
  std::vector<std::vector<Mask>> by_max_;
  int best_ = 0;
  Mask best_set_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

APParams APParams::ap(int m, int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (m < 1 || m > n) throw DomainError("AP length must satisfy 1 <= m <= n");
  return APParams{PatternKind::ap, n, m, 0, 0};
}

APParams APParams::grid(int delta, int s, int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (delta < 2 || s < 0 || s > n - delta) throw DomainError("grid requires delta >= 2 and 0 <= s <= n - delta");
  return APParams{PatternKind::grid, n, 0, delta, s};
}

std::optional<ApWitness> contains_ap(std::span<const int> set, int m, int n) {
  if (m < 1) throw DomainError("contains_ap: m must be >= 1");
  if (n < 1) throw DomainError("contains_ap: n must be positive");
  const Mask s = to_mask(set, n);
  for (int a = 0; a < n; ++a) {
    if (!(s >> a & 1)) continue;
    for (int b = 1; b < n; ++b) {
      const Mask p = ap_mask(a, b, m, n);
      if ((p & ~s) == 0) return ApWitness{a, b};
    }
  }
  return std::nullopt;
}

std::optional<GridWitness> contains_grid(std::span<const int> set, int delta, int s, int n) {
  if (delta < 2 || s < 0) throw DomainError("contains_grid: need delta >= 2 and s >= 0");
  const Mask mask = to_mask(set, n);
  const auto units = units_of(n);
  for (int a = 0; a < n; ++a) {
    if (!(mask >> a & 1)) continue;
    for (int b : units) {
      for (int c : units) {
        if ((grid_mask(a, b, c, delta, s, n) & ~mask) == 0) return GridWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

RamseyResult szemeredi_r(int m, int n) {
  RamseyResult out;
  out.params = APParams::ap(m, n);
  if (n > kApSearchCap) throw CapacityError("szemeredi_r: n above the search cap of 40");
  std::vector<Mask> patterns;
  for (int a = 0; a < n; ++a) {
    for (int b = 1; b < n; ++b) patterns.push_back(ap_mask(a, b, m, n));
  }
  PatternFreeSearch(n, std::move(patterns)).run(out);
  out.wraps = n > 1 && m >= smallest_prime_factor(n);
  return out;
}

RamseyResult szemeredi_grid(int delta, int s, int n) {
  RamseyResult out;
  out.params = APParams::grid(delta, s, n);
  if (n > kGridSearchCap) throw CapacityError("szemeredi_grid: n above the search cap of 24");
  const auto units = units_of(n);
  std::vector<Mask> patterns;
  for (int a = 0; a < n; ++a) {
    for (int b : units) {
      for (int c : units) patterns.push_back(grid_mask(a, b, c, delta, s, n));
    }
  }
  PatternFreeSearch(n, std::move(patterns)).run(out);
  return out;
}

ApBound ap_scan_bound(int n) {
  if (n < 2) throw DomainError("ap_scan_bound: n must be at least 2");
  ApBound b;
  b.n = n;
  b.value = INT32_MAX;
  for (int m = 1; m <= n; ++m) {
    const int r = szemeredi_r(m, n).value;
    b.r.push_back(r);
    if (m + n - r < b.value) {
      b.value = m + n - r;
      b.argmin = m;
    }
  }
  return b;
}

namespace {

void require_prime_coprime(u64 p, u64 q) {
  if (!is_prime(p)) throw DomainError("p must be prime (the bound fails for composite moduli)");
  if (std::gcd(p, q) != 1) throw DomainError("gcd(p, q) must be 1");
}

}  // namespace

ApBound prop_ram_lower(u64 p, u64 q) {
  require_prime_coprime(p, q);
  if (p > static_cast<u64>(kApSearchCap)) throw CapacityError("prop_ram_lower: p above the search cap");
  return ap_scan_bound(static_cast<int>(p));
}

GridBound prop_ram_grid_lower(u64 p, u64 q) {
  require_prime_coprime(p, q);
  if (p > static_cast<u64>(kGridSearchCap)) throw CapacityError("prop_ram_grid_lower: p above the search cap");
  const int n = static_cast<int>(p);
  GridBound g;
  g.n = n;
  g.value = INT32_MAX;
  for (int delta = 2; delta <= n; ++delta) {
    for (int s = 0; s <= n - delta; ++s) {
      const int r = szemeredi_grid(delta, s, n).value;
      ++g.searches;
      const int v = delta + s - 1 + n - r;
      if (v < g.value) {
        g.value = v;
        g.argmin_delta = delta;
        g.argmin_s = s;
      }
    }
  }
  return g;
}

}  // namespace uplab
