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
#include <climits>
#include <numeric>

#include "uplab/cyclic.hpp"
#include "uplab/errors.hpp"

namespace uplab {

namespace {

// Smallest image of the zero set under multiplication by a unit. Codes with
// equal keys are permutation-equivalent and share their minimum distance.
std::vector<int> multiplier_key(const std::vector<int>& zeros, int n) {
  std::vector<int> best = zeros;
  std::vector<int> image(zeros.size());
  for (int u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (std::size_t i = 0; i < zeros.size(); ++i) image[i] = static_cast<int>(static_cast<long>(zeros[i]) * u % n);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

struct Reusable {
  std::string gen;
  DistanceResult distance;
};

}  // namespace

MuRecord mu(int n, u64 q, const MuOptions& opts) {
  const CodeFamily family(n, q);
  const auto codes = family.enumerate();

  MuRecord rec;
  rec.q = q;
  rec.n = n;
  rec.per_divisor.reserve(codes.size());

  int incumbent = INT_MAX;  // min over examined codes of dim + upper
  std::vector<std::pair<std::uint64_t, int>> lower_by_mask;
  std::map<std::vector<int>, Reusable> equivalents;

  for (const auto& code : codes) {
    DivisorRecord d;
    d.gen = code.gen.to_string();
    d.dim = code.dim;
    const int k = code.dim;
    const int singleton = n - k + 1;

    // C(gen) sits inside C(h) whenever h | gen, so d(C(gen)) >= d(C(h)).
    int lb = bch_bound(code.zeros, n);
    for (const auto& [mask, lower] : lower_by_mask) {
      if ((mask & ~code.factor_mask) == 0 && mask != code.factor_mask) lb = std::max(lb, lower);
    }
    bool pruned = false;
    if (opts.prune && incumbent != INT_MAX) {
      if (k + lb < incumbent && k + static_cast<int>(code.zeros.size()) + 1 >= incumbent) {
        lb = std::max(lb, ht_bound(code.zeros, n));
      }
      pruned = k + lb >= incumbent;
    }

    if (pruned) {
      d.distance = DistanceResult{lb, singleton, DistanceMethod::bch_only, 0};
      d.pruned = true;
      d.source = "bound";
    } else if (const DistanceResult* hit = opts.known ? opts.known->find(q, n, d.gen) : nullptr;
               hit && hit->exact()) {
      d.distance = *hit;
      d.distance.work = 0;
      d.source = "cache";
    } else {
      std::vector<int> key;
      if (opts.reuse_equivalent) key = multiplier_key(code.zeros, n);
      if (auto it = equivalents.find(key); opts.reuse_equivalent && it != equivalents.end()) {
        d.distance = it->second.distance;
        d.distance.work = 0;
        d.source = "equivalent:" + it->second.gen;
      } else {
        DistanceOptions dopts = opts.distance;
        if (opts.prune && incumbent != INT_MAX) dopts.stop_when_lower_reaches = incumbent - k;
        d.distance = min_distance(code, dopts);
        d.distance.lower = std::max(d.distance.lower, std::min(lb, d.distance.upper));
        d.source = "computed";
        if (!d.distance.exact() && opts.prune && incumbent != INT_MAX && k + d.distance.lower >= incumbent) {
          d.pruned = true;
        }
        if (d.distance.exact() && opts.reuse_equivalent) equivalents.emplace(key, Reusable{d.gen, d.distance});
      }
    }

    lower_by_mask.emplace_back(code.factor_mask, d.distance.lower);
    incumbent = std::min(incumbent, k + d.distance.upper);
    rec.per_divisor.push_back(std::move(d));
  }

  rec.mu_lower = INT_MAX;
  rec.mu_upper = INT_MAX;
  for (const auto& d : rec.per_divisor) {
    rec.mu_lower = std::min(rec.mu_lower, d.dim + d.distance.lower);
    rec.mu_upper = std::min(rec.mu_upper, d.dim + d.distance.upper);
  }
  for (std::size_t i = 0; i < rec.per_divisor.size(); ++i) {
    const auto& d = rec.per_divisor[i];
    if (d.dim + d.distance.upper == rec.mu_upper && (d.distance.exact() || !rec.exact())) {
      rec.witness = static_cast<int>(i);
      break;
    }
  }
  if (rec.mu_upper > n + 1) throw InternalError("mu exceeds the Singleton bound n + 1");
  return rec;
}

StrongUpWitness strong_up_witness(u64 p, u64 q, const DistanceOptions& opts) {
  if (!is_prime(p)) throw DomainError("strong_up_witness: p must be prime");
  if (std::gcd(p, q) != 1) throw DomainError("strong_up_witness: gcd(p, q) must be 1");
  if (p > 4096) throw CapacityError("strong_up_witness: p too large");
  StrongUpWitness out;
  out.p = p;
  out.q = q;
  out.q_primitive = is_primitive_mod(q, p);
  out.theorem_applies = !out.q_primitive && p > 2 * q - 2;
  const int n = static_cast<int>(p);

  if (out.q_primitive) {
    MuOptions mo;
    mo.distance = opts;
    out.mu_record = mu(n, q, mo);
    if (!out.mu_record->exact()) {
      out.decided = false;
    } else if (out.mu_record->mu() != n + 1) {
      throw InternalError("q is primitive mod p but mu(F_q, p) != p + 1");
    }
    return out;
  }

  const CodeFamily family(n, q);
  bool undecided = false;
  for (const auto& code : family.enumerate()) {
    const int k = code.dim;
    if (k >= n) continue;
    const int target = n - k;  // need d <= target
    if (bch_bound(code.zeros, n) > target) continue;
    DistanceOptions probe = opts;
    probe.stop_when_upper_reaches = target;
    probe.stop_when_lower_reaches = target + 1;
    const DistanceResult r = min_distance(code, probe);
    if (r.upper <= target) {
      DivisorRecord w;
      w.gen = code.gen.to_string();
      w.dim = k;
      DistanceOptions full = opts;
      full.stop_when_lower_reaches = 0;
      full.stop_when_upper_reaches = 0;
      w.distance = min_distance(code, full);
      w.source = "computed";
      out.witness = std::move(w);
      return out;
    }
    if (r.lower <= target) undecided = true;
  }
  if (undecided) {
    out.decided = false;
  } else if (out.theorem_applies) {
    throw InternalError("no divisor with dim + d <= p although q is not primitive mod p");
  }
  return out;
}

}  // namespace uplab
