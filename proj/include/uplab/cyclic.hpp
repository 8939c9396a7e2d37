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

#ifndef UPLAB_CYCLIC_HPP
#define UPLAB_CYCLIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "uplab/gf.hpp"
#include "uplab/polyring.hpp"

namespace uplab {

/// The ideal C(gen) of F_q[x]/(x^n - 1), gen a monic proper divisor of x^n - 1.
struct CyclicCode {
  PrimePower q;
  int n = 0;
  FPoly gen;
  std::vector<int> zeros;  // i with gen(zeta^i) = 0, sorted
  int dim = 0;
  std::uint64_t factor_mask = 0;  // bit c set iff the factor of coset c divides gen

  CyclicCode(PrimePower q_, int n_, FPoly gen_) : q(q_), n(n_), gen(std::move(gen_)) {}
};

/// All cyclic codes of one length over one field, sharing the factorization
/// of x^n - 1 and the canonical root of unity.
class CodeFamily {
 public:
  static constexpr int kMaxFactors = 30;

  CodeFamily(int n, u64 q);

  int n() const { return n_; }
  const PrimePower& q() const { return q_; }
  const SplittingField& field() const { return sf_; }
  const CosetPartition& cosets() const { return cosets_; }
  const std::vector<FPoly>& factors() const { return factors_; }

  /// Code generated by the product of the factors selected in mask.
  CyclicCode code(std::uint64_t mask) const;
  /// Validates that gen is a monic proper divisor of x^n - 1.
  CyclicCode code_from_generator(const FPoly& gen) const;
  /// Every nonzero code, ascending deg(gen), ties by serialized generator.
  std::vector<CyclicCode> enumerate() const;

 private:
  int n_;
  PrimePower q_;
  SplittingField sf_;
  CosetPartition cosets_;
  std::vector<FPoly> factors_;
};

std::vector<CyclicCode> enumerate_codes(int n, u64 q);

/// Largest delta such that zeros holds delta - 1 terms {a, a+b, ...} with
/// gcd(b, n) = 1. Returns 1 for an empty set.
int bch_bound(std::span<const int> zeros, int n);

/// Largest delta + s over patterns {a + k b + r c : 0 <= k <= delta-2,
/// 0 <= r <= s} inside zeros, b and c coprime to n. At least bch_bound.
int ht_bound(std::span<const int> zeros, int n);

enum class DistanceMethod { exhaustive, bz, bch_only };

std::string_view to_string(DistanceMethod m);
std::optional<DistanceMethod> parse_distance_method(std::string_view s);

struct DistanceResult {
  int lower = 1;
  int upper = 0;
  DistanceMethod method = DistanceMethod::exhaustive;
  std::uint64_t work = 0;  // codewords evaluated

  bool exact() const { return lower == upper; }
  friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

struct DistanceOptions {
  enum class Strategy { automatic, exhaustive, bz };

  /// Exhaustive enumeration runs iff q^dim <= budget; it also caps the
  /// number of codewords Brouwer-Zimmermann may evaluate.
  std::uint64_t budget = std::uint64_t{1} << 28;
  int workers = 1;
  Strategy strategy = Strategy::automatic;
  /// Stop once the lower bound reaches this value (0 disables).
  int stop_when_lower_reaches = 0;
  /// Stop once a codeword of at most this weight is seen (0 disables).
  int stop_when_upper_reaches = 0;
};

DistanceResult min_distance(const CyclicCode& code, const DistanceOptions& opts = {});

/// Exact distances known in advance (a read-only snapshot of a result cache).
class KnownDistances {
 public:
  void insert(u64 q, int n, const std::string& gen, const DistanceResult& d);
  const DistanceResult* find(u64 q, int n, const std::string& gen) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::map<std::tuple<u64, int, std::string>, DistanceResult> map_;
};

struct DivisorRecord {
  std::string gen;
  int dim = 0;
  DistanceResult distance;
  bool pruned = false;  // skipped: dim + lower bound cannot beat the incumbent
  std::string source;   // "computed", "bound", "cache", or "equivalent:<gen>"
};

struct MuRecord {
  u64 q = 0;
  int n = 0;
  int mu_lower = 0;
  int mu_upper = 0;
  int witness = -1;  // index into per_divisor
  std::vector<DivisorRecord> per_divisor;

  bool exact() const { return mu_lower == mu_upper; }
  int mu() const { return mu_lower; }
};

struct MuOptions {
  DistanceOptions distance;
  const KnownDistances* known = nullptr;
  /// Skip codes whose dim + designed distance cannot beat the incumbent.
  bool prune = true;
  /// Reuse distances across codes whose zero sets differ by a unit multiplier.
  bool reuse_equivalent = true;
};

/// mu(F_q, n) = min over nonzero cyclic codes of d + dim.
MuRecord mu(int n, u64 q, const MuOptions& opts = {});

struct StrongUpWitness {
  u64 p = 0;
  u64 q = 0;
  bool q_primitive = false;
  bool theorem_applies = false;  // q not primitive mod p and p > 2q - 2
  bool decided = true;           // false when the budget left codes undecided
  std::optional<DivisorRecord> witness;
  std::optional<MuRecord> mu_record;  // filled on the primitive branch
};

/// Throws InternalError if a computed instance contradicts the theorem.
StrongUpWitness strong_up_witness(u64 p, u64 q, const DistanceOptions& opts = {});

}  // namespace uplab

#endif  // UPLAB_CYCLIC_HPP
