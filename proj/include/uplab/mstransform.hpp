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

#ifndef UPLAB_MSTRANSFORM_HPP
#define UPLAB_MSTRANSFORM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uplab/gf.hpp"

namespace uplab {

/// A length-n word over F_q, symbols stored as packed F_q scalars.
using Word = std::vector<u64>;

/// Parses a digit string over F_q (0-9a-z).
Word parse_word(std::string_view digits, u64 q);
std::string format_word(std::span<const u64> word);

/// The evaluation vector (f(zeta), f(zeta^2), ..., f(zeta^n)); values[i-1]
/// holds f(zeta^i), so the last slot is f(1).
struct MSVector {
  int n = 0;
  std::vector<FFElem> values;

  int weight() const;
};

/// Transform context for words of length n over F_q.
class MSTransform {
 public:
  MSTransform(int n, u64 q);
  /// Uses zeta^root_power (coprime to n) as the primitive root instead.
  MSTransform(int n, u64 q, u64 root_power);

  int n() const { return n_; }
  const SplittingField& field() const { return sf_; }

  /// Horner evaluation at each zeta^i.
  MSVector forward(std::span<const u64> word) const;
  /// f_j = n^{-1} sum_i F_i zeta^{-ij}. Throws DomainError if the input
  /// breaks the conjugacy constraint or does not come from an F_q word.
  Word inverse(const MSVector& values) const;
  /// values[(q i) mod n] == values[i]^q for all i, and f(1) in F_q.
  bool conjugacy_holds(const MSVector& values) const;

  /// zeta^(i*j) for 1 <= i <= n, 0 <= j < n; row i-1.
  const std::vector<std::vector<FFElem>>& kernel() const { return kernel_; }

 private:
  int n_;
  SplittingField sf_;
  std::vector<std::vector<FFElem>> kernel_;
};

MSVector ms_forward(std::span<const u64> word, u64 q);
Word ms_inverse(const MSVector& values, u64 q);

struct NaiveUpCheck {
  int w = 0;
  int w_hat = 0;
  int product = 0;
  bool holds = false;
};

/// w_H(f) * w_H(f_hat) >= n. Throws DomainError for the zero word.
NaiveUpCheck naive_up_check(const MSTransform& t, std::span<const u64> word);
NaiveUpCheck naive_up_check(std::span<const u64> word, u64 q);

enum class ScanMode { exhaustive, random };

struct NaiveUpScan {
  int n = 0;
  u64 q = 0;
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t words = 0;
  int min_product = 0;
  Word argmin;
  std::uint64_t equality_cases = 0;  // product == n
  std::uint64_t violations = 0;      // product < n
};

/// Exhaustive mode needs q^n <= 2^24 and walks every nonzero word in Gray
/// order; random mode draws `trials` nonzero words from a seeded generator.
NaiveUpScan naive_up_scan(int n, u64 q, ScanMode mode, std::uint64_t trials = 0, std::uint64_t seed = 0);

}  // namespace uplab

#endif  // UPLAB_MSTRANSFORM_HPP
