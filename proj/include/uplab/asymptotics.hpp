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

#ifndef UPLAB_ASYMPTOTICS_HPP
#define UPLAB_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uplab/cyclic.hpp"

namespace uplab {

using BigInt = boost::multiprecision::cpp_int;

/// Binary entropy; DomainError outside (0, 1).
double entropy(double x);

/// Upper envelope of delta + alpha_q(delta) from the asymptotic Plotkin
/// bound: 1 - delta/(q-1) for delta < (q-1)/q, delta otherwise.
double f_delta(double delta, u64 q);

struct Rational {
  u64 num = 0;
  u64 den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Supremum of admissible lambda: (q - 1)/q.
Rational plotkin_lambda_cap(u64 q);

/// Minimum of f_delta over the grid step, 2 step, ... below 1.
double plotkin_grid_min(u64 q, double step = 1e-4);

enum class Tri { no, yes, unknown };
const char* to_string(Tri t);

struct WeakUPRow {
  u64 p = 0;
  u64 ord = 0;
  int mu_lower = 0;
  int mu_upper = 0;
  Tri cond_order = Tri::unknown;  // ord < eps p
  Tri cond_mu = Tri::unknown;     // mu > lambda p

  bool mu_exact() const { return mu_lower == mu_upper; }
  bool both() const { return cond_order == Tri::yes && cond_mu == Tri::yes; }
};

Tri order_condition(u64 ord, u64 p, double eps);
Tri mu_condition(int mu_lower, int mu_upper, u64 p, double lambda);

std::vector<WeakUPRow> weak_up_scan(u64 q, double eps, double lambda, u64 p_max, const MuOptions& opts = {});

struct BallVolume {
  u64 n = 0;
  double alpha = 0;
  u64 q = 0;
  u64 radius = 0;               // floor(n^alpha)
  std::optional<BigInt> exact;  // absent when n exceeds kExactCap
  double log2_value = 0;        // from the exact value when present
  double log2_approx = 0;       // lgamma evaluation, always present

  static constexpr u64 kExactCap = 1'000'000;
};

/// (1 + r) C(n, r) (q - 1)^r with r = floor(n^alpha).
BallVolume ball_volume_upper(u64 n, double alpha, u64 q);

double log2_big(const BigInt& x);
u64 floor_pow(u64 n, double alpha);

/// ((n - n^(1 - alpha)) / p) H(R), the exponent of the count of generators.
double lambda_n_bound(double n, double p, double alpha, double R);

struct FAlpha {
  u64 p = 0;
  double alpha = 0;
  u64 q = 0;
  double R = 0;
  double first = 0;   // (1 - alpha) ln(N) N^alpha, N = q^p - 1
  double second = 0;  // ln(2) H(R) q^p / (p N^alpha)
  double value = 0;   // first - second
  std::optional<double> lhs_ln;  // natural log of the full left side
  double rhs_ln = 0;             // ln(1 / sqrt(R (1 - R)))
  bool finite = true;
};

FAlpha f_alpha(u64 p, double alpha, u64 q, double R);

struct ConstructionReport {
  u64 q = 0;
  u64 p = 0;
  double R = 0;
  u64 seed = 0;
  int n = 0;
  int linear_factors = 0;
  int s = 0;
  int s_prime = 0;
  std::vector<int> chosen;  // indices into the degree-p factors
  std::string gen;
  int dim = 0;
  int bch = 0;
  int ht = 0;
  DistanceResult distance;
  double rate = 0;
  double lambda_exponent = 0;
  BallVolume ball;
  BigInt binomial;  // C(s, s')
  double stirling = 0;
  double stirling_ratio = 0;  // stirling / binomial
};

inline constexpr int kConstructionMaxN = 1023;

ConstructionReport construction_demo(u64 q, u64 p, double R, u64 seed, const DistanceOptions& opts = {},
                                     double alpha = 0.4);

}  // namespace uplab

#endif  // UPLAB_ASYMPTOTICS_HPP
