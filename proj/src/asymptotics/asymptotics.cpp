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

#include "uplab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "uplab/errors.hpp"

namespace uplab {

double entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("entropy: argument must lie in (0, 1)");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double f_delta(double delta, u64 q) {
  if (q < 2) throw DomainError("f_delta: q must be at least 2");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("f_delta: delta must lie in (0, 1)");
  const double qd = static_cast<double>(q);
  const double knee = (qd - 1.0) / qd;
  return delta < knee ? 1.0 - delta / (qd - 1.0) : delta;
}

Rational plotkin_lambda_cap(u64 q) {
  if (q < 2) throw DomainError("plotkin_lambda_cap: q must be at least 2");
  return Rational{q - 1, q};  // already in lowest terms
}

double plotkin_grid_min(u64 q, double step) {
  if (!(step > 0.0 && step < 1.0)) throw DomainError("plotkin_grid_min: step must lie in (0, 1)");
  double best = 2.0;
  const auto points = static_cast<long>(std::ceil(1.0 / step));
  for (long i = 1; i < points; ++i) {
    const double d = static_cast<double>(i) * step;
    if (d >= 1.0) break;
    best = std::min(best, f_delta(d, q));
  }
  return best;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Tri order_condition(u64 ord, u64 p, double eps) {
  return static_cast<double>(ord) < eps * static_cast<double>(p) ? Tri::yes : Tri::no;
}

Tri mu_condition(int mu_lower, int mu_upper, u64 p, double lambda) {
  const double bar = lambda * static_cast<double>(p);
  if (static_cast<double>(mu_lower) > bar) return Tri::yes;
  if (static_cast<double>(mu_upper) <= bar) return Tri::no;
  return Tri::unknown;
}

std::vector<WeakUPRow> weak_up_scan(u64 q, double eps, double lambda, u64 p_max, const MuOptions& opts) {
  if (!(eps > 0.0 && eps < lambda && lambda <= 1.0)) throw DomainError("weak_up_scan: need 0 < eps < lambda <= 1");
  const PrimePower qq = PrimePower::from_q(q);
  std::vector<WeakUPRow> rows;
  for (u64 p = 2; p <= p_max; ++p) {
    if (!is_prime(p) || p == qq.p) continue;
    WeakUPRow row;
    row.p = p;
    row.ord = ord_mod(q % p, p);
    const MuRecord m = mu(static_cast<int>(p), q, opts);
    row.mu_lower = m.mu_lower;
    row.mu_upper = m.mu_upper;
    row.cond_order = order_condition(row.ord, p, eps);
    row.cond_mu = mu_condition(row.mu_lower, row.mu_upper, p, lambda);
    rows.push_back(row);
  }
  return rows;
}

u64 floor_pow(u64 n, double alpha) {
  const double x = std::pow(static_cast<double>(n), alpha);
  auto r = static_cast<u64>(std::floor(x));
  // pow may land a hair below an exact integer power (49^0.5 -> 6.99...).
  if (std::fabs(x - static_cast<double>(r + 1)) <= 1e-9 * x) ++r;
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log2_big: argument must be positive");
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 53) return std::log2(x.convert_to<double>());
  const BigInt top = x >> static_cast<unsigned>(msb - 52);
  return static_cast<double>(msb - 52) + std::log2(top.convert_to<double>());
}

namespace {

double log2_binomial(double n, double k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::numbers::ln2;
}

BigInt binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (u64 i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

}  // namespace

BallVolume ball_volume_upper(u64 n, double alpha, u64 q) {
  if (n < 2) throw DomainError("ball_volume_upper: n must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("ball_volume_upper: alpha must lie in (0, 1)");
  if (q < 2) throw DomainError("ball_volume_upper: q must be at least 2");
  BallVolume b;
  b.n = n;
  b.alpha = alpha;
  b.q = q;
  b.radius = floor_pow(n, alpha);
  const double r = static_cast<double>(b.radius);
  b.log2_approx = std::log2(1.0 + r) + log2_binomial(static_cast<double>(n), r) +
                  r * std::log2(static_cast<double>(q - 1));
  if (n <= BallVolume::kExactCap) {
    BigInt v = binomial(n, b.radius) * (b.radius + 1);
    v *= boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(b.radius));
    b.log2_value = log2_big(v);
    b.exact = std::move(v);
  } else {
    b.log2_value = b.log2_approx;
  }
  return b;
}

double lambda_n_bound(double n, double p, double alpha, double R) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("lambda_n_bound: alpha must lie in (0, 1)");
  if (p < 2.0) throw DomainError("lambda_n_bound: p must be at least 2");
  return (n - std::pow(n, 1.0 - alpha)) / p * entropy(R);
}

FAlpha f_alpha(u64 p, double alpha, u64 q, double R) {
  if (!is_prime(p)) throw DomainError("f_alpha: p must be prime");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("f_alpha: alpha must lie in (0, 1)");
  if (q < 2) throw DomainError("f_alpha: q must be at least 2");
  const double h = entropy(R);
  FAlpha f;
  f.p = p;
  f.alpha = alpha;
  f.q = q;
  f.R = R;

  const double pd = static_cast<double>(p);
  const double ln_qp = pd * std::log(static_cast<double>(q));  // ln q^p
  const double ln_n = ln_qp + std::log1p(-std::exp(-ln_qp));   // ln(q^p - 1)
  const double n_alpha = std::exp(alpha * ln_n);
  f.first = (1.0 - alpha) * ln_n * n_alpha;
  f.second = std::numbers::ln2 * h * std::exp(ln_qp - std::log(pd) - alpha * ln_n);
  f.value = f.first - f.second;
  f.finite = std::isfinite(f.value);
  f.rhs_ln = -0.5 * std::log(R * (1.0 - R));

  const double n_1ma = std::exp((1.0 - alpha) * ln_n);
  const double n_2am1 = std::exp((2.0 * alpha - 1.0) * ln_n);
  const double qd = static_cast<double>(q);
  // q^p - q = (q^p - 1) - (q - 1)
  const double ln_count = ln_n + std::log1p(-(qd - 1.0) / std::exp(ln_n)) - std::log(pd);
  const double lhs = std::numbers::ln2 * h * (-n_1ma + (qd - 1.0)) / pd +
                     (-n_alpha * (alpha - 1.0) + alpha / 2.0) * ln_n + (n_alpha - n_2am1) +
                     n_alpha * std::log(qd - 1.0) + 0.5 * ln_count;
  if (std::isfinite(lhs)) f.lhs_ln = lhs;
  return f;
}

ConstructionReport construction_demo(u64 q, u64 p, double R, u64 seed, const DistanceOptions& opts,
                                     double alpha) {
  if (!is_prime(p)) throw DomainError("construction_demo: p must be prime");
  if (!(R > 0.0 && R < 1.0)) throw DomainError("construction_demo: R must lie in (0, 1)");
  u64 qp = 0;
  if (!checked_pow(q, p, qp) || qp - 1 > static_cast<u64>(kConstructionMaxN)) {
    throw CapacityError("construction_demo: q^p - 1 exceeds " + std::to_string(kConstructionMaxN));
  }
  ConstructionReport r;
  r.q = q;
  r.p = p;
  r.R = R;
  r.seed = seed;
  r.n = static_cast<int>(qp - 1);

  const CodeFamily family(r.n, q);
  std::vector<int> degree_p;
  for (std::size_t i = 0; i < family.factors().size(); ++i) {
    const int d = family.factors()[i].degree();
    if (d == 1) {
      ++r.linear_factors;
    } else if (static_cast<u64>(d) == p) {
      degree_p.push_back(static_cast<int>(i));
    } else {
      throw InternalError("construction_demo: factor of unexpected degree " + std::to_string(d));
    }
  }
  r.s = static_cast<int>(degree_p.size());
  if (static_cast<u64>(r.linear_factors) != q - 1 ||
      static_cast<u64>(r.n) != q - 1 + static_cast<u64>(r.s) * p) {
    throw InternalError("construction_demo: factor census violates n = q - 1 + s p");
  }
  r.s_prime = static_cast<int>(std::floor(r.s * (1.0 - R)));

  std::vector<int> order(static_cast<std::size_t>(r.s));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(order[i - 1], order[j]);
  }
  r.chosen.assign(order.begin(), order.begin() + r.s_prime);
  std::sort(r.chosen.begin(), r.chosen.end());

  std::uint64_t mask = 0;
  for (int c : r.chosen) mask |= std::uint64_t{1} << degree_p[static_cast<std::size_t>(c)];
  const CyclicCode code = family.code(mask);
  r.gen = code.gen.to_string();
  r.dim = code.dim;
  if (static_cast<u64>(r.dim) != static_cast<u64>(r.n) - p * static_cast<u64>(r.s_prime)) {
    throw InternalError("construction_demo: dimension differs from n - p s'");
  }
  r.bch = bch_bound(code.zeros, r.n);
  r.ht = ht_bound(code.zeros, r.n);
  r.distance = min_distance(code, opts);

  r.rate = static_cast<double>(r.dim) / r.n;
  r.lambda_exponent = lambda_n_bound(r.n, static_cast<double>(p), alpha, R);
  r.ball = ball_volume_upper(static_cast<u64>(r.n), alpha, q);
  r.binomial = binomial(static_cast<u64>(r.s), static_cast<u64>(r.s_prime));
  const double sd = r.s;
  r.stirling = std::exp2(sd * entropy(R)) / std::sqrt(2.0 * std::numbers::pi * sd * R * (1.0 - R));
  r.stirling_ratio = r.stirling / r.binomial.convert_to<double>();
  return r;
}

}  // namespace uplab
