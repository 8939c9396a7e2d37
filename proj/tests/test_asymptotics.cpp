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

#include <cmath>
#include <set>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "gtest/gtest.h"
#include "uplab/asymptotics.hpp"
#include "uplab/errors.hpp"

namespace uplab {
namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

double entropy_hp(double x) {
  const Dec X(x);
  const Dec ln2 = log(Dec(2));
  const Dec h = -(X * log(X) + (1 - X) * log(1 - X)) / ln2;
  return h.convert_to<double>();
}

TEST(Entropy, Values) {
  EXPECT_DOUBLE_EQ(entropy(0.5), 1.0);
  EXPECT_NEAR(entropy(0.25), 0.811278, 1e-6);
  for (double x = 0.001; x < 1.0; x += 0.0137) {
    EXPECT_NEAR(entropy(x), entropy_hp(x), 1e-14) << x;
    EXPECT_NEAR(entropy(x), entropy(1.0 - x), 1e-14);
  }
  EXPECT_THROW(entropy(0.0), DomainError);
  EXPECT_THROW(entropy(1.0), DomainError);
  EXPECT_THROW(entropy(-0.2), DomainError);
}

TEST(Entropy, Concave) {
  const double h = 1e-3;
  for (double x = 0.01; x < 0.99; x += 0.01) EXPECT_LT(entropy(x - h) - 2 * entropy(x) + entropy(x + h), 0.0);
}

TEST(Plotkin, CapAndGrid) {
  EXPECT_EQ(plotkin_lambda_cap(2), (Rational{1, 2}));
  EXPECT_EQ(plotkin_lambda_cap(4), (Rational{3, 4}));
  for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    EXPECT_NEAR(plotkin_grid_min(q), plotkin_lambda_cap(q).value(), 1e-3) << q;
    EXPECT_GE(plotkin_grid_min(q), plotkin_lambda_cap(q).value() - 1e-12);
  }
  EXPECT_DOUBLE_EQ(f_delta(0.25, 2), 0.75);
  EXPECT_DOUBLE_EQ(f_delta(0.75, 2), 0.75);
  EXPECT_THROW(plotkin_lambda_cap(1), DomainError);
}

TEST(Ball, SmallExample) {
  const auto b = ball_volume_upper(7, 0.5, 2);
  EXPECT_EQ(b.radius, 2u);
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(*b.exact, 63);
  EXPECT_NEAR(b.log2_value, std::log2(63.0), 1e-12);
}

TEST(Ball, ExactAgainstPascalAndLogBranch) {
  // Pascal's triangle up to 200 rows as an independent binomial source.
  std::vector<std::vector<BigInt>> pascal(201);
  for (int n = 0; n <= 200; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (u64 n : {2u, 10u, 49u, 100u, 200u}) {
    for (double alpha : {0.3, 0.5, 0.7}) {
      for (u64 q : {2u, 3u, 5u}) {
        const auto b = ball_volume_upper(n, alpha, q);
        BigInt expected = pascal[n][b.radius] * (b.radius + 1);
        for (u64 i = 0; i < b.radius; ++i) expected *= q - 1;
        ASSERT_TRUE(b.exact);
        EXPECT_EQ(*b.exact, expected) << n << " " << alpha << " " << q;
      }
    }
  }
  EXPECT_EQ(ball_volume_upper(49, 0.5, 2).radius, 7u);
  for (u64 n = 2; n <= 1000; n += 37) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const auto b = ball_volume_upper(n, alpha, 3);
      EXPECT_NEAR(b.log2_approx, b.log2_value, 1e-9 * std::max(1.0, b.log2_value)) << n << " " << alpha;
    }
  }
  const auto big = ball_volume_upper(BallVolume::kExactCap + 1, 0.5, 2);
  EXPECT_FALSE(big.exact);
  EXPECT_GT(big.log2_value, 0.0);
}

TEST(Lambda, Values) {
  EXPECT_NEAR(lambda_n_bound(7, 3, 0.5, 0.5), (7 - std::sqrt(7.0)) / 3, 1e-12);
  EXPECT_NEAR(lambda_n_bound(7, 3, 0.5, 0.5), 1.4514, 1e-4);
  EXPECT_NEAR(lambda_n_bound(100, 5, 0.4, 0.25), lambda_n_bound(100, 5, 0.4, 0.5) * entropy(0.25), 1e-12);
  EXPECT_LT(lambda_n_bound(100, 5, 0.4, 1e-12), 1e-9);
}

TEST(FAlpha, SignDichotomy) {
  const std::vector<u64> primes = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  std::vector<double> low, high;
  for (u64 p : primes) {
    const auto a = f_alpha(p, 0.4, 2, 0.5);
    const auto b = f_alpha(p, 0.6, 2, 0.5);
    ASSERT_TRUE(a.finite);
    ASSERT_TRUE(b.finite);
    low.push_back(a.value);
    high.push_back(b.value);
  }
  // alpha = 0.4: strictly decreasing over the tail and negative at the end.
  for (std::size_t i = primes.size() - 4; i + 1 < primes.size(); ++i) EXPECT_GT(low[i], low[i + 1]);
  EXPECT_LT(low.back(), 0.0);
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) EXPECT_LT(high[i], high[i + 1]);
  EXPECT_GT(high.back(), 0.0);
}

TEST(FAlpha, EntropyCoefficientPeaksAtHalf) {
  const double at_half = f_alpha(23, 0.4, 2, 0.5).second;
  for (double R : {0.1, 0.3, 0.45, 0.55, 0.9}) EXPECT_LT(f_alpha(23, 0.4, 2, R).second, at_half);
}

TEST(FAlpha, FullLeftSideTracksLeadingTerms) {
  const auto f = f_alpha(13, 0.4, 2, 0.5);
  ASSERT_TRUE(f.lhs_ln);
  EXPECT_TRUE(std::isfinite(*f.lhs_ln));
  EXPECT_NEAR(f.rhs_ln, std::log(2.0), 1e-12);
  // Both sides are dominated by the same two terms; their gap is lower order.
  const auto g = f_alpha(61, 0.4, 2, 0.5);
  ASSERT_TRUE(g.lhs_ln);
  EXPECT_LT(std::fabs(*g.lhs_ln - g.value), 0.05 * std::fabs(g.value));
  EXPECT_THROW(f_alpha(12, 0.4, 2, 0.5), DomainError);
}

TEST(Construction, SevenFourThree) {
  const auto c = construction_demo(2, 3, 0.5, 1);
  EXPECT_EQ(c.n, 7);
  EXPECT_EQ(c.linear_factors, 1);
  EXPECT_EQ(c.s, 2);
  EXPECT_EQ(c.s_prime, 1);
  EXPECT_EQ(c.dim, 4);
  EXPECT_TRUE(c.distance.exact());
  EXPECT_EQ(c.distance.lower, 3);
  EXPECT_EQ(c.n, c.linear_factors + c.s * 3);
  ASSERT_TRUE(c.ball.exact);
  EXPECT_EQ(*c.ball.exact, ball_volume_upper(7, 0.4, 2).exact.value());
  EXPECT_EQ(c.binomial, 2);
}

TEST(Construction, CensusAndRate) {
  const auto c = construction_demo(2, 5, 0.5, 42);
  EXPECT_EQ(c.n, 31);
  EXPECT_EQ(c.s, 6);
  EXPECT_EQ(c.s_prime, 3);
  EXPECT_EQ(c.dim, 31 - 15);
  EXPECT_EQ(c.chosen.size(), 3u);
  EXPECT_GE(c.distance.lower, c.bch);
  EXPECT_LE(c.bch, c.ht);
  const auto again = construction_demo(2, 5, 0.5, 42);
  EXPECT_EQ(again.chosen, c.chosen);
  EXPECT_EQ(again.gen, c.gen);
  const auto c3 = construction_demo(3, 3, 0.3, 7);
  EXPECT_EQ(c3.n, 26);
  EXPECT_EQ(c3.linear_factors, 2);
  EXPECT_EQ(c3.s, 8);
  EXPECT_EQ(c3.dim, 26 - 3 * c3.s_prime);
  EXPECT_THROW(construction_demo(2, 11, 0.5, 1), CapacityError);
  EXPECT_THROW(construction_demo(2, 4, 0.5, 1), DomainError);
  // Rate approaches R as p grows.
  EXPECT_LT(std::fabs(construction_demo(2, 7, 0.5, 3).rate - 0.5), std::fabs(construction_demo(2, 3, 0.5, 3).rate - 0.5) + 1e-12);
}

TEST(WeakUp, Rows) {
  const auto rows = weak_up_scan(2, 0.2, 0.6, 35);
  bool saw31 = false;
  for (const auto& r : rows) {
    EXPECT_EQ(r.cond_order, order_condition(ord_mod(2, r.p), r.p, 0.2));
    EXPECT_EQ(r.cond_mu, mu_condition(r.mu_lower, r.mu_upper, r.p, 0.6));
    if (r.p == 31) {
      saw31 = true;
      EXPECT_EQ(r.ord, 5u);
      EXPECT_EQ(r.mu_lower, 20);
      EXPECT_TRUE(r.both());
    }
    if (r.p == 5) {
      EXPECT_EQ(r.ord, 4u);
      EXPECT_EQ(r.mu_lower, 6);
    }
  }
  EXPECT_TRUE(saw31);
  const std::set<u64> table = {7, 17, 23, 31, 41, 43, 47};
  for (const auto& r : weak_up_scan(2, 0.2, 0.9, 47)) {
    if (!table.count(r.p)) continue;
    EXPECT_FALSE(r.both()) << r.p;
    EXPECT_EQ(r.cond_mu == Tri::yes, r.p == 7) << r.p;  // 7 > 6.3 is the lone large-mu row
  }
  EXPECT_EQ(mu_condition(10, 12, 20, 0.55), Tri::unknown);
  EXPECT_THROW(weak_up_scan(2, 0.7, 0.6, 10), DomainError);
}

}  // namespace
}  // namespace uplab
