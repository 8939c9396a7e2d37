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

#include "uplab/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uplab/errors.hpp"

namespace uplab {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool checked_pow(u64 base, u64 exp, u64& out) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return false;
    r *= base;
  }
  out = r;
  return true;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic set below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 rho_split(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = rho_split(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<u64> primes;
  constexpr u64 kTrialLimit = 1'000'000;
  for (u64 d = 2; d <= kTrialLimit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) split_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 ord_mod(u64 q, u64 n) {
  if (n < 2) throw DomainError("ord_mod: modulus must be at least 2");
  if (std::gcd(q % n, n) != 1) {
    throw DomainError("ord_mod: gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
  }
  u64 t = euler_phi(n);
  for (auto [r, e] : factorize(t)) {
    for (int i = 0; i < e && t % r == 0; ++i) {
      if (pow_mod(q, t / r, n) != 1) break;
      t /= r;
    }
  }
  return t;
}

bool is_primitive_mod(u64 q, u64 n) { return ord_mod(q, n) == euler_phi(n); }

PrimePower PrimePower::make(u64 p, int e) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (e < 1) throw DomainError("prime power exponent must be >= 1");
  u64 q = 0;
  if (!checked_pow(p, static_cast<u64>(e), q)) throw DomainError("prime power overflows 64 bits");
  return PrimePower{p, e, q};
}

PrimePower PrimePower::from_q(u64 q) {
  if (q < 2) throw DomainError("not a prime power: " + std::to_string(q));
  auto f = factorize(q);
  if (f.size() != 1) throw DomainError("not a prime power: " + std::to_string(q));
  return PrimePower{f[0].first, f[0].second, q};
}

}  // namespace uplab
