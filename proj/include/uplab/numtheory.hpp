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

#ifndef UPLAB_NUMTHEORY_HPP
#define UPLAB_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace uplab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// A prime power q = p^e.
struct PrimePower {
  u64 p = 2;
  int e = 1;
  u64 q = 2;

  /// Throws DomainError unless p is prime and p^e fits in 64 bits.
  static PrimePower make(u64 p, int e);
  /// Decomposes q; throws DomainError if q is not a prime power.
  static PrimePower from_q(u64 q);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division up to 10^6, then Brent's variant of Pollard rho.
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 euler_phi(u64 n);

/// Multiplicative order of q in (Z/nZ)^*. Requires n >= 2 and gcd(q, n) = 1.
u64 ord_mod(u64 q, u64 n);

/// True iff q generates (Z/nZ)^*.
bool is_primitive_mod(u64 q, u64 n);

/// Checked integer power; returns false on 64-bit overflow.
bool checked_pow(u64 base, u64 exp, u64& out);

}  // namespace uplab

#endif  // UPLAB_NUMTHEORY_HPP
