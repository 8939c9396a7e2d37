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

#include "uplab/cyclic.hpp"
#include "uplab/errors.hpp"

namespace uplab {

CodeFamily::CodeFamily(int n, u64 q)
    : n_(n),
      q_(PrimePower::from_q(q)),
      sf_(splitting_field(q_, static_cast<u64>(n))),
      cosets_(cyclotomic_cosets(n, q)),
      factors_(factor_xn_minus_1(n, q, sf_)) {}

CyclicCode CodeFamily::code(std::uint64_t mask) const {
  const std::size_t t = factors_.size();
  const std::uint64_t full = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
  if ((mask & ~full) != 0) throw DomainError("factor mask out of range");
  if (mask == full) throw DomainError("the generator x^n - 1 gives the zero code");
  FPoly gen(sf_.base, {1});
  std::vector<int> zeros;
  for (std::size_t c = 0; c < t; ++c) {
    if (!(mask >> c & 1)) continue;
    gen = gen * factors_[c];
    zeros.insert(zeros.end(), cosets_.cosets[c].begin(), cosets_.cosets[c].end());
  }
  std::sort(zeros.begin(), zeros.end());
  CyclicCode code(q_, n_, std::move(gen));
  code.zeros = std::move(zeros);
  code.dim = n_ - code.gen.degree();
  code.factor_mask = mask;
  return code;
}

CyclicCode CodeFamily::code_from_generator(const FPoly& gen) const {
  if (!gen.field()->same_field(*sf_.base)) throw DomainError("generator is not over F_q");
  if (!gen.is_monic()) throw DomainError("generator must be monic");
  const FPoly xn1 = FPoly::x_n_minus_1(sf_.base, n_);
  if (!rem(xn1, gen).is_zero()) throw DomainError("generator does not divide x^n - 1");
  if (gen.degree() >= n_) throw DomainError("the generator x^n - 1 gives the zero code");
  std::uint64_t mask = 0;
  for (std::size_t c = 0; c < factors_.size(); ++c) {
    if (rem(gen, factors_[c]).is_zero()) mask |= std::uint64_t{1} << c;
  }
  CyclicCode code = this->code(mask);
  if (!(code.gen == gen)) throw InternalError("generator is not the product of its irreducible factors");
  return code;
}

std::vector<CyclicCode> CodeFamily::enumerate() const {
  const std::size_t t = factors_.size();
  if (t > static_cast<std::size_t>(kMaxFactors)) {
    throw CapacityError("x^" + std::to_string(n_) + " - 1 has " + std::to_string(t) +
                        " irreducible factors; enumerating 2^t codes is infeasible");
  }
  const std::uint64_t full = (std::uint64_t{1} << t) - 1;
  std::vector<CyclicCode> codes;
  codes.reserve(full);
  for (std::uint64_t mask = 0; mask < full; ++mask) codes.push_back(code(mask));
  std::vector<std::string> keys;
  std::vector<std::size_t> order(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    order[i] = i;
    keys.push_back(codes[i].gen.to_string());
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int da = codes[a].gen.degree(), db = codes[b].gen.degree();
    if (da != db) return da < db;
    return keys[a] < keys[b];
  });
  std::vector<CyclicCode> sorted;
  sorted.reserve(codes.size());
  for (std::size_t i : order) sorted.push_back(std::move(codes[i]));
  return sorted;
}

std::vector<CyclicCode> enumerate_codes(int n, u64 q) { return CodeFamily(n, q).enumerate(); }

}  // namespace uplab
