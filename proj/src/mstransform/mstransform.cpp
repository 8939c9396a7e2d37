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

#include "uplab/mstransform.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "uplab/errors.hpp"
#include "uplab/polyring.hpp"

namespace uplab {

Word parse_word(std::string_view digits, u64 q) {
  if (digits.empty()) throw DomainError("empty word");
  Word w;
  w.reserve(digits.size());
  for (char ch : digits) {
    u64 v;
    if (ch >= '0' && ch <= '9') {
      v = static_cast<u64>(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      v = static_cast<u64>(ch - 'a') + 10;
    } else {
      throw DomainError(std::string("invalid symbol '") + ch + "' in word");
    }
    if (v >= q) throw DomainError(std::string("symbol '") + ch + "' outside F_" + std::to_string(q));
    w.push_back(v);
  }
  return w;
}

std::string format_word(std::span<const u64> word) {
  std::string s;
  s.reserve(word.size());
  for (u64 v : word) s.push_back(scalar_digit(v));
  return s;
}

int MSVector::weight() const {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [](const FFElem& v) { return !v.is_zero(); }));
}

MSTransform::MSTransform(int n, u64 q) : MSTransform(n, q, 1) {}

MSTransform::MSTransform(int n, u64 q, u64 root_power)
    : n_(n), sf_(splitting_field(PrimePower::from_q(q), n > 0 ? static_cast<u64>(n) : 0, root_power)) {
  kernel_.resize(static_cast<std::size_t>(n));
  std::vector<FFElem> powers(static_cast<std::size_t>(n));
  powers[0] = sf_.ext->one();
  for (int t = 1; t < n; ++t) powers[t] = powers[t - 1] * sf_.zeta;
  for (int i = 1; i <= n; ++i) {
    auto& row = kernel_[i - 1];
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(powers[static_cast<std::size_t>(static_cast<long>(i) * j % n)]);
  }
}

MSVector MSTransform::forward(std::span<const u64> word) const {
  if (word.empty()) throw DomainError("ms_forward: zero-length word");
  if (static_cast<int>(word.size()) != n_) throw DomainError("ms_forward: word length does not match n");
  std::vector<FFElem> coeffs;
  coeffs.reserve(word.size());
  for (u64 s : word) coeffs.push_back(sf_.embed(s));
  MSVector out;
  out.n = n_;
  out.values.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    const FFElem point = kernel_[i - 1][1 % n_];
    FFElem acc = sf_.ext->zero();
    for (int j = n_ - 1; j >= 0; --j) acc = acc * point + coeffs[j];
    out.values.push_back(acc);
  }
  return out;
}

bool MSTransform::conjugacy_holds(const MSVector& v) const {
  if (v.n != n_ || static_cast<int>(v.values.size()) != n_) return false;
  for (const auto& x : v.values) {
    if (!x.ctx().same_field(*sf_.ext)) return false;
  }
  const u64 q = sf_.q.q;
  for (int i = 1; i <= n_; ++i) {
    int j = static_cast<int>(static_cast<u64>(i) * (q % static_cast<u64>(n_)) % static_cast<u64>(n_));
    if (j == 0) j = n_;
    if (!(v.values[j - 1] == v.values[i - 1].frobenius())) return false;
  }
  return true;
}

Word MSTransform::inverse(const MSVector& v) const {
  if (!conjugacy_holds(v)) throw DomainError("ms_inverse: input violates the conjugacy constraint");
  const auto& ext = *sf_.ext;
  const u64 p = ext.characteristic();
  const FFElem n_inv = ext.elem(static_cast<u64>(n_) % p).inverse();
  Word f(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    FFElem acc = ext.zero();
    for (int i = 1; i <= n_; ++i) {
      // zeta^{-ij} = zeta^{i(n - j)}
      acc += v.values[i - 1] * kernel_[i - 1][(n_ - j) % n_];
    }
    const auto s = sf_.project(acc * n_inv);
    if (!s) throw DomainError("ms_inverse: coefficient outside F_q");
    f[j] = *s;
  }
  return f;
}

MSVector ms_forward(std::span<const u64> word, u64 q) {
  if (word.empty()) throw DomainError("ms_forward: zero-length word");
  return MSTransform(static_cast<int>(word.size()), q).forward(word);
}

Word ms_inverse(const MSVector& values, u64 q) { return MSTransform(values.n, q).inverse(values); }

NaiveUpCheck naive_up_check(const MSTransform& t, std::span<const u64> word) {
  NaiveUpCheck c;
  c.w = static_cast<int>(std::count_if(word.begin(), word.end(), [](u64 s) { return s != 0; }));
  if (c.w == 0) throw DomainError("naive_up_check: the principle is stated for nonzero words");
  c.w_hat = t.forward(word).weight();
  c.product = c.w * c.w_hat;
  c.holds = c.product >= t.n();
  return c;
}

NaiveUpCheck naive_up_check(std::span<const u64> word, u64 q) {
  if (word.empty()) throw DomainError("naive_up_check: zero-length word");
  return naive_up_check(MSTransform(static_cast<int>(word.size()), q), word);
}

namespace {

void record(NaiveUpScan& scan, int product, std::span<const u64> word) {
  ++scan.words;
  if (product < scan.min_product) {
    scan.min_product = product;
    scan.argmin.assign(word.begin(), word.end());
  }
  if (product == scan.n) ++scan.equality_cases;
  if (product < scan.n) ++scan.violations;
}

}  // namespace

NaiveUpScan naive_up_scan(int n, u64 q, ScanMode mode, std::uint64_t trials, std::uint64_t seed) {
  const MSTransform t(n, q);
  const auto& sf = t.field();
  NaiveUpScan scan;
  scan.n = n;
  scan.q = q;
  scan.mode = mode;
  scan.min_product = INT_MAX;

  if (mode == ScanMode::random) {
    std::mt19937_64 rng(seed);
    Word w(static_cast<std::size_t>(n));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      do {
        for (auto& s : w) s = rng() % q;
      } while (std::all_of(w.begin(), w.end(), [](u64 s) { return s == 0; }));
      record(scan, naive_up_check(t, w).product, w);
    }
    return scan;
  }

  std::uint64_t total = 0;
  if (!checked_pow(q, static_cast<u64>(n), total) || total > (std::uint64_t{1} << 24)) {
    throw CapacityError("exhaustive naive UP scan requires q^n <= 2^24");
  }
  // Modular q-ary Gray walk; the transform is linear, so each step adds one
  // scaled kernel column.
  const auto& ext = *sf.ext;
  const auto& kernel = t.kernel();
  Word counter(static_cast<std::size_t>(n) + 1, 0);
  Word word(static_cast<std::size_t>(n), 0);
  std::vector<FFElem> values(static_cast<std::size_t>(n), ext.zero());
  int w = 0;
  int w_hat = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    int j = 0;
    while (counter[j] == q - 1) counter[j++] = 0;
    ++counter[j];
    const u64 old_sym = word[j];
    const u64 new_sym = (old_sym + 1) % q;
    word[j] = new_sym;
    w += (new_sym != 0) - (old_sym != 0);
    const FFElem delta = sf.embed(new_sym) - sf.embed(old_sym);
    for (int i = 0; i < n; ++i) {
      const bool was = !values[i].is_zero();
      values[i] += delta * kernel[i][j];
      w_hat += static_cast<int>(!values[i].is_zero()) - static_cast<int>(was);
    }
    record(scan, w * w_hat, word);
  }
  return scan;
}

}  // namespace uplab
