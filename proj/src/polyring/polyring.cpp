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

#include "uplab/polyring.hpp"

#include <algorithm>
#include <numeric>

#include "uplab/errors.hpp"

namespace uplab {

namespace {

void require_same_field(const FPoly& a, const FPoly& b) {
  if (!a.field()->same_field(*b.field())) throw DomainError("polynomials over different fields");
}

}  // namespace

char scalar_digit(u64 v) {
  if (v >= 36) throw DomainError("scalar has no single-digit serialization (q > 36)");
  return "0123456789abcdefghijklmnopqrstuvwxyz"[v];
}

FPoly::FPoly(FieldPtr field, std::vector<u64> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (u64 c : coeffs_) {
    if (c >= field_->size()) throw DomainError("polynomial coefficient outside the field");
  }
  normalize();
}

void FPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FPoly FPoly::monomial(FieldPtr field, int degree, u64 coeff) {
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return FPoly(std::move(field), std::move(c));
}

FPoly FPoly::x_n_minus_1(FieldPtr field, int n) {
  std::vector<u64> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = field->neg(1);
  c[n] = 1;
  return FPoly(std::move(field), std::move(c));
}

FPoly FPoly::parse(FieldPtr field, std::string_view digits) {
  std::vector<u64> c;
  c.reserve(digits.size());
  for (char ch : digits) {
    u64 v;
    if (ch >= '0' && ch <= '9') {
      v = static_cast<u64>(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      v = static_cast<u64>(ch - 'a') + 10;
    } else {
      throw DomainError(std::string("invalid coefficient digit '") + ch + "'");
    }
    if (v >= field->size()) throw DomainError(std::string("digit '") + ch + "' outside the field");
    c.push_back(v);
  }
  return FPoly(std::move(field), std::move(c));
}

FPoly FPoly::from_word(FieldPtr field, std::span<const u64> word) {
  return FPoly(std::move(field), std::vector<u64>(word.begin(), word.end()));
}

int FPoly::weight() const {
  return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c != 0; }));
}

std::string FPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  s.reserve(coeffs_.size());
  for (u64 c : coeffs_) s.push_back(scalar_digit(c));
  return s;
}

std::vector<u64> FPoly::to_word(int n) const {
  if (degree() >= n) throw DomainError("polynomial degree must be below the word length");
  std::vector<u64> w(static_cast<std::size_t>(n), 0);
  std::copy(coeffs_.begin(), coeffs_.end(), w.begin());
  return w;
}

bool operator==(const FPoly& a, const FPoly& b) {
  return a.field()->same_field(*b.field()) && std::equal(a.coeffs().begin(), a.coeffs().end(),
                                                          b.coeffs().begin(), b.coeffs().end());
}

FPoly operator+(const FPoly& a, const FPoly& b) {
  require_same_field(a, b);
  const auto& f = *a.field();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FPoly(a.field(), std::move(c));
}

FPoly operator-(const FPoly& a, const FPoly& b) {
  require_same_field(a, b);
  const auto& f = *a.field();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FPoly(a.field(), std::move(c));
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FPoly(a.field());
  const auto& f = *a.field();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<u64> c(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(ac[i], bc[j]));
  }
  return FPoly(a.field(), std::move(c));
}

FPoly scale(const FPoly& a, u64 s) {
  const auto& f = *a.field();
  std::vector<u64> c(a.coeffs().begin(), a.coeffs().end());
  for (u64& x : c) x = f.mul(x, s);
  return FPoly(a.field(), std::move(c));
}

PolyDivision divmod(const FPoly& a, const FPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& f = *a.field();
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const u64 lead_inv = f.inv(b.coeffs().back());
  std::vector<u64> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const u64 c = f.mul(r[i], lead_inv);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  return {FPoly(a.field(), std::move(q)), FPoly(a.field(), std::move(r))};
}

FPoly rem(const FPoly& a, const FPoly& b) { return divmod(a, b).remainder; }

FPoly make_monic(const FPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field()->inv(a.coeffs().back()));
}

FPoly gcd(const FPoly& a, const FPoly& b) {
  require_same_field(a, b);
  FPoly x = a, y = b;
  while (!y.is_zero()) {
    FPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

namespace {

FPoly powmod(FPoly base, u64 exp, const FPoly& mod) {
  FPoly result = rem(FPoly(mod.field(), {1}), mod);
  base = rem(base, mod);
  while (exp) {
    if (exp & 1) result = rem(result * base, mod);
    exp >>= 1;
    if (exp) base = rem(base * base, mod);
  }
  return result;
}

}  // namespace

bool is_irreducible(const FPoly& f) {
  if (f.degree() < 1) throw DomainError("is_irreducible: constant polynomial");
  const FPoly g = make_monic(f);
  const int d = g.degree();
  if (d == 1) return true;
  const u64 q = g.field()->size();
  const FPoly x = FPoly::monomial(g.field(), 1);
  std::vector<FPoly> frob;
  frob.reserve(static_cast<std::size_t>(d) + 1);
  frob.push_back(rem(x, g));
  for (int i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[d] == frob[0])) return false;
  for (auto [r, e] : factorize(static_cast<u64>(d))) {
    if (gcd(frob[d / r] - x, g).degree() != 0) return false;
  }
  return true;
}

int CosetPartition::coset_of(int i) const {
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    if (std::binary_search(cosets[c].begin(), cosets[c].end(), i)) return static_cast<int>(c);
  }
  throw DomainError("residue outside Z/nZ");
}

CosetPartition cyclotomic_cosets(int n, u64 q) {
  if (n < 1) throw DomainError("cyclotomic_cosets: n must be positive");
  if (std::gcd(static_cast<u64>(n), q) != 1) {
    throw DomainError("cyclotomic_cosets: gcd(n, q) != 1 (repeated-root codes are out of scope)");
  }
  CosetPartition part;
  part.n = n;
  part.q = q;
  const u64 qm = q % static_cast<u64>(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> coset;
    u64 j = static_cast<u64>(i);
    while (!seen[j]) {
      seen[j] = true;
      coset.push_back(static_cast<int>(j));
      j = j * qm % static_cast<u64>(n);
    }
    std::sort(coset.begin(), coset.end());
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

std::vector<FPoly> factor_xn_minus_1(int n, u64 q, const SplittingField& sf) {
  if (sf.n != static_cast<u64>(n) || sf.q.q != q) throw DomainError("splitting field does not match (n, q)");
  const auto part = cyclotomic_cosets(n, q);
  const auto& ext = *sf.ext;
  std::vector<FPoly> factors;
  factors.reserve(part.cosets.size());
  for (const auto& coset : part.cosets) {
    std::vector<FFElem> c{ext.one()};
    for (int i : coset) {
      const FFElem root = sf.zeta.pow(static_cast<u64>(i));
      // c *= (x - root)
      c.push_back(ext.zero());
      for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - root * c[k];
      c[0] = -(root * c[0]);
    }
    std::vector<u64> base_coeffs;
    base_coeffs.reserve(c.size());
    for (const auto& coeff : c) {
      auto s = sf.project(coeff);
      if (!s) throw InternalError("coset factor has a coefficient outside F_q");
      base_coeffs.push_back(*s);
    }
    factors.emplace_back(sf.base, std::move(base_coeffs));
  }
  return factors;
}

}  // namespace uplab
