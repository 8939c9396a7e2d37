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

#include "uplab/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "uplab/errors.hpp"

namespace uplab {

namespace detail {

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly poly_rem(PrimePoly a, const PrimePoly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const u64 c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_rem(std::move(prod), f, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = pow_mod(a.back(), p - 2, p);
    for (u64& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

namespace {

PrimePoly poly_powmod(PrimePoly base, u64 exp, const PrimePoly& f, u64 p) {
  PrimePoly result{1};
  base = poly_rem(std::move(base), f, p);
  while (exp) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    exp >>= 1;
    if (exp) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

}  // namespace

bool prime_poly_irreducible(const PrimePoly& f, u64 p) {
  PrimePoly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t d = g.size() - 1;
  if (d == 1) return true;
  if (g[0] == 0) return false;
  // Rabin: x^(p^d) = x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d.
  std::vector<PrimePoly> frob(d + 1);
  frob[0] = PrimePoly{0, 1};
  for (std::size_t i = 1; i <= d; ++i) frob[i] = poly_powmod(frob[i - 1], p, g, p);
  PrimePoly x = poly_rem(PrimePoly{0, 1}, g, p);
  if (frob[d] != x) return false;
  for (auto [r, e] : factorize(d)) {
    PrimePoly h = frob[d / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    if (poly_gcd(h, g, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldCtx

struct FieldCtx::Private {};

FieldCtx::FieldCtx(const Private&, u64 p, int e, int m)
    : base_(PrimePower::make(p, e)), m_(m), degree_(e * m), size_(0) {
  if (m < 1) throw DomainError("field_ctx: extension degree must be >= 1");
  if (!checked_pow(p, static_cast<u64>(degree_), size_)) {
    throw CapacityError("field_ctx: p^(e*m) does not fit in 64 bits");
  }
  // Smallest monic irreducible of degree D, scanning lower coefficients as a
  // base-p integer.
  const u64 lower_count = size_;
  for (u64 v = 0; v < lower_count; ++v) {
    detail::PrimePoly f(degree_ + 1, 0);
    u64 t = v;
    for (int i = 0; i < degree_; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[degree_] = 1;
    if (degree_ > 1 && f[0] == 0) continue;
    if (detail::prime_poly_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw InternalError("field_ctx: no irreducible polynomial found");
  if (p == 2) {
    for (int i = 0; i <= degree_; ++i) modulus_bits_ |= modulus_[i] << i;
  }

  const u64 group = size_ - 1;
  order_factors_ = factorize(group);
  if (group == 1) {
    primitive_ = 1;
    return;
  }
  for (u64 a = 1; a < size_; ++a) {
    bool full = true;
    for (auto [r, k] : order_factors_) {
      if (pow(a, group / r) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_ = a;
      return;
    }
  }
  throw InternalError("field_ctx: no primitive element found");
}

std::vector<u64> FieldCtx::unpack(u64 v) const {
  std::vector<u64> c(degree_, 0);
  const u64 p = base_.p;
  for (int i = 0; i < degree_ && v; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

u64 FieldCtx::pack(std::span<const u64> coeffs) const {
  u64 v = 0;
  const u64 p = base_.p;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p + coeffs[i] % p;
  return v;
}

FFElem FieldCtx::elem(u64 packed) const {
  if (packed >= size_) throw DomainError("field element out of range");
  return FFElem(*this, packed);
}

FFElem FieldCtx::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree_)) {
    throw DomainError("too many coefficients for field element");
  }
  for (u64 c : coeffs) {
    if (c >= base_.p) throw DomainError("coefficient outside [0, p)");
  }
  return FFElem(*this, pack(coeffs));
}

u64 FieldCtx::add(u64 a, u64 b) const {
  const u64 p = base_.p;
  if (p == 2) return a ^ b;
  if (degree_ == 1) return a >= p - b ? a - (p - b) : a + b;
  u64 v = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    const u64 x = a % p, y = b % p;
    v += ((x + y) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return v;
}

u64 FieldCtx::neg(u64 a) const {
  const u64 p = base_.p;
  if (p == 2) return a;
  if (degree_ == 1) return a == 0 ? 0 : p - a;
  u64 v = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    const u64 x = a % p;
    v += ((p - x) % p) * scale;
    a /= p;
    scale *= p;
  }
  return v;
}

u64 FieldCtx::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldCtx::mul(u64 a, u64 b) const {
  const u64 p = base_.p;
  if (p == 2) {
    const u64 top = 1ULL << (degree_ - 1);
    u64 r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      const bool carry = (a & top) != 0;
      a <<= 1;
      if (carry) a ^= modulus_bits_;
    }
    return r;
  }
  if (degree_ == 1) return mul_mod(a, b, p);
  const auto x = unpack(a);
  const auto y = unpack(b);
  std::vector<u64> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p)) % p;
  }
  for (int i = 2 * degree_ - 2; i >= degree_; --i) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      prod[i - degree_ + j] = (prod[i - degree_ + j] + p - mul_mod(c, modulus_[j], p)) % p;
    }
    prod[i] = 0;
  }
  return pack(std::span<const u64>(prod.data(), degree_));
}

u64 FieldCtx::pow(u64 a, u64 exp) const {
  u64 result = 1;
  while (exp) {
    if (exp & 1) result = mul(result, a);
    exp >>= 1;
    if (exp) a = mul(a, a);
  }
  return result;
}

u64 FieldCtx::inv(u64 a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, size_ - 2);
}

FieldPtr field_ctx(u64 p, int e, int m) {
  static std::mutex mu;
  static std::map<std::tuple<u64, int, int>, FieldPtr> registry;
  const auto key = std::make_tuple(p, e, m);
  {
    std::lock_guard lock(mu);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
  }
  auto ctx = std::make_shared<const FieldCtx>(FieldCtx::Private{}, p, e, m);
  std::lock_guard lock(mu);
  return registry.emplace(key, std::move(ctx)).first->second;
}

// ---------------------------------------------------------------------------
// FFElem

namespace {

const FieldCtx& common_ctx(const FFElem& a, const FFElem& b) {
  if (!a.ctx().same_field(b.ctx())) throw DomainError("arithmetic on elements of different fields");
  return a.ctx();
}

}  // namespace

std::vector<u64> FFElem::coeffs() const { return ctx_->unpack(v_); }

FFElem FFElem::operator+(const FFElem& rhs) const {
  const auto& c = common_ctx(*this, rhs);
  return FFElem(c, c.add(v_, rhs.v_));
}

FFElem FFElem::operator-(const FFElem& rhs) const {
  const auto& c = common_ctx(*this, rhs);
  return FFElem(c, c.sub(v_, rhs.v_));
}

FFElem FFElem::operator*(const FFElem& rhs) const {
  const auto& c = common_ctx(*this, rhs);
  return FFElem(c, c.mul(v_, rhs.v_));
}

FFElem FFElem::operator/(const FFElem& rhs) const {
  const auto& c = common_ctx(*this, rhs);
  return FFElem(c, c.mul(v_, c.inv(rhs.v_)));
}

FFElem FFElem::operator-() const { return FFElem(*ctx_, ctx_->neg(v_)); }

FFElem FFElem::pow(u64 exp) const { return FFElem(*ctx_, ctx_->pow(v_, exp)); }

FFElem FFElem::inverse() const { return FFElem(*ctx_, ctx_->inv(v_)); }

FFElem FFElem::frobenius() const { return pow(ctx_->base().q); }

std::string FFElem::to_string() const {
  const auto c = coeffs();
  const bool digits = ctx_->characteristic() <= 36;
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (digits) {
      os << "0123456789abcdefghijklmnopqrstuvwxyz"[c[i]];
    } else {
      if (i) os << ',';
      os << c[i];
    }
  }
  return os.str();
}

bool operator==(const FFElem& a, const FFElem& b) {
  if (a.ctx_ == nullptr || b.ctx_ == nullptr) return a.ctx_ == b.ctx_ && a.v_ == b.v_;
  return a.ctx_->same_field(*b.ctx_) && a.v_ == b.v_;
}

u64 mult_order(const FFElem& a) {
  if (a.is_zero()) throw DomainError("mult_order: zero has no multiplicative order");
  const auto& ctx = a.ctx();
  u64 t = ctx.size() - 1;
  for (auto [r, e] : ctx.group_order_factors()) {
    for (int i = 0; i < e; ++i) {
      if (ctx.pow(a.packed(), t / r) != 1) break;
      t /= r;
    }
  }
  return t;
}

FFElem nth_root_of_unity(const FieldCtx& ctx, u64 n) {
  if (n == 0) throw DomainError("nth_root_of_unity: n must be positive");
  const u64 group = ctx.size() - 1;
  if (group % n != 0) {
    const u64 q = ctx.base().q;
    std::string msg = "nth_root_of_unity: " + std::to_string(n) + " does not divide " +
                      std::to_string(group);
    if (std::gcd(n, q) == 1) {
      msg += "; the smallest extension of F_" + std::to_string(q) +
             " containing these roots has degree m=" + std::to_string(ord_mod(q, n));
    } else {
      msg += "; no extension of F_" + std::to_string(q) + " contains them (gcd(n,q) > 1)";
    }
    throw DomainError(msg);
  }
  return ctx.primitive_elt().pow(group / n);
}

// ---------------------------------------------------------------------------
// SplittingField

FFElem SplittingField::embed(u64 scalar) const {
  if (scalar >= q.q) throw DomainError("scalar outside F_q");
  if (q.e == 1 || ext.get() == base.get()) return ext->elem(scalar);
  return ext->elem(embed_table[scalar]);
}

std::optional<u64> SplittingField::project(const FFElem& x) const {
  if (!(x.frobenius() == x)) return std::nullopt;
  if (q.e == 1 || ext.get() == base.get()) {
    if (x.packed() < q.q) return x.packed();
    throw InternalError("Frobenius-fixed element is not a base field scalar");
  }
  auto it = project_table.find(x.packed());
  if (it == project_table.end()) throw InternalError("Frobenius-fixed element missing from F_q table");
  return it->second;
}

SplittingField splitting_field(const PrimePower& q, u64 n) { return splitting_field(q, n, 1); }

SplittingField splitting_field(const PrimePower& q, u64 n, u64 root_power) {
  if (n == 0) throw DomainError("splitting_field: n must be positive");
  if (std::gcd(n, q.q) != 1) {
    throw DomainError("gcd(n, q) must be 1 (x^n - 1 is not squarefree otherwise)");
  }
  if (std::gcd(root_power, n) != 1) throw DomainError("root power must be coprime to n");
  SplittingField sf;
  sf.q = q;
  sf.n = n;
  const int m = n == 1 ? 1 : static_cast<int>(ord_mod(q.q, n));
  sf.base = field_ctx(q.p, q.e, 1);
  sf.ext = field_ctx(q.p, q.e, m);
  sf.zeta = nth_root_of_unity(*sf.ext, n).pow(root_power % n == 0 ? 1 : root_power % n);

  if (q.e > 1 && sf.ext.get() != sf.base.get()) {
    if (q.q > (1ULL << 16)) throw CapacityError("prime-power base fields are capped at q <= 65536");
    const auto& ext = *sf.ext;
    const FFElem g = ext.primitive_elt().pow((ext.size() - 1) / (q.q - 1));
    const auto& h = sf.base->modulus();
    std::optional<FFElem> beta;
    FFElem cand = ext.one();
    for (u64 j = 0; j + 1 < q.q && !beta; ++j, cand = cand * g) {
      FFElem acc = ext.zero();
      for (std::size_t i = h.size(); i-- > 0;) acc = acc * cand + ext.elem(h[i]);
      if (acc.is_zero()) beta = cand;
    }
    if (!beta) throw InternalError("base field modulus has no root in its extension");
    sf.embed_table.resize(q.q);
    for (u64 s = 0; s < q.q; ++s) {
      const auto digits = sf.base->unpack(s);
      FFElem acc = ext.zero();
      for (std::size_t i = digits.size(); i-- > 0;) acc = acc * *beta + ext.elem(digits[i]);
      sf.embed_table[s] = acc.packed();
      sf.project_table.emplace(acc.packed(), s);
    }
  }
  return sf;
}

}  // namespace uplab
