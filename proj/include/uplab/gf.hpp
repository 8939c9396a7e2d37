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

#ifndef UPLAB_GF_HPP
#define UPLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uplab/numtheory.hpp"

namespace uplab {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// An element of a FieldCtx. Stored packed: the coefficient vector
/// (c_0, ..., c_{D-1}) over F_p is the integer sum c_i p^i.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FieldCtx& ctx, u64 packed) : ctx_(&ctx), v_(packed) {}

  const FieldCtx& ctx() const { return *ctx_; }
  u64 packed() const { return v_; }
  std::vector<u64> coeffs() const;
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FFElem operator+(const FFElem& rhs) const;
  FFElem operator-(const FFElem& rhs) const;
  FFElem operator*(const FFElem& rhs) const;
  FFElem operator/(const FFElem& rhs) const;
  FFElem operator-() const;
  FFElem& operator+=(const FFElem& rhs) { return *this = *this + rhs; }
  FFElem& operator*=(const FFElem& rhs) { return *this = *this * rhs; }
  FFElem pow(u64 exp) const;
  FFElem inverse() const;
  /// x -> x^q for the base field size q of the context.
  FFElem frobenius() const;

  /// Coefficient digits low-degree-first, comma separated when p > 36.
  std::string to_string() const;

  friend bool operator==(const FFElem& a, const FFElem& b);

 private:
  const FieldCtx* ctx_ = nullptr;
  u64 v_ = 0;
};

/// The field F_{q^m}, q = p^e, realized as one flat extension of F_p of
/// degree D = e*m. Immutable once built.
class FieldCtx {
 public:
  struct Private;
  FieldCtx(const Private&, u64 p, int e, int m);
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  const PrimePower& base() const { return base_; }
  u64 characteristic() const { return base_.p; }
  int ext_degree() const { return m_; }
  int degree() const { return degree_; }
  /// Field size p^D.
  u64 size() const { return size_; }
  /// Monic modulus over F_p, low degree first, length D + 1.
  const std::vector<u64>& modulus() const { return modulus_; }
  /// Factorization of size() - 1.
  const std::vector<std::pair<u64, int>>& group_order_factors() const { return order_factors_; }

  FFElem zero() const { return FFElem(*this, 0); }
  FFElem one() const { return FFElem(*this, 1); }
  FFElem primitive_elt() const { return FFElem(*this, primitive_); }
  FFElem elem(u64 packed) const;
  FFElem from_coeffs(std::span<const u64> coeffs) const;

  bool same_field(const FieldCtx& other) const {
    return this == &other || (base_ == other.base_ && m_ == other.m_);
  }

  // Raw arithmetic on packed values.
  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 pow(u64 a, u64 exp) const;
  u64 inv(u64 a) const;

  std::vector<u64> unpack(u64 v) const;
  u64 pack(std::span<const u64> coeffs) const;

 private:
  PrimePower base_;
  int m_;
  int degree_;
  u64 size_;
  std::vector<u64> modulus_;
  u64 modulus_bits_ = 0;  // binary fields: modulus as a bit mask
  u64 primitive_ = 1;
  std::vector<std::pair<u64, int>> order_factors_;
};

/// Canonical F_{q^m} with q = p^e. The modulus is the smallest monic
/// irreducible of degree e*m over F_p when coefficient vectors are read as
/// base-p integers (constant term least significant); the primitive element
/// is the smallest element of full order in the same ordering. Memoized.
FieldPtr field_ctx(u64 p, int e, int m);

/// Smallest t >= 1 with a^t = 1.
u64 mult_order(const FFElem& a);

/// primitive_elt^((size-1)/n). Throws DomainError naming the smallest
/// valid extension degree when n does not divide size - 1.
FFElem nth_root_of_unity(const FieldCtx& ctx, u64 n);

/// F_q together with its splitting field for x^n - 1 and a canonical
/// primitive n-th root of unity.
struct SplittingField {
  PrimePower q;
  u64 n = 0;
  FieldPtr base;  // F_q
  FieldPtr ext;   // F_{q^m}, m = ord_n(q)
  FFElem zeta;

  /// F_q scalar -> element of ext (a field embedding).
  FFElem embed(u64 scalar) const;
  /// Inverse of embed; empty if x is not fixed by x -> x^q.
  std::optional<u64> project(const FFElem& x) const;

  std::vector<u64> embed_table;                // size q when e > 1
  std::unordered_map<u64, u64> project_table;  // ext packed -> scalar, when e > 1
};

SplittingField splitting_field(const PrimePower& q, u64 n);

/// Same as splitting_field but with zeta replaced by zeta^b, gcd(b, n) = 1.
SplittingField splitting_field(const PrimePower& q, u64 n, u64 root_power);

namespace detail {

// Dense polynomials over the prime field F_p, low degree first.
using PrimePoly = std::vector<u64>;

void trim(PrimePoly& a);
PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p);
PrimePoly poly_rem(PrimePoly a, const PrimePoly& f, u64 p);
PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p);
bool prime_poly_irreducible(const PrimePoly& f, u64 p);

}  // namespace detail

}  // namespace uplab

#endif  // UPLAB_GF_HPP
