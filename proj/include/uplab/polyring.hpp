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

#ifndef UPLAB_POLYRING_HPP
#define UPLAB_POLYRING_HPP

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uplab/gf.hpp"

namespace uplab {

/// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Dense polynomial over F_q, coefficients low degree first as packed F_q
/// scalars. Always normalized: no trailing zero coefficients.
class FPoly {
 public:
  explicit FPoly(FieldPtr field) : field_(std::move(field)) {}
  FPoly(FieldPtr field, std::vector<u64> coeffs);

  static FPoly monomial(FieldPtr field, int degree, u64 coeff = 1);
  static FPoly x_n_minus_1(FieldPtr field, int n);
  /// Reads "1101" as 1 + x + x^3 (digits 0-9a-z, low degree first).
  static FPoly parse(FieldPtr field, std::string_view digits);
  /// The phi correspondence: word (f_0, ..., f_{n-1}) -> sum f_i x^i.
  static FPoly from_word(FieldPtr field, std::span<const u64> word);

  const FieldPtr& field() const { return field_; }
  int degree() const { return coeffs_.empty() ? kDegreeNegInf : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const u64> coeffs() const { return coeffs_; }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0; }
  int weight() const;

  std::string to_string() const;
  /// Inverse of from_word; requires degree < n.
  std::vector<u64> to_word(int n) const;

  friend bool operator==(const FPoly& a, const FPoly& b);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<u64> coeffs_;
};

FPoly operator+(const FPoly& a, const FPoly& b);
FPoly operator-(const FPoly& a, const FPoly& b);
FPoly operator*(const FPoly& a, const FPoly& b);
FPoly scale(const FPoly& a, u64 c);

struct PolyDivision {
  FPoly quotient;
  FPoly remainder;
};
PolyDivision divmod(const FPoly& a, const FPoly& b);
FPoly rem(const FPoly& a, const FPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FPoly gcd(const FPoly& a, const FPoly& b);
FPoly make_monic(const FPoly& a);

/// Rabin's x^(q^k) test. Throws DomainError on constants.
bool is_irreducible(const FPoly& f);

/// Serialize a scalar in the 0-9a-z digit alphabet.
char scalar_digit(u64 v);

/// Partition of Z/nZ into orbits of multiplication by q.
struct CosetPartition {
  int n = 0;
  u64 q = 0;
  std::vector<std::vector<int>> cosets;  // each sorted; ordered by smallest element

  /// Index of the coset containing residue i.
  int coset_of(int i) const;
};

CosetPartition cyclotomic_cosets(int n, u64 q);

/// Irreducible factors of x^n - 1 over F_q, one per cyclotomic coset and in
/// coset order: prod_{i in C} (x - zeta^i).
std::vector<FPoly> factor_xn_minus_1(int n, u64 q, const SplittingField& sf);

}  // namespace uplab

#endif  // UPLAB_POLYRING_HPP
