// Copyright 2026 The gbent Authors.
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

// Exact arithmetic in the cyclotomic integers Z[zeta] for zeta a primitive
// p^k-th root of unity, p an odd prime.
//
// Elements are stored on the power basis {zeta^j : 0 <= j < (p-1)p^(k-1)},
// which is an integral basis, so the coefficient vector is canonical and
// equality is coefficient-wise. Roots of smaller order embed as
// zeta_{p^t} = zeta^(p^(k-t)).

#ifndef GBENT_CYCLOTOMIC_H_
#define GBENT_CYCLOTOMIC_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbent {

class CycloParams {
 public:
  // Throws std::invalid_argument unless p is an odd prime and k >= 1.
  CycloParams(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  // (p-1) * p^(k-1), the dimension of the power basis.
  int degree() const { return degree_; }
  // p^k, the multiplicative order of zeta.
  std::int64_t order() const { return order_; }
  // p^(k-1); zeta^(stride * j) runs over the p-th roots of unity.
  std::int64_t stride() const { return stride_; }

  // Exponent e with zeta^e = zeta_{p^t}. Requires 0 <= t <= k.
  std::int64_t embed(int t) const;

  friend bool operator==(const CycloParams&, const CycloParams&) = default;

 private:
  int p_;
  int k_;
  int degree_;
  std::int64_t order_;
  std::int64_t stride_;
};

class CycInt {
 public:
  using Coeff = mpz_class;

  // The zero element.
  explicit CycInt(const CycloParams& params);
  // Takes coefficients on the power basis; length must equal degree().
  CycInt(const CycloParams& params, std::vector<Coeff> coeffs);

  static CycInt integer(const CycloParams& params, const Coeff& value);

  const CycloParams& params() const { return params_; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True when the element is a rational integer (only the constant term
  // is nonzero, or it is zero).
  bool is_rational() const;

  // Multiplication by zeta^e without a general product.
  CycInt times_root(std::int64_t e) const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt& operator*=(const Coeff& scalar);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const Coeff& s) { return a *= s; }
  friend CycInt operator*(const Coeff& s, CycInt a) { return a *= s; }
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b);

  // e.g. "3 - 2*z^2 + z^5"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same(const CycInt& other) const;

  CycloParams params_;
  std::vector<Coeff> coeffs_;
};

// Accumulates sum c_e * zeta^e over all exponents e in [0, p^k) and folds
// the result into the power basis once. This is the workhorse behind the
// transforms: it defers the basis reduction to a single pass.
class CycAccumulator {
 public:
  explicit CycAccumulator(const CycloParams& params);

  void add_root(std::int64_t e, const CycInt::Coeff& c);
  void add_root(std::int64_t e, long count = 1);
  // Adds x * zeta^shift.
  void add_shifted(const CycInt& x, std::int64_t shift);

  CycInt fold() const;
  void clear();

 private:
  CycloParams params_;
  std::vector<CycInt::Coeff> slots_;
};

// Canonical representation of zeta^exponent; any integer exponent.
CycInt reduce(std::int64_t exponent, const CycloParams& params);

// Builds sum_e counts[e] * zeta^e from an exponent histogram of length p^k.
CycInt from_exponent_counts(std::span<const std::int64_t> counts,
                            const CycloParams& params);

// Index j of the Galois automorphism zeta -> zeta^j; gcd(j, p) must be 1.
class GaloisIndex {
 public:
  explicit GaloisIndex(std::int64_t j);
  std::int64_t value() const { return j_; }

 private:
  std::int64_t j_;
};

CycInt galois(const CycInt& a, GaloisIndex s);
inline CycInt conj(const CycInt& a) { return galois(a, GaloisIndex(-1)); }

// a * conj(a). Equals |a|^2 under every complex embedding.
CycInt norm_sq(const CycInt& a);

// g_p = sum_{j in Z_p} zeta_p^(j^2); g_p^2 = (-1)^((p-1)/2) p.
CycInt gauss_sum(const CycloParams& params);

// gamma_c = sum_{d in Z_{p^t}^(l-1)} zeta_{p^t}^(-c.d) zeta^(sum_j p^((j-1)t) d_j)
// for c in Z_{p^t}^(l-1). Requires (l-1)*t < k.
CycInt gamma(std::span<const std::int64_t> c, int t, int l,
             const CycloParams& params);
// The same element as a product over coordinates of c.
CycInt gamma_product_form(std::span<const std::int64_t> c, int t, int l,
                          const CycloParams& params);
// Checks p^(t(l-1)) zeta^(sum_j u_j p^((j-1)t)) == sum_c zeta_{p^t}^(c.u) gamma_c
// exactly, i.e. that the gamma elements invert back to the power basis.
bool gamma_inversion_check(std::span<const std::int64_t> u, int t, int l,
                           const CycloParams& params);

// Checks p^t zeta^a == sum_{i in Z_{p^t}} (sum_{j in Z_{p^t}} zeta_{p^t}^((a-i)j)) zeta^i.
// a in Z_{p^t}. Requires t <= k.
bool digit_identity_check(std::int64_t a, int t, const CycloParams& params);

struct UnitMatch {
  int sign = 1;               // +1 or -1
  std::int64_t exponent = 0;  // in [0, p^k)

  friend bool operator==(const UnitMatch&, const UnitMatch&) = default;
};

// Finds (sign, e) with s == sign * p^scale_exp * g_p^[with_gauss] * zeta^e by
// exhaustive comparison, or nullopt if s has no such shape.
std::optional<UnitMatch> unit_match(const CycInt& s, int scale_exp,
                                    bool with_gauss);

// Table-driven unit_match for repeated queries against one shape.
class UnitMatcher {
 public:
  UnitMatcher(const CycloParams& params, int scale_exp, bool with_gauss);

  std::optional<UnitMatch> match(const CycInt& s) const;
  // sign * base * zeta^e for the shape this matcher recognizes.
  CycInt element(const UnitMatch& m) const;
  const CycInt& base() const { return base_; }

 private:
  CycloParams params_;
  CycInt base_;
  std::map<std::vector<CycInt::Coeff>, UnitMatch> table_;
};

}  // namespace gbent

#endif  // GBENT_CYCLOTOMIC_H_
