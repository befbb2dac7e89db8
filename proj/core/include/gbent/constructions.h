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


// Test-vector factories: small prime fields extensions, regular spreads of
// Z_p^(2m), spread functions into Z_{p^k}, lifts of p-ary functions and a
// quadratic family on Z_{p^l}^n.

#ifndef GBENT_CONSTRUCTIONS_H_
#define GBENT_CONSTRUCTIONS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gbent/func.h"

namespace gbent {

// GF(p^m) = Z_p[x] / (modulus). Elements are integers in [0, p^m) whose
// base-p digits are the polynomial coefficients, constant term first.
class FieldSpec {
 public:
  FieldSpec(int p, int m, std::vector<std::int64_t> modulus);

  int p() const { return p_; }
  int m() const { return m_; }
  std::int64_t order() const { return order_; }
  // Monic, m + 1 coefficients, constant term first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;

 private:
  int p_;
  int m_;
  std::int64_t order_;
  std::vector<std::int64_t> modulus_;
};

// Smallest monic irreducible of degree m, ordering candidates by their
// integer encoding. Requires p^m <= 10^4.
FieldSpec gf_make(int p, int m);

// True if the monic polynomial has no monic factor of degree 1..deg/2.
bool is_irreducible(std::span<const std::int64_t> poly, int p);

// Points of Z_p^(2m) are packed as x + p^m y with x, y field encodings.
struct SpreadFamily {
  int p = 3;
  int m = 1;
  // subspaces[0] = {(0, y)}; subspaces[s + 1] = {(x, s x)}. Each is a sorted
  // list of packed points.
  std::vector<std::vector<std::int64_t>> subspaces;
  // m x 2m basis matrices over Z_p, row-major.
  std::vector<std::vector<std::vector<std::int64_t>>> bases;
};

SpreadFamily regular_spread(const FieldSpec& field);

// Size p^m each, pairwise meeting in {0}, covering Z_p^(2m).
bool spread_invariants_hold(const SpreadFamily& spread);

// values[s - 1] = phi(s) for s = 1 .. p^m.
struct BalancedMap {
  int p = 3;
  int m = 1;
  int k = 1;
  std::vector<std::int64_t> values;

  // Every element of Z_{p^k} is hit exactly p^(m-k) times.
  bool balanced() const;
};

// phi(s) = (s - 1) mod p^k. Throws std::invalid_argument if k > m.
BalancedMap default_balanced_map(int p, int m, int k);

// f = phi(s) on U_s minus 0 for s >= 1, f = 0 on U_0. Domain Z_p^(2m) with
// the packed point order of SpreadFamily.
GBFunc spread_gbent(const SpreadFamily& spread, const BalancedMap& map);

// p^(k-1) g for a p-ary g.
GBFunc lift_bent(const GBFunc& g, int k);

// p^(k-l) (x_1^2 + ... + x_n^2) mod p^k on Z_{p^l}^n. Requires l < k.
GBFunc quadratic_gbent_lk(int p, int l, int k, int n);

}  // namespace gbent

#endif  // GBENT_CONSTRUCTIONS_H_
