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

// Tabular functions Z_{p^l}^n -> Z_{p^k} and the digit-level manipulations
// used by the characterizations: block decompositions, component
// functions, scalar multiples and the generalized Gray image.

#ifndef GBENT_FUNC_H_
#define GBENT_FUNC_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gbent/int_math.h"

namespace gbent {

// Value table of f: Z_{p^l}^n -> Z_{p^k}. The point x = (x_1, ..., x_n) is
// stored at index sum_i x_i (p^l)^(i-1), so x_1 is the least significant
// coordinate.
//
// l > k is representable (digit functions of an l > 1 function land there)
// but such tables cannot be transformed.
class GBFunc {
 public:
  GBFunc(int p, int l, int n, int k, std::vector<std::int64_t> table);

  static GBFunc zero(int p, int l, int n, int k);

  // Tabulates rule(x) mod p^k over the domain; rule receives the
  // coordinate vector of each point.
  template <typename Rule>
  static GBFunc from_rule(int p, int l, int n, int k, Rule&& rule);

  int p() const { return p_; }
  int l() const { return l_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t domain_radix() const { return radix_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return table_.size(); }

  std::span<const std::int64_t> table() const { return table_; }
  std::int64_t operator[](std::size_t index) const { return table_[index]; }
  std::int64_t at(std::span<const std::int64_t> x) const;

  std::vector<std::int64_t> point(std::size_t index) const;

  friend bool operator==(const GBFunc&, const GBFunc&) = default;

 private:
  int p_;
  int l_;
  int n_;
  int k_;
  std::int64_t radix_;
  std::int64_t modulus_;
  std::vector<std::int64_t> table_;
};

template <typename Rule>
GBFunc GBFunc::from_rule(int p, int l, int n, int k, Rule&& rule) {
  GBFunc f = zero(p, l, n, k);
  for (std::size_t i = 0; i < f.table_.size(); ++i) {
    std::vector<std::int64_t> x = f.point(i);
    f.table_[i] = mod(rule(std::span<const std::int64_t>(x)), f.modulus_);
  }
  return f;
}

// Base-p^t blocks of f, least significant first. When t does not divide k
// the last block holds the remaining k mod t digits.
struct Digits {
  int t = 1;
  int source_k = 1;
  std::vector<GBFunc> blocks;

  GBFunc recompose() const;
};

Digits digit_decompose(const GBFunc& f, int t);

// (g, h) with f = g + p^t h, g into Z_{p^t}, h into Z_{p^(k-t)}.
// Requires k >= 2t.
std::pair<GBFunc, GBFunc> split_g_h(const GBFunc& f, int t);

// The four families of component functions:
//   kA  h + c p^(k-2t) g over Z_{p^(k-t)},  c in Z_{p^t}          (k >= 2t)
//   kB  g_c over Z_{p^(k-(s-1)t)},          c in Z_{p^t}^(s-1)    (st <= k)
//   kC  b_l + sum_j c_j b_j over Z_{p^t},   c in Z_{p^t}^(k/t-1)  (t | k)
//   kD  (f >> (k-l)) + p^(l-1) sum_i c_i f_i over Z_{p^l},
//                                           c in Z_p^(k-l)        (l < k)
// A, B and C take functions on Z_p^n; D takes functions on Z_{p^l}^n.
enum class ComponentMode { kA, kB, kC, kD };

struct ComponentSpec {
  ComponentMode mode = ComponentMode::kA;
  int t = 1;
  int s = 1;  // mode B only
};

struct ComponentLayout {
  int codomain_exp = 1;           // components map into Z_{p^codomain_exp}
  std::int64_t coeff_radix = 1;   // entries of c live in Z_{coeff_radix}
  int dims = 0;                   // length of c
};

// Validates spec against f and returns the shape of its component family.
ComponentLayout component_layout(const GBFunc& f, const ComponentSpec& spec);

GBFunc component_function(const GBFunc& f, const ComponentSpec& spec,
                          std::span<const std::int64_t> c);

// Pointwise a * f mod p^k.
GBFunc scale(const GBFunc& f, std::int64_t a);

// G(f)(x, y_0, ..., y_{k-2}) = a_{k-1}(x) + sum_i a_i(x) y_i over Z_p with
// the base-p digits a_i of f. The y coordinates follow the x coordinates in
// the index order. Requires l = 1.
GBFunc gray_image(const GBFunc& f);

// Pointwise Z_p-linear combination of p-ary functions of equal shape.
GBFunc linear_combination(std::span<const GBFunc> fs,
                          std::span<const std::int64_t> coeffs);

}  // namespace gbent

#endif  // GBENT_FUNC_H_
