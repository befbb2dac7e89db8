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

// Unnormalized generalized Walsh-Hadamard transform
//
//   S_f(u) = sum_{x in Z_{p^l}^n} zeta_{p^l}^(-u.x) zeta_{p^k}^(f(x)),
//
// computed exactly in Z[zeta_{p^k}]. The normalized transform is
// p^(-ln/2) S_f(u); the exponent ln is carried in Spectrum::norm_exp().

#ifndef GBENT_TRANSFORM_H_
#define GBENT_TRANSFORM_H_

#include <vector>

#include "gbent/cyclotomic.h"
#include "gbent/func.h"

namespace gbent {

struct Spectrum {
  CycloParams params;
  int l = 1;
  int n = 1;
  std::vector<CycInt> values;  // indexed like GBFunc tables

  int norm_exp() const { return l * n; }
  const CycInt& operator[](std::size_t u) const { return values[u]; }
};

// Direct double loop over (u, x). Requires l <= k.
Spectrum wht_naive(const GBFunc& f);

// n butterfly stages, one p^l-point character transform per coordinate.
// Same output as wht_naive. Requires l <= k.
Spectrum wht_fast(const GBFunc& f);

// p^(ln) zeta^(f(x)) == sum_u zeta_{p^l}^(u.x) S_f(u) for every x.
bool inverse_check(const GBFunc& f, const Spectrum& spectrum);

// sum_u |S_f(u)|^2 == p^(2ln).
bool parseval_check(const Spectrum& spectrum);

}  // namespace gbent

#endif  // GBENT_TRANSFORM_H_
