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

// Decision procedures over exact spectra: gbent-ness, regularity and duals,
// the component-function characterizations, Z_{p^k}-bentness, plateaued
// order of Gray images and vectorial bentness.
//
// Walsh values of a gbent f have the normal form
//
//   S_f(u) = eps(u) * p^floor(ln/2) * g_p^[ln odd] * zeta_{p^k}^(f*(u))
//
// with eps(u) in {+1, -1} and g_p the quadratic Gauss sum. Using g_p in
// place of sqrt(p) or sqrt(-1) sqrt(p) keeps every value inside Z[zeta].

#ifndef GBENT_ANALYSIS_H_
#define GBENT_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbent/func.h"
#include "gbent/transform.h"

namespace gbent {

// Raised when a value that must have the normal form does not.
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GbentVerdict {
  bool gbent = false;
  std::optional<std::size_t> witness;  // first u with |S_f(u)|^2 != p^(ln)
};

GbentVerdict is_gbent(const GBFunc& f);
GbentVerdict is_gbent(const Spectrum& spectrum);

enum class Regularity { kRegular, kWeaklyRegular, kNonWeaklyRegular };

struct RegularityClass {
  Regularity kind = Regularity::kNonWeaklyRegular;
  int sign = 1;  // the common eps for kWeaklyRegular

  std::string to_string() const;
};

struct DualCertificate {
  GBFunc dual;
  std::vector<int> signs;  // eps(u)
  bool gauss_flag = false;
};

struct DualAnalysis {
  RegularityClass regularity;
  DualCertificate certificate;
};

// Throws AnalysisError if f is not gbent, or if some Walsh value misses the
// normal form (which would contradict the existence of a dual).
DualAnalysis classify_and_dual(const GBFunc& f);

// S_f(u) == eps(u) p^floor(ln/2) g_p^[flag] zeta^(f*(u)) for every u.
bool reconstruct_check(const Spectrum& spectrum, const DualCertificate& cert);

// Rebuilds f* from the duals of the p-ary functions a_{k-1} and
// a_{k-1} + a_j and compares it with classify_and_dual(f). Domain Z_p^n.
bool verify_dual_formula(const GBFunc& f);

struct CharacterizationEntry {
  bool found = false;
  int sign = 1;
  std::int64_t j = 0;
  std::vector<std::int64_t> d;
  std::vector<int> signs;  // per coefficient vector c
};

struct CharacterizationCertificate {
  ComponentSpec spec;
  ComponentLayout layout;
  std::vector<std::vector<std::int64_t>> coefficients;  // every c, c = 0 first
  std::vector<CharacterizationEntry> entries;            // per u
};

struct CharacterizationResult {
  bool holds = false;
  CharacterizationCertificate certificate;
};

// For each u, looks for one sign, one j and one vector d such that every
// component spectrum value is
//   sign * p^floor(ln/2) * g_p^[ln odd] * zeta_{p^K}^(j + M (c.d mod R))
// where the components map into Z_{p^K}, c and d live in Z_R^dims and
// M = p^K / R. The component at c = 0 fixes sign and j, the unit vectors fix
// d, so the search is exhaustive. `holds` must agree with is_gbent(f).
CharacterizationResult characterization_check(const GBFunc& f,
                                              const ComponentSpec& spec);

// Every (mode, t, s) combination whose preconditions f satisfies.
std::vector<ComponentSpec> legal_component_specs(const GBFunc& f);

struct ZpkBentVerdict {
  bool by_definition = false;  // a f gbent for every nonzero a in Z_{p^k}
  bool by_scaling = false;     // p^t f gbent for t = 0 .. k-1
};

bool is_zpk_bent_by_definition(const GBFunc& f);
bool is_zpk_bent_by_scaling(const GBFunc& f);
ZpkBentVerdict is_zpk_bent(const GBFunc& f);

struct PlateauedOrder {
  int s = 0;
  // Whether the zeta_p exponent a(u) is the same at every nonzero value.
  bool uniform = false;
};

// s such that every Walsh value of the p-ary g is 0 or
// +-p^floor((n+s)/2) g_p^[(n+s) odd] zeta_p^(a(u)); nullopt otherwise.
std::optional<PlateauedOrder> plateaued_order(const GBFunc& g);

// plateaued_order(gray_image(f)) has s = k - 1. Throws std::invalid_argument
// if f is not gbent.
bool verify_gray_plateaued(const GBFunc& f);

// Every nonzero Z_p-combination of the p-ary components is bent.
bool is_vectorial_bent(std::span<const GBFunc> components);

}  // namespace gbent

#endif  // GBENT_ANALYSIS_H_
