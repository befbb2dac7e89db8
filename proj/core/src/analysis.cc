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

#include "gbent/analysis.h"

#include <algorithm>

#include "gbent/int_math.h"

namespace gbent {
namespace {

int half_floor(int e) { return e / 2; }

// Mixed-radix enumeration of Z_radix^dims; index 0 is the zero vector and
// index radix^i is the i-th unit vector.
std::vector<std::vector<std::int64_t>> all_vectors(std::int64_t radix,
                                                   int dims) {
  const std::int64_t total = ipow(radix, dims);
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(total);
  for (std::int64_t i = 0; i < total; ++i) {
    out.push_back(to_digits(i, radix, dims));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// gbent

GbentVerdict is_gbent(const Spectrum& spectrum) {
  const CycInt expected = CycInt::integer(
      spectrum.params,
      CycInt::Coeff(ipow(spectrum.params.p(), spectrum.norm_exp())));
  for (std::size_t u = 0; u < spectrum.values.size(); ++u) {
    if (!(norm_sq(spectrum.values[u]) == expected)) return {false, u};
  }
  return {true, std::nullopt};
}

GbentVerdict is_gbent(const GBFunc& f) { return is_gbent(wht_fast(f)); }

// ---------------------------------------------------------------------------
// Regularity and duals

std::string RegularityClass::to_string() const {
  switch (kind) {
    case Regularity::kRegular:
      return "regular";
    case Regularity::kWeaklyRegular:
      return sign > 0 ? "weakly-regular(+)" : "weakly-regular(-)";
    case Regularity::kNonWeaklyRegular:
      return "non-weakly-regular";
  }
  return "unknown";
}

DualAnalysis classify_and_dual(const GBFunc& f) {
  const Spectrum spectrum = wht_fast(f);
  const GbentVerdict verdict = is_gbent(spectrum);
  if (!verdict.gbent) {
    throw AnalysisError("classify_and_dual: function is not gbent (u = " +
                        std::to_string(*verdict.witness) + ")");
  }
  const int ln = spectrum.norm_exp();
  const bool gauss = ln % 2 == 1;
  const UnitMatcher matcher(spectrum.params, half_floor(ln), gauss);

  std::vector<std::int64_t> dual(f.size());
  std::vector<int> signs(f.size());
  for (std::size_t u = 0; u < f.size(); ++u) {
    auto m = matcher.match(spectrum.values[u]);
    if (!m) {
      throw AnalysisError("classify_and_dual: Walsh value at u = " +
                          std::to_string(u) + " misses the normal form");
    }
    dual[u] = m->exponent;
    signs[u] = m->sign;
  }

  RegularityClass cls;
  const bool constant = std::all_of(signs.begin(), signs.end(),
                                    [&](int s) { return s == signs.front(); });
  const bool plain_branch = !gauss || f.p() % 4 == 1;
  if (constant && signs.front() == 1 && plain_branch) {
    cls = {Regularity::kRegular, 1};
  } else if (constant) {
    cls = {Regularity::kWeaklyRegular, signs.front()};
  } else {
    cls = {Regularity::kNonWeaklyRegular, 1};
  }
  return {cls,
          DualCertificate{GBFunc(f.p(), f.l(), f.n(), f.k(), std::move(dual)),
                          std::move(signs), gauss}};
}

bool reconstruct_check(const Spectrum& spectrum, const DualCertificate& cert) {
  if (cert.dual.size() != spectrum.values.size() ||
      cert.signs.size() != spectrum.values.size()) {
    return false;
  }
  const int ln = spectrum.norm_exp();
  const UnitMatcher shape(spectrum.params, half_floor(ln), cert.gauss_flag);
  for (std::size_t u = 0; u < spectrum.values.size(); ++u) {
    const CycInt expected =
        shape.element(UnitMatch{cert.signs[u], cert.dual[u]});
    if (!(expected == spectrum.values[u])) return false;
  }
  return true;
}

bool verify_dual_formula(const GBFunc& f) {
  if (f.l() != 1) {
    throw std::invalid_argument("verify_dual_formula: domain must be Z_p^n");
  }
  const DualAnalysis whole = classify_and_dual(f);
  const int k = f.k();
  const std::int64_t p = f.p();
  const Digits digits = digit_decompose(f, 1);
  const GBFunc& top = digits.blocks[k - 1];
  const GBFunc top_dual = classify_and_dual(top).certificate.dual;

  std::vector<std::int64_t> assembled(f.size(), 0);
  const std::int64_t top_weight = ipow(p, k - 1);
  for (std::size_t u = 0; u < f.size(); ++u) {
    assembled[u] = top_weight * top_dual[u];
  }
  for (int j = 0; j + 1 < k; ++j) {
    const std::vector<GBFunc> pair = {top, digits.blocks[j]};
    const std::vector<std::int64_t> ones = {1, 1};
    const GBFunc sum_dual =
        classify_and_dual(linear_combination(pair, ones)).certificate.dual;
    const std::int64_t weight = ipow(p, j);
    for (std::size_t u = 0; u < f.size(); ++u) {
      assembled[u] += weight * mod(sum_dual[u] - top_dual[u], p);
    }
  }
  for (auto& v : assembled) v %= f.modulus();
  return std::equal(assembled.begin(), assembled.end(),
                    whole.certificate.dual.table().begin());
}

// ---------------------------------------------------------------------------
// Component characterizations

CharacterizationResult characterization_check(const GBFunc& f,
                                              const ComponentSpec& spec) {
  const ComponentLayout layout = component_layout(f, spec);
  const int ln = f.l() * f.n();
  const CycloParams comp_params(f.p(), layout.codomain_exp);
  const UnitMatcher matcher(comp_params, half_floor(ln), ln % 2 == 1);
  const std::int64_t field_order = comp_params.order();
  const std::int64_t radix = layout.coeff_radix;
  const std::int64_t multiplier = field_order / radix;

  CharacterizationResult result;
  CharacterizationCertificate& cert = result.certificate;
  cert.spec = spec;
  cert.layout = layout;
  cert.coefficients = all_vectors(radix, layout.dims);

  // matches[c][u]
  std::vector<std::vector<std::optional<UnitMatch>>> matches;
  matches.reserve(cert.coefficients.size());
  for (const auto& c : cert.coefficients) {
    const Spectrum s = wht_fast(component_function(f, spec, c));
    std::vector<std::optional<UnitMatch>> row(f.size());
    for (std::size_t u = 0; u < f.size(); ++u) row[u] = matcher.match(s[u]);
    matches.push_back(std::move(row));
  }

  result.holds = true;
  cert.entries.resize(f.size());
  for (std::size_t u = 0; u < f.size(); ++u) {
    CharacterizationEntry& entry = cert.entries[u];
    entry.found = false;
    for (const auto& row : matches) entry.signs.push_back(row[u] ? row[u]->sign : 0);

    const auto& base = matches[0][u];
    bool ok = base.has_value();
    if (ok) {
      entry.sign = base->sign;
      entry.j = base->exponent;
      entry.d.assign(layout.dims, 0);
      for (int i = 0; i < layout.dims && ok; ++i) {
        const auto& unit = matches[ipow(radix, i)][u];
        if (!unit || unit->sign != entry.sign) {
          ok = false;
          break;
        }
        const std::int64_t diff = mod(unit->exponent - entry.j, field_order);
        if (diff % multiplier != 0) {
          ok = false;
          break;
        }
        entry.d[i] = (diff / multiplier) % radix;
      }
    }
    for (std::size_t ci = 0; ci < cert.coefficients.size() && ok; ++ci) {
      const auto& m = matches[ci][u];
      if (!m || m->sign != entry.sign) {
        ok = false;
        break;
      }
      std::int64_t dot = 0;
      for (int i = 0; i < layout.dims; ++i) {
        dot += cert.coefficients[ci][i] * entry.d[i];
      }
      const std::int64_t expected =
          mod(entry.j + multiplier * mod(dot, radix), field_order);
      if (m->exponent != expected) ok = false;
    }
    entry.found = ok;
    if (!ok) result.holds = false;
  }
  return result;
}

std::vector<ComponentSpec> legal_component_specs(const GBFunc& f) {
  std::vector<ComponentSpec> specs;
  const int k = f.k();
  if (f.l() == 1) {
    for (int t = 1; 2 * t <= k; ++t) specs.push_back({ComponentMode::kA, t, 1});
    for (int t = 1; t <= k; ++t) {
      for (int s = 1; s * t <= k; ++s) {
        specs.push_back({ComponentMode::kB, t, s});
      }
    }
    for (int t = 1; t <= k; ++t) {
      if (k % t == 0) specs.push_back({ComponentMode::kC, t, 1});
    }
  }
  if (f.l() < k) specs.push_back({ComponentMode::kD, 1, 1});
  return specs;
}

// ---------------------------------------------------------------------------
// Z_{p^k}-bentness

bool is_zpk_bent_by_definition(const GBFunc& f) {
  if (f.l() != 1) throw std::invalid_argument("is_zpk_bent: domain must be Z_p^n");
  for (std::int64_t a = 1; a < f.modulus(); ++a) {
    if (!is_gbent(scale(f, a)).gbent) return false;
  }
  return true;
}

bool is_zpk_bent_by_scaling(const GBFunc& f) {
  if (f.l() != 1) throw std::invalid_argument("is_zpk_bent: domain must be Z_p^n");
  for (int t = 0; t < f.k(); ++t) {
    if (!is_gbent(scale(f, ipow(f.p(), t))).gbent) return false;
  }
  return true;
}

ZpkBentVerdict is_zpk_bent(const GBFunc& f) {
  return {is_zpk_bent_by_definition(f), is_zpk_bent_by_scaling(f)};
}

// ---------------------------------------------------------------------------
// Plateaued functions and Gray images

std::optional<PlateauedOrder> plateaued_order(const GBFunc& g) {
  if (g.k() != 1 || g.l() != 1) {
    throw std::invalid_argument("plateaued_order: need a p-ary function on Z_p^n");
  }
  const Spectrum spectrum = wht_fast(g);
  std::optional<CycInt::Coeff> common;
  for (const auto& s : spectrum.values) {
    if (s.is_zero()) continue;
    const CycInt ns = norm_sq(s);
    if (!ns.is_rational()) return std::nullopt;
    const CycInt::Coeff v = ns.coeffs()[0];
    if (!common) {
      common = v;
    } else if (*common != v) {
      return std::nullopt;
    }
  }
  if (!common) return std::nullopt;  // all-zero spectrum cannot happen

  // common == p^(n+s)
  CycInt::Coeff rest = *common;
  int total = 0;
  while (rest % g.p() == 0) {
    rest /= g.p();
    ++total;
  }
  if (rest != 1 || total < g.n()) return std::nullopt;
  const int s = total - g.n();

  const UnitMatcher matcher(spectrum.params, half_floor(total), total % 2 == 1);
  std::optional<std::int64_t> first_exponent;
  bool uniform = true;
  for (const auto& value : spectrum.values) {
    if (value.is_zero()) continue;
    auto m = matcher.match(value);
    if (!m) return std::nullopt;
    if (!first_exponent) {
      first_exponent = m->exponent;
    } else if (*first_exponent != m->exponent) {
      uniform = false;
    }
  }
  return PlateauedOrder{s, uniform};
}

bool verify_gray_plateaued(const GBFunc& f) {
  if (!is_gbent(f).gbent) {
    throw std::invalid_argument("verify_gray_plateaued: function is not gbent");
  }
  const auto order = plateaued_order(gray_image(f));
  return order.has_value() && order->s == f.k() - 1;
}

bool is_vectorial_bent(std::span<const GBFunc> components) {
  if (components.empty()) {
    throw std::invalid_argument("is_vectorial_bent: no components");
  }
  const std::int64_t p = components.front().p();
  const int m = static_cast<int>(components.size());
  const std::int64_t total = ipow(p, m);
  for (std::int64_t index = 1; index < total; ++index) {
    const auto coeffs = to_digits(index, p, m);
    if (!is_gbent(linear_combination(components, coeffs)).gbent) return false;
  }
  return true;
}

}  // namespace gbent
