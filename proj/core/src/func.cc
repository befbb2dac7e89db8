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

#include "gbent/func.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gbent {
namespace {

// Keeps tables at desk scale.
constexpr std::int64_t kMaxTable = std::int64_t{1} << 24;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Digits [from, from + count) of v in base p, as a number.
std::int64_t digit_slice(std::int64_t v, std::int64_t p, int from, int count) {
  return (v / ipow(p, from)) % ipow(p, count);
}

}  // namespace

GBFunc::GBFunc(int p, int l, int n, int k, std::vector<std::int64_t> table)
    : p_(p), l_(l), n_(n), k_(k), table_(std::move(table)) {
  require(p >= 3 && is_prime(p), "GBFunc: p must be an odd prime");
  require(l >= 1 && n >= 1 && k >= 1, "GBFunc: l, n, k must be >= 1");
  radix_ = ipow(p, l);
  modulus_ = ipow(p, k);
  const std::int64_t size = ipow(radix_, n);
  require(size <= kMaxTable, "GBFunc: domain too large");
  if (static_cast<std::int64_t>(table_.size()) != size) {
    throw std::invalid_argument("GBFunc: table length must be p^(l*n), got " +
                                std::to_string(table_.size()));
  }
  for (auto v : table_) {
    require(v >= 0 && v < modulus_, "GBFunc: value outside [0, p^k)");
  }
}

GBFunc GBFunc::zero(int p, int l, int n, int k) {
  const std::int64_t size = ipow(ipow(p, l), n);
  require(size <= kMaxTable, "GBFunc: domain too large");
  return GBFunc(p, l, n, k, std::vector<std::int64_t>(size, 0));
}

std::int64_t GBFunc::at(std::span<const std::int64_t> x) const {
  require(static_cast<int>(x.size()) == n_, "GBFunc::at: wrong arity");
  for (auto xi : x) require(xi >= 0 && xi < radix_, "GBFunc::at: bad coordinate");
  return table_[from_digits(x, radix_)];
}

std::vector<std::int64_t> GBFunc::point(std::size_t index) const {
  return to_digits(static_cast<std::int64_t>(index), radix_, n_);
}

GBFunc Digits::recompose() const {
  require(!blocks.empty(), "Digits::recompose: no blocks");
  const GBFunc& first = blocks.front();
  std::vector<std::int64_t> table(first.size(), 0);
  const std::int64_t p = first.p();
  std::int64_t weight = 1;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < table.size(); ++i) table[i] += weight * b[i];
    weight *= ipow(p, t);
  }
  const std::int64_t modulus = ipow(p, source_k);
  for (auto& v : table) v %= modulus;
  return GBFunc(first.p(), first.l(), first.n(), source_k, std::move(table));
}

Digits digit_decompose(const GBFunc& f, int t) {
  require(t >= 1, "digit_decompose: t must be >= 1");
  require(t <= f.k(), "digit_decompose: t > k");
  Digits out;
  out.t = t;
  out.source_k = f.k();
  for (int from = 0; from < f.k(); from += t) {
    const int count = std::min(t, f.k() - from);
    std::vector<std::int64_t> table(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      table[i] = digit_slice(f[i], f.p(), from, count);
    }
    out.blocks.emplace_back(f.p(), f.l(), f.n(), count, std::move(table));
  }
  return out;
}

std::pair<GBFunc, GBFunc> split_g_h(const GBFunc& f, int t) {
  require(t >= 1, "split_g_h: t must be >= 1");
  require(f.k() >= 2 * t, "split_g_h: need k >= 2t");
  std::vector<std::int64_t> g(f.size());
  std::vector<std::int64_t> h(f.size());
  const std::int64_t pt = ipow(f.p(), t);
  for (std::size_t i = 0; i < f.size(); ++i) {
    g[i] = f[i] % pt;
    h[i] = f[i] / pt;
  }
  return {GBFunc(f.p(), f.l(), f.n(), t, std::move(g)),
          GBFunc(f.p(), f.l(), f.n(), f.k() - t, std::move(h))};
}

ComponentLayout component_layout(const GBFunc& f, const ComponentSpec& spec) {
  const int k = f.k();
  const int t = spec.t;
  ComponentLayout layout;
  switch (spec.mode) {
    case ComponentMode::kA:
      require(f.l() == 1, "component mode A: domain must be Z_p^n");
      require(t >= 1 && k >= 2 * t, "component mode A: need k >= 2t");
      layout.codomain_exp = k - t;
      layout.coeff_radix = ipow(f.p(), t);
      layout.dims = 1;
      break;
    case ComponentMode::kB:
      require(f.l() == 1, "component mode B: domain must be Z_p^n");
      require(t >= 1 && spec.s >= 1, "component mode B: need t, s >= 1");
      require(spec.s * t <= k, "component mode B: need s*t <= k");
      layout.codomain_exp = k - (spec.s - 1) * t;
      layout.coeff_radix = ipow(f.p(), t);
      layout.dims = spec.s - 1;
      break;
    case ComponentMode::kC:
      require(f.l() == 1, "component mode C: domain must be Z_p^n");
      require(t >= 1 && k % t == 0, "component mode C: need k = l*t");
      layout.codomain_exp = t;
      layout.coeff_radix = ipow(f.p(), t);
      layout.dims = k / t - 1;
      break;
    case ComponentMode::kD:
      require(f.l() < k, "component mode D: need l < k");
      layout.codomain_exp = f.l();
      layout.coeff_radix = f.p();
      layout.dims = k - f.l();
      break;
  }
  return layout;
}

GBFunc component_function(const GBFunc& f, const ComponentSpec& spec,
                          std::span<const std::int64_t> c) {
  const ComponentLayout layout = component_layout(f, spec);
  require(static_cast<int>(c.size()) == layout.dims,
          "component_function: wrong coefficient arity");
  for (auto ci : c) {
    require(ci >= 0 && ci < layout.coeff_radix,
            "component_function: coefficient outside its ring");
  }
  const std::int64_t p = f.p();
  const int k = f.k();
  const int t = spec.t;
  const std::int64_t out_mod = ipow(p, layout.codomain_exp);

  std::vector<std::int64_t> table(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const std::int64_t v = f[x];
    std::int64_t r = 0;
    switch (spec.mode) {
      case ComponentMode::kA: {
        const std::int64_t g = digit_slice(v, p, 0, t);
        const std::int64_t h = v / ipow(p, t);
        r = h + c[0] * ipow(p, k - 2 * t) * g;
        break;
      }
      case ComponentMode::kB: {
        const int s = spec.s;
        const std::int64_t low = digit_slice(v, p, t * (s - 1), k - t * s);
        std::int64_t blocks = digit_slice(v, p, k - t, t);
        for (int i = 0; i < s - 1; ++i) {
          blocks += c[i] * digit_slice(v, p, i * t, t);
        }
        r = low + ipow(p, k - t * s) * blocks;
        break;
      }
      case ComponentMode::kC: {
        r = digit_slice(v, p, k - t, t);
        for (int j = 0; j < layout.dims; ++j) {
          r += c[j] * digit_slice(v, p, j * t, t);
        }
        break;
      }
      case ComponentMode::kD: {
        const int l = f.l();
        std::int64_t lin = 0;
        for (int i = 0; i < k - l; ++i) lin += c[i] * digit_slice(v, p, i, 1);
        r = v / ipow(p, k - l) + ipow(p, l - 1) * lin;
        break;
      }
    }
    table[x] = mod(r, out_mod);
  }
  return GBFunc(f.p(), f.l(), f.n(), layout.codomain_exp, std::move(table));
}

GBFunc scale(const GBFunc& f, std::int64_t a) {
  std::vector<std::int64_t> table(f.size());
  const std::int64_t q = f.modulus();
  const std::int64_t a_red = mod(a, q);
  for (std::size_t i = 0; i < f.size(); ++i) table[i] = (a_red * f[i]) % q;
  return GBFunc(f.p(), f.l(), f.n(), f.k(), std::move(table));
}

GBFunc gray_image(const GBFunc& f) {
  require(f.l() == 1, "gray_image: domain must be Z_p^n");
  const int p = f.p();
  const int k = f.k();
  const int n_out = f.n() + k - 1;
  const std::int64_t xs = static_cast<std::int64_t>(f.size());
  const std::int64_t ys = ipow(p, k - 1);
  std::vector<std::int64_t> table(xs * ys);
  for (std::int64_t y = 0; y < ys; ++y) {
    const auto yd = to_digits(y, p, k - 1);
    for (std::int64_t x = 0; x < xs; ++x) {
      const auto a = to_digits(f[x], p, k);
      std::int64_t v = a[k - 1];
      for (int i = 0; i + 1 < k; ++i) v += a[i] * yd[i];
      table[x + xs * y] = v % p;
    }
  }
  return GBFunc(p, 1, n_out, 1, std::move(table));
}

GBFunc linear_combination(std::span<const GBFunc> fs,
                          std::span<const std::int64_t> coeffs) {
  require(!fs.empty(), "linear_combination: no functions");
  require(fs.size() == coeffs.size(), "linear_combination: arity mismatch");
  const GBFunc& first = fs.front();
  for (const auto& g : fs) {
    require(g.p() == first.p() && g.l() == first.l() && g.n() == first.n() &&
                g.k() == 1,
            "linear_combination: shape mismatch");
  }
  const std::int64_t p = first.p();
  std::vector<std::int64_t> table(first.size(), 0);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    const std::int64_t cj = mod(coeffs[j], p);
    if (cj == 0) continue;
    for (std::size_t i = 0; i < table.size(); ++i) table[i] += cj * fs[j][i];
  }
  for (auto& v : table) v %= p;
  return GBFunc(first.p(), first.l(), first.n(), 1, std::move(table));
}

}  // namespace gbent
