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


#include "gbent/constructions.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gbent/int_math.h"

namespace gbent {
namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over Z_p.
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    }
    trim(a);
  }
  return a;
}

Poly encode_poly(std::int64_t v, int p, int m) { return to_digits(v, p, m); }

}  // namespace

FieldSpec::FieldSpec(int p, int m, std::vector<std::int64_t> modulus)
    : p_(p), m_(m), order_(ipow(p, m)), modulus_(std::move(modulus)) {
  if (p < 3 || !is_prime(p) || m < 1) {
    throw std::invalid_argument("FieldSpec: need odd prime p and m >= 1");
  }
  if (static_cast<int>(modulus_.size()) != m + 1 || modulus_.back() != 1) {
    throw std::invalid_argument("FieldSpec: modulus must be monic of degree m");
  }
  if (!is_irreducible(modulus_, p)) {
    throw std::invalid_argument("FieldSpec: modulus is reducible");
  }
}

std::int64_t FieldSpec::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  std::int64_t w = 1;
  for (int i = 0; i < m_; ++i) {
    out += w * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return out;
}

std::int64_t FieldSpec::mul(std::int64_t a, std::int64_t b) const {
  const Poly pa = encode_poly(a, p_, m_);
  const Poly pb = encode_poly(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  }
  Poly r = poly_rem(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_digits(r, p_);
}

bool is_irreducible(std::span<const std::int64_t> poly, int p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.empty() || f.back() != 1) {
    throw std::invalid_argument("is_irreducible: need a monic polynomial");
  }
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t low = 0; low < count; ++low) {
      Poly g = encode_poly(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec gf_make(int p, int m) {
  if (p < 3 || !is_prime(p) || m < 1) {
    throw std::invalid_argument("gf_make: need odd prime p and m >= 1");
  }
  if (ipow(p, m) > 10000) throw std::invalid_argument("gf_make: p^m > 10^4");
  const std::int64_t count = ipow(p, m);
  for (std::int64_t low = 0; low < count; ++low) {
    Poly cand = encode_poly(low, p, m);
    cand.push_back(1);
    if (is_irreducible(cand, p)) return FieldSpec(p, m, std::move(cand));
  }
  throw std::logic_error("gf_make: no irreducible polynomial found");
}

SpreadFamily regular_spread(const FieldSpec& field) {
  const int p = field.p();
  const int m = field.m();
  const std::int64_t q = field.order();
  SpreadFamily out;
  out.p = p;
  out.m = m;

  std::vector<std::int64_t> u0;
  for (std::int64_t y = 0; y < q; ++y) u0.push_back(q * y);
  out.subspaces.push_back(std::move(u0));
  for (std::int64_t s = 0; s < q; ++s) {
    std::vector<std::int64_t> us;
    for (std::int64_t x = 0; x < q; ++x) us.push_back(x + q * field.mul(s, x));
    std::sort(us.begin(), us.end());
    out.subspaces.push_back(std::move(us));
  }

  // Bases from the field basis 1, X, ..., X^(m-1).
  auto row = [&](std::int64_t x, std::int64_t y) {
    auto r = to_digits(x, p, m);
    auto ry = to_digits(y, p, m);
    r.insert(r.end(), ry.begin(), ry.end());
    return r;
  };
  std::vector<std::vector<std::int64_t>> b0;
  for (int i = 0; i < m; ++i) b0.push_back(row(0, ipow(p, i)));
  out.bases.push_back(std::move(b0));
  for (std::int64_t s = 0; s < q; ++s) {
    std::vector<std::vector<std::int64_t>> bs;
    for (int i = 0; i < m; ++i) {
      const std::int64_t e = ipow(p, i);
      bs.push_back(row(e, field.mul(s, e)));
    }
    out.bases.push_back(std::move(bs));
  }
  return out;
}

bool spread_invariants_hold(const SpreadFamily& spread) {
  const std::int64_t q = ipow(spread.p, spread.m);
  const std::int64_t total = q * q;
  if (static_cast<std::int64_t>(spread.subspaces.size()) != q + 1) return false;
  std::vector<int> cover(total, 0);
  for (const auto& u : spread.subspaces) {
    if (static_cast<std::int64_t>(u.size()) != q) return false;
    const std::set<std::int64_t> pts(u.begin(), u.end());
    if (static_cast<std::int64_t>(pts.size()) != q || !pts.contains(0)) {
      return false;
    }
    for (auto v : u) {
      if (v < 0 || v >= total) return false;
      ++cover[v];
    }
  }
  if (cover[0] != q + 1) return false;
  return std::all_of(cover.begin() + 1, cover.end(),
                     [](int c) { return c == 1; });
}

bool BalancedMap::balanced() const {
  if (k > m || static_cast<std::int64_t>(values.size()) != ipow(p, m)) {
    return false;
  }
  std::vector<std::int64_t> hits(ipow(p, k), 0);
  for (auto v : values) {
    if (v < 0 || v >= static_cast<std::int64_t>(hits.size())) return false;
    ++hits[v];
  }
  const std::int64_t want = ipow(p, m - k);
  return std::all_of(hits.begin(), hits.end(),
                     [&](std::int64_t h) { return h == want; });
}

BalancedMap default_balanced_map(int p, int m, int k) {
  if (k > m) throw std::invalid_argument("default_balanced_map: need k <= m");
  BalancedMap out{p, m, k, {}};
  const std::int64_t q = ipow(p, m);
  const std::int64_t pk = ipow(p, k);
  for (std::int64_t s = 1; s <= q; ++s) out.values.push_back((s - 1) % pk);
  return out;
}

GBFunc spread_gbent(const SpreadFamily& spread, const BalancedMap& map) {
  if (map.p != spread.p || map.m != spread.m || !map.balanced()) {
    throw std::invalid_argument("spread_gbent: map not balanced for this spread");
  }
  const std::int64_t q = ipow(spread.p, spread.m);
  std::vector<std::int64_t> table(q * q, -1);
  for (auto v : spread.subspaces[0]) table[v] = 0;
  for (std::size_t s = 1; s < spread.subspaces.size(); ++s) {
    for (auto v : spread.subspaces[s]) {
      if (v != 0) table[v] = map.values[s - 1];
    }
  }
  if (std::find(table.begin(), table.end(), -1) != table.end()) {
    throw std::logic_error("spread_gbent: point outside every subspace");
  }
  return GBFunc(spread.p, 1, 2 * spread.m, map.k, std::move(table));
}

GBFunc lift_bent(const GBFunc& g, int k) {
  if (g.k() != 1) throw std::invalid_argument("lift_bent: g must be p-ary");
  if (k < 1) throw std::invalid_argument("lift_bent: need k >= 1");
  const std::int64_t w = ipow(g.p(), k - 1);
  std::vector<std::int64_t> table(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) table[i] = w * g[i];
  return GBFunc(g.p(), g.l(), g.n(), k, std::move(table));
}

GBFunc quadratic_gbent_lk(int p, int l, int k, int n) {
  if (l >= k) throw std::invalid_argument("quadratic_gbent_lk: need l < k");
  const std::int64_t w = ipow(p, k - l);
  const std::int64_t q = ipow(p, k);
  return GBFunc::from_rule(p, l, n, k, [&](std::span<const std::int64_t> x) {
    std::int64_t acc = 0;
    for (auto xi : x) acc = (acc + xi * xi) % q;
    return w * acc;
  });
}

}  // namespace gbent
