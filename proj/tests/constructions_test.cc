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

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "gbent/analysis.h"
#include "gbent/transform.h"
#include "test_support.h"

namespace gbent {
namespace {

using Poly = std::vector<std::int64_t>;

TEST(Field, SmallestIrreducible) {
  EXPECT_EQ(gf_make(3, 1).modulus(), (Poly{0, 1}));
  EXPECT_EQ(gf_make(3, 2).modulus(), (Poly{1, 0, 1}));
  EXPECT_EQ(gf_make(3, 3).modulus(), (Poly{1, 2, 0, 1}));
  EXPECT_THROW(gf_make(3, 9), std::invalid_argument);
  EXPECT_THROW(FieldSpec(3, 2, {2, 0, 1}), std::invalid_argument);  // x^2 + 2
}

TEST(Field, Irreducibility) {
  EXPECT_TRUE(is_irreducible(Poly{1, 0, 1}, 3));
  EXPECT_FALSE(is_irreducible(Poly{2, 0, 1}, 3));
  EXPECT_TRUE(is_irreducible(Poly{2, 0, 1}, 5));
  EXPECT_FALSE(is_irreducible(Poly{1, 0, 2, 0, 1}, 3));  // (x^2 + 1)^2
}

TEST(Field, ArithmeticAxioms) {
  for (auto [p, m] : {std::pair{3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
    const FieldSpec f = gf_make(p, m);
    const std::int64_t q = f.order();
    for (std::int64_t a = 1; a < q; ++a) {
      int inverses = 0;
      for (std::int64_t b = 0; b < q; ++b) inverses += f.mul(a, b) == 1;
      EXPECT_EQ(inverses, 1) << "a=" << a;
    }
    for (std::int64_t a = 0; a < q; a += 2) {
      for (std::int64_t b = 1; b < q; b += 3) {
        for (std::int64_t c = 0; c < q; c += 5) {
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Spread, Invariants) {
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}}) {
    const SpreadFamily s = regular_spread(gf_make(p, m));
    EXPECT_EQ(s.subspaces.size(), static_cast<std::size_t>(ipow(p, m) + 1));
    EXPECT_TRUE(spread_invariants_hold(s)) << p << " " << m;
    ASSERT_EQ(s.bases.size(), s.subspaces.size());
    EXPECT_EQ(s.bases[1].size(), static_cast<std::size_t>(m));
  }
  SpreadFamily broken = regular_spread(gf_make(3, 2));
  broken.subspaces[2] = broken.subspaces[3];
  EXPECT_FALSE(spread_invariants_hold(broken));
}

TEST(Spread, BasesSpanTheirSubspaces) {
  const int p = 3, m = 2;
  const SpreadFamily s = regular_spread(gf_make(p, m));
  const std::int64_t q = ipow(p, m);
  for (std::size_t i = 0; i < s.subspaces.size(); ++i) {
    std::vector<std::int64_t> span_pts;
    for (std::int64_t a = 0; a < q; ++a) {
      const auto coef = to_digits(a, p, m);
      std::vector<std::int64_t> v(2 * m, 0);
      for (int r = 0; r < m; ++r) {
        for (int j = 0; j < 2 * m; ++j) v[j] = (v[j] + coef[r] * s.bases[i][r][j]) % p;
      }
      const std::vector<std::int64_t> xs(v.begin(), v.begin() + m);
      const std::vector<std::int64_t> ys(v.begin() + m, v.end());
      span_pts.push_back(from_digits(xs, p) + q * from_digits(ys, p));
    }
    std::sort(span_pts.begin(), span_pts.end());
    std::vector<std::int64_t> pts = s.subspaces[i];
    std::sort(pts.begin(), pts.end());
    EXPECT_EQ(span_pts, pts) << i;
  }
}

TEST(BalancedMaps, Default) {
  const BalancedMap b22 = default_balanced_map(3, 2, 2);
  EXPECT_EQ(b22.values, (std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_TRUE(b22.balanced());
  const BalancedMap b21 = default_balanced_map(3, 2, 1);
  EXPECT_EQ(b21.values, (std::vector<std::int64_t>{0, 1, 2, 0, 1, 2, 0, 1, 2}));
  EXPECT_TRUE(b21.balanced());
  EXPECT_THROW(default_balanced_map(3, 1, 2), std::invalid_argument);
  BalancedMap skewed = b22;
  skewed.values[0] = 1;
  EXPECT_FALSE(skewed.balanced());
}

TEST(SpreadGbent, ConstantOnEachSubspace) {
  const SpreadFamily s = regular_spread(gf_make(3, 2));
  const BalancedMap b = default_balanced_map(3, 2, 2);
  const GBFunc f = spread_gbent(s, b);
  EXPECT_EQ(f[0], 0);
  for (auto v : s.subspaces[0]) EXPECT_EQ(f[v], 0);
  for (std::size_t i = 1; i < s.subspaces.size(); ++i) {
    for (auto v : s.subspaces[i]) {
      if (v != 0) EXPECT_EQ(f[v], b.values[i - 1]);
    }
  }
  BalancedMap skewed = b;
  skewed.values[0] = 1;
  EXPECT_THROW(spread_gbent(s, skewed), std::invalid_argument);
}

TEST(SpreadGbent, BentAndZpkBent) {
  const SpreadFamily s = regular_spread(gf_make(3, 2));
  EXPECT_TRUE(is_zpk_bent(spread_gbent(s, default_balanced_map(3, 2, 2))).by_definition);
  EXPECT_TRUE(is_gbent(spread_gbent(s, default_balanced_map(3, 2, 1))).gbent);
  // A non-default balanced map works too.
  BalancedMap rev = default_balanced_map(3, 2, 2);
  std::reverse(rev.values.begin(), rev.values.end());
  EXPECT_TRUE(is_zpk_bent(spread_gbent(s, rev)).by_scaling);
}

TEST(Lift, Examples) {
  const GBFunc g = testing::x1x2(3);
  EXPECT_EQ(lift_bent(g, 1), g);
  const GBFunc f = lift_bent(g, 2);
  for (std::size_t x = 0; x < g.size(); ++x) EXPECT_EQ(f[x], 3 * g[x]);
  EXPECT_TRUE(is_gbent(f).gbent);
  EXPECT_FALSE(is_gbent(lift_bent(GBFunc::zero(3, 1, 2, 1), 2)).gbent);
}

TEST(Lift, PreservesBentness) {
  for (const GBFunc& g : testing::all_pary(3, 1)) {
    EXPECT_EQ(is_gbent(lift_bent(g, 3)).gbent, is_gbent(g).gbent);
  }
}

TEST(Quadratic, Examples) {
  const GBFunc f = quadratic_gbent_lk(3, 2, 3, 1);
  for (std::int64_t x = 0; x < 9; ++x) EXPECT_EQ(f[x], 3 * x * x % 27);
  EXPECT_TRUE(is_gbent(wht_naive(f)).gbent);
  EXPECT_EQ(quadratic_gbent_lk(3, 1, 2, 2), lift_bent(testing::sum_squares(3, 2), 2));
  const GBFunc f2 = quadratic_gbent_lk(3, 2, 3, 2);
  EXPECT_EQ(is_gbent(wht_naive(f2)).gbent, is_gbent(f2).gbent);
  EXPECT_THROW(quadratic_gbent_lk(3, 2, 2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace gbent
