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


#include "gbent/cyclotomic.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "gbent/int_math.h"

namespace gbent {
namespace {

using Coeff = CycInt::Coeff;

CycInt make(const CycloParams& params, std::vector<long> c) {
  std::vector<Coeff> coeffs(params.degree(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
  return CycInt(params, std::move(coeffs));
}

CycInt random_elem(std::mt19937_64& rng, const CycloParams& params) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<Coeff> coeffs(params.degree());
  for (auto& c : coeffs) c = dist(rng);
  return CycInt(params, std::move(coeffs));
}

const CycloParams k9(3, 2);

TEST(Reduce, BasisExamples) {
  EXPECT_EQ(reduce(0, k9), make(k9, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(reduce(8, k9), make(k9, {0, 0, -1, 0, 0, -1}));
  EXPECT_EQ(reduce(9, k9), reduce(0, k9));
  EXPECT_EQ(reduce(-1, k9), reduce(8, k9));
}

TEST(Reduce, AllRootsSumToZero) {
  for (auto [p, k] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
    const CycloParams params(p, k);
    CycInt sum(params);
    for (std::int64_t e = 0; e < params.order(); ++e) sum += reduce(e, params);
    EXPECT_TRUE(sum.is_zero()) << "p=" << p << " k=" << k;
  }
}

TEST(Ring, Examples) {
  EXPECT_EQ(reduce(1, k9) * reduce(8, k9), CycInt::integer(k9, 1));
  const CycInt a = make(k9, {1, 1});
  EXPECT_TRUE((a + (-a)).is_zero());
  CycInt all(k9);
  for (int e = 0; e < 9; ++e) all += reduce(e, k9);
  EXPECT_TRUE((all * make(k9, {3, -2, 7})).is_zero());
}

TEST(Ring, ParameterMismatchThrows) {
  EXPECT_THROW(reduce(1, k9) + reduce(1, CycloParams(3, 1)),
               std::invalid_argument);
}

TEST(Ring, TimesRootMatchesMultiplication) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const CycInt a = random_elem(rng, k9);
    for (int e = -3; e < 12; ++e) EXPECT_EQ(a.times_root(e), a * reduce(e, k9));
  }
}

TEST(Galois, Examples) {
  const CycInt x = make(k9, {2, 3});
  EXPECT_EQ(galois(x, GaloisIndex(-1)), make(k9, {2, 0, -3, 0, 0, -3}));
  EXPECT_EQ(galois(x, GaloisIndex(1)), x);
  EXPECT_EQ(conj(conj(x)), x);
  EXPECT_THROW(galois(x, GaloisIndex(3)), std::invalid_argument);
}

TEST(Galois, RingHomomorphism) {
  std::mt19937_64 rng(12);
  for (auto [p, k] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}}) {
    const CycloParams params(p, k);
    for (int trial = 0; trial < 5; ++trial) {
      const CycInt a = random_elem(rng, params);
      const CycInt b = random_elem(rng, params);
      for (std::int64_t j = 1; j < params.order(); ++j) {
        if (j % p == 0) continue;
        const GaloisIndex s(j);
        EXPECT_EQ(galois(a * b, s), galois(a, s) * galois(b, s));
        EXPECT_EQ(galois(a + b, s), galois(a, s) + galois(b, s));
      }
    }
  }
}

TEST(NormSq, Examples) {
  EXPECT_EQ(norm_sq(reduce(5, k9)), CycInt::integer(k9, 1));
  EXPECT_TRUE(norm_sq(CycInt(k9)).is_zero());
  // 1 + zeta_3 = -zeta_3^2 inside Q(zeta_9).
  const CycInt one_plus = CycInt::integer(k9, 1) + reduce(k9.embed(1), k9);
  EXPECT_EQ(norm_sq(one_plus), CycInt::integer(k9, 1));
}

TEST(GaussSum, SquareIsSignedPrime) {
  for (int p : {3, 5, 7}) {
    for (int k : {1, 2}) {
      const CycloParams params(p, k);
      const CycInt g = gauss_sum(params);
      const long expected = (p % 4 == 1) ? p : -p;
      EXPECT_EQ(g * g, CycInt::integer(params, expected)) << p << " " << k;
    }
  }
  const CycloParams k3(3, 1);
  EXPECT_EQ(gauss_sum(k3), make(k3, {1, 2}));
}

TEST(Gamma, Examples) {
  const std::vector<std::int64_t> zero{0};
  const std::vector<std::int64_t> one{1};
  EXPECT_EQ(gamma(zero, 1, 2, k9), make(k9, {1, 1, 1}));
  EXPECT_EQ(gamma(one, 1, 2, k9), make(k9, {1, -1, 0, 0, -1, 1}));
}

TEST(Gamma, ProductFormAndInversion) {
  struct Case { int p, t, l, k; };
  for (auto [p, t, l, k] : {Case{3, 1, 2, 2}, Case{3, 1, 3, 3}, Case{3, 2, 2, 4},
                            Case{5, 1, 2, 2}}) {
    const CycloParams params(p, k);
    const std::int64_t radix = ipow(p, t);
    for (std::int64_t i = 0; i < ipow(radix, l - 1); ++i) {
      const auto c = to_digits(i, radix, l - 1);
      EXPECT_EQ(gamma_product_form(c, t, l, params), gamma(c, t, l, params));
      EXPECT_TRUE(gamma_inversion_check(c, t, l, params));
    }
  }
}

TEST(Gamma, RejectsTooLongVectors) {
  const std::vector<std::int64_t> c{0, 0};
  EXPECT_THROW(gamma(c, 1, 3, k9), std::invalid_argument);
}

TEST(DigitIdentity, Examples) {
  EXPECT_TRUE(digit_identity_check(0, 1, k9));
  EXPECT_TRUE(digit_identity_check(2, 1, k9));
  const CycloParams k27(3, 3);
  for (int a = 0; a < 9; ++a) EXPECT_TRUE(digit_identity_check(a, 2, k27));
  EXPECT_THROW(digit_identity_check(0, 3, k9), std::invalid_argument);
}

TEST(UnitMatch, Examples) {
  const CycInt s1 = reduce(4, k9) * Coeff(3);
  EXPECT_EQ(unit_match(s1, 1, false), (UnitMatch{1, 4}));
  const CycInt s2 = gauss_sum(k9) * reduce(2, k9) * Coeff(-3);
  EXPECT_EQ(unit_match(s2, 1, true), (UnitMatch{-1, 2}));
  const CycInt s3 = (CycInt::integer(k9, 1) + reduce(1, k9)) * Coeff(3);
  EXPECT_FALSE(unit_match(s3, 1, false).has_value());
}

TEST(UnitMatch, MatcherAgreesWithSearch) {
  for (bool gauss : {false, true}) {
    const UnitMatcher m(k9, 2, gauss);
    for (int sign : {1, -1}) {
      for (int e = 0; e < 9; ++e) {
        const CycInt s = m.element({sign, e});
        EXPECT_EQ(m.match(s), (UnitMatch{sign, e}));
        EXPECT_EQ(unit_match(s, 2, gauss), (UnitMatch{sign, e}));
      }
    }
    EXPECT_FALSE(m.match(CycInt::integer(k9, 5)).has_value());
  }
}

}  // namespace
}  // namespace gbent
