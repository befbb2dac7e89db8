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

#include <sstream>
#include <stdexcept>
#include <utility>

#include "gbent/int_math.h"

namespace gbent {
namespace {

// Largest p^k accepted. Far above desk scale, small enough that the
// exponent-slot accumulator stays cheap.
constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

}  // namespace

CycloParams::CycloParams(int p, int k) : p_(p), k_(k) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("CycloParams: p must be an odd prime");
  }
  if (k < 1) throw std::invalid_argument("CycloParams: k must be >= 1");
  order_ = ipow(p, k);
  if (order_ > kMaxOrder) {
    throw std::invalid_argument("CycloParams: p^k too large");
  }
  stride_ = order_ / p;
  degree_ = static_cast<int>((p - 1) * stride_);
}

std::int64_t CycloParams::embed(int t) const {
  if (t < 0 || t > k_) {
    throw std::invalid_argument("CycloParams::embed: need 0 <= t <= k");
  }
  return ipow(p_, k_ - t);
}

// ---------------------------------------------------------------------------
// CycAccumulator

CycAccumulator::CycAccumulator(const CycloParams& params)
    : params_(params), slots_(params.order()) {}

void CycAccumulator::add_root(std::int64_t e, const CycInt::Coeff& c) {
  slots_[mod(e, params_.order())] += c;
}

void CycAccumulator::add_root(std::int64_t e, long count) {
  slots_[mod(e, params_.order())] += count;
}

void CycAccumulator::add_shifted(const CycInt& x, std::int64_t shift) {
  if (!(x.params() == params_)) {
    throw std::invalid_argument("CycAccumulator: parameter mismatch");
  }
  const std::int64_t q = params_.order();
  shift = mod(shift, q);
  auto coeffs = x.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    std::int64_t e = static_cast<std::int64_t>(j) + shift;
    if (e >= q) e -= q;
    slots_[e] += coeffs[j];
  }
}

CycInt CycAccumulator::fold() const {
  const int degree = params_.degree();
  const std::int64_t stride = params_.stride();
  const int p = params_.p();
  std::vector<CycInt::Coeff> coeffs(slots_.begin(), slots_.begin() + degree);
  // zeta^((p-1)p^(k-1)) = -sum_{j=0}^{p-2} zeta^(j p^(k-1)).
  for (std::int64_t e = degree; e < params_.order(); ++e) {
    const auto& c = slots_[e];
    if (sgn(c) == 0) continue;
    const std::int64_t r = e - degree;
    for (int j = 0; j + 1 < p; ++j) coeffs[r + j * stride] -= c;
  }
  return CycInt(params_, std::move(coeffs));
}

void CycAccumulator::clear() {
  for (auto& s : slots_) s = 0;
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(const CycloParams& params)
    : params_(params), coeffs_(params.degree()) {}

CycInt::CycInt(const CycloParams& params, std::vector<Coeff> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != params_.degree()) {
    throw std::invalid_argument("CycInt: coefficient count != degree");
  }
}

CycInt CycInt::integer(const CycloParams& params, const Coeff& value) {
  CycInt r(params);
  r.coeffs_[0] = value;
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return false;
  }
  return true;
}

CycInt CycInt::times_root(std::int64_t e) const {
  CycAccumulator acc(params_);
  acc.add_shifted(*this, e);
  return acc.fold();
}

void CycInt::require_same(const CycInt& other) const {
  if (!(params_ == other.params_)) {
    throw std::invalid_argument("CycInt: parameter mismatch");
  }
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  require_same(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  require_same(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  require_same(rhs);
  CycAccumulator acc(params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      acc.add_root(static_cast<std::int64_t>(i + j),
                   Coeff(coeffs_[i] * rhs.coeffs_[j]));
    }
  }
  *this = acc.fold();
  return *this;
}

CycInt& CycInt::operator*=(const Coeff& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Coeff& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    Coeff mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z";
    if (j > 1) out << "^" << j;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// Free functions

CycInt reduce(std::int64_t exponent, const CycloParams& params) {
  CycAccumulator acc(params);
  acc.add_root(exponent, 1L);
  return acc.fold();
}

CycInt from_exponent_counts(std::span<const std::int64_t> counts,
                            const CycloParams& params) {
  if (static_cast<std::int64_t>(counts.size()) != params.order()) {
    throw std::invalid_argument("from_exponent_counts: need p^k counts");
  }
  CycAccumulator acc(params);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 0) acc.add_root(static_cast<std::int64_t>(e), counts[e]);
  }
  return acc.fold();
}

GaloisIndex::GaloisIndex(std::int64_t j) : j_(j) {}

CycInt galois(const CycInt& a, GaloisIndex s) {
  const CycloParams& params = a.params();
  if (gcd(mod(s.value(), params.p()), params.p()) != 1) {
    throw std::invalid_argument("galois: index not coprime to p");
  }
  const std::int64_t j = mod(s.value(), params.order());
  CycAccumulator acc(params);
  auto coeffs = a.coeffs();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (sgn(coeffs[e]) == 0) continue;
    acc.add_root(static_cast<std::int64_t>(e) * j, coeffs[e]);
  }
  return acc.fold();
}

CycInt norm_sq(const CycInt& a) { return a * conj(a); }

CycInt gauss_sum(const CycloParams& params) {
  CycAccumulator acc(params);
  const std::int64_t step = params.stride();
  for (std::int64_t j = 0; j < params.p(); ++j) {
    acc.add_root((j * j % params.p()) * step, 1L);
  }
  return acc.fold();
}

namespace {

void check_gamma_args(std::span<const std::int64_t> c, int t, int l,
                      const CycloParams& params) {
  if (t < 1 || l < 1) throw std::invalid_argument("gamma: need t, l >= 1");
  if (static_cast<int>(c.size()) != l - 1) {
    throw std::invalid_argument("gamma: vector length must be l - 1");
  }
  if (l > 1 && static_cast<std::int64_t>(l - 1) * t >= params.k()) {
    throw std::invalid_argument("gamma: need (l-1)*t < k");
  }
  const std::int64_t radix = ipow(params.p(), t);
  for (auto ci : c) {
    if (ci < 0 || ci >= radix) {
      throw std::invalid_argument("gamma: entry outside Z_{p^t}");
    }
  }
}

}  // namespace

CycInt gamma(std::span<const std::int64_t> c, int t, int l,
             const CycloParams& params) {
  check_gamma_args(c, t, l, params);
  const int dims = l - 1;
  const std::int64_t radix = ipow(params.p(), t);
  const std::int64_t small = params.embed(t);
  std::int64_t total = 1;
  for (int i = 0; i < dims; ++i) total *= radix;

  std::vector<std::int64_t> counts(params.order(), 0);
  for (std::int64_t index = 0; index < total; ++index) {
    auto d = to_digits(index, radix, dims);
    std::int64_t dot = 0;
    std::int64_t e = 0;
    std::int64_t weight = 1;
    for (int j = 0; j < dims; ++j) {
      dot += c[j] * d[j];
      e += weight * d[j];
      weight *= radix;
    }
    e -= mod(dot, radix) * small;
    counts[mod(e, params.order())] += 1;
  }
  return from_exponent_counts(counts, params);
}

CycInt gamma_product_form(std::span<const std::int64_t> c, int t, int l,
                          const CycloParams& params) {
  check_gamma_args(c, t, l, params);
  const std::int64_t radix = ipow(params.p(), t);
  const std::int64_t small = params.embed(t);
  CycInt product = CycInt::integer(params, 1);
  std::int64_t weight = 1;
  for (int i = 0; i < l - 1; ++i) {
    CycAccumulator acc(params);
    for (std::int64_t v = 0; v < radix; ++v) {
      acc.add_root(-mod(v * c[i], radix) * small + weight * v, 1L);
    }
    product *= acc.fold();
    weight *= radix;
  }
  return product;
}

bool gamma_inversion_check(std::span<const std::int64_t> u, int t, int l,
                           const CycloParams& params) {
  check_gamma_args(u, t, l, params);
  const int dims = l - 1;
  const std::int64_t radix = ipow(params.p(), t);
  const std::int64_t small = params.embed(t);
  std::int64_t total = 1;
  std::int64_t e = 0;
  for (int j = 0; j < dims; ++j) {
    e += total * u[j];
    total *= radix;
  }
  CycInt lhs = reduce(e, params) * CycInt::Coeff(total);

  CycAccumulator rhs(params);
  for (std::int64_t index = 0; index < total; ++index) {
    auto c = to_digits(index, radix, dims);
    std::int64_t dot = 0;
    for (int j = 0; j < dims; ++j) dot += c[j] * u[j];
    rhs.add_shifted(gamma(c, t, l, params), mod(dot, radix) * small);
  }
  return lhs == rhs.fold();
}

bool digit_identity_check(std::int64_t a, int t, const CycloParams& params) {
  if (t < 1 || t > params.k()) {
    throw std::invalid_argument("digit_identity_check: need 1 <= t <= k");
  }
  const std::int64_t radix = ipow(params.p(), t);
  const std::int64_t small = params.embed(t);
  CycInt lhs = reduce(a, params) * CycInt::Coeff(radix);

  std::vector<std::int64_t> counts(params.order(), 0);
  for (std::int64_t i = 0; i < radix; ++i) {
    for (std::int64_t j = 0; j < radix; ++j) {
      const std::int64_t e = mod((a - i) * j, radix) * small + i;
      counts[mod(e, params.order())] += 1;
    }
  }
  return lhs == from_exponent_counts(counts, params);
}

namespace {

CycInt unit_base(const CycloParams& params, int scale_exp, bool with_gauss) {
  if (scale_exp < 0) throw std::invalid_argument("unit_match: scale < 0");
  CycInt base = CycInt::integer(params, 1);
  base *= CycInt::Coeff(ipow(params.p(), scale_exp));
  if (with_gauss) base *= gauss_sum(params);
  return base;
}

}  // namespace

std::optional<UnitMatch> unit_match(const CycInt& s, int scale_exp,
                                    bool with_gauss) {
  const CycloParams& params = s.params();
  if (s.is_zero()) return std::nullopt;
  const CycInt base = unit_base(params, scale_exp, with_gauss);
  for (std::int64_t e = 0; e < params.order(); ++e) {
    CycInt candidate = base.times_root(e);
    if (s == candidate) return UnitMatch{+1, e};
    if (s == -candidate) return UnitMatch{-1, e};
  }
  return std::nullopt;
}

UnitMatcher::UnitMatcher(const CycloParams& params, int scale_exp,
                         bool with_gauss)
    : params_(params), base_(unit_base(params, scale_exp, with_gauss)) {
  for (std::int64_t e = 0; e < params.order(); ++e) {
    CycInt candidate = base_.times_root(e);
    std::vector<CycInt::Coeff> neg;
    neg.reserve(candidate.coeffs().size());
    for (const auto& c : candidate.coeffs()) neg.emplace_back(-c);
    table_.emplace(std::vector<CycInt::Coeff>(candidate.coeffs().begin(),
                                              candidate.coeffs().end()),
                   UnitMatch{+1, e});
    table_.emplace(std::move(neg), UnitMatch{-1, e});
  }
}

std::optional<UnitMatch> UnitMatcher::match(const CycInt& s) const {
  if (!(s.params() == params_)) {
    throw std::invalid_argument("UnitMatcher: parameter mismatch");
  }
  std::vector<CycInt::Coeff> key(s.coeffs().begin(), s.coeffs().end());
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

CycInt UnitMatcher::element(const UnitMatch& m) const {
  CycInt r = base_.times_root(m.exponent);
  return m.sign < 0 ? -r : r;
}

}  // namespace gbent
