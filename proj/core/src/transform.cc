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

#include "gbent/transform.h"

#include <algorithm>
#include <stdexcept>

#include "gbent/int_math.h"

namespace gbent {
namespace {

CycloParams spectrum_params(const GBFunc& f) {
  if (f.l() > f.k()) {
    throw std::invalid_argument("transform: need l <= k");
  }
  return CycloParams(f.p(), f.k());
}

// (u.x mod p^l) for coordinate vectors packed in mixed radix p^l.
std::int64_t dot_mod(std::int64_t u, std::int64_t x, std::int64_t radix,
                     int n) {
  std::int64_t acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += (u % radix) * (x % radix);
    u /= radix;
    x /= radix;
  }
  return acc % radix;
}

}  // namespace

Spectrum wht_naive(const GBFunc& f) {
  const CycloParams params = spectrum_params(f);
  const std::int64_t radix = f.domain_radix();
  const std::int64_t kernel = params.embed(f.l());  // zeta_{p^l} = zeta^kernel
  const std::int64_t q = params.order();
  const std::size_t size = f.size();

  Spectrum out{params, f.l(), f.n(), {}};
  out.values.reserve(size);
  std::vector<std::int64_t> counts(q);
  for (std::size_t u = 0; u < size; ++u) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t x = 0; x < size; ++x) {
      const std::int64_t e =
          f[x] - dot_mod(static_cast<std::int64_t>(u),
                         static_cast<std::int64_t>(x), radix, f.n()) *
                     kernel;
      counts[mod(e, q)] += 1;
    }
    out.values.push_back(from_exponent_counts(counts, params));
  }
  return out;
}

Spectrum wht_fast(const GBFunc& f) {
  const CycloParams params = spectrum_params(f);
  const std::int64_t radix = f.domain_radix();
  const std::int64_t kernel = params.embed(f.l());
  const std::size_t size = f.size();

  // chi[u * radix + x] = exponent of zeta_{p^l}^(-u x).
  std::vector<std::int64_t> chi(radix * radix);
  for (std::int64_t u = 0; u < radix; ++u) {
    for (std::int64_t x = 0; x < radix; ++x) {
      chi[u * radix + x] = -((u * x) % radix) * kernel;
    }
  }

  std::vector<CycInt> cur;
  cur.reserve(size);
  for (std::size_t x = 0; x < size; ++x) cur.push_back(reduce(f[x], params));

  std::vector<CycInt> next(size, CycInt(params));
  CycAccumulator acc(params);
  std::size_t stride = 1;
  for (int stage = 0; stage < f.n(); ++stage) {
    const std::size_t block = stride * radix;
    for (std::size_t base = 0; base < size; base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        for (std::int64_t u = 0; u < radix; ++u) {
          acc.clear();
          for (std::int64_t x = 0; x < radix; ++x) {
            acc.add_shifted(cur[base + offset + x * stride],
                            chi[u * radix + x]);
          }
          next[base + offset + u * stride] = acc.fold();
        }
      }
    }
    cur.swap(next);
    stride = block;
  }
  return Spectrum{params, f.l(), f.n(), std::move(cur)};
}

bool inverse_check(const GBFunc& f, const Spectrum& spectrum) {
  const CycloParams& params = spectrum.params;
  if (spectrum.values.size() != f.size() || params.k() != f.k() ||
      params.p() != f.p() || spectrum.l != f.l() || spectrum.n != f.n()) {
    return false;
  }
  const std::int64_t radix = f.domain_radix();
  const std::int64_t kernel = params.embed(f.l());
  const CycInt::Coeff scale(ipow(f.p(), f.l() * f.n()));
  CycAccumulator acc(params);
  for (std::size_t x = 0; x < f.size(); ++x) {
    acc.clear();
    for (std::size_t u = 0; u < f.size(); ++u) {
      acc.add_shifted(spectrum.values[u],
                      dot_mod(static_cast<std::int64_t>(u),
                              static_cast<std::int64_t>(x), radix, f.n()) *
                          kernel);
    }
    if (!(acc.fold() == reduce(f[x], params) * scale)) return false;
  }
  return true;
}

bool parseval_check(const Spectrum& spectrum) {
  const CycloParams& params = spectrum.params;
  CycInt total(params);
  for (const auto& s : spectrum.values) total += norm_sq(s);
  const CycInt::Coeff expected(ipow(params.p(), 2 * spectrum.norm_exp()));
  return total == CycInt::integer(params, expected);
}

}  // namespace gbent
