// Copyright 2026 The abelcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abelcount/pgroup.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

namespace {

// phi(p^e) as a polynomial in p.
IntPoly phi_prime_power(unsigned e) {
  if (e == 0) return IntPoly::constant(1);
  return IntPoly::monomial(1, e) - IntPoly::monomial(1, e - 1);
}

// J_2(p^e) = p^{2e} - p^{2e-2}.
IntPoly jordan2_prime_power(unsigned e) {
  if (e == 0) return IntPoly::constant(1);
  return IntPoly::monomial(1, 2 * e) - IntPoly::monomial(1, 2 * e - 2);
}

IntPoly term(long c, unsigned power) { return IntPoly::monomial(c, power); }

}  // namespace

IntPoly gauss_binom(unsigned r, unsigned k) {
  if (k > r) return {};
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (unsigned i = 1; i <= k; ++i) {
    num *= IntPoly::p_power_minus_one(r - k + i);
    den *= IntPoly::p_power_minus_one(i);
  }
  return num.exact_div(den);
}

IntPoly subgroups_of_type(const Partition& lambda, const Partition& mu) {
  if (!mu.fits_in(lambda)) return {};
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  IntPoly out = IntPoly::constant(1);
  for (unsigned j = 1; j <= lambda.largest(); ++j) {
    const unsigned shift = mc.at(j + 1) * (lc.at(j) - mc.at(j));
    out *= gauss_binom(lc.at(j) - mc.at(j + 1), mc.at(j) - mc.at(j + 1)).shifted(shift);
  }
  return out;
}

IntPoly total_subgroups_poly(const Partition& lambda) {
  IntPoly out;
  for (const Partition& mu : sub_partitions(lambda)) out += subgroups_of_type(lambda, mu);
  return out;
}

IntPoly subgroups_of_order_poly(const Partition& lambda, unsigned k) {
  IntPoly out;
  if (k > lambda.weight()) return out;
  for (const Partition& mu : sub_partitions(lambda)) {
    if (mu.weight() == k) out += subgroups_of_type(lambda, mu);
  }
  return out;
}

IntPoly cyclic_of_order_poly(const Partition& lambda, unsigned nu) {
  if (nu == 0) throw DomainError("cyclic_of_order_poly: nu must be >= 1");
  if (nu > lambda.largest()) return {};
  unsigned j = 0;
  while (j < lambda.length() && lambda.at(j + 1) >= nu) ++j;
  unsigned shift = (nu - 1) * (j - 1);
  for (std::size_t i = j + 1; i <= lambda.length(); ++i) shift += lambda.at(i);
  return IntPoly::p_power_minus_one(j).exact_div(IntPoly{-1, 1}).shifted(shift);
}

IntPoly aut_count_poly(unsigned a, unsigned b) {
  if (a > b) std::swap(a, b);
  if (a < b) return phi_prime_power(a) * phi_prime_power(b) * IntPoly::monomial(1, 2 * a);
  return jordan2_prime_power(a) * phi_prime_power(a) * IntPoly::monomial(1, a);
}

IntPoly s2_prime_power_poly(unsigned a, unsigned b) {
  if (a < 1 || a > b) {
    throw DomainError("s2_prime_power_poly needs 1 <= a <= b, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
  const long d = static_cast<long>(b) - static_cast<long>(a);
  const long s = static_cast<long>(a + b);
  IntPoly num = term(d + 1, a + 2) - term(d - 1, a + 1) - term(s + 3, 1) + term(s + 1, 0);
  IntPoly p_minus_1{-1, 1};
  return num.exact_div(p_minus_1 * p_minus_1);
}

IntPoly s3_prime_power_poly(unsigned l1, unsigned l2, unsigned l3) {
  if (!(l1 >= l2 && l2 >= l3 && l3 >= 1)) {
    throw DomainError("s3_prime_power_poly needs l1 >= l2 >= l3 >= 1");
  }
  const long a = l1, b = l2, c = l3;
  const unsigned e = l2 + l3;
  IntPoly f = term((c + 1) * (a - b + 1), e + 5) + term(2 * (c + 1), e + 4) -
              term(2 * (c + 1) * (a - b), e + 3) - term(2 * (c + 1), e + 2) +
              term((c + 1) * (a - b - 1), e + 1) - term(a + b - c + 3, 2 * l3 + 4) -
              term(2, 2 * l3 + 3) + term(a + b - c - 1, 2 * l3 + 2) + term(a + b + c + 5, 2) +
              term(2, 1) - term(a + b + c + 1, 0);
  IntPoly p2_minus_1{-1, 0, 1};
  IntPoly den = p2_minus_1 * p2_minus_1 * IntPoly{-1, 1};
  return f.exact_div(den);
}

namespace {

// One Goursat half: the subgroup A <= Z_{p^a} x Z_{p^b} indexed by
// (x1..x5), the subgroup B <= A indexed by (y1..y5), and the quotient
// A/B = Z_{p^u} x Z_{p^v}. Weights are phi(p^x3) phi(p^y3) summed per key.
struct HalfKey {
  unsigned u;
  unsigned v;
  unsigned order;  // exponent of |A| (outer) or |B| (inner)

  friend auto operator<=>(const HalfKey&, const HalfKey&) = default;
};

enum class OrderOf { kOuter, kInner };

std::map<HalfKey, IntPoly> half_sums(unsigned a, unsigned b, OrderOf which) {
  // Multiplicities of (u, v, order, x3, y3); polynomials built once per key.
  std::map<std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned>, long> counts;
  // (i) x1 + x2 + x3 = a, (ii) x3 + x4 + x5 = b
  for (unsigned x1 = 0; x1 <= a; ++x1) {
    for (unsigned x3 = 0; x1 + x3 <= a; ++x3) {
      for (unsigned x4 = 0; x3 + x4 <= b; ++x4) {
        const unsigned lo = std::min(x1, x4);
        const unsigned hi = x3 + std::max(x1, x4);
        // (iii) y1 + y2 + y3 = lo, (iv) y3 + y4 + y5 = hi
        for (unsigned y2 = 0; y2 <= lo; ++y2) {
          for (unsigned y3 = 0; y2 + y3 <= lo; ++y3) {
            const unsigned y1 = lo - y2 - y3;
            for (unsigned y5 = 0; y3 + y5 <= hi; ++y5) {
              const unsigned y4 = hi - y3 - y5;
              const unsigned u = std::min(y2, y5);
              const unsigned v = y3 + std::max(y2, y5);
              const unsigned ord = which == OrderOf::kOuter ? x1 + x3 + x4 : y1 + y3 + y4;
              ++counts[{u, v, ord, x3, y3}];
            }
          }
        }
      }
    }
  }
  std::map<HalfKey, IntPoly> out;
  for (const auto& [key, mult] : counts) {
    const auto& [u, v, ord, x3, y3] = key;
    IntPoly w = phi_prime_power(x3) * phi_prime_power(y3);
    out[HalfKey{u, v, ord}] += w * IntPoly::constant(mult);
  }
  return out;
}

}  // namespace

std::vector<IntPoly> n4_order_polys(unsigned a, unsigned b, unsigned c, unsigned d) {
  const unsigned n = a + b + c + d;
  std::vector<IntPoly> out(n + 1);
  // Left half carries |A| = p^{x1+x3+x4}, right half |D| = p^{t1+t3+t4};
  // conditions (ix) and (x) join the halves on the quotient type (u, v).
  const auto left = half_sums(a, b, OrderOf::kOuter);
  const auto right = half_sums(c, d, OrderOf::kInner);
  std::map<std::pair<unsigned, unsigned>, IntPoly> aut_cache;
  for (const auto& [lk, lw] : left) {
    auto it = right.lower_bound(HalfKey{lk.u, lk.v, 0});
    for (; it != right.end() && it->first.u == lk.u && it->first.v == lk.v; ++it) {
      const unsigned k = lk.order + it->first.order;
      if (k > n) throw InternalError("n4 enumeration produced an order beyond the group order");
      auto [ait, inserted] = aut_cache.try_emplace({lk.u, lk.v});
      if (inserted) ait->second = aut_count_poly(lk.u, lk.v);
      out[k] += lw * it->second * ait->second;
    }
  }
  return out;
}

IntPoly n4_order_poly(unsigned a, unsigned b, unsigned c, unsigned d, unsigned k) {
  if (k > a + b + c + d) return {};
  return n4_order_polys(a, b, c, d)[k];
}

IntPoly n4_poly(unsigned a, unsigned b, unsigned c, unsigned d) {
  IntPoly total;
  for (const IntPoly& q : n4_order_polys(a, b, c, d)) total += q;
  return total;
}

}  // namespace abelcount
