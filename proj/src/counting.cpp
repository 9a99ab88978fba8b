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

#include "abelcount/counting.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "abelcount/arith.hpp"
#include "abelcount/errors.hpp"
#include "abelcount/pgroup.hpp"

namespace abelcount {

namespace {

bool divides(const Natural& d, const Natural& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Natural exact_quotient(const Natural& n, const Natural& d, const char* where) {
  if (!divides(d, n)) {
    throw InternalError(std::string(where) + ": expected " + n.get_str() + " divisible by " +
                        d.get_str());
  }
  Natural q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

void require_positive(const Natural& v, const char* name) {
  if (sgn(v) <= 0) throw DomainError(std::string(name) + " must be >= 1, got " + v.get_str());
}

// Memoized n4 polynomials keyed by the exact exponent tuple.
const std::vector<IntPoly>& cached_n4_order_polys(unsigned a, unsigned b, unsigned c,
                                                  unsigned d) {
  static std::mutex mu;
  static std::map<std::array<unsigned, 4>, std::vector<IntPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({a, b, c, d});
  if (inserted) it->second = n4_order_polys(a, b, c, d);
  return it->second;
}

std::vector<PrimaryComponent> components(std::initializer_list<Natural> moduli) {
  return GroupSpec(std::vector<Natural>(moduli)).primary_components();
}

}  // namespace

Natural cyclic_count(const GroupSpec& g) {
  // lcm(d_1..d_i) -> sum of phi(d_1)...phi(d_i) over tuples with that lcm.
  std::map<Natural, Natural> by_lcm{{Natural(1), Natural(1)}};
  for (const auto& n : g.moduli()) {
    std::vector<std::pair<Natural, Natural>> divs;
    for (const auto& d : divisors(n)) divs.emplace_back(d, euler_phi(d));
    std::map<Natural, Natural> next;
    for (const auto& [l, s] : by_lcm) {
      for (const auto& [d, ph] : divs) next[lcm(l, d)] += s * ph;
    }
    by_lcm = std::move(next);
  }
  Natural total = 0;
  for (const auto& [l, s] : by_lcm) total += exact_quotient(s, euler_phi(l), "cyclic_count");
  return total;
}

Natural cyclic_count_of_order(const GroupSpec& g, const Natural& delta) {
  require_positive(delta, "delta");
  if (!divides(delta, g.exponent())) return 0;
  Natural acc = 0;
  for (const auto& e : divisors(delta)) {
    const int mu = mobius(Natural(delta / e));
    if (mu == 0) continue;
    Natural prod = 1;
    for (const auto& n : g.moduli()) prod *= gcd(e, n);
    if (mu > 0) acc += prod;
    else acc -= prod;
  }
  return exact_quotient(acc, euler_phi(delta), "cyclic_count_of_order");
}

Natural cyclic_count_of_order_by_lcm(const GroupSpec& g, const Natural& delta) {
  require_positive(delta, "delta");
  if (!divides(delta, g.exponent())) return 0;
  // Only divisors of delta can appear in a tuple with lcm delta.
  std::map<Natural, Natural> by_lcm{{Natural(1), Natural(1)}};
  for (const auto& n : g.moduli()) {
    std::map<Natural, Natural> next;
    const auto divs = divisors(gcd(n, delta));
    for (const auto& [l, s] : by_lcm) {
      for (const auto& d : divs) next[lcm(l, d)] += s * euler_phi(d);
    }
    by_lcm = std::move(next);
  }
  auto it = by_lcm.find(delta);
  if (it == by_lcm.end()) return 0;
  return exact_quotient(it->second, euler_phi(delta), "cyclic_count_of_order_by_lcm");
}

Natural cyclic_count_power(unsigned k, const Natural& n) {
  if (k == 0) throw DomainError("cyclic_count_power: k must be >= 1");
  require_positive(n, "n");
  Natural total = 0;
  for (const auto& d : divisors(n)) {
    const auto f = factorize(d);
    total += exact_quotient(totient(TotientKind::kJordan, f, k), euler_phi(f), "c_k");
  }
  return total;
}

Natural sublattice_count(unsigned k, const Natural& n) {
  if (k == 0) throw DomainError("sublattice_count: k must be >= 1");
  require_positive(n, "n");
  // Multiplicative; at p^e sum over compositions e = e_1 + ... + e_k of
  // p^{sum (i-1) e_i}, built one factor at a time.
  Natural total = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::vector<Natural> f(e + 1, Natural(0));
    f[0] = 1;  // f_1(p^j) = 1 for all j
    for (unsigned j = 1; j <= e; ++j) f[j] = 1;
    for (unsigned i = 2; i <= k; ++i) {
      const Natural step = power(p, i - 1);
      std::vector<Natural> g(e + 1, Natural(0));
      for (unsigned j = 0; j <= e; ++j) {
        Natural w = 1;
        for (unsigned t = 0; t <= j; ++t) {
          g[j] += w * f[j - t];
          w *= step;
        }
      }
      f = std::move(g);
    }
    total *= f[e];
  }
  return total;
}

Natural total_count_2(const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  Natural total = 0;
  for (const auto& d : divisors(gcd(m, n))) {
    total += euler_phi(d) * divisor_count(Natural(m / d)) * divisor_count(Natural(n / d));
  }
  return total;
}

Natural total_count_2_gcd_form(const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  Natural total = 0;
  const auto dn = divisors(n);
  for (const auto& i : divisors(m)) {
    for (const auto& j : dn) total += gcd(i, j);
  }
  return total;
}

Natural count_order_2(const Natural& m, const Natural& n, const Natural& delta) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(delta, "delta");
  if (!divides(delta, Natural(m * n))) return 0;
  Natural total = 0;
  const auto dj = divisors(gcd(n, delta));
  for (const auto& i : divisors(gcd(m, delta))) {
    for (const auto& j : dj) {
      Natural ij = i * j;
      if (divides(delta, ij)) total += euler_phi(Natural(ij / delta));
    }
  }
  return total;
}

Natural solution_count(const Natural& a, const Natural& b, const Natural& c) {
  Natural count = 0;
  for (const auto& x : divisors(gcd(a, c))) {
    if (divides(Natural(c / x), b)) ++count;
  }
  return count;
}

Natural count_order_2_by_solutions(const Natural& m, const Natural& n, const Natural& delta) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(delta, "delta");
  if (!divides(delta, Natural(m * n))) return 0;
  Natural total = 0;
  for (const auto& d : divisors(gcd(gcd(m, n), delta))) {
    total += euler_phi(d) * solution_count(m / d, n / d, delta / d);
  }
  return total;
}

Natural count_isotype_2(const Natural& m, const Natural& n, const Natural& a, const Natural& b) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(a, "A");
  require_positive(b, "B");
  if (!divides(a, b) || !divides(a, gcd(m, n))) return 0;
  const Natural ab = a * b;
  if (!divides(ab, Natural(m * n))) return 0;
  Natural total = 0;
  const auto dn = divisors(n);
  for (const auto& i : divisors(m)) {
    for (const auto& j : dn) {
      Natural ij = i * j;
      if (lcm(i, j) == b && divides(ab, ij)) total += euler_phi(Natural(ij / ab));
    }
  }
  return total;
}

Natural sigma_t_2(unsigned t, const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  Natural total = 0;
  for (const auto& d : divisors(gcd(m, n))) {
    total += euler_phi(d) * power(d, t) * divisor_sigma(t, Natural(m / d)) *
             divisor_sigma(t, Natural(n / d));
  }
  return total;
}

Natural sigma_t_2_lcm_form(unsigned t, const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  auto id_t_conv_phi = [t](const Natural& x) {
    Natural s = 0;
    for (const auto& e : divisors(x)) s += power(e, t) * euler_phi(Natural(x / e));
    return s;
  };
  Natural total = 0;
  const auto dn = divisors(n);
  for (const auto& i : divisors(m)) {
    for (const auto& j : dn) total += power(lcm(i, j), t) * id_t_conv_phi(gcd(i, j));
  }
  return total;
}

Natural exponent_sum_2(const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  return divisor_sigma(1, m) * divisor_sigma(1, n);
}

namespace {

Natural s3_sum(const Natural& m, const Natural& n, const Natural& r, const Natural* abc_target) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(r, "r");
  Natural total = 0;
  const auto dn = divisors(n);
  const auto dr = divisors(r);
  for (const auto& a : divisors(m)) {
    for (const auto& b : dn) {
      const Natural big_a = gcd(a, Natural(n / b));
      for (const auto& c : dr) {
        if (abc_target != nullptr && a * b * c != *abc_target) continue;
        const Natural r_over_c = r / c;
        const Natural big_b = gcd(b, r_over_c);
        const Natural big_c = gcd(a, r_over_c);
        const Natural abc = big_a * big_b * big_c;
        const Natural x = abc / gcd(Natural(a * r_over_c), abc);
        total += exact_quotient(abc * gcd_sum(x), Natural(x * x), "total_count_3 summand");
      }
    }
  }
  return total;
}

}  // namespace

Natural total_count_3(const Natural& m, const Natural& n, const Natural& r) {
  return s3_sum(m, n, r, nullptr);
}

Natural count_order_3(const Natural& m, const Natural& n, const Natural& r,
                      const Natural& delta) {
  require_positive(delta, "delta");
  const Natural mnr = m * n * r;
  if (!divides(delta, mnr)) return 0;
  const Natural target = mnr / delta;
  return s3_sum(m, n, r, &target);
}

Natural total_count_4(const Natural& m, const Natural& n, const Natural& r, const Natural& s) {
  Natural total = 1;
  for (const auto& c : components({m, n, r, s})) {
    const auto& e = c.exponents;
    const auto& polys = cached_n4_order_polys(e[0], e[1], e[2], e[3]);
    IntPoly sum;
    for (const auto& q : polys) sum += q;
    total *= sum.evaluate(c.prime);
  }
  return total;
}

Natural count_order_4(const Natural& m, const Natural& n, const Natural& r, const Natural& s,
                      const Natural& k) {
  require_positive(k, "k");
  const GroupSpec g({m, n, r, s});
  if (!divides(k, g.order())) return 0;
  Natural total = 1;
  for (const auto& c : g.primary_components()) {
    const auto& e = c.exponents;
    const unsigned kp = factorize(k).exponent_of(c.prime);
    const auto& polys = cached_n4_order_polys(e[0], e[1], e[2], e[3]);
    total *= polys[kp].evaluate(c.prime);
  }
  return total;
}

namespace {

struct DirectKey {
  Natural u, v, order;
  friend bool operator<(const DirectKey& a, const DirectKey& b) {
    return std::tie(a.u, a.v, a.order) < std::tie(b.u, b.v, b.order);
  }
};

// One Goursat half over Z_m x Z_n with divisor variables; mirrors the
// exponent enumeration of the p-group case.
std::map<DirectKey, Natural> direct_half(const Natural& m, const Natural& n, bool outer_order) {
  std::map<DirectKey, Natural> out;
  for (const auto& x1 : divisors(m)) {
    for (const auto& x3 : divisors(Natural(m / x1))) {
      if (!divides(x3, n)) continue;
      for (const auto& x4 : divisors(Natural(n / x3))) {
        const Natural lo = gcd(x1, x4);
        const Natural hi = x3 * lcm(x1, x4);
        const Natural phx3 = euler_phi(x3);
        for (const auto& y2 : divisors(lo)) {
          for (const auto& y3 : divisors(Natural(lo / y2))) {
            if (!divides(y3, hi)) continue;
            const Natural y1 = lo / (y2 * y3);
            for (const auto& y5 : divisors(Natural(hi / y3))) {
              const Natural y4 = hi / (y3 * y5);
              DirectKey key{gcd(y2, y5), y3 * lcm(y2, y5),
                            outer_order ? Natural(x1 * x3 * x4) : Natural(y1 * y3 * y4)};
              out[key] += phx3 * euler_phi(y3);
            }
          }
        }
      }
    }
  }
  return out;
}

Natural direct_sum(const Natural& m, const Natural& n, const Natural& r, const Natural& s,
                   const Natural* k) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(r, "r");
  require_positive(s, "s");
  const auto left = direct_half(m, n, true);
  const auto right = direct_half(r, s, false);
  Natural total = 0;
  for (const auto& [lk, lw] : left) {
    for (const auto& [rk, rw] : right) {
      if (lk.u != rk.u || lk.v != rk.v) continue;
      if (k != nullptr && lk.order * rk.order != *k) continue;
      total += lw * rw * aut_count(lk.u, lk.v);
    }
  }
  return total;
}

}  // namespace

Natural total_count_4_direct(const Natural& m, const Natural& n, const Natural& r,
                             const Natural& s) {
  return direct_sum(m, n, r, s, nullptr);
}

Natural count_order_4_direct(const Natural& m, const Natural& n, const Natural& r,
                             const Natural& s, const Natural& k) {
  require_positive(k, "k");
  if (!divides(k, Natural(m * n * r * s))) return 0;
  return direct_sum(m, n, r, s, &k);
}

Natural aut_count(const Natural& m, const Natural& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  Natural total = 1;
  for (const auto& c : components({m, n})) {
    total *= aut_count_poly(c.exponents[0], c.exponents[1]).evaluate(c.prime);
  }
  return total;
}

Natural total_count_general(const GroupSpec& g) {
  Natural total = 1;
  for (const auto& c : g.primary_components()) {
    total *= total_subgroups_poly(c.type()).evaluate(c.prime);
  }
  return total;
}

Natural count_order_general(const GroupSpec& g, const Natural& delta) {
  require_positive(delta, "delta");
  if (!divides(delta, g.order())) return 0;
  const auto fd = factorize(delta);
  Natural total = 1;
  for (const auto& c : g.primary_components()) {
    total *= subgroups_of_order_poly(c.type(), fd.exponent_of(c.prime)).evaluate(c.prime);
  }
  return total;
}

Natural count_isotype_general(const GroupSpec& g, const IsoType& h) {
  const auto comps = g.primary_components();
  const auto sub = primary_types(h);
  for (const auto& [p, mu] : sub) {
    bool found = false;
    for (const auto& c : comps) found = found || c.prime == p;
    if (!found) return 0;
  }
  Natural total = 1;
  for (const auto& c : comps) {
    Partition mu;
    for (const auto& [p, m] : sub) {
      if (p == c.prime) mu = m;
    }
    total *= subgroups_of_type(c.type(), mu).evaluate(c.prime);
  }
  return total;
}

Natural maximal_count(const GroupSpec& g) {
  Natural total = 0;
  for (const auto& c : g.primary_components()) {
    Natural term = 1;
    for (std::size_t i = 0; i < c.type().length(); ++i) {
      total += term;
      term *= c.prime;
    }
  }
  return total;
}

}  // namespace abelcount
