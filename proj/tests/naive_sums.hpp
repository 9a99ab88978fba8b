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

// Reference sums computed term by term from the subgroup descriptions,
// sharing no code with the summation engines.

#ifndef ABELCOUNT_TESTS_NAIVE_SUMS_HPP_
#define ABELCOUNT_TESTS_NAIVE_SUMS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace naive {

using u128 = unsigned __int128;

inline mpz_class to_mpz(u128 v) {
  const mpz_class hi(std::to_string(static_cast<std::uint64_t>(v >> 64)));
  const mpz_class lo(std::to_string(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

inline std::vector<std::vector<std::uint64_t>> divisor_lists(std::uint64_t x) {
  std::vector<std::vector<std::uint64_t>> d(x + 1);
  for (std::uint64_t i = 1; i <= x; ++i)
    for (std::uint64_t j = i; j <= x; j += i) d[j].push_back(i);
  return d;
}

inline std::vector<std::uint64_t> phi_table(std::uint64_t x) {
  std::vector<std::uint64_t> phi(x + 1, 0);
  for (std::uint64_t n = 1; n <= x; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) phi[n] += std::gcd(k, n) == 1;
  return phi;
}

// Per-pair counts from the Goursat description: a subgroup is fixed by
// a | m, c | n, a common quotient order e | gcd(a, c) and one of phi(e)
// isomorphisms; its order is ac/e, and it is cyclic iff gcd(a/e, c/e) = 1.
struct PairCounts {
  std::uint64_t total = 0, cyclic = 0;
  u128 order_sum = 0;
};

class Pairs {
 public:
  explicit Pairs(std::uint64_t x) : div_(divisor_lists(x)), phi_(phi_table(x)) {}

  PairCounts at(std::uint64_t m, std::uint64_t n) const {
    PairCounts out;
    for (std::uint64_t a : div_[m])
      for (std::uint64_t c : div_[n]) {
        const std::uint64_t g = std::gcd(a, c);
        for (std::uint64_t e : div_[g]) {
          out.total += phi_[e];
          if (std::gcd(a / e, c / e) == 1) out.cyclic += phi_[e];
          out.order_sum += static_cast<u128>(phi_[e]) * (a * c / e);
        }
      }
    return out;
  }

  const std::vector<std::uint64_t>& divisors(std::uint64_t n) const { return div_[n]; }
  std::uint64_t phi(std::uint64_t n) const { return phi_[n]; }

 private:
  std::vector<std::vector<std::uint64_t>> div_;
  std::vector<std::uint64_t> phi_;
};

struct PairSums {
  mpz_class c, s, sigma1;
};

inline PairSums pair_sums(std::uint64_t x) {
  const Pairs p(x);
  u128 c = 0, s = 0, sig = 0;
  for (std::uint64_t m = 1; m <= x; ++m)
    for (std::uint64_t n = 1; n <= x; ++n) {
      const PairCounts pc = p.at(m, n);
      c += pc.cyclic;
      s += pc.total;
      sig += pc.order_sum;
    }
  return {to_mpz(c), to_mpz(s), to_mpz(sig)};
}

struct DiagSums {
  mpz_class c2, s_diag, c3, f3;
  mpq_class ae;
};

inline DiagSums diag_sums(std::uint64_t x) {
  const Pairs p(x);
  DiagSums out;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const PairCounts pc = p.at(n, n);
    out.c2 += pc.cyclic;
    out.s_diag += pc.total;
    std::uint64_t sigma = 0;
    for (std::uint64_t d : p.divisors(n)) sigma += d;
    out.ae += mpq_class(mpz_class(std::to_string(sigma)) * mpz_class(std::to_string(sigma)),
                        mpz_class(std::to_string(pc.total)));
    // Cyclic subgroups of Z_n^3: each generator (x1,x2,x3) of order e is
    // one of phi(e) generators of its subgroup.
    mpq_class c3 = 0;
    for (std::uint64_t d1 : p.divisors(n))
      for (std::uint64_t d2 : p.divisors(n))
        for (std::uint64_t d3 : p.divisors(n)) {
          const std::uint64_t l = std::lcm(std::lcm(d1, d2), d3);
          c3 += mpq_class(mpz_class(std::to_string(p.phi(d1) * p.phi(d2) * p.phi(d3))),
                          mpz_class(std::to_string(p.phi(l))));
        }
    c3.canonicalize();
    out.c3 += c3.get_num();
    // Index-n sublattices of Z^3 in Hermite normal form.
    for (std::uint64_t d1 : p.divisors(n))
      for (std::uint64_t d2 : p.divisors(n / d1)) {
        const std::uint64_t d3 = n / d1 / d2;
        out.f3 += mpz_class(std::to_string(d2 * d3 * d3));
      }
  }
  out.ae.canonicalize();
  return out;
}

}  // namespace naive

#endif  // ABELCOUNT_TESTS_NAIVE_SUMS_HPP_
