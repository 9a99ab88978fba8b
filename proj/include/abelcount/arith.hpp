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

// Number-theoretic kernel: factorization, divisor iteration, the totient and
// divisor-sum families, and sieved batch evaluation.

#ifndef ABELCOUNT_ARITH_HPP_
#define ABELCOUNT_ARITH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelcount/natural.hpp"

namespace abelcount {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod p^e with strictly increasing primes and exponents >= 1. The empty
// factorization represents 1.
class Factorization {
 public:
  Factorization() = default;
  // Validates ordering and exponents; does not re-check primality.
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Exponent of `p` (0 if absent).
  unsigned exponent_of(const Natural& p) const;
  Natural value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

// Trial division by sieved primes below 10^6, then BPSW primality and
// Brent-Pollard splitting for the cofactor. Throws DomainError for n = 0.
Factorization factorize(const Natural& n);
Factorization factorize(std::uint64_t n);

bool is_prime(const Natural& n);

// All positive divisors in increasing order.
std::vector<Natural> divisors(const Factorization& f);
std::vector<Natural> divisors(const Natural& n);

enum class TotientKind { kEuler, kJordan, kDedekind };

// phi(n), J_k(n) = n^k prod (1 - p^-k), or psi(n) = n prod (1 + 1/p).
// `order` is only read for kJordan and must be >= 1.
Natural totient(TotientKind kind, const Natural& n, unsigned order = 1);
Natural totient(TotientKind kind, const Factorization& f, unsigned order = 1);

inline Natural euler_phi(const Natural& n) { return totient(TotientKind::kEuler, n); }
inline Natural euler_phi(const Factorization& f) {
  return totient(TotientKind::kEuler, f);
}
inline Natural jordan_totient(unsigned k, const Natural& n) {
  return totient(TotientKind::kJordan, n, k);
}
inline Natural dedekind_psi(const Natural& n) {
  return totient(TotientKind::kDedekind, n);
}

// sigma_t(n) = sum_{d | n} d^t.
Natural divisor_sigma(unsigned t, const Natural& n);
Natural divisor_sigma(unsigned t, const Factorization& f);
inline Natural divisor_count(const Natural& n) { return divisor_sigma(0, n); }

// P(n) = sum_{k=1}^{n} gcd(k, n), evaluated multiplicatively from
// P(p^v) = (v + 1) p^v - v p^{v-1}.
Natural gcd_sum(const Natural& n);
Natural gcd_sum(const Factorization& f);

int mobius(const Natural& n);
int mobius(const Factorization& f);

Natural lcm(const Natural& a, const Natural& b);
Natural gcd(const Natural& a, const Natural& b);

// p^e for small exponents.
Natural power(const Natural& base, unsigned exponent);

enum class ArithFunction {
  kEuler,
  kJordan,    // param = order k
  kDedekind,
  kSigma,     // param = t
  kTau,
  kMobius,
  kGcdSum,
};

struct FunctionId {
  ArithFunction kind = ArithFunction::kEuler;
  unsigned param = 0;
};

inline constexpr std::size_t kDefaultSieveBudgetBytes = std::size_t{1} << 30;

// Position i - 1 holds f(i) for 1 <= i <= x (Mobius values are stored as
// Natural only when non-negative, so kMobius is rejected here; use
// mobius_range). Throws BudgetError rather than truncating.
std::vector<Natural> sieve_range(FunctionId which, std::uint64_t x,
                                 std::size_t budget_bytes = kDefaultSieveBudgetBytes);
std::vector<int> mobius_range(std::uint64_t x,
                              std::size_t budget_bytes = kDefaultSieveBudgetBytes);

// Machine-word helpers shared by the summation engines.
namespace sieve {

// spf[i] = least prime factor of i for 2 <= i <= x; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t x);
std::vector<std::uint32_t> primes_up_to(std::uint64_t x);

// Fills out[1..x] with a multiplicative function given its values on prime
// powers; out[0] is left zero. `at_prime_power(p, e)` must return f(p^e).
template <typename T, typename PrimePowerFn>
std::vector<T> multiplicative(const std::vector<std::uint32_t>& spf, std::uint64_t x,
                              PrimePowerFn&& at_prime_power) {
  std::vector<T> out(x + 1, T{});
  if (x >= 1) out[1] = T{1};
  for (std::uint64_t i = 2; i <= x; ++i) {
    std::uint64_t p = spf[i];
    std::uint64_t rest = i;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out[i] = rest == 1 ? at_prime_power(p, e) : out[rest] * out[i / rest];
  }
  return out;
}

void check_budget(std::uint64_t x, std::size_t bytes_per_entry, std::size_t budget_bytes);

}  // namespace sieve

}  // namespace abelcount

#endif  // ABELCOUNT_ARITH_HPP_
