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

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "abelcount/arith.hpp"
#include "abelcount/errors.hpp"

namespace abelcount {
namespace {

// Brute-force references, independent of the library.
std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::uint64_t naive_sigma(unsigned t, std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::uint64_t p = 1;
    for (unsigned i = 0; i < t; ++i) p *= d;
    s += p;
  }
  return s;
}

std::uint64_t naive_gcd_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t k = 1; k <= n; ++k) s += std::gcd(k, n);
  return s;
}

Natural N(unsigned long v) { return Natural(v); }

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(N(1)).empty());
  EXPECT_EQ(factorize(N(12)).pairs(), (std::vector<PrimePower>{{N(2), 2}, {N(3), 1}}));
  EXPECT_EQ(factorize(N(360)).pairs(),
            (std::vector<PrimePower>{{N(2), 3}, {N(3), 2}, {N(5), 1}}));
}

TEST(Factorize, TrialDivisionOracle) {
  for (std::uint64_t n : {2ULL, 97ULL, 360ULL, 1001ULL, 65536ULL, 999983ULL}) {
    std::vector<PrimePower> want;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      unsigned e = 0;
      while (m % p == 0) m /= p, ++e;
      if (e) want.push_back({to_natural(p), e});
    }
    if (m > 1) want.push_back({to_natural(m), 1});
    EXPECT_EQ(factorize(n).pairs(), want) << n;
  }
}

TEST(Factorize, RejectsZero) { EXPECT_THROW(factorize(N(0)), DomainError); }

TEST(Factorize, LargeInputs) {
  const Natural p("1000000007"), q("998244353");
  const auto f = factorize(p * q * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.pairs()[0], (PrimePower{q, 2}));
  EXPECT_EQ(f.pairs()[1], (PrimePower{p, 1}));
  const Natural big = Natural("340282366920938463463374607431768211507");  // prime
  EXPECT_TRUE(is_prime(big));
  EXPECT_EQ(factorize(big * 6).value(), big * 6);
}

TEST(Factorize, RoundTripsUpTo1e5) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n);
    ASSERT_EQ(f.value(), to_natural(n));
    for (const auto& pp : f) ASSERT_TRUE(is_prime(pp.prime));
  }
}

TEST(Totient, Examples) {
  EXPECT_EQ(euler_phi(N(12)), 4);
  EXPECT_EQ(jordan_totient(2, N(6)), 24);
  EXPECT_EQ(dedekind_psi(N(6)), 12);
  EXPECT_THROW(euler_phi(N(0)), DomainError);
}

TEST(DivisorSigma, Examples) {
  EXPECT_EQ(divisor_sigma(0, N(12)), 6);
  EXPECT_EQ(divisor_sigma(1, N(6)), 12);
  EXPECT_EQ(divisor_sigma(2, N(4)), 21);
  EXPECT_THROW(divisor_sigma(1, N(0)), DomainError);
}

TEST(GcdSum, Examples) {
  EXPECT_EQ(gcd_sum(N(1)), 1);
  EXPECT_EQ(gcd_sum(N(3)), 5);
  EXPECT_EQ(gcd_sum(N(6)), 15);
  EXPECT_EQ(gcd_sum(N(6)), naive_gcd_sum(6));
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(N(1)), 1);
  EXPECT_EQ(mobius(N(6)), 1);
  EXPECT_EQ(mobius(N(12)), 0);
  EXPECT_EQ(mobius(N(30)), -1);
}

TEST(SieveRange, Examples) {
  auto as_u = [](const std::vector<Natural>& v) {
    std::vector<unsigned long> out;
    for (const auto& x : v) out.push_back(x.get_ui());
    return out;
  };
  EXPECT_EQ(as_u(sieve_range({ArithFunction::kEuler}, 5)),
            (std::vector<unsigned long>{1, 1, 2, 2, 4}));
  EXPECT_EQ(as_u(sieve_range({ArithFunction::kSigma, 1}, 4)),
            (std::vector<unsigned long>{1, 3, 4, 7}));
  EXPECT_EQ(as_u(sieve_range({ArithFunction::kTau}, 6)),
            (std::vector<unsigned long>{1, 2, 2, 3, 2, 4}));
}

TEST(SieveRange, BudgetIsReported) {
  EXPECT_THROW(sieve_range({ArithFunction::kEuler}, 1000000, 1024), BudgetError);
  EXPECT_THROW(mobius_range(1000000, 1024), BudgetError);
  EXPECT_THROW(sieve_range({ArithFunction::kEuler}, 0), DomainError);
}

TEST(SieveRange, MatchesPointwiseUpTo1e4) {
  const std::uint64_t x = 10000;
  const std::vector<std::pair<FunctionId, std::function<Natural(const Natural&)>>> cases = {
      {{ArithFunction::kEuler}, [](const Natural& n) { return euler_phi(n); }},
      {{ArithFunction::kJordan, 3}, [](const Natural& n) { return jordan_totient(3, n); }},
      {{ArithFunction::kDedekind}, [](const Natural& n) { return dedekind_psi(n); }},
      {{ArithFunction::kSigma, 2}, [](const Natural& n) { return divisor_sigma(2, n); }},
      {{ArithFunction::kTau}, [](const Natural& n) { return divisor_count(n); }},
      {{ArithFunction::kGcdSum}, [](const Natural& n) { return gcd_sum(n); }},
  };
  for (const auto& [id, f] : cases) {
    const auto v = sieve_range(id, x);
    ASSERT_EQ(v.size(), x);
    for (std::uint64_t n = 1; n <= x; ++n) ASSERT_EQ(v[n - 1], f(to_natural(n))) << n;
  }
  const auto mu = mobius_range(x);
  for (std::uint64_t n = 1; n <= x; ++n) ASSERT_EQ(mu[n - 1], mobius(to_natural(n))) << n;
}

TEST(SieveRange, MatchesBruteForce) {
  const auto phi = sieve_range({ArithFunction::kEuler}, 500);
  const auto sig = sieve_range({ArithFunction::kSigma, 1}, 500);
  const auto gs = sieve_range({ArithFunction::kGcdSum}, 500);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(phi[n - 1], naive_phi(n));
    ASSERT_EQ(sig[n - 1], naive_sigma(1, n));
    ASSERT_EQ(gs[n - 1], naive_gcd_sum(n));
  }
}

TEST(Multiplicativity, RandomCoprimePairs) {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
  int checked = 0;
  while (checked < 500) {
    const std::uint64_t a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++checked;
    const Natural A = to_natural(a), B = to_natural(b), AB = A * B;
    EXPECT_EQ(euler_phi(AB), euler_phi(A) * euler_phi(B));
    EXPECT_EQ(jordan_totient(2, AB), jordan_totient(2, A) * jordan_totient(2, B));
    EXPECT_EQ(dedekind_psi(AB), dedekind_psi(A) * dedekind_psi(B));
    for (unsigned t = 0; t <= 3; ++t) {
      EXPECT_EQ(divisor_sigma(t, AB), divisor_sigma(t, A) * divisor_sigma(t, B));
    }
    EXPECT_EQ(gcd_sum(AB), gcd_sum(A) * gcd_sum(B));
    EXPECT_EQ(mobius(AB), mobius(A) * mobius(B));
  }
}

TEST(Identities, PhiDivisorSumAndGcdSumConvolution) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const Natural nn = to_natural(n);
    Natural phi_sum = 0, conv = 0;
    for (const auto& d : divisors(nn)) {
      phi_sum += euler_phi(d);
      conv += d * euler_phi(nn / d);
    }
    ASSERT_EQ(phi_sum, nn) << n;
    ASSERT_EQ(gcd_sum(nn), conv) << n;
  }
}

TEST(Divisors, SortedAndComplete) {
  const auto d = divisors(N(360));
  EXPECT_EQ(d.size(), 24u);
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
  EXPECT_EQ(divisors(N(1)), std::vector<Natural>{N(1)});
}

}  // namespace
}  // namespace abelcount
