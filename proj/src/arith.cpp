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

#include "abelcount/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

std::uint64_t to_u64(const Natural& v) {
  if (!fits_u64(v)) throw DomainError("value " + v.get_str() + " does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve::primes_up_to(kTrialLimit);
  return primes;
}

void require_positive(const Natural& n) {
  if (sgn(n) <= 0) throw DomainError("argument must be >= 1, got " + n.get_str());
}

// Brent's variant of Pollard rho; returns a non-trivial factor of composite n.
Natural pollard_brent(const Natural& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Natural y = 2, x, q = 1, g = 1, ys;
    const std::size_t m = 128;
    std::size_t r = 1;
    auto step = [&](Natural& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) step(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Natural& n, std::vector<Natural>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Natural d = pollard_brent(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

Factorization factorize_u64(std::uint64_t n) {
  std::vector<PrimePower> pairs;
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pairs.push_back({Natural(p), e});
  }
  if (n == 1) return Factorization(std::move(pairs));
  Natural rest = to_natural(n);
  if (n < std::uint64_t{kTrialLimit} * kTrialLimit || is_prime(rest)) {
    pairs.push_back({rest, 1});
    return Factorization(std::move(pairs));
  }
  std::vector<Natural> big;
  split_into(rest, big);
  std::sort(big.begin(), big.end());
  for (auto& q : big) {
    if (!pairs.empty() && pairs.back().prime == q) {
      ++pairs.back().exponent;
    } else {
      pairs.push_back({q, 1});
    }
  }
  return Factorization(std::move(pairs));
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].exponent == 0 || pairs_[i].prime < 2) {
      throw DomainError("factorization entries need prime >= 2 and exponent >= 1");
    }
    if (i > 0 && !(pairs_[i - 1].prime < pairs_[i].prime)) {
      throw DomainError("factorization primes must be strictly increasing");
    }
  }
}

unsigned Factorization::exponent_of(const Natural& p) const {
  for (const auto& pp : pairs_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& pp : pairs_) v *= power(pp.prime, pp.exponent);
  return v;
}

bool is_prime(const Natural& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: argument must be >= 1, got 0");
  return factorize_u64(n);
}

Factorization factorize(const Natural& n) {
  require_positive(n);
  if (fits_u64(n)) return factorize_u64(to_u64(n));
  std::vector<PrimePower> pairs;
  Natural rest = n;
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    pairs.push_back({Natural(p), e});
  }
  std::vector<Natural> big;
  split_into(rest, big);
  std::sort(big.begin(), big.end());
  for (auto& q : big) {
    if (!pairs.empty() && pairs.back().prime == q) {
      ++pairs.back().exponent;
    } else {
      pairs.push_back({q, 1});
    }
  }
  return Factorization(std::move(pairs));
}

std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> out{Natural(1)};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    Natural pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Natural> divisors(const Natural& n) { return divisors(factorize(n)); }

Natural power(const Natural& base, unsigned exponent) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Natural lcm(const Natural& a, const Natural& b) {
  Natural r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Natural totient(TotientKind kind, const Factorization& f, unsigned order) {
  if (kind == TotientKind::kJordan && order == 0) {
    throw DomainError("Jordan totient order must be >= 1");
  }
  Natural r = 1;
  for (const auto& [p, e] : f) {
    switch (kind) {
      case TotientKind::kEuler:
        r *= power(p, e - 1) * (p - 1);
        break;
      case TotientKind::kJordan: {
        Natural pk = power(p, order);
        r *= power(pk, e - 1) * (pk - 1);
        break;
      }
      case TotientKind::kDedekind:
        r *= power(p, e - 1) * (p + 1);
        break;
    }
  }
  return r;
}

Natural totient(TotientKind kind, const Natural& n, unsigned order) {
  return totient(kind, factorize(n), order);
}

Natural divisor_sigma(unsigned t, const Factorization& f) {
  Natural r = 1;
  for (const auto& [p, e] : f) {
    if (t == 0) {
      r *= e + 1;
      continue;
    }
    Natural pt = power(p, t);
    Natural term = 1, acc = 1;
    for (unsigned k = 1; k <= e; ++k) {
      term *= pt;
      acc += term;
    }
    r *= acc;
  }
  return r;
}

Natural divisor_sigma(unsigned t, const Natural& n) { return divisor_sigma(t, factorize(n)); }

Natural gcd_sum(const Factorization& f) {
  Natural r = 1;
  for (const auto& [p, e] : f) {
    Natural pe1 = power(p, e - 1);
    r *= Natural(e + 1) * pe1 * p - Natural(e) * pe1;
  }
  return r;
}

Natural gcd_sum(const Natural& n) { return gcd_sum(factorize(n)); }

int mobius(const Factorization& f) {
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

int mobius(const Natural& n) { return mobius(factorize(n)); }

namespace sieve {

void check_budget(std::uint64_t x, std::size_t bytes_per_entry, std::size_t budget_bytes) {
  if (x == 0) throw DomainError("sieve bound must be >= 1");
  const unsigned __int128 need = static_cast<unsigned __int128>(x + 1) * bytes_per_entry;
  if (need > budget_bytes) {
    throw BudgetError("sieve up to " + std::to_string(x) + " needs " +
                      std::to_string(static_cast<std::uint64_t>(need)) +
                      " bytes, budget is " + std::to_string(budget_bytes));
  }
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t x) {
  std::vector<std::uint32_t> spf(x + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t j = i * p;
      if (p > spf[i] || j > x) break;
      spf[j] = p;
    }
  }
  return spf;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint32_t> primes;
  if (x < 2) return primes;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace sieve

std::vector<Natural> sieve_range(FunctionId which, std::uint64_t x, std::size_t budget_bytes) {
  if (which.kind == ArithFunction::kMobius) {
    throw DomainError("sieve_range: use mobius_range for the Mobius function");
  }
  if (which.kind == ArithFunction::kJordan && which.param == 0) {
    throw DomainError("Jordan totient order must be >= 1");
  }
  sieve::check_budget(x, sizeof(Natural) + sizeof(std::uint32_t) + 16, budget_bytes);
  const auto spf = sieve::smallest_prime_factors(x);
  auto at = [&](std::uint64_t p, unsigned e) {
    Factorization f({PrimePower{to_natural(p), e}});
    switch (which.kind) {
      case ArithFunction::kEuler:
        return totient(TotientKind::kEuler, f);
      case ArithFunction::kJordan:
        return totient(TotientKind::kJordan, f, which.param);
      case ArithFunction::kDedekind:
        return totient(TotientKind::kDedekind, f);
      case ArithFunction::kSigma:
        return divisor_sigma(which.param, f);
      case ArithFunction::kTau:
        return divisor_sigma(0, f);
      case ArithFunction::kGcdSum:
        return gcd_sum(f);
      case ArithFunction::kMobius:
        break;
    }
    throw InternalError("unhandled arithmetic function");
  };
  auto full = sieve::multiplicative<Natural>(spf, x, at);
  return std::vector<Natural>(std::make_move_iterator(full.begin() + 1),
                              std::make_move_iterator(full.end()));
}

std::vector<int> mobius_range(std::uint64_t x, std::size_t budget_bytes) {
  sieve::check_budget(x, sizeof(int) + sizeof(std::uint32_t), budget_bytes);
  const auto spf = sieve::smallest_prime_factors(x);
  auto full = sieve::multiplicative<int>(spf, x, [](std::uint64_t, unsigned e) {
    return e == 1 ? -1 : 0;
  });
  return std::vector<int>(full.begin() + 1, full.end());
}

}  // namespace abelcount
