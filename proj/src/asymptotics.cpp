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

#include "abelcount/asymptotics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include <Eigen/Dense>
#include "json.hpp"

#include "abelcount/errors.hpp"
#include "abelcount/pgroup.hpp"

namespace abelcount {

namespace {

using u128 = unsigned __int128;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

long double zeta(unsigned s) { return std::riemann_zetal(static_cast<long double>(s)); }

u128 to_u128(const Natural& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 128) {
    throw InternalError("value " + v.get_str() + " does not fit in 128 bits");
  }
  Natural hi = v >> 64;
  Natural lo = v - (hi << 64);
  return (static_cast<u128>(to_u64(hi)) << 64) | to_u64(lo);
}

u128 sq(std::uint64_t v) { return static_cast<u128>(v) * v; }

std::string format_ld(const char* fmt, long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

void validate_checkpoints(const std::vector<std::uint64_t>& cps) {
  if (cps.empty()) throw DomainError("at least one checkpoint is required");
  if (cps.front() < 1) throw DomainError("checkpoints must be >= 1");
  for (std::size_t i = 1; i < cps.size(); ++i) {
    if (cps[i] <= cps[i - 1]) throw DomainError("checkpoints must be strictly increasing");
  }
}

// Evaluates sum_{d <= x} w(d) * F(x / d) at every checkpoint.
template <typename W, typename F>
std::vector<Natural> hyperbola(const std::vector<std::uint64_t>& cps, W&& w, F&& f) {
  std::vector<Natural> out;
  for (std::uint64_t x : cps) {
    u128 s = 0;
    for (std::uint64_t d = 1; d <= x; ++d) s += w(d) * f(x / d);
    out.push_back(from_u128(s));
  }
  return out;
}

std::vector<std::uint64_t> phi_table(const std::vector<std::uint32_t>& spf, std::uint64_t x) {
  return sieve::multiplicative<std::uint64_t>(spf, x, [](std::uint64_t p, unsigned e) {
    std::uint64_t v = p - 1;
    for (unsigned i = 1; i < e; ++i) v *= p;
    return v;
  });
}

std::vector<std::uint64_t> tau_prefix(const std::vector<std::uint32_t>& spf, std::uint64_t x,
                                      bool squared) {
  auto tau = sieve::multiplicative<std::uint64_t>(
      spf, x, [](std::uint64_t, unsigned e) { return std::uint64_t{e} + 1; });
  std::vector<std::uint64_t> pre(x + 1, 0);
  for (std::uint64_t i = 1; i <= x; ++i) pre[i] = pre[i - 1] + (squared ? tau[i] * tau[i] : tau[i]);
  return pre;
}

std::vector<std::uint64_t> sigma_table(const std::vector<std::uint32_t>& spf, std::uint64_t x) {
  return sieve::multiplicative<std::uint64_t>(spf, x, [](std::uint64_t p, unsigned e) {
    std::uint64_t v = 1, pk = 1;
    for (unsigned i = 0; i < e; ++i) v += (pk *= p);
    return v;
  });
}

// Multiplicative table whose prime-power values come from a polynomial in p.
std::vector<u128> poly_table(const std::vector<std::uint32_t>& spf, std::uint64_t x,
                             const std::function<IntPoly(unsigned)>& poly_of) {
  std::map<unsigned, IntPoly> cache;
  return sieve::multiplicative<u128>(spf, x, [&](std::uint64_t p, unsigned e) {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, poly_of(e)).first;
    return to_u128(it->second.evaluate(to_natural(p)));
  });
}

std::vector<Natural> engine_c_pairs(const std::vector<std::uint64_t>& cps,
                                    const std::vector<std::uint32_t>& spf) {
  const std::uint64_t x = cps.back();
  // (mu * phi)(p^e) = p^{e-2} (p-1)^2 for e >= 2, p - 2 for e = 1.
  auto g = sieve::multiplicative<std::uint64_t>(spf, x, [](std::uint64_t p, unsigned e) {
    if (e == 1) return p - 2;
    std::uint64_t v = (p - 1) * (p - 1);
    for (unsigned i = 2; i < e; ++i) v *= p;
    return v;
  });
  const auto t = tau_prefix(spf, x, false);
  return hyperbola(cps, [&](std::uint64_t d) { return static_cast<u128>(g[d]); },
                   [&](std::uint64_t q) { return sq(t[q]); });
}

std::vector<Natural> engine_s_pairs(const std::vector<std::uint64_t>& cps,
                                    const std::vector<std::uint32_t>& spf) {
  const std::uint64_t x = cps.back();
  const auto phi = phi_table(spf, x);
  const auto t = tau_prefix(spf, x, false);
  return hyperbola(cps, [&](std::uint64_t d) { return static_cast<u128>(phi[d]); },
                   [&](std::uint64_t q) { return sq(t[q]); });
}

std::vector<Natural> engine_sigma1_pairs(const std::vector<std::uint64_t>& cps,
                                         const std::vector<std::uint32_t>& spf) {
  const std::uint64_t x = cps.back();
  const auto phi = phi_table(spf, x);
  const auto sigma = sigma_table(spf, x);
  std::vector<std::uint64_t> pre(x + 1, 0);
  for (std::uint64_t i = 1; i <= x; ++i) pre[i] = pre[i - 1] + sigma[i];
  return hyperbola(cps, [&](std::uint64_t e) { return static_cast<u128>(phi[e]) * e; },
                   [&](std::uint64_t q) { return sq(pre[q]); });
}

std::vector<Natural> engine_c2(const std::vector<std::uint64_t>& cps,
                               const std::vector<std::uint32_t>& spf) {
  const std::uint64_t x = cps.back();
  auto psi = sieve::multiplicative<std::uint64_t>(spf, x, [](std::uint64_t p, unsigned e) {
    std::uint64_t v = p + 1;
    for (unsigned i = 1; i < e; ++i) v *= p;
    return v;
  });
  return hyperbola(cps, [&](std::uint64_t d) { return static_cast<u128>(psi[d]); },
                   [](std::uint64_t q) { return static_cast<u128>(q); });
}

std::vector<Natural> engine_s_diag(const std::vector<std::uint64_t>& cps,
                                   const std::vector<std::uint32_t>& spf) {
  const std::uint64_t x = cps.back();
  const auto phi = phi_table(spf, x);
  const auto t2 = tau_prefix(spf, x, true);
  return hyperbola(cps, [&](std::uint64_t d) { return static_cast<u128>(phi[d]); },
                   [&](std::uint64_t q) { return static_cast<u128>(t2[q]); });
}

std::vector<Natural> running_sum(const std::vector<std::uint64_t>& cps,
                                 const std::vector<u128>& values) {
  std::vector<Natural> out;
  u128 s = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= cps.back(); ++n) {
    s += values[n];
    if (n == cps[next]) {
      out.push_back(from_u128(s));
      ++next;
    }
  }
  return out;
}

std::vector<Natural> engine_s3_diag(const std::vector<std::uint64_t>& cps,
                                    const std::vector<std::uint32_t>& spf) {
  const auto vals =
      poly_table(spf, cps.back(), [](unsigned e) { return s3_prime_power_poly(e, e, e); });
  return running_sum(cps, vals);
}

// Log2 bound of x^k, used to pick 128-bit or arbitrary-precision sums.
bool fits_128(std::uint64_t x, unsigned k) {
  return (k + 2) * std::log2(static_cast<long double>(x) + 1) + 4 < 126;
}

template <typename T, typename PrimePowerFn>
std::vector<Natural> divisor_weighted(const std::vector<std::uint64_t>& cps,
                                      const std::vector<std::uint32_t>& spf, PrimePowerFn&& at,
                                      bool convolve_with_one) {
  const std::uint64_t x = cps.back();
  const auto w = sieve::multiplicative<T>(spf, x, at);
  std::vector<Natural> out;
  for (std::uint64_t c : cps) {
    T s = 0;
    if (convolve_with_one) {
      for (std::uint64_t d = 1; d <= c; ++d) s += w[d] * T(c / d);
    } else {
      for (std::uint64_t n = 1; n <= c; ++n) s += w[n];
    }
    if constexpr (std::is_same_v<T, Natural>) {
      out.push_back(s);
    } else {
      out.push_back(from_u128(s));
    }
  }
  return out;
}

template <typename T>
T int_pow(std::uint64_t p, unsigned e) {
  T v = 1;
  for (unsigned i = 0; i < e; ++i) v *= T(static_cast<unsigned long>(p));
  return v;
}

template <typename T>
std::vector<Natural> engine_ck_t(const std::vector<std::uint64_t>& cps,
                                 const std::vector<std::uint32_t>& spf, unsigned k) {
  // phi_k / phi at p^e: p^{(k-1)(e-1)} (p^k - 1) / (p - 1).
  auto at = [k](std::uint64_t p, unsigned e) {
    T geo = 0;
    for (unsigned i = 0; i < k; ++i) geo += int_pow<T>(p, i);
    return T(int_pow<T>(p, (k - 1) * (e - 1)) * geo);
  };
  return divisor_weighted<T>(cps, spf, at, true);
}

template <typename T>
std::vector<Natural> engine_fk_t(const std::vector<std::uint64_t>& cps,
                                 const std::vector<std::uint32_t>& spf, unsigned k) {
  // f_k(p^e): compositions of e into k parts weighted by p^{sum (i-1) e_i}.
  auto at = [k](std::uint64_t p, unsigned e) {
    std::vector<T> f(e + 1, T(1));
    for (unsigned i = 2; i <= k; ++i) {
      const T step = int_pow<T>(p, i - 1);
      std::vector<T> g(e + 1, T(0));
      for (unsigned j = 0; j <= e; ++j) {
        T w = 1;
        for (unsigned t = 0; t <= j; ++t) {
          g[j] += w * f[j - t];
          w *= step;
        }
      }
      f = std::move(g);
    }
    return f[e];
  };
  return divisor_weighted<T>(cps, spf, at, false);
}

}  // namespace

std::string SeriesSpec::label() const {
  switch (id) {
    case SeriesId::kCPairs:
      return "c-pairs";
    case SeriesId::kSPairs:
      return "s-pairs";
    case SeriesId::kSigma1Pairs:
      return "sigma1-pairs";
    case SeriesId::kC2:
      return "c2";
    case SeriesId::kSDiag:
      return "s-diag";
    case SeriesId::kS3Diag:
      return "s3-diag";
    case SeriesId::kAE:
      return "ae";
    case SeriesId::kCk:
      return "ck " + std::to_string(k);
    case SeriesId::kFk:
      return "fk " + std::to_string(k);
  }
  return "?";
}

std::optional<SeriesId> parse_series_id(const std::string& name) {
  static const std::map<std::string, SeriesId> kNames = {
      {"c-pairs", SeriesId::kCPairs}, {"s-pairs", SeriesId::kSPairs},
      {"sigma1-pairs", SeriesId::kSigma1Pairs}, {"c2", SeriesId::kC2},
      {"s-diag", SeriesId::kSDiag}, {"s3-diag", SeriesId::kS3Diag},
      {"ae", SeriesId::kAE}, {"ck", SeriesId::kCk}, {"fk", SeriesId::kFk}};
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> checkpoint_grid(std::uint64_t x, unsigned per_decade) {
  if (x < 1) throw DomainError("x must be >= 1");
  if (per_decade < 1) throw DomainError("checkpoints per decade must be >= 1");
  std::vector<std::uint64_t> out;
  for (unsigned i = 0;; ++i) {
    const long double v = std::pow(10.0L, 3.0L + static_cast<long double>(i) / per_decade);
    const auto c = static_cast<std::uint64_t>(std::llround(v));
    if (c > x) break;
    if (out.empty() || c > out.back()) out.push_back(c);
  }
  if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

PartialSumSeries partial_sums(const SeriesSpec& spec, const std::vector<std::uint64_t>& cps,
                              std::size_t budget_bytes) {
  validate_checkpoints(cps);
  if ((spec.id == SeriesId::kCk || spec.id == SeriesId::kFk) && spec.k < 1) {
    throw DomainError("k must be >= 1");
  }
  const std::uint64_t x = cps.back();
  // Worst case: spf + two 16-byte tables + prefix sums.
  sieve::check_budget(x, 4 + 16 + 16 + 8, budget_bytes);
  const auto spf = sieve::smallest_prime_factors(x);

  PartialSumSeries out;
  out.spec = spec;
  std::vector<Natural> sums;
  switch (spec.id) {
    case SeriesId::kCPairs:
      sums = engine_c_pairs(cps, spf);
      break;
    case SeriesId::kSPairs:
      sums = engine_s_pairs(cps, spf);
      break;
    case SeriesId::kSigma1Pairs:
      sums = engine_sigma1_pairs(cps, spf);
      break;
    case SeriesId::kC2:
      sums = engine_c2(cps, spf);
      break;
    case SeriesId::kSDiag:
      sums = engine_s_diag(cps, spf);
      break;
    case SeriesId::kS3Diag:
      sums = engine_s3_diag(cps, spf);
      break;
    case SeriesId::kCk:
      sums = fits_128(x, spec.k) ? engine_ck_t<u128>(cps, spf, spec.k)
                                 : engine_ck_t<Natural>(cps, spf, spec.k);
      break;
    case SeriesId::kFk:
      sums = fits_128(x, spec.k) ? engine_fk_t<u128>(cps, spf, spec.k)
                                 : engine_fk_t<Natural>(cps, spf, spec.k);
      break;
    case SeriesId::kAE: {
      const auto sigma = sigma_table(spf, x);
      const auto snn =
          poly_table(spf, x, [](unsigned e) { return s2_prime_power_poly(e, e); });
      mpq_class exact = 0;
      mpf_class approx(0, 256);
      std::size_t next = 0;
      for (std::uint64_t n = 1; n <= x; ++n) {
        const Natural num = Natural(to_natural(sigma[n]) * to_natural(sigma[n]));
        const Natural den = from_u128(snn[n]);
        if (n <= kAeExactLimit) {
          exact += mpq_class(num, den);
          if (n == kAeExactLimit) approx = mpf_class(exact, 256);
        } else {
          approx += mpf_class(num, 256) / mpf_class(den, 256);
        }
        if (n == cps[next]) {
          if (n <= kAeExactLimit) {
            exact.canonicalize();
            out.points.push_back({n, exact, true});
          } else {
            out.points.push_back({n, mpq_class(approx), false});
          }
          ++next;
        }
      }
      return out;
    }
  }
  for (std::size_t i = 0; i < cps.size(); ++i) out.points.push_back({cps[i], mpq_class(sums[i]), true});
  return out;
}

PartialSumSeries sum_pairs_c(const std::vector<std::uint64_t>& cps) {
  return partial_sums({SeriesId::kCPairs, 0}, cps);
}
PartialSumSeries sum_pairs_s(const std::vector<std::uint64_t>& cps) {
  return partial_sums({SeriesId::kSPairs, 0}, cps);
}
PartialSumSeries sum_sigma1_pairs(const std::vector<std::uint64_t>& cps) {
  return partial_sums({SeriesId::kSigma1Pairs, 0}, cps);
}

// ---- constants ----

namespace {

void check_prime_bound(std::uint64_t prime_bound) {
  if (prime_bound < 100) throw DomainError("prime bound must be >= 100");
  if (prime_bound > 4'000'000'000ULL) throw BudgetError("prime bound too large");
}

long double rounding_slack(std::size_t terms) {
  return 8.0L * static_cast<long double>(terms + 16) * LDBL_EPSILON;
}

}  // namespace

ConstantValue zeta_product(unsigned k) {
  if (k < 2) throw DomainError("zeta product needs k >= 2 (zeta(1) diverges)");
  long double v = 1;
  for (unsigned s = 2; s <= k; ++s) v *= zeta(s);
  v /= k;
  return {"zeta_product(" + std::to_string(k) + ")", v, 4 * k * LDBL_EPSILON * v, 0};
}

ConstantValue euler_h(unsigned k, std::uint64_t prime_bound) {
  if (k < 2) throw DomainError("H(k) needs k >= 2");
  check_prime_bound(prime_bound);
  // H(k) = zeta(2) prod_p (1 - x^2)(1 + x^2 + ... + x^k), x = 1/p; each
  // factor is 1 + x^3 - x^{k+1} - x^{k+2} (1 - x^4 when k = 2).
  const auto primes = sieve::primes_up_to(prime_bound);
  long double log_sum = 0;
  for (std::uint32_t p : primes) {
    const long double x = 1.0L / p;
    const long double d = k == 2 ? -std::pow(x, 4)
                                 : std::pow(x, 3) - std::pow(x, k + 1) - std::pow(x, k + 2);
    log_sum += std::log1p(d);
  }
  const long double value = zeta(2) * std::exp(log_sum);
  // |factor - 1| <= x^3 and sum_{n > P} n^-3 <= 1 / (2 P^2).
  const long double pb = static_cast<long double>(prime_bound);
  const long double log_err = 1.01L / (2 * pb * pb) + rounding_slack(primes.size());
  return {"H(" + std::to_string(k) + ")", value, value * std::expm1(log_err), prime_bound};
}

std::vector<IntPoly> h3_prime_power_polys(unsigned max_v) {
  std::vector<IntPoly> h{IntPoly::constant(1)};
  for (unsigned v = 1; v <= max_v; ++v) {
    IntPoly rest = s3_prime_power_poly(v, v, v);
    for (unsigned i = 1; i <= v; ++i) {
      rest = rest - IntPoly::monomial(Integer(i + 1), 2 * i) * h[v - i];
    }
    h.push_back(rest);
  }
  return h;
}

std::pair<ConstantValue, ConstantValue> euler_h3(std::uint64_t prime_bound) {
  check_prime_bound(prime_bound);
  constexpr unsigned kMaxV = 40;
  const auto hpolys = h3_prime_power_polys(kMaxV);
  std::vector<std::vector<long double>> hcoef;
  for (const auto& q : hpolys) {
    std::vector<long double> c;
    for (int i = 0; i <= q.degree(); ++i) c.push_back(q.coeff(i).get_d());
    hcoef.push_back(std::move(c));
  }
  auto h_at = [&](unsigned v, long double p) {
    long double r = 0;
    for (std::size_t i = hcoef[v].size(); i-- > 0;) r = r * p + hcoef[v][i];
    return r;
  };
  // H = zeta(2)^2 prod_p (1 - p^-2)^2 F_p with F_p = sum_v h(p^v) p^{-3v};
  // log-derivative uses the same split with zeta'(2) / zeta(2).
  const auto primes = sieve::primes_up_to(prime_bound);
  long double log_sum = 0, dlog_sum = 0;
  for (std::uint32_t p32 : primes) {
    const long double p = p32, lp = std::log(p), xx = 1.0L / (p * p);
    const long double big_x = xx / p;
    long double f = 1, fd = 0, xv = 1;
    for (unsigned v = 1; v <= kMaxV; ++v) {
      xv *= big_x;
      const long double term = h_at(v, p) * xv;
      f += term;
      fd -= lp * v * term;
      if (term < 1e-30L) break;
    }
    log_sum += std::log(f) + 2 * std::log1p(-xx);
    dlog_sum += fd / f + 2 * lp * xx / (1 - xx);
  }
  const long double z2 = zeta(2);
  const long double h = z2 * z2 * std::exp(log_sum);
  const long double dlog = 2 * kZetaPrime2 / z2 + dlog_sum;
  const long double pb = static_cast<long double>(prime_bound);
  // Per prime p >= 100: |(1-p^-2)^2 F_p - 1| <= 4 p^-3 and the derivative
  // bracket is at most 4 ln p p^-3 in absolute value.
  const long double slack = rounding_slack(primes.size());
  const long double log_err = 4.01L / (2 * pb * pb) + slack;
  const long double dlog_err = 4.0L * (2 * std::log(pb) + 1) / (4 * pb * pb) + slack;
  const long double h_err = h * std::expm1(log_err);
  const long double hd = h * dlog;
  const long double hd_err = std::fabs(dlog) * h_err + (h + h_err) * dlog_err;
  return {{"H3", h, h_err, prime_bound}, {"H3_prime", hd, hd_err, prime_bound}};
}

ConstantValue euler_c_ae(std::uint64_t prime_bound) {
  check_prime_bound(prime_bound);
  // C = prod_p C_p = (1 / zeta(2)) prod_p C_p / (1 - p^-2).
  const auto primes = sieve::primes_up_to(prime_bound);
  long double log_sum = 0;
  for (std::uint32_t p32 : primes) {
    const long double x = 1.0L / p32;
    long double s = 1, xv = 1;  // the nu = 0 term is exactly 1
    for (unsigned nu = 1; nu < 400; ++nu) {
      xv *= x;
      const long double xn1 = xv * x;
      const long double num = (1 - xn1) * (1 - xn1);
      const long double den = 1 + x - (2.0L * nu + 3) * xn1 + (2.0L * nu + 1) * xn1 * x;
      const long double term = xv * num / den;
      s += term;
      if (term < 1e-30L) break;
    }
    log_sum += std::log((1 - x) * s / (1 - x * x));
  }
  const long double value = std::exp(log_sum) / zeta(2);
  const long double pb = static_cast<long double>(prime_bound);
  const long double log_err = 4.01L / (2 * pb * pb) + rounding_slack(primes.size());
  return {"C", value, value * std::expm1(log_err), prime_bound};
}

// ---- main terms and fitting ----

long double MainTerm::at(std::uint64_t x) const {
  const long double lx = std::log(static_cast<long double>(x));
  long double s = 0, lp = 1;
  for (long double c : log_coeffs) {
    s += c * lp;
    lp *= lx;
  }
  return s * std::pow(static_cast<long double>(x), power);
}

MainTerm main_term(const SeriesSpec& spec, std::uint64_t prime_bound) {
  const long double pi2 = kPi * kPi;
  switch (spec.id) {
    case SeriesId::kCPairs:
      return {"(12/pi^4) x^2 log^3 x", 2, {0, 0, 0, 12 / (pi2 * pi2)}};
    case SeriesId::kSPairs:
      return {"(2/pi^2) x^2 log^3 x", 2, {0, 0, 0, 2 / pi2}};
    case SeriesId::kSigma1Pairs:
      return {"pi^6/(864 zeta(3)) x^4", 4, {pi2 * pi2 * pi2 / (864 * zeta(3))}};
    case SeriesId::kC2:
      return {"(5/4) x^2", 2, {1.25L}};
    case SeriesId::kSDiag:
      return {"(5 pi^2/24) x^2", 2, {5 * pi2 / 24}};
    case SeriesId::kS3Diag: {
      const auto [h, hd] = euler_h3(prime_bound);
      return {"(x^3/3) (H(3) (log x + 2 gamma - 1) + H'(3))",
              3,
              {(h.value * (2 * kEulerGamma - 1) + hd.value) / 3, h.value / 3}};
    }
    case SeriesId::kAE:
      return {"(C/2) x^2", 2, {euler_c_ae(prime_bound).value / 2}};
    case SeriesId::kCk:
      if (spec.k == 1) return {"x (log x + 2 gamma - 1)", 1, {2 * kEulerGamma - 1, 1}};
      if (spec.k == 2) return {"(5/4) x^2", 2, {1.25L}};
      return {"(zeta(k) H(k)/k) x^k", static_cast<int>(spec.k),
              {zeta(spec.k) * euler_h(spec.k, prime_bound).value / spec.k}};
    case SeriesId::kFk:
      if (spec.k == 1) return {"x", 1, {1}};
      return {"(zeta(2)...zeta(k)/k) x^k", static_cast<int>(spec.k),
              {zeta_product(spec.k).value}};
  }
  throw InternalError("unknown series");
}

long double to_long_double(const mpq_class& q) {
  mpf_class f(q, 256);
  mp_exp_t exp;
  const std::string digits = f.get_str(exp, 10, 30);
  if (digits.empty() || digits == "0") return 0;
  std::string s = digits[0] == '-' ? "-0." + digits.substr(1) : "0." + digits;
  s += "e" + std::to_string(exp);
  return std::strtold(s.c_str(), nullptr);
}

long double MainTermModel::predicted(long double x) const {
  const long double lx = std::log(x);
  long double s = 0, lp = 1;
  for (long double c : coefficients) {
    s += c * lp;
    lp *= lx;
  }
  return s * std::pow(x, power);
}

MainTermModel fit_log_poly(const PartialSumSeries& series, int power, unsigned log_degree) {
  const auto& pts = series.points;
  if (pts.size() < log_degree + 2) {
    throw DomainError("fit needs at least " + std::to_string(log_degree + 2) + " checkpoints");
  }
  if (static_cast<long double>(pts.back().x) < 100.0L * pts.front().x) {
    throw DomainError("fit checkpoints must span at least two decades");
  }
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const auto rows = static_cast<Eigen::Index>(pts.size());
  const auto cols = static_cast<Eigen::Index>(log_degree + 1);
  Mat a(rows, cols);
  Vec y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const long double x = pts[i].x;
    const long double lx = std::log(x);
    y(i) = to_long_double(pts[i].value) / std::pow(x, power);
    long double lp = 1;
    for (Eigen::Index j = 0; j < cols; ++j, lp *= lx) a(i, j) = lp;
  }
  // Column scaling keeps the powers of log x comparable.
  Vec scale(cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    scale(j) = a.col(j).cwiseAbs().maxCoeff();
    a.col(j) /= scale(j);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(a);
  qr.setThreshold(1e-13L);
  if (qr.rank() < cols) throw DomainError("ill-conditioned design matrix in log-polynomial fit");
  const Vec coef = qr.solve(y).cwiseQuotient(scale);

  MainTermModel m;
  m.power = power;
  m.log_degree = log_degree;
  for (Eigen::Index j = 0; j < cols; ++j) m.coefficients.push_back(coef(j));
  long double sum_sq = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const long double x = pts[i].x;
    const long double rel = m.predicted(x) / (y(i) * std::pow(x, power)) - 1;
    m.max_rel_residual = std::max(m.max_rel_residual, std::fabs(rel));
    sum_sq += rel * rel;
  }
  m.rms_rel_residual = std::sqrt(sum_sq / rows);
  return m;
}

// ---- reports ----

std::string series_report_tsv(const PartialSumSeries& series, const MainTerm& main) {
  std::string out = "x\tS_exact\tmain_term\trelative_error\n";
  for (const auto& pt : series.points) {
    std::string s;
    if (pt.exact) {
      s = pt.value.get_str();
    } else {
      mpf_class f(pt.value, 256);
      mp_exp_t exp;
      std::string digits = f.get_str(exp, 10, 40);
      // Fixed-point rendering with the integer part in full.
      if (exp <= 0) {
        s = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
      } else if (static_cast<std::size_t>(exp) >= digits.size()) {
        s = digits + std::string(exp - digits.size(), '0');
      } else {
        s = digits.substr(0, exp) + "." + digits.substr(exp);
      }
    }
    const long double m = main.at(pt.x);
    const long double rel = to_long_double(pt.value) / m - 1;
    out += std::to_string(pt.x) + "\t" + s + "\t" + format_ld("%.15Lg", m) + "\t" +
           format_ld("%.6Le", rel) + "\n";
  }
  return out;
}

std::string constant_report_json(const std::vector<ConstantValue>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : values) {
    nlohmann::ordered_json o;
    o["name"] = v.name;
    o["value"] = format_ld("%.21Lg", v.value);
    o["tail_bound"] = format_ld("%.3Le", v.tail_bound);
    if (v.prime_bound) o["prime_bound"] = v.prime_bound;
    arr.push_back(std::move(o));
  }
  nlohmann::ordered_json root;
  root["constants"] = std::move(arr);
  return root.dump(2) + "\n";
}

}  // namespace abelcount
