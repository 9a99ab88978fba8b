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

#ifndef ABELCOUNT_ASYMPTOTICS_HPP_
#define ABELCOUNT_ASYMPTOTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abelcount/arith.hpp"
#include "abelcount/int_poly.hpp"

namespace abelcount {

enum class SeriesId {
  kCPairs,       // sum over m, n <= x of c(m, n)
  kSPairs,       // sum over m, n <= x of s(m, n)
  kSigma1Pairs,  // sum over m, n <= x of sigma_1(m, n)
  kC2,           // sum of c_2(n)
  kSDiag,        // sum of s(n, n)
  kS3Diag,       // sum of s(n, n, n)
  kAE,           // sum of sigma(n)^2 / s(n, n)
  kCk,           // sum of c_k(n), parameter k
  kFk,           // sum of f_k(n), parameter k
};

struct SeriesSpec {
  SeriesId id = SeriesId::kCPairs;
  unsigned k = 0;  // only for kCk and kFk

  std::string label() const;
};

// Parses "c-pairs", "s-pairs", "sigma1-pairs", "c2", "s-diag", "s3-diag",
// "ae", "ck", "fk" (k supplied separately).
std::optional<SeriesId> parse_series_id(const std::string& name);

struct SumPoint {
  std::uint64_t x = 0;
  mpq_class value;
  // False only for AE sums past the exact-rational limit, which are carried
  // in 256-bit binary floating point.
  bool exact = true;
};

struct PartialSumSeries {
  SeriesSpec spec;
  std::vector<SumPoint> points;
};

// Sums beyond this x are not kept as exact rationals.
inline constexpr std::uint64_t kAeExactLimit = 5000;

// Geometric grid 10^3, 10^(3+1/g), ... up to x, always ending at x.
std::vector<std::uint64_t> checkpoint_grid(std::uint64_t x, unsigned per_decade = 1);

// Exact partial sums at each checkpoint (strictly increasing, all >= 1).
PartialSumSeries partial_sums(const SeriesSpec& spec, const std::vector<std::uint64_t>& checkpoints,
                              std::size_t budget_bytes = kDefaultSieveBudgetBytes);

PartialSumSeries sum_pairs_c(const std::vector<std::uint64_t>& checkpoints);
PartialSumSeries sum_pairs_s(const std::vector<std::uint64_t>& checkpoints);
PartialSumSeries sum_sigma1_pairs(const std::vector<std::uint64_t>& checkpoints);

struct ConstantValue {
  std::string name;
  long double value = 0;
  long double tail_bound = 0;  // |value - true value| <= tail_bound
  std::uint64_t prime_bound = 0;
};

inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

// prod_p (1 + p^-2 + ... + p^-k), k >= 2.
ConstantValue euler_h(unsigned k, std::uint64_t prime_bound = kDefaultPrimeBound);
// H(3) and H'(3) of the Dirichlet series attached to s(n, n, n).
std::pair<ConstantValue, ConstantValue> euler_h3(std::uint64_t prime_bound = kDefaultPrimeBound);
// Euler product for the mean of AE(n).
ConstantValue euler_c_ae(std::uint64_t prime_bound = kDefaultPrimeBound);
// zeta(2) ... zeta(k) / k, k >= 2.
ConstantValue zeta_product(unsigned k);

// h(p^v) for v = 0..max_v as polynomials in p, from the triangular system
// s(p^v, p^v, p^v) = sum_i p^{2i} (i + 1) h(p^{v-i}).
std::vector<IntPoly> h3_prime_power_polys(unsigned max_v);

inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
inline constexpr long double kZetaPrime2 = -0.937548254315843753702574094567864978L;

struct MainTerm {
  std::string formula;
  int power = 0;
  std::vector<long double> log_coeffs;  // of (log x)^j
  long double at(std::uint64_t x) const;
};

MainTerm main_term(const SeriesSpec& spec, std::uint64_t prime_bound = kDefaultPrimeBound);

struct MainTermModel {
  int power = 0;
  unsigned log_degree = 0;
  std::vector<long double> coefficients;  // index j multiplies (log x)^j
  long double max_rel_residual = 0;
  long double rms_rel_residual = 0;
  long double predicted(long double x) const;
};

// Least squares of S(x)/x^power against 1, log x, ..., (log x)^log_degree.
MainTermModel fit_log_poly(const PartialSumSeries& series, int power, unsigned log_degree);

long double to_long_double(const mpq_class& q);

// TSV with header "x\tS_exact\tmain_term\trelative_error".
std::string series_report_tsv(const PartialSumSeries& series, const MainTerm& main);

std::string constant_report_json(const std::vector<ConstantValue>& values);

}  // namespace abelcount

#endif  // ABELCOUNT_ASYMPTOTICS_HPP_
