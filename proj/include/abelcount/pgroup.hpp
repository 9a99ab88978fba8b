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

// Subgroup counts of abelian p-groups as integer polynomials in p.
//
// A p-group of type lambda = (lambda_1 >= ... >= lambda_r >= 1) is
// Z_{p^lambda_1} x ... x Z_{p^lambda_r}. Every count here is a polynomial in p
// with integer coefficients; the closed forms that involve division are
// evaluated by exact synthetic division.

#ifndef ABELCOUNT_PGROUP_HPP_
#define ABELCOUNT_PGROUP_HPP_

#include <vector>

#include "abelcount/int_poly.hpp"
#include "abelcount/partition.hpp"

namespace abelcount {

// [r choose k]_p = prod_{i=1}^{k} (p^{r-k+i} - 1) / (p^i - 1); zero if k > r.
IntPoly gauss_binom(unsigned r, unsigned k);

// Number of subgroups of type mu in the group of type lambda:
//   prod_{j=1}^{lambda_1} p^{mu'_{j+1}(lambda'_j - mu'_j)}
//       [lambda'_j - mu'_{j+1} choose mu'_j - mu'_{j+1}]_p
// Zero when mu does not fit in lambda.
IntPoly subgroups_of_type(const Partition& lambda, const Partition& mu);

// Sum of subgroups_of_type over all mu <= lambda.
IntPoly total_subgroups_poly(const Partition& lambda);

// Subgroups of order p^k: the same sum restricted to |mu| = k.
IntPoly subgroups_of_order_poly(const Partition& lambda, unsigned k);

// Cyclic subgroups of order p^nu:
//   (p^j - 1)/(p - 1) * p^{lambda_{j+1} + ... + lambda_r + (nu - 1)(j - 1)}
// where lambda_j >= nu > lambda_{j+1}. Zero when nu > lambda_1; nu must be
// positive.
IntPoly cyclic_of_order_poly(const Partition& lambda, unsigned nu);

// |Aut(Z_{p^a} x Z_{p^b})|; arguments are swapped if a > b.
IntPoly aut_count_poly(unsigned a, unsigned b);

// Closed form of s(p^a, p^b) for 1 <= a <= b. Throws DomainError otherwise.
IntPoly s2_prime_power_poly(unsigned a, unsigned b);

// Closed form of s(p^l1, p^l2, p^l3) as F(p) / ((p^2 - 1)^2 (p - 1)) for
// l1 >= l2 >= l3 >= 1. Throws DomainError otherwise.
IntPoly s3_prime_power_poly(unsigned l1, unsigned l2, unsigned l3);

// Subgroups of Z_{p^a} x Z_{p^b} x Z_{p^c} x Z_{p^d}, summed over the
// 20-tuples of exponent compositions obtained from two nested Goursat
// decompositions.
IntPoly n4_poly(unsigned a, unsigned b, unsigned c, unsigned d);

// Same count restricted to subgroups of order p^k; zero if k > a + b + c + d.
IntPoly n4_order_poly(unsigned a, unsigned b, unsigned c, unsigned d, unsigned k);

// Entry k holds n4_order_poly(a, b, c, d, k) for 0 <= k <= a + b + c + d.
std::vector<IntPoly> n4_order_polys(unsigned a, unsigned b, unsigned c, unsigned d);

}  // namespace abelcount

#endif  // ABELCOUNT_PGROUP_HPP_
