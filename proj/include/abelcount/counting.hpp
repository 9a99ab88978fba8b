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

// Integer-valued subgroup counts of Z_{n_1} x ... x Z_{n_k}.

#ifndef ABELCOUNT_COUNTING_HPP_
#define ABELCOUNT_COUNTING_HPP_

#include "abelcount/group.hpp"
#include "abelcount/natural.hpp"

namespace abelcount {

// c(n_1,...,n_k) = sum_{d_i | n_i} phi(d_1)...phi(d_k) / phi(lcm(d_1,...,d_k)),
// with the summands grouped by lcm so every division is exact.
Natural cyclic_count(const GroupSpec& g);

// Cyclic subgroups of order delta, via
//   (1/phi(delta)) sum_{e | delta} gcd(e,n_1)...gcd(e,n_k) mu(delta/e).
// Zero unless delta divides lcm(n_1,...,n_k).
Natural cyclic_count_of_order(const GroupSpec& g, const Natural& delta);
// Same count from the phi-product sum over tuples with lcm(d_1..d_k) = delta.
Natural cyclic_count_of_order_by_lcm(const GroupSpec& g, const Natural& delta);

// c_k(n), cyclic subgroups of (Z_n)^k, as sum_{d | n} J_k(d) / phi(d).
Natural cyclic_count_power(unsigned k, const Natural& n);

// f_k(n), subgroups of index n in Z^k: sum over d_1 d_2 ... d_k = n of
// d_2 d_3^2 ... d_k^{k-1}.
Natural sublattice_count(unsigned k, const Natural& n);

// s(m, n) = sum_{d | gcd(m,n)} phi(d) tau(m/d) tau(n/d).
Natural total_count_2(const Natural& m, const Natural& n);
// s(m, n) = sum_{i | m, j | n} gcd(i, j).
Natural total_count_2_gcd_form(const Natural& m, const Natural& n);

// Subgroups of order delta of Z_m x Z_n; zero unless delta | mn.
// sum over i | gcd(m,delta), j | gcd(n,delta), delta | ij of phi(ij/delta).
Natural count_order_2(const Natural& m, const Natural& n, const Natural& delta);
// sum_{d | gcd(m,n,delta)} phi(d) N(m/d, n/d, delta/d).
Natural count_order_2_by_solutions(const Natural& m, const Natural& n, const Natural& delta);
// N(a,b,c) = #{(x,y,z,t) : xy = a, zt = b, xz = c} = #{x | gcd(a,c) : (c/x) | b}.
Natural solution_count(const Natural& a, const Natural& b, const Natural& c);

// Subgroups of Z_m x Z_n isomorphic to Z_A x Z_B (A | B).
Natural count_isotype_2(const Natural& m, const Natural& n, const Natural& a, const Natural& b);

// sigma_t(m, n) = sum over subgroups H of |H|^t, as
//   sum_{d | gcd(m,n)} phi(d) d^t sigma_t(m/d) sigma_t(n/d).
Natural sigma_t_2(unsigned t, const Natural& m, const Natural& n);
// sum_{i | m, j | n} lcm(i,j)^t (id_t * phi)(gcd(i,j)).
Natural sigma_t_2_lcm_form(unsigned t, const Natural& m, const Natural& n);

// Sum of subgroup exponents of Z_m x Z_n, which is sigma(m) sigma(n).
Natural exponent_sum_2(const Natural& m, const Natural& n);

// s(m, n, r) = sum_{a | m, b | n, c | r} (ABC / X^2) P(X) with
// A = gcd(a, n/b), B = gcd(b, r/c), C = gcd(a, r/c),
// X = ABC / gcd(a r/c, ABC) and P the gcd-sum function.
Natural total_count_3(const Natural& m, const Natural& n, const Natural& r);
// The same sum restricted to abc = mnr/delta; zero unless delta | mnr.
Natural count_order_3(const Natural& m, const Natural& n, const Natural& r,
                      const Natural& delta);

// N(m, n, r, s), evaluated prime by prime through n4_poly.
Natural total_count_4(const Natural& m, const Natural& n, const Natural& r, const Natural& s);
// N(m, n, r, s; k) prime by prime; zero unless k | mnrs.
Natural count_order_4(const Natural& m, const Natural& n, const Natural& r, const Natural& s,
                      const Natural& k);
// The 20-tuple divisor sums evaluated directly on composite moduli, without
// the per-prime reduction. Verification only: cost grows quickly.
Natural total_count_4_direct(const Natural& m, const Natural& n, const Natural& r,
                             const Natural& s);
Natural count_order_4_direct(const Natural& m, const Natural& n, const Natural& r,
                             const Natural& s, const Natural& k);

// |Aut(Z_m x Z_n)|.
Natural aut_count(const Natural& m, const Natural& n);

// Total subgroup count for any arity: product over primes of
// total_subgroups_poly(type at p) evaluated at p.
Natural total_count_general(const GroupSpec& g);
// Per-prime subgroups_of_order_poly; zero unless delta divides the order.
Natural count_order_general(const GroupSpec& g, const Natural& delta);
// Per-prime subgroups_of_type; zero if h cannot embed.
Natural count_isotype_general(const GroupSpec& g, const IsoType& h);
// Maximal subgroups: sum over p of 1 + p + ... + p^{r_p - 1}, r_p the p-rank.
Natural maximal_count(const GroupSpec& g);

}  // namespace abelcount

#endif  // ABELCOUNT_COUNTING_HPP_
