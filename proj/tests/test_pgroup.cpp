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

#include <algorithm>
#include <set>

#include "abelcount/counting.hpp"
#include "abelcount/errors.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/pgroup.hpp"

namespace abelcount {
namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

unsigned long ipow(unsigned long p, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= p;
  return r;
}

GroupSpec p_group(unsigned long p, const Partition& lambda) {
  std::vector<Natural> mod;
  for (unsigned part : lambda.parts()) mod.emplace_back(ipow(p, part));
  if (mod.empty()) mod.emplace_back(1);
  return GroupSpec(mod);
}

OracleStats stats_of(const GroupSpec& g) { return oracle_stats(FiniteAbelianGroup(g)); }

Natural at(const IntPoly& f, unsigned long p) { return f.evaluate(Integer(p)); }

// Automorphisms of Z_m x Z_n by checking every pair of generator images.
unsigned long brute_aut(unsigned long m, unsigned long n) {
  unsigned long count = 0;
  for (unsigned long ux = 0; ux < m; ++ux)
    for (unsigned long uy = 0; uy < n; ++uy) {
      if ((m * ux) % m || (m * uy) % n) continue;
      for (unsigned long vx = 0; vx < m; ++vx)
        for (unsigned long vy = 0; vy < n; ++vy) {
          if ((n * vx) % m || (n * vy) % n) continue;
          std::set<std::pair<unsigned long, unsigned long>> image;
          for (unsigned long i = 0; i < m; ++i)
            for (unsigned long j = 0; j < n; ++j)
              image.insert({(i * ux + j * vx) % m, (i * uy + j * vy) % n});
          count += image.size() == m * n;
        }
    }
  return count;
}

std::vector<Partition> partitions_up_to(unsigned max_weight, unsigned max_part, unsigned max_len) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
    out.emplace_back(cur);
    if (cur.size() == max_len) return;
    for (unsigned v = std::min(cap, left); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(max_weight, max_part);
  return out;
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition({2, 1}).conjugate(), Partition({2, 1}));
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({1, 1, 1, 1}).conjugate(), Partition({4}));
  for (const auto& l : partitions_up_to(8, 8, 8)) EXPECT_EQ(l.conjugate().conjugate(), l);
}

TEST(Partition, RejectsInvalid) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
}

TEST(GaussBinom, Examples) {
  EXPECT_EQ(gauss_binom(2, 1), P({1, 1}));
  EXPECT_EQ(gauss_binom(3, 1), P({1, 1, 1}));
  EXPECT_EQ(gauss_binom(4, 2), P({1, 1, 2, 1, 1}));
  EXPECT_TRUE(gauss_binom(2, 3).is_zero());
  EXPECT_EQ(gauss_binom(5, 0), P({1}));
}

TEST(GaussBinom, SubspaceCountsFromOracle) {
  // Subgroups of order p^k in (Z_p)^r are the k-dimensional subspaces.
  for (unsigned long p : {2UL, 3UL}) {
    for (unsigned r = 1; r <= (p == 2 ? 5u : 3u); ++r) {
      const auto st = stats_of(GroupSpec(std::vector<Natural>(r, Natural(p))));
      for (unsigned k = 0; k <= r; ++k) {
        EXPECT_EQ(at(gauss_binom(r, k), p), st.by_order.at(Natural(ipow(p, k))))
            << "p=" << p << " r=" << r << " k=" << k;
      }
    }
  }
}

TEST(SubgroupsOfType, Examples) {
  EXPECT_EQ(subgroups_of_type({1, 1}, {1}), P({1, 1}));
  EXPECT_EQ(subgroups_of_type({2, 1}, {1}), P({1, 1}));
  EXPECT_EQ(subgroups_of_type({1}, {1}), P({1}));
  EXPECT_TRUE(subgroups_of_type({1, 1}, {2}).is_zero());
}

TEST(SubgroupsOfType, MatchesOracleIsotypes) {
  for (unsigned long p : {2UL, 3UL}) {
    for (const auto& lambda : partitions_up_to(p == 2 ? 6 : 4, 4, 4)) {
      const GroupSpec g = p_group(p, lambda);
      const auto st = stats_of(g);
      for (const auto& mu : sub_partitions(lambda)) {
        std::vector<std::pair<Natural, Partition>> parts;
        if (mu.length()) parts.push_back({Natural(p), mu});
        const IsoType iso = iso_type_from_primary(parts);
        const auto it = st.by_isotype.find(iso);
        const Natural want = it == st.by_isotype.end() ? Natural(0) : it->second;
        EXPECT_EQ(at(subgroups_of_type(lambda, mu), p), want)
            << "p=" << p << " lambda=" << lambda.to_string() << " mu=" << mu.to_string();
      }
    }
  }
}

TEST(TotalSubgroupsPoly, Examples) {
  EXPECT_EQ(total_subgroups_poly({1, 1}), P({3, 1}));
  EXPECT_EQ(at(total_subgroups_poly({1, 1}), 2), 5);
  EXPECT_EQ(at(total_subgroups_poly({1, 1}), 3), 6);
  EXPECT_EQ(total_subgroups_poly({1, 1, 1}), P({4, 2, 2}));
  EXPECT_EQ(at(total_subgroups_poly({1, 1, 1}), 2), 16);
  EXPECT_EQ(at(total_subgroups_poly({2, 1}), 2), 8);
  EXPECT_EQ(total_subgroups_poly(Partition{}), P({1}));
}

TEST(SubgroupsOfOrderPoly, Examples) {
  EXPECT_EQ(subgroups_of_order_poly({1, 1}, 1), P({1, 1}));
  EXPECT_EQ(subgroups_of_order_poly({1, 1}, 0), P({1}));
  EXPECT_EQ(at(subgroups_of_order_poly({2, 2}, 2), 2), 7);
  EXPECT_TRUE(subgroups_of_order_poly({1, 1}, 3).is_zero());
}

TEST(SubgroupsOfOrderPoly, SumsToTotal) {
  for (const auto& lambda : partitions_up_to(7, 4, 4)) {
    IntPoly s;
    for (unsigned k = 0; k <= lambda.weight(); ++k) s += subgroups_of_order_poly(lambda, k);
    EXPECT_EQ(s, total_subgroups_poly(lambda)) << lambda.to_string();
  }
}

TEST(CyclicOfOrderPoly, Examples) {
  EXPECT_EQ(cyclic_of_order_poly({2, 1}, 1), P({1, 1}));
  EXPECT_EQ(cyclic_of_order_poly({2, 1}, 2), P({0, 1}));
  EXPECT_EQ(cyclic_of_order_poly({1}, 1), P({1}));
  EXPECT_TRUE(cyclic_of_order_poly({2, 1}, 3).is_zero());
}

TEST(CyclicOfOrderPoly, SumMatchesCyclicCount) {
  for (unsigned long p : {2UL, 3UL}) {
    for (const auto& lambda : partitions_up_to(9, 3, 3)) {
      Natural s = 1;
      for (unsigned nu = 1; nu <= lambda.largest(); ++nu) s += at(cyclic_of_order_poly(lambda, nu), p);
      EXPECT_EQ(s, cyclic_count(p_group(p, lambda))) << p << " " << lambda.to_string();
    }
  }
}

TEST(AutCountPoly, Examples) {
  EXPECT_EQ(at(aut_count_poly(1, 1), 2), 6);
  EXPECT_EQ(aut_count_poly(0, 1), P({-1, 1}));
  EXPECT_EQ(at(aut_count_poly(1, 2), 2), 8);
}

TEST(AutCountPoly, MatchesBruteForce) {
  for (unsigned long p : {2UL, 3UL}) {
    for (unsigned a = 0; a <= 2; ++a) {
      for (unsigned b = a; b <= (p == 2 ? 3u : 2u); ++b) {
        EXPECT_EQ(at(aut_count_poly(a, b), p), brute_aut(ipow(p, a), ipow(p, b)))
            << p << " " << a << " " << b;
      }
    }
  }
}

TEST(S2Poly, Examples) {
  EXPECT_EQ(s2_prime_power_poly(1, 1), P({3, 1}));
  EXPECT_EQ(at(s2_prime_power_poly(1, 2), 2), 8);
  EXPECT_EQ(at(s2_prime_power_poly(2, 2), 2), 15);
  EXPECT_THROW(s2_prime_power_poly(2, 1), DomainError);
  EXPECT_THROW(s2_prime_power_poly(0, 1), DomainError);
}

TEST(S3Poly, Examples) {
  EXPECT_EQ(s3_prime_power_poly(1, 1, 1), P({4, 2, 2}));
  EXPECT_EQ(at(s3_prime_power_poly(2, 1, 1), 2), 27);
  EXPECT_EQ(at(s3_prime_power_poly(1, 1, 1), 3), 28);
  EXPECT_THROW(s3_prime_power_poly(1, 2, 1), DomainError);
}

TEST(N4Poly, Examples) {
  EXPECT_EQ(n4_poly(1, 1, 1, 1), P({5, 3, 4, 3, 1}));
  EXPECT_EQ(n4_poly(2, 2, 2, 2), P({9, 7, 12, 15, 14, 11, 9, 3, 1}));
  EXPECT_EQ(at(n4_poly(1, 1, 1, 1), 2), 67);
  EXPECT_EQ(n4_poly(0, 0, 0, 0), P({1}));
}

TEST(N4OrderPoly, Examples) {
  EXPECT_EQ(n4_order_poly(1, 1, 1, 1, 1), P({1, 1, 1, 1}));
  EXPECT_EQ(n4_order_poly(1, 1, 1, 1, 0), P({1}));
  EXPECT_EQ(n4_order_poly(3, 3, 3, 3, 6), P({1, 1, 2, 3, 4, 5, 7, 6, 6, 4, 3, 1, 1}));
  EXPECT_TRUE(n4_order_poly(1, 1, 1, 1, 5).is_zero());
}

TEST(ClosedForms, AgreeWithGaussianRoute) {
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = a; b <= 4; ++b)
      EXPECT_EQ(s2_prime_power_poly(a, b), total_subgroups_poly({b, a}));
  for (unsigned l1 = 1; l1 <= 4; ++l1)
    for (unsigned l2 = 1; l2 <= l1; ++l2)
      for (unsigned l3 = 1; l3 <= l2; ++l3)
        EXPECT_EQ(s3_prime_power_poly(l1, l2, l3), total_subgroups_poly({l1, l2, l3}));
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      for (unsigned c = 0; c <= 4; ++c)
        for (unsigned d = 0; d <= 4; ++d) {
          const IntPoly want = total_subgroups_poly(Partition::from_exponents({a, b, c, d}));
          ASSERT_EQ(n4_poly(a, b, c, d), want) << a << b << c << d;
          IntPoly sum;
          for (unsigned k = 0; k <= a + b + c + d; ++k) {
            const IntPoly o = n4_order_poly(a, b, c, d, k);
            ASSERT_EQ(o, subgroups_of_order_poly(Partition::from_exponents({a, b, c, d}), k));
            sum += o;
          }
          ASSERT_EQ(sum, want);
        }
}

TEST(N4Poly, PermutationInvariantAndNonNegative) {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = a; b <= 3; ++b)
      for (unsigned c = b; c <= 3; ++c)
        for (unsigned d = c; d <= 3; ++d) {
          std::vector<unsigned> e = {a, b, c, d};
          const IntPoly base = n4_poly(a, b, c, d);
          EXPECT_TRUE(base.has_nonnegative_coefficients());
          do {
            EXPECT_EQ(n4_poly(e[0], e[1], e[2], e[3]), base);
          } while (std::next_permutation(e.begin(), e.end()));
        }
}

TEST(N4Poly, StructuralProperties) {
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = a; b <= 3; ++b)
      for (unsigned c = b; c <= 3; ++c)
        for (unsigned d = c; d <= 3; ++d) {
          const unsigned n = a + b + c + d;
          const IntPoly total = n4_poly(a, b, c, d);
          EXPECT_EQ(total.degree(), static_cast<int>(2 * a + b + c));
          if (a == d) {
            EXPECT_EQ(total.degree(), static_cast<int>(4 * a));
            EXPECT_EQ(total.leading(), 1);
          }
          for (unsigned k = 0; k <= n; ++k) {
            EXPECT_EQ(n4_order_poly(a, b, c, d, k), n4_order_poly(a, b, c, d, n - k));
            EXPECT_TRUE(n4_order_poly(a, b, c, d, k).has_nonnegative_coefficients());
          }
          for (unsigned k = 1; k <= n / 2; ++k) {
            EXPECT_TRUE(
                (n4_order_poly(a, b, c, d, k) - n4_order_poly(a, b, c, d, k - 1))
                    .has_nonnegative_coefficients())
                << a << b << c << d << " k=" << k;
          }
        }
}

TEST(TotalSubgroupsPoly, CongruenceModP) {
  // The count is 1 + (sum of the parts) mod p, summing over the r parts.
  for (const auto& lambda : partitions_up_to(6, 6, 6)) {
    const IntPoly f = total_subgroups_poly(lambda);
    EXPECT_TRUE(f.has_nonnegative_coefficients());
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const Natural v = at(f, p);
      const Natural want = Natural(1 + lambda.weight());
      EXPECT_EQ(Natural(v % p), Natural(want % p)) << lambda.to_string() << " p=" << p;
    }
  }
}

TEST(MaximalSubgroups, OracleMatchesGeometricSum) {
  for (unsigned long p : {2UL, 3UL}) {
    for (const auto& lambda : partitions_up_to(p == 2 ? 7 : 5, 3, 4)) {
      if (lambda.length() == 0) continue;
      const unsigned r = lambda.length();
      unsigned long want = 0;
      for (unsigned i = 0; i < r; ++i) want += ipow(p, i);
      const GroupSpec g = p_group(p, lambda);
      EXPECT_EQ(stats_of(g).maximal, want) << p << " " << lambda.to_string();
      EXPECT_EQ(maximal_count(g), want);
    }
  }
}

}  // namespace
}  // namespace abelcount
