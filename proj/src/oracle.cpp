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

#include "abelcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "abelcount/arith.hpp"
#include "abelcount/errors.hpp"

namespace abelcount {

FiniteAbelianGroup::FiniteAbelianGroup(const GroupSpec& g, std::uint64_t max_order) {
  const Natural order = g.order();
  if (order > to_natural(max_order)) {
    throw BudgetError("group order " + order.get_str() + " exceeds the oracle bound " +
                      std::to_string(max_order));
  }
  for (const auto& n : g.moduli()) moduli_.push_back(to_u64(n));
  order_ = to_u64(order);
  weight_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size(); i-- > 1;) {
    weight_[i - 1] = weight_[i] * static_cast<std::uint32_t>(moduli_[i]);
  }
  element_order_.resize(order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    std::uint64_t ord = 1;
    const Element e = decode(x);
    for (std::size_t i = 0; i < e.size(); ++i) {
      ord = std::lcm(ord, moduli_[i] / std::gcd(e[i], moduli_[i]));
    }
    element_order_[x] = ord;
  }
}

std::uint32_t FiniteAbelianGroup::encode(const Element& x) const {
  if (x.size() != moduli_.size()) throw DomainError("element arity mismatch");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    idx += static_cast<std::uint32_t>(x[i] % moduli_[i]) * weight_[i];
  }
  return idx;
}

Element FiniteAbelianGroup::decode(std::uint32_t index) const {
  Element e(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    e[i] = index / weight_[i];
    index %= weight_[i];
  }
  return e;
}

std::uint32_t FiniteAbelianGroup::add(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint32_t w = weight_[i];
    const std::uint64_t s = x / w + y / w;
    x %= w;
    y %= w;
    out += static_cast<std::uint32_t>(s >= moduli_[i] ? s - moduli_[i] : s) * w;
  }
  return out;
}

std::uint32_t FiniteAbelianGroup::negate(std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t d = x / weight_[i];
    x %= weight_[i];
    out += static_cast<std::uint32_t>(d == 0 ? 0 : moduli_[i] - d) * weight_[i];
  }
  return out;
}

std::uint32_t FiniteAbelianGroup::multiple(std::uint64_t k, std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t d = x / weight_[i];
    x %= weight_[i];
    out += static_cast<std::uint32_t>((k % moduli_[i]) * d % moduli_[i]) * weight_[i];
  }
  return out;
}

OracleSubgroup::OracleSubgroup(std::uint64_t group_order)
    : bits_((group_order + 63) / 64, 0) {}

void OracleSubgroup::insert(std::uint32_t x) {
  std::uint64_t& word = bits_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (!(word & bit)) {
    word |= bit;
    ++order_;
  }
}

std::vector<std::uint32_t> OracleSubgroup::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(order_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool OracleSubgroup::is_subset_of(const OracleSubgroup& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

bool operator<(const OracleSubgroup& a, const OracleSubgroup& b) {
  for (std::size_t w = 0; w < a.bits_.size() && w < b.bits_.size(); ++w) {
    if (a.bits_[w] == b.bits_[w]) continue;
    // The lowest differing element decides; the set holding it sorts first.
    const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
    return (a.bits_[w] & diff & (~diff + 1)) != 0;
  }
  return a.bits_.size() < b.bits_.size();
}

namespace {

// S + <g>: cosets S + k g until k g falls back into S.
OracleSubgroup join_cyclic(const FiniteAbelianGroup& g, const OracleSubgroup& s,
                           const std::vector<std::uint32_t>& s_members, std::uint32_t gen) {
  OracleSubgroup out = s;
  std::uint32_t kg = gen;
  while (!s.contains(kg)) {
    for (std::uint32_t x : s_members) out.insert(g.add(x, kg));
    kg = g.add(kg, gen);
  }
  return out;
}

}  // namespace

std::vector<OracleSubgroup> all_subgroups(const FiniteAbelianGroup& g,
                                          std::optional<std::uint64_t> shuffle_seed) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

  OracleSubgroup trivial(n);
  trivial.insert(0);
  std::set<OracleSubgroup> seen{trivial};
  std::vector<OracleSubgroup> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<OracleSubgroup> next;
    for (const auto& s : frontier) {
      const auto members = s.members();
      OracleSubgroup covered = s;  // union of cosets already joined
      for (std::uint32_t gen : order) {
        if (covered.contains(gen)) continue;
        for (std::uint32_t x : members) covered.insert(g.add(x, gen));
        OracleSubgroup t = join_cyclic(g, s, members, gen);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    if (shuffle_seed) std::shuffle(next.begin(), next.end(), rng);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void check_subgroup(const FiniteAbelianGroup& g, const OracleSubgroup& h) {
  if (!h.contains(0)) throw InternalError("subgroup misses the identity");
  const auto members = h.members();
  for (std::uint32_t x : members) {
    if (!h.contains(g.negate(x))) throw InternalError("subgroup not closed under negation");
    for (std::uint32_t y : members) {
      if (!h.contains(g.add(x, y))) throw InternalError("subgroup not closed under addition");
    }
  }
}

IsoType isotype_of(const FiniteAbelianGroup& g, const OracleSubgroup& h) {
  const auto members = h.members();
  std::vector<std::pair<Natural, Partition>> parts;
  for (const auto& [p_nat, e] : factorize(h.order())) {
    const std::uint64_t p = to_u64(p_nat);
    std::uint64_t p_part = 1;
    for (unsigned i = 0; i < e; ++i) p_part *= p;
    // a_j = #{x in h : p^j x = 0}; the ratios a_j / a_{j-1} are powers of p.
    std::vector<unsigned> conj;
    std::uint64_t prev = 1, pj = 1;
    while (prev < p_part) {
      pj *= p;
      std::uint64_t count = 0;
      for (std::uint32_t x : members) count += g.multiple(pj, x) == 0;
      if (count % prev != 0) throw InternalError("isotype_of: inconsistent element counts");
      std::uint64_t ratio = count / prev;
      unsigned lg = 0;
      while (ratio % p == 0) {
        ratio /= p;
        ++lg;
      }
      if (ratio != 1 || lg == 0) throw InternalError("isotype_of: inconsistent element counts");
      conj.push_back(lg);
      prev = count;
    }
    if (prev != p_part) throw InternalError("isotype_of: inconsistent element counts");
    parts.emplace_back(p_nat, Partition(conj).conjugate());
  }
  return iso_type_from_primary(parts);
}

ElementSet to_element_set(const FiniteAbelianGroup& g, const OracleSubgroup& h) {
  ElementSet out;
  for (std::uint32_t x : h.members()) out.push_back(g.decode(x));
  std::sort(out.begin(), out.end());
  return out;
}

OracleStats oracle_stats(const FiniteAbelianGroup& g) { return oracle_stats(g, all_subgroups(g)); }

OracleStats oracle_stats(const FiniteAbelianGroup& g, const std::vector<OracleSubgroup>& subs) {
  OracleStats st;
  std::vector<const OracleSubgroup*> by_size;
  for (const auto& h : subs) by_size.push_back(&h);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](auto* a, auto* b) { return a->order() < b->order(); });
  for (const auto& h : subs) {
    const Natural ord = to_natural(h.order());
    std::uint64_t exponent = 1;
    for (std::uint32_t x : h.members()) exponent = std::lcm(exponent, g.element_order(x));
    const bool cyclic = exponent == h.order();
    st.total += 1;
    st.by_order[ord] += 1;
    if (cyclic) {
      st.cyclic += 1;
      st.cyclic_by_order[ord] += 1;
    }
    st.by_isotype[isotype_of(g, h)] += 1;
    st.sigma[0] += 1;
    st.sigma[1] += ord;
    st.sigma[2] += ord * ord;
    st.exponent_sum += to_natural(exponent);
    if (h.order() == g.order()) continue;
    bool maximal = true;
    for (const auto* t : by_size) {
      if (t->order() <= h.order() || t->order() == g.order()) continue;
      if (t->order() % h.order() == 0 && h.is_subset_of(*t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) st.maximal += 1;
  }
  return st;
}

}  // namespace abelcount
