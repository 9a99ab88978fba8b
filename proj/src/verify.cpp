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

#include "abelcount/verify.hpp"

#include <functional>
#include <map>
#include <set>

#include "abelcount/arith.hpp"
#include "abelcount/counting.hpp"
#include "abelcount/enumerate.hpp"

namespace abelcount {

namespace {

class Checker {
 public:
  Checker(const GroupSpec& g, VerifyReport& rep) : g_(g), rep_(rep) {}

  bool eq(const std::string& what, const Natural& got, const Natural& want) {
    if (got == want) return true;
    fail(what + " = " + got.get_str() + ", oracle = " + want.get_str());
    return false;
  }
  bool require(bool cond, const std::string& what) {
    if (!cond) fail(what);
    return cond;
  }
  bool ok() const { return rep_.ok(); }

 private:
  void fail(const std::string& msg) {
    if (!rep_.first_mismatch) rep_.first_mismatch = g_.to_string() + ": " + msg;
  }
  const GroupSpec& g_;
  VerifyReport& rep_;
};

Natural lookup(const std::map<Natural, Natural>& m, const Natural& k) {
  auto it = m.find(k);
  return it == m.end() ? Natural(0) : it->second;
}

Natural lookup_iso(const std::map<IsoType, Natural>& m, const IsoType& k) {
  auto it = m.find(k);
  return it == m.end() ? Natural(0) : it->second;
}

void check_counts(const GroupSpec& g, const OracleStats& st, Checker& ck) {
  const auto& mod = g.moduli();
  const std::size_t k = mod.size();
  const Natural order = g.order();

  ck.eq("total_count_general", total_count_general(g), st.total);
  if (k == 2) ck.eq("total_count_2", total_count_2(mod[0], mod[1]), st.total);
  if (k == 2) ck.eq("total_count_2_gcd_form", total_count_2_gcd_form(mod[0], mod[1]), st.total);
  if (k == 3) ck.eq("total_count_3", total_count_3(mod[0], mod[1], mod[2]), st.total);
  if (k == 4) ck.eq("total_count_4", total_count_4(mod[0], mod[1], mod[2], mod[3]), st.total);
  ck.eq("cyclic_count", cyclic_count(g), st.cyclic);
  ck.eq("maximal_count", maximal_count(g), st.maximal);
  if (!ck.ok()) return;

  for (const auto& d : divisors(order)) {
    const std::string at = "(delta=" + d.get_str() + ")";
    const Natural want = lookup(st.by_order, d);
    const Natural want_cyc = lookup(st.cyclic_by_order, d);
    ck.eq("count_order_general" + at, count_order_general(g, d), want);
    ck.eq("cyclic_count_of_order" + at, cyclic_count_of_order(g, d), want_cyc);
    ck.eq("cyclic_count_of_order_by_lcm" + at, cyclic_count_of_order_by_lcm(g, d), want_cyc);
    if (k == 2) {
      ck.eq("count_order_2" + at, count_order_2(mod[0], mod[1], d), want);
      ck.eq("count_order_2_by_solutions" + at, count_order_2_by_solutions(mod[0], mod[1], d),
            want);
    }
    if (k == 3) ck.eq("count_order_3" + at, count_order_3(mod[0], mod[1], mod[2], d), want);
    if (k == 4) {
      ck.eq("count_order_4" + at, count_order_4(mod[0], mod[1], mod[2], mod[3], d), want);
    }
    if (!ck.ok()) return;
  }

  for (const auto& [iso, count] : st.by_isotype) {
    ck.eq("count_isotype_general(" + iso.to_string() + ")", count_isotype_general(g, iso), count);
  }
  if (k == 2) {
    // Every pair A | B with AB | mn, including those the oracle never sees.
    for (const auto& b : divisors(order)) {
      for (const auto& a : divisors(b)) {
        if (a * b > order) continue;
        const Natural want = lookup_iso(st.by_isotype, IsoType::of_pair(a, b));
        ck.eq("count_isotype_2(A=" + a.get_str() + ",B=" + b.get_str() + ")",
              count_isotype_2(mod[0], mod[1], a, b), want);
      }
    }
    for (unsigned t = 0; t <= 2; ++t) {
      ck.eq("sigma_t_2(t=" + std::to_string(t) + ")", sigma_t_2(t, mod[0], mod[1]), st.sigma[t]);
      ck.eq("sigma_t_2_lcm_form(t=" + std::to_string(t) + ")",
            sigma_t_2_lcm_form(t, mod[0], mod[1]), st.sigma[t]);
    }
    ck.eq("exponent_sum_2", exponent_sum_2(mod[0], mod[1]), st.exponent_sum);
  }
  ck.eq("sigma_0 vs total", st.sigma[0], st.total);
}

std::uint64_t check_bijection(const GroupSpec& g, const FiniteAbelianGroup& fg,
                              const std::vector<OracleSubgroup>& subs, Checker& ck) {
  std::map<ElementSet, IsoType> oracle_sets;
  for (const auto& h : subs) oracle_sets.emplace(to_element_set(fg, h), isotype_of(fg, h));
  const auto& mod = g.moduli();
  std::set<ElementSet> seen;
  std::uint64_t keys = 0;
  auto visit = [&](const ElementSet& elems, const std::string& key_text) {
    ++keys;
    auto it = oracle_sets.find(elems);
    if (!ck.require(it != oracle_sets.end(), "key " + key_text + " is not a subgroup")) {
      return std::optional<IsoType>{};
    }
    ck.require(seen.insert(elems).second, "key " + key_text + " repeats a subgroup");
    return std::optional<IsoType>{it->second};
  };
  if (mod.size() == 2) {
    Subgroup2Stream stream(mod[0], mod[1]);
    while (auto key = stream.next()) {
      const auto iso = visit(materialize_2(*key), key->to_string());
      if (!iso) break;
      const Classification cl = classify_2(*key);
      ck.require(cl.isotype == *iso, "classify_2 of " + key->to_string() + " gives " +
                                         cl.isotype.to_string() + ", oracle " + iso->to_string());
      ck.require(cl.cyclic == iso->is_cyclic(), "cyclicity of " + key->to_string());
      ck.require(cl.exponent == iso->exponent(), "exponent of " + key->to_string());
      ck.require(quotient_2(*key).order() * cl.order == g.order(),
                 "quotient order of " + key->to_string());
      if (!ck.ok()) break;
    }
  } else if (mod.size() == 3) {
    Subgroup3Stream stream(mod[0], mod[1], mod[2]);
    while (auto key = stream.next()) {
      const auto elems = materialize_3(*key);
      ck.require(Natural(static_cast<unsigned long>(elems.size())) == key->order(),
                 "order of " + key->to_string());
      if (!visit(elems, key->to_string()) || !ck.ok()) break;
    }
  }
  ck.require(seen.size() == oracle_sets.size(),
             "enumeration produced " + std::to_string(seen.size()) + " subgroups, oracle " +
                 std::to_string(oracle_sets.size()));
  return keys;
}

VerifyReport verify_impl(const GroupSpec& g, std::uint64_t oracle_bound,
                         std::map<IsoType, OracleStats>* cache) {
  VerifyReport rep;
  Checker ck(g, rep);
  const FiniteAbelianGroup fg(g, oracle_bound);
  const bool enumerate = g.arity() == 2 || g.arity() == 3;
  std::vector<OracleSubgroup> subs;
  if (enumerate) subs = all_subgroups(fg);

  const IsoType iso = g.invariant_factors();
  const OracleStats* st = nullptr;
  OracleStats local;
  if (cache) {
    auto it = cache->find(iso);
    if (it == cache->end()) {
      it = cache->emplace(iso, enumerate ? oracle_stats(fg, subs) : oracle_stats(fg)).first;
    }
    st = &it->second;
  } else {
    local = enumerate ? oracle_stats(fg, subs) : oracle_stats(fg);
    st = &local;
  }
  rep.groups_checked = 1;
  rep.subgroups_checked = to_u64(st->total);
  check_counts(g, *st, ck);
  if (enumerate && rep.ok()) rep.bijections_checked = check_bijection(g, fg, subs, ck) > 0;
  return rep;
}

}  // namespace

std::vector<GroupSpec> tuples_up_to(std::uint64_t max_order, unsigned arity) {
  std::vector<GroupSpec> out;
  std::vector<Natural> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t budget) {
    if (cur.size() == arity) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t n = 1; n <= budget; ++n) {
      cur.push_back(to_natural(n));
      rec(budget / n);
      cur.pop_back();
    }
  };
  if (arity >= 1 && max_order >= 1) rec(max_order);
  return out;
}

VerifyReport verify_group(const GroupSpec& g, std::uint64_t oracle_bound) {
  return verify_impl(g, oracle_bound, nullptr);
}

VerifyReport verify_range(std::uint64_t max_order, const std::vector<unsigned>& arities,
                          std::uint64_t oracle_bound) {
  VerifyReport total;
  std::map<IsoType, OracleStats> cache;
  for (unsigned k : arities) {
    for (const auto& g : tuples_up_to(max_order, k)) {
      const VerifyReport r = verify_impl(g, oracle_bound, &cache);
      total.groups_checked += r.groups_checked;
      total.subgroups_checked += r.subgroups_checked;
      total.bijections_checked += r.bijections_checked;
      if (!r.ok()) {
        total.first_mismatch = r.first_mismatch;
        return total;
      }
    }
  }
  return total;
}

}  // namespace abelcount
