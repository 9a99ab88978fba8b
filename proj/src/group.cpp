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

#include "abelcount/group.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "abelcount/arith.hpp"
#include "abelcount/errors.hpp"

namespace abelcount {

IsoType::IsoType(std::vector<Natural> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw DomainError("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t())) {
      throw DomainError("invariant factors must form a divisibility chain");
    }
  }
}

IsoType IsoType::of_pair(const Natural& a, const Natural& b) {
  std::vector<Natural> f;
  if (a > 1) f.push_back(a);
  if (b > 1) f.push_back(b);
  return IsoType(std::move(f));
}

Natural IsoType::order() const {
  Natural r = 1;
  for (const auto& d : factors_) r *= d;
  return r;
}

Natural IsoType::exponent() const { return factors_.empty() ? Natural(1) : factors_.back(); }

std::string IsoType::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z_" + factors_[i].get_str();
  }
  return out;
}

GroupSpec::GroupSpec(std::vector<Natural> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DomainError("a group needs at least one modulus");
  for (const auto& n : moduli_) {
    if (sgn(n) <= 0) throw DomainError("moduli must be >= 1, got " + n.get_str());
  }
}

GroupSpec::GroupSpec(std::initializer_list<unsigned long> moduli)
    : GroupSpec([&] {
        std::vector<Natural> v;
        for (unsigned long n : moduli) v.emplace_back(n);
        return v;
      }()) {}

Natural GroupSpec::order() const {
  Natural r = 1;
  for (const auto& n : moduli_) r *= n;
  return r;
}

Natural GroupSpec::exponent() const {
  Natural r = 1;
  for (const auto& n : moduli_) r = lcm(r, n);
  return r;
}

std::vector<PrimaryComponent> GroupSpec::primary_components() const {
  std::map<Natural, std::vector<unsigned>> by_prime;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    for (const auto& [p, e] : factorize(moduli_[i])) {
      auto& v = by_prime[p];
      v.resize(moduli_.size(), 0);
      v[i] = e;
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [p, v] : by_prime) out.push_back({p, std::move(v)});
  return out;
}

IsoType GroupSpec::invariant_factors() const {
  std::vector<std::pair<Natural, Partition>> parts;
  for (const auto& c : primary_components()) parts.emplace_back(c.prime, c.type());
  return iso_type_from_primary(parts);
}

std::string GroupSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += ",";
    out += moduli_[i].get_str();
  }
  return out + ")";
}

IsoType iso_type_from_primary(const std::vector<std::pair<Natural, Partition>>& parts) {
  std::size_t rank = 0;
  for (const auto& [p, lam] : parts) rank = std::max(rank, lam.length());
  // The largest factor collects every prime's largest part, and so on down.
  std::vector<Natural> factors(rank, Natural(1));
  for (const auto& [p, lam] : parts) {
    for (std::size_t i = 1; i <= lam.length(); ++i) {
      factors[rank - i] *= power(p, lam.at(i));
    }
  }
  return IsoType(std::move(factors));
}

std::vector<std::pair<Natural, Partition>> primary_types(const IsoType& t) {
  std::map<Natural, std::vector<unsigned>> by_prime;
  const auto& f = t.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& [p, e] : factorize(f[i])) {
      auto& v = by_prime[p];
      v.resize(f.size(), 0);
      v[i] = e;
    }
  }
  std::vector<std::pair<Natural, Partition>> out;
  for (auto& [p, v] : by_prime) out.emplace_back(p, Partition::from_exponents(std::move(v)));
  return out;
}

}  // namespace abelcount
