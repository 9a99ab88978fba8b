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

#include "abelcount/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "abelcount/arith.hpp"
#include "abelcount/errors.hpp"

namespace abelcount {

namespace {

constexpr std::uint64_t kMaxMaterialized = 50'000'000;

bool divides(const Natural& d, const Natural& n) {
  return sgn(d) != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

void require_positive(const Natural& v, const char* name) {
  if (sgn(v) <= 0) throw DomainError(std::string(name) + " must be >= 1, got " + v.get_str());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

ElementSet sorted_unique(ElementSet elems, const Natural& expected, const char* where) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (Natural(static_cast<unsigned long>(elems.size())) != expected) {
    throw InternalError(std::string(where) + ": generated " + std::to_string(elems.size()) +
                        " distinct elements, expected " + expected.get_str());
  }
  return elems;
}

void check_materialize_budget(const Natural& order) {
  if (order > Natural(static_cast<unsigned long>(kMaxMaterialized))) {
    throw BudgetError("subgroup of order " + order.get_str() + " is too large to materialize");
  }
}

}  // namespace

std::optional<Natural> solve_linear_congruence(const Natural& a, const Natural& b,
                                               const Natural& m) {
  require_positive(m, "modulus");
  Natural g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (!divides(g, b)) return std::nullopt;
  const Natural m_red = m / g;
  Natural u = s * (b / g);
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), m_red.get_mpz_t());
  return u;
}

// ---- rank 2 ----

void Subgroup2Key::validate() const {
  require_positive(m, "m");
  require_positive(n, "n");
  for (const Natural* v : {&a, &b, &c, &d, &l}) require_positive(*v, "key entry");
  if (!divides(a, m)) throw DomainError("a must divide m");
  if (!divides(b, a)) throw DomainError("b must divide a");
  if (!divides(c, n)) throw DomainError("c must divide n");
  if (!divides(d, c)) throw DomainError("d must divide c");
  const Natural q = a / b;
  if (q != c / d) throw DomainError("a/b must equal c/d");
  if (l > q) throw DomainError("l must lie in [1, a/b]");
  if (gcd(l, q) != 1) throw DomainError("l must be coprime to a/b");
}

std::string Subgroup2Key::to_string() const {
  std::ostringstream os;
  os << a << ' ' << b << ' ' << c << ' ' << d << ' ' << l;
  return os.str();
}

Subgroup2Key make_subgroup2_key(const Natural& m, const Natural& n, const Natural& a,
                                const Natural& b, const Natural& c, const Natural& d,
                                const Natural& l) {
  Subgroup2Key key{m, n, a, b, c, d, l};
  key.validate();
  return key;
}

Subgroup2Stream::Subgroup2Stream(const Natural& m, const Natural& n) : m_(m), n_(n) {
  require_positive(m, "m");
  require_positive(n, "n");
  div_m_ = divisors(m);
  div_n_ = divisors(n);
  div_a_ = divisors(div_m_[0]);
}

void Subgroup2Stream::refill() {
  while (pending_.empty() && !done_) {
    if (ic_ == div_n_.size()) {
      ic_ = 0;
      if (++ib_ == div_a_.size()) {
        ib_ = 0;
        if (++ia_ == div_m_.size()) {
          done_ = true;
          return;
        }
        div_a_ = divisors(div_m_[ia_]);
      }
    }
    const Natural& a = div_m_[ia_];
    const Natural& b = div_a_[ib_];
    const Natural& c = div_n_[ic_++];
    const Natural q = a / b;
    if (!divides(q, c)) continue;
    const Natural d = c / q;
    for (Natural l = 1; l <= q; ++l) {
      if (gcd(l, q) == 1) pending_.push_back(Subgroup2Key{m_, n_, a, b, c, d, l});
    }
  }
}

std::optional<Subgroup2Key> Subgroup2Stream::next() {
  refill();
  if (pending_.empty()) return std::nullopt;
  Subgroup2Key key = std::move(pending_.front());
  pending_.pop_front();
  return key;
}

std::vector<Subgroup2Key> list_subgroups_2(const Natural& m, const Natural& n) {
  std::vector<Subgroup2Key> out;
  Subgroup2Stream stream(m, n);
  while (auto key = stream.next()) out.push_back(std::move(*key));
  return out;
}

ElementSet materialize_2(const Subgroup2Key& key) {
  key.validate();
  const Natural order = key.a * key.d;
  check_materialize_budget(order);
  const std::uint64_t m = to_u64(key.m), n = to_u64(key.n);
  const std::uint64_t a = to_u64(key.a), c = to_u64(key.c), d = to_u64(key.d);
  const std::uint64_t l = to_u64(key.l);
  const std::uint64_t step_x = m / a, step_y = n / c, step_j = n / d;
  ElementSet elems;
  elems.reserve(a * d);
  for (std::uint64_t i = 0; i < a; ++i) {
    const std::uint64_t x = i * step_x;
    const std::uint64_t base = mulmod(mulmod(i, l, n), step_y, n);
    for (std::uint64_t j = 0; j < d; ++j) {
      elems.push_back({x, (base + j * step_j) % n});
    }
  }
  return sorted_unique(std::move(elems), order, "materialize_2");
}

Classification classify_2(const Subgroup2Key& key) {
  key.validate();
  Classification out;
  out.order = key.a * key.d;
  out.exponent = lcm(key.a, key.c);
  const Natural g = gcd(key.b, key.d);
  out.cyclic = g == 1;
  if (!divides(g, out.exponent) || g * out.exponent != out.order) {
    throw InternalError("classify_2: inconsistent invariant factors for key " + key.to_string());
  }
  out.isotype = IsoType::of_pair(g, out.exponent);
  return out;
}

IsoType quotient_2(const Subgroup2Key& key) {
  key.validate();
  const Natural ma = key.m / key.a, nc = key.n / key.c;
  const Natural mb = key.m / key.b, nd = key.n / key.d;
  IsoType q = IsoType::of_pair(gcd(ma, nc), lcm(mb, nd));
  if (q.order() * key.a * key.d != key.m * key.n) {
    throw InternalError("quotient_2: order mismatch for key " + key.to_string());
  }
  return q;
}

// ---- rank 3 ----

Natural Subgroup3Key::order() const { return (m * n * r) / (a * b * c); }

std::string Subgroup3Key::to_string() const {
  std::ostringstream os;
  os << a << ' ' << b << ' ' << c << ' ' << t << ' ' << w << ' ' << z;
  return os.str();
}

namespace {

struct Derived {
  Natural big_a, big_b, big_c, x;
};

Derived derive(const Natural& n, const Natural& r, const Natural& a, const Natural& b,
               const Natural& c) {
  Derived d;
  const Natural rc = r / c;
  d.big_a = gcd(a, Natural(n / b));
  d.big_b = gcd(b, rc);
  d.big_c = gcd(a, rc);
  const Natural abc = d.big_a * d.big_b * d.big_c;
  d.x = abc / gcd(Natural(a * rc), abc);
  return d;
}

// Upper bound (exclusive) for w; the construction requires X | B gcd(t, X).
Natural w_range(const Natural& big_b, const Natural& t, const Natural& x) {
  const Natural num = big_b * gcd(t, x);
  if (!divides(x, num)) {
    throw InternalError("X = " + x.get_str() + " does not divide B*gcd(t,X) = " + num.get_str());
  }
  return num / x;
}

Subgroup3Key complete(const Natural& m, const Natural& n, const Natural& r, const Natural& a,
                      const Natural& b, const Natural& c, const Derived& dv, const Natural& t,
                      const Natural& w, const Natural& z) {
  Subgroup3Key k{m, n, r, a, b, c, t, w, z, dv.big_a, dv.big_b, dv.big_c, dv.x, 0, 0, 0};
  k.s = a * t / dv.big_a;
  const Natural g = gcd(t, dv.x);
  k.v = (b * dv.x * w) / (dv.big_b * g);
  const Natural num = r * k.v * k.s;
  const Natural den = b * c;
  if (!divides(den, num)) {
    throw InternalError("congruence right-hand side is not integral for key " + k.to_string());
  }
  const auto u0 = solve_linear_congruence(r / c, num / den, a);
  if (!u0) throw InternalError("congruence has no solution for key " + k.to_string());
  k.u = *u0 + a * z / dv.big_c;
  return k;
}

}  // namespace

Subgroup3Key make_subgroup3_key(const Natural& m, const Natural& n, const Natural& r,
                                const Natural& a, const Natural& b, const Natural& c,
                                const Natural& t, const Natural& w, const Natural& z) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(r, "r");
  if (!divides(a, m)) throw DomainError("a must divide m");
  if (!divides(b, n)) throw DomainError("b must divide n");
  if (!divides(c, r)) throw DomainError("c must divide r");
  const Derived dv = derive(n, r, a, b, c);
  if (sgn(t) < 0 || t >= dv.big_a) throw DomainError("t must lie in [0, A-1]");
  if (sgn(w) < 0 || w >= w_range(dv.big_b, t, dv.x)) {
    throw DomainError("w must lie in [0, B*gcd(t,X)/X - 1]");
  }
  if (sgn(z) < 0 || z >= dv.big_c) throw DomainError("z must lie in [0, C-1]");
  return complete(m, n, r, a, b, c, dv, t, w, z);
}

Subgroup3Stream::Subgroup3Stream(const Natural& m, const Natural& n, const Natural& r)
    : m_(m), n_(n), r_(r) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(r, "r");
  div_m_ = divisors(m);
  div_n_ = divisors(n);
  div_r_ = divisors(r);
}

void Subgroup3Stream::refill() {
  while (pending_.empty() && !done_) {
    if (ic_ == div_r_.size()) {
      ic_ = 0;
      if (++ib_ == div_n_.size()) {
        ib_ = 0;
        if (++ia_ == div_m_.size()) {
          done_ = true;
          return;
        }
      }
    }
    const Natural& a = div_m_[ia_];
    const Natural& b = div_n_[ib_];
    const Natural& c = div_r_[ic_++];
    const Derived dv = derive(n_, r_, a, b, c);
    for (Natural t = 0; t < dv.big_a; ++t) {
      const Natural wn = w_range(dv.big_b, t, dv.x);
      for (Natural w = 0; w < wn; ++w) {
        for (Natural z = 0; z < dv.big_c; ++z) {
          pending_.push_back(complete(m_, n_, r_, a, b, c, dv, t, w, z));
        }
      }
    }
  }
}

std::optional<Subgroup3Key> Subgroup3Stream::next() {
  refill();
  if (pending_.empty()) return std::nullopt;
  Subgroup3Key key = std::move(pending_.front());
  pending_.pop_front();
  return key;
}

std::vector<Subgroup3Key> list_subgroups_3(const Natural& m, const Natural& n,
                                           const Natural& r) {
  std::vector<Subgroup3Key> out;
  Subgroup3Stream stream(m, n, r);
  while (auto key = stream.next()) out.push_back(std::move(*key));
  return out;
}

ElementSet materialize_3(const Subgroup3Key& key) {
  const Subgroup3Key check = make_subgroup3_key(key.m, key.n, key.r, key.a, key.b, key.c,
                                                key.t, key.w, key.z);
  if (!(check == key)) throw DomainError("inconsistent cached values in key " + key.to_string());
  const Natural order = key.order();
  check_materialize_budget(order);
  const std::uint64_t m = to_u64(key.m), n = to_u64(key.n), r = to_u64(key.r);
  const std::uint64_t a = to_u64(key.a), b = to_u64(key.b), c = to_u64(key.c);
  const std::uint64_t s = to_u64(key.s) % m, u = to_u64(key.u) % m, v = to_u64(key.v) % n;
  ElementSet elems;
  elems.reserve(to_u64(order));
  // Ranges i < m/a, j < n/b, k < r/c.
  for (std::uint64_t k = 0; k < r / c; ++k) {
    const std::uint64_t xk = mulmod(k, u, m), yk = mulmod(k, v, n), zk = k * c;
    for (std::uint64_t j = 0; j < n / b; ++j) {
      const std::uint64_t xj = (xk + mulmod(j, s, m)) % m;
      const std::uint64_t yj = (yk + j * b) % n;
      for (std::uint64_t i = 0; i < m / a; ++i) elems.push_back({(xj + i * a) % m, yj, zk});
    }
  }
  return sorted_unique(std::move(elems), order, "materialize_3");
}

std::string render_elements(const ElementSet& elements) {
  std::string out;
  for (const auto& e : elements) {
    out += '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace abelcount
