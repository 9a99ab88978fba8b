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

#include "abelcount/tables.hpp"

#include <array>
#include <vector>

#include "abelcount/counting.hpp"
#include "abelcount/errors.hpp"
#include "abelcount/pgroup.hpp"

namespace abelcount {

namespace {

std::string p_power(unsigned e) {
  if (e == 0) return "1";
  if (e == 1) return "p";
  return "p^" + std::to_string(e);
}

}  // namespace

std::string table_nn(unsigned from, unsigned to) {
  if (from < 1 || to < from) throw DomainError("table range must satisfy 1 <= from <= to");
  std::string out = "n\tN(n)\n";
  for (unsigned n = from; n <= to; ++n) {
    const Natural v(n);
    out += std::to_string(n) + "\t" + total_count_4(v, v, v, v).get_str() + "\n";
  }
  return out;
}

std::string table_n4_polys() {
  static const std::array<std::array<unsigned, 4>, 6> kTuples = {{
      {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}}};
  std::string out;
  for (const auto& t : kTuples) {
    if (!out.empty()) out += "\n";
    const std::string args =
        p_power(t[0]) + "," + p_power(t[1]) + "," + p_power(t[2]) + "," + p_power(t[3]);
    const auto polys = n4_order_polys(t[0], t[1], t[2], t[3]);
    IntPoly total;
    for (const auto& q : polys) total += q;
    out += "N(" + args + ") = " + total.to_string() + "\n";
    const unsigned n = t[0] + t[1] + t[2] + t[3];
    for (unsigned k = 0; k <= n / 2; ++k) {
      out += "N(" + args + ";" + p_power(k) + ") = " + polys[k].to_string() + "\n";
    }
  }
  return out;
}

std::string table_s3_poly(unsigned max_part) {
  if (max_part < 1) throw DomainError("max part must be >= 1");
  std::string out;
  for (unsigned a = 1; a <= max_part; ++a) {
    for (unsigned b = 1; b <= a; ++b) {
      for (unsigned c = 1; c <= b; ++c) {
        out += "s(" + p_power(a) + "," + p_power(b) + "," + p_power(c) + ") = " +
               s3_prime_power_poly(a, b, c).to_string() + "\n";
      }
    }
  }
  return out;
}

}  // namespace abelcount
