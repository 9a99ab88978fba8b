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

#include "abelcount/abelcount.h"

#include <algorithm>
#include <cstdlib>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "abelcount/arith.hpp"
#include "abelcount/asymptotics.hpp"
#include "abelcount/counting.hpp"
#include "abelcount/enumerate.hpp"
#include "abelcount/errors.hpp"
#include "abelcount/group.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/pgroup.hpp"
#include "abelcount/tables.hpp"
#include "abelcount/verify.hpp"

struct ac_text {
  std::string data;
};

namespace {

using namespace abelcount;

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class MismatchError : public std::runtime_error {
 public:
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

thread_local std::string g_last_error;

constexpr unsigned kMaxExponent = 64;
constexpr unsigned kMaxPower = 1000;

Natural parse_nat(const char* s, const char* what) {
  if (s == nullptr) throw UsageError(std::string(what) + " is missing");
  const std::string_view v(s);
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" +
                     std::string(v) + "'");
  }
  return Natural(std::string(v), 10);
}

Natural parse_pos(const char* s, const char* what) {
  Natural v = parse_nat(s, what);
  if (v == 0) throw DomainError(std::string(what) + " must be >= 1");
  return v;
}

unsigned parse_small(const char* s, const char* what, unsigned max) {
  const Natural v = parse_nat(s, what);
  if (v > max) {
    throw BudgetError(std::string(what) + " must be at most " + std::to_string(max));
  }
  return static_cast<unsigned>(v.get_ui());
}

std::vector<Natural> parse_moduli(const char* const* moduli, std::size_t k) {
  if (k == 0 || moduli == nullptr) throw UsageError("at least one modulus is required");
  std::vector<Natural> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(parse_pos(moduli[i], "modulus"));
  return out;
}

Partition parse_partition(const char* s) {
  if (s == nullptr) throw UsageError("partition is missing");
  std::vector<unsigned> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const unsigned v = parse_small(item.c_str(), "partition part", kMaxExponent);
    if (v == 0) throw DomainError("partition parts must be >= 1");
    parts.push_back(v);
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) {
    throw DomainError(std::string("partition parts must be non-increasing, got ") + s);
  }
  return Partition(std::move(parts));
}

ac_status emit(std::string text, ac_text** out) {
  if (out == nullptr) throw UsageError("output pointer is null");
  *out = new ac_text{std::move(text)};
  return AC_OK;
}

template <typename F>
ac_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const UsageError& e) {
    g_last_error = e.what();
    return AC_ERR_USAGE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return AC_ERR_DOMAIN;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return AC_ERR_BUDGET;
  } catch (const MismatchError& e) {
    g_last_error = e.what();
    return AC_ERR_MISMATCH;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AC_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return AC_ERR_INTERNAL;
  }
}

void require_divides(const Natural& d, const Natural& n, const std::string& what) {
  if (n % d != 0) throw DomainError(what + " " + d.get_str() + " does not divide " + n.get_str());
}

std::string line(const Natural& v) { return v.get_str() + "\n"; }

std::string render_2(const Subgroup2Key& key, ac_enum_format format, bool header) {
  switch (format) {
    case AC_FORMAT_KEYS:
      return key.to_string() + "\n";
    case AC_FORMAT_ELEMENTS:
      return (header ? "# " + key.to_string() + "\n" : "") + render_elements(materialize_2(key));
    case AC_FORMAT_ISOTYPES: {
      const Classification c = classify_2(key);
      return key.to_string() + "\t" + c.order.get_str() + "\t" + c.exponent.get_str() + "\t" +
             (c.cyclic ? "cyclic" : "noncyclic") + "\t" + c.isotype.to_string() + "\t" +
             quotient_2(key).to_string() + "\n";
    }
  }
  throw UsageError("unknown format");
}

std::string render_3(const Subgroup3Key& key, ac_enum_format format, bool header) {
  switch (format) {
    case AC_FORMAT_KEYS:
      return key.to_string() + "\n";
    case AC_FORMAT_ELEMENTS:
      return (header ? "# " + key.to_string() + "\n" : "") + render_elements(materialize_3(key));
    case AC_FORMAT_ISOTYPES:
      break;
  }
  throw UsageError("format isotypes is only available for two moduli");
}

void check_format(int format) {
  if (format < AC_FORMAT_KEYS || format > AC_FORMAT_ISOTYPES) throw UsageError("unknown format");
}

std::uint64_t oracle_bound() {
  const char* env = std::getenv("ABELCOUNT_ORACLE_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOracleMaxOrder;
  const Natural v = parse_pos(env, "ABELCOUNT_ORACLE_MAX_ORDER");
  if (!fits_u64(v) || v > 0xffffffffUL) throw BudgetError("ABELCOUNT_ORACLE_MAX_ORDER too large");
  return to_u64(v);
}

std::string fmt_ld(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

}  // namespace

struct ac_enum {
  std::variant<Subgroup2Stream, Subgroup3Stream> stream;
  ac_enum_format format;
};

extern "C" {

const char* ac_text_data(const ac_text* text) { return text ? text->data.c_str() : ""; }
size_t ac_text_size(const ac_text* text) { return text ? text->data.size() : 0; }
void ac_text_free(ac_text* text) { delete text; }

const char* ac_last_error(void) { return g_last_error.c_str(); }
const char* ac_version(void) { return ABELCOUNT_VERSION; }

ac_status ac_count_total(const char* const* moduli, size_t k, ac_text** out) {
  return guarded([&] {
    const auto v = parse_moduli(moduli, k);
    switch (v.size()) {
      case 2:
        return emit(line(total_count_2(v[0], v[1])), out);
      case 3:
        return emit(line(total_count_3(v[0], v[1], v[2])), out);
      case 4:
        return emit(line(total_count_4(v[0], v[1], v[2], v[3])), out);
      default:
        return emit(line(total_count_general(GroupSpec(v))), out);
    }
  });
}

ac_status ac_count_cyclic(const char* const* moduli, size_t k, ac_text** out) {
  return guarded([&] { return emit(line(cyclic_count(GroupSpec(parse_moduli(moduli, k)))), out); });
}

ac_status ac_count_order(const char* delta, const char* const* moduli, size_t k, ac_text** out) {
  return guarded([&] {
    const auto v = parse_moduli(moduli, k);
    const Natural d = parse_pos(delta, "order");
    if (v.size() > 4) {
      throw DomainError("order-restricted counting is only available for at most 4 moduli, got " +
                        std::to_string(v.size()));
    }
    const GroupSpec g(v);
    require_divides(d, g.order(), "order");
    switch (v.size()) {
      case 2:
        return emit(line(count_order_2(v[0], v[1], d)), out);
      case 3:
        return emit(line(count_order_3(v[0], v[1], v[2], d)), out);
      case 4:
        return emit(line(count_order_4(v[0], v[1], v[2], v[3], d)), out);
      default:
        return emit(line(count_order_general(g, d)), out);
    }
  });
}

ac_status ac_count_isotype(const char* a, const char* b, const char* m, const char* n,
                           ac_text** out) {
  return guarded([&] {
    const Natural A = parse_pos(a, "A"), B = parse_pos(b, "B");
    const Natural M = parse_pos(m, "m"), N = parse_pos(n, "n");
    require_divides(A, B, "A");
    return emit(line(count_isotype_2(M, N, A, B)), out);
  });
}

ac_status ac_count_sigma(const char* t, const char* m, const char* n, ac_text** out) {
  return guarded([&] {
    const unsigned T = parse_small(t, "t", kMaxPower);
    return emit(line(sigma_t_2(T, parse_pos(m, "m"), parse_pos(n, "n"))), out);
  });
}

ac_status ac_count_aut(const char* m, const char* n, ac_text** out) {
  return guarded(
      [&] { return emit(line(aut_count(parse_pos(m, "m"), parse_pos(n, "n"))), out); });
}

ac_status ac_poly(const char* kind, const char* const* args, size_t nargs, ac_text** out) {
  return guarded([&] {
    const std::string k = kind ? kind : "";
    auto want = [&](std::size_t n, const char* usage) {
      if (nargs != n) throw UsageError("poly " + k + " expects " + usage);
    };
    auto ex = [&](std::size_t i) { return parse_small(args[i], "exponent", kMaxExponent); };
    IntPoly p;
    if (k == "s2") {
      want(2, "<a> <b>");
      unsigned a = ex(0), b = ex(1);
      if (a > b) std::swap(a, b);
      p = s2_prime_power_poly(a, b);
    } else if (k == "s3") {
      want(3, "<l1> <l2> <l3>");
      std::vector<unsigned> l = {ex(0), ex(1), ex(2)};
      std::sort(l.rbegin(), l.rend());
      p = s3_prime_power_poly(l[0], l[1], l[2]);
    } else if (k == "n4") {
      want(4, "<a> <b> <c> <d>");
      p = n4_poly(ex(0), ex(1), ex(2), ex(3));
    } else if (k == "n4order") {
      want(5, "<a> <b> <c> <d> <k>");
      const unsigned a = ex(0), b = ex(1), c = ex(2), d = ex(3);
      const unsigned kk = parse_small(args[4], "k", 4 * kMaxExponent);
      if (kk > a + b + c + d) {
        throw DomainError("k must be at most a+b+c+d = " + std::to_string(a + b + c + d));
      }
      p = n4_order_poly(a, b, c, d, kk);
    } else if (k == "aut") {
      want(2, "<a> <b>");
      unsigned a = ex(0), b = ex(1);
      if (a > b) std::swap(a, b);
      p = aut_count_poly(a, b);
    } else if (k == "gauss") {
      want(2, "<r> <k>");
      p = gauss_binom(ex(0), ex(1));
    } else if (k == "type-count") {
      want(2, "<lambda> <mu> as comma-separated parts");
      p = subgroups_of_type(parse_partition(args[0]), parse_partition(args[1]));
    } else if (k == "cyclic-order") {
      want(2, "<lambda> <nu>");
      const Partition lambda = parse_partition(args[0]);
      const unsigned nu = ex(1);
      if (nu == 0) throw DomainError("nu must be >= 1");
      p = cyclic_of_order_poly(lambda, nu);
    } else {
      throw UsageError("unknown polynomial kind '" + k + "'");
    }
    return emit(p.to_string() + "\n", out);
  });
}

ac_status ac_enum_open(const char* const* moduli, size_t k, ac_enum_format format,
                       ac_enum** out) {
  return guarded([&] {
    check_format(format);
    if (out == nullptr) throw UsageError("output pointer is null");
    const auto v = parse_moduli(moduli, k);
    if (v.size() == 2) {
      *out = new ac_enum{Subgroup2Stream(v[0], v[1]), format};
    } else if (v.size() == 3) {
      if (format == AC_FORMAT_ISOTYPES) {
        throw UsageError("format isotypes is only available for two moduli");
      }
      *out = new ac_enum{Subgroup3Stream(v[0], v[1], v[2]), format};
    } else {
      throw UsageError("enumeration takes 2 or 3 moduli");
    }
    return AC_OK;
  });
}

ac_status ac_enum_next(ac_enum* e, ac_text** out) {
  return guarded([&] {
    if (e == nullptr || out == nullptr) throw UsageError("null enumeration handle");
    *out = nullptr;
    if (auto* s2 = std::get_if<Subgroup2Stream>(&e->stream)) {
      if (auto key = s2->next()) return emit(render_2(*key, e->format, true), out);
    } else if (auto* s3 = std::get_if<Subgroup3Stream>(&e->stream)) {
      if (auto key = s3->next()) return emit(render_3(*key, e->format, true), out);
    }
    return AC_OK;
  });
}

void ac_enum_free(ac_enum* e) { delete e; }

ac_status ac_enum_key(const char* const* moduli, size_t k, const char* const* key, size_t nkey,
                      ac_enum_format format, ac_text** out) {
  return guarded([&] {
    check_format(format);
    const auto v = parse_moduli(moduli, k);
    std::vector<Natural> f;
    for (std::size_t i = 0; i < nkey; ++i) f.push_back(parse_nat(key[i], "key field"));
    if (v.size() == 2) {
      if (f.size() != 5) throw UsageError("a key for two moduli has 5 fields: a b c d l");
      return emit(render_2(make_subgroup2_key(v[0], v[1], f[0], f[1], f[2], f[3], f[4]), format,
                           false),
                  out);
    }
    if (v.size() == 3) {
      if (f.size() != 6) throw UsageError("a key for three moduli has 6 fields: a b c t w z");
      return emit(render_3(make_subgroup3_key(v[0], v[1], v[2], f[0], f[1], f[2], f[3], f[4],
                                              f[5]),
                           format, false),
                  out);
    }
    throw UsageError("enumeration takes 2 or 3 moduli");
  });
}

ac_status ac_enum_count(const char* const* moduli, size_t k, ac_text** out) {
  return guarded([&] {
    const auto v = parse_moduli(moduli, k);
    if (v.size() == 2) return emit(line(total_count_2(v[0], v[1])), out);
    if (v.size() == 3) return emit(line(total_count_3(v[0], v[1], v[2])), out);
    throw UsageError("enumeration takes 2 or 3 moduli");
  });
}

ac_status ac_table(const char* name, unsigned from, unsigned to, ac_text** out) {
  return guarded([&] {
    const std::string n = name ? name : "";
    if (n == "Nn") {
      if (from < 1 || from > to) throw DomainError("table Nn needs 1 <= from <= to");
      return emit(table_nn(from, to), out);
    }
    if (n == "n4-polys") return emit(table_n4_polys(), out);
    if (n == "s3-poly") return emit(table_s3_poly(), out);
    throw UsageError("unknown table '" + n + "'");
  });
}

ac_status ac_oracle_verify(uint64_t max_order, const unsigned* arities, size_t narities,
                           ac_text** out) {
  return guarded([&] {
    if (max_order < 1) throw DomainError("max order must be >= 1");
    const std::uint64_t bound = oracle_bound();
    if (max_order > bound) {
      throw BudgetError("max order " + std::to_string(max_order) + " exceeds the oracle bound " +
                        std::to_string(bound));
    }
    std::vector<unsigned> ks(arities, arities + narities);
    for (unsigned k : ks) {
      if (k < 1 || k > 4) throw DomainError("arities must lie in 1..4");
    }
    const VerifyReport r = verify_range(max_order, ks, bound);
    if (!r.ok()) {
      emit("mismatch: " + *r.first_mismatch + "\n", out);
      return AC_ERR_MISMATCH;
    }
    return emit("ok: " + std::to_string(r.groups_checked) + " groups, " +
                    std::to_string(r.subgroups_checked) + " subgroups, " +
                    std::to_string(r.bijections_checked) + " enumerations\n",
                out);
  });
}

ac_status ac_sum(const char* series, unsigned k, uint64_t x, unsigned per_decade,
                 unsigned fit_degree, ac_text** out) {
  return guarded([&] {
    const auto id = parse_series_id(series ? series : "");
    if (!id) throw UsageError(std::string("unknown series '") + (series ? series : "") + "'");
    SeriesSpec spec{*id, k};
    if ((*id == SeriesId::kCk || *id == SeriesId::kFk) && k < 1) {
      throw DomainError("k must be >= 1");
    }
    const PartialSumSeries s = partial_sums(spec, checkpoint_grid(x, per_decade));
    const MainTerm main = main_term(spec);
    std::string text = series_report_tsv(s, main);
    if (fit_degree > 0) {
      const MainTermModel m = fit_log_poly(s, main.power, fit_degree);
      text += "\nterm\tfitted_coefficient\n";
      for (std::size_t j = 0; j < m.coefficients.size(); ++j) {
        text += "log^" + std::to_string(j) + "\t" + fmt_ld(m.coefficients[j]) + "\n";
      }
      text += "max_rel_residual\t" + fmt_ld(m.max_rel_residual) + "\n";
      text += "rms_rel_residual\t" + fmt_ld(m.rms_rel_residual) + "\n";
    }
    return emit(std::move(text), out);
  });
}

ac_status ac_constants(const char* which, unsigned k, ac_text** out) {
  return guarded([&] {
    const std::string w = which ? which : "";
    std::vector<ConstantValue> values;
    if (w == "Hk") {
      if (k < 2) throw DomainError("H(k) needs k >= 2");
      values.push_back(euler_h(k));
    } else if (w == "H3") {
      const auto [h, hd] = euler_h3();
      values = {h, hd};
    } else if (w == "C") {
      values.push_back(euler_c_ae());
    } else if (w == "zetaprod") {
      if (k < 2) throw DomainError("zeta product needs k >= 2");
      values.push_back(zeta_product(k));
    } else {
      throw UsageError("unknown constant '" + w + "'");
    }
    return emit(constant_report_json(values), out);
  });
}

}  // extern "C"
