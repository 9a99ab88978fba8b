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

// abelcount command-line front end.  Talks to the library only through the
// C interface in abelcount/abelcount.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelcount/abelcount.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct TextDeleter {
  void operator()(ac_text* t) const { ac_text_free(t); }
};
using Text = std::unique_ptr<ac_text, TextDeleter>;

struct EnumDeleter {
  void operator()(ac_enum* e) const { ac_enum_free(e); }
};

class Failure {
 public:
  Failure(int code, std::string msg) : code_(code), msg_(std::move(msg)) {}
  int code() const { return code_; }
  const std::string& message() const { return msg_; }

 private:
  int code_;
  std::string msg_;
};

[[noreturn]] void fail(ac_status st) {
  throw Failure(st == AC_ERR_USAGE ? kExitUsage : kExitDomain, ac_last_error());
}

std::string take(ac_status st, ac_text*& raw) {
  Text t(raw);
  if (st != AC_OK) fail(st);
  return std::string(ac_text_data(t.get()), ac_text_size(t.get()));
}

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

ordered_json tsv_to_json(const std::string& tsv) {
  ordered_json sections = ordered_json::array();
  std::vector<std::string> header;
  ordered_json rows = ordered_json::array();
  auto flush = [&] {
    if (!header.empty()) sections.push_back(rows);
    header.clear();
    rows = ordered_json::array();
  };
  for (const auto& line : split_lines(tsv)) {
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, '\t')) cells.push_back(cell);
    if (header.empty()) {
      header = cells;
      continue;
    }
    ordered_json row = ordered_json::object();
    for (std::size_t i = 0; i < cells.size() && i < header.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  flush();
  return sections;
}

struct Output {
  bool json = false;
  std::vector<std::string> argv;

  void plain(const std::string& text) const { std::fwrite(text.data(), 1, text.size(), stdout); }

  void result(const std::string& text, const ordered_json& value) const {
    if (!json) {
      plain(text);
      return;
    }
    ordered_json doc;
    doc["input"] = argv;
    doc["result"] = value;
    std::cout << doc.dump(2) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and enumerate subgroups of finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json, "Wrap the result in JSON with an echo of the input");
  app.set_version_flag("--version", std::string(ac_version()));

  // count
  auto* count = app.add_subcommand("count", "Subgroup counts");
  count->require_subcommand(1);
  std::vector<std::string> moduli;
  std::string delta, iso_a, iso_b, sig_t;

  auto* c_total = count->add_subcommand("total", "Total number of subgroups");
  c_total->add_option("moduli", moduli, "n1 ... nk")->required();
  auto* c_cyclic = count->add_subcommand("cyclic", "Number of cyclic subgroups");
  c_cyclic->add_option("moduli", moduli, "n1 ... nk")->required();
  auto* c_order = count->add_subcommand("order", "Subgroups of a given order (k <= 4)");
  c_order->add_option("delta", delta, "order")->required();
  c_order->add_option("moduli", moduli, "n1 ... nk, after --")->required();
  auto* c_iso = count->add_subcommand("isotype", "Subgroups of Z_m x Z_n isomorphic to Z_A x Z_B");
  c_iso->add_option("A", iso_a)->required();
  c_iso->add_option("B", iso_b)->required();
  c_iso->add_option("moduli", moduli, "m n, after --")->required()->expected(2);
  auto* c_sigma = count->add_subcommand("sigma", "Sum of t-th powers of subgroup orders");
  c_sigma->add_option("t", sig_t)->required();
  c_sigma->add_option("moduli", moduli, "m n, after --")->required()->expected(2);
  auto* c_aut = count->add_subcommand("aut", "Automorphisms of Z_m x Z_n");
  c_aut->add_option("moduli", moduli, "m n")->required()->expected(2);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List subgroups of Z_m x Z_n or Z_m x Z_n x Z_r");
  std::string format = "keys";
  std::uint64_t limit = 100000;
  std::vector<std::string> key;
  en->add_option("moduli", moduli, "m n [r]")->required()->expected(2, 3);
  en->add_option("--format", format, "keys, elements or isotypes")
      ->check(CLI::IsMember({"keys", "elements", "isotypes"}));
  en->add_option("--limit", limit, "Refuse enumerations with more subgroups (0 = no limit)")
      ->capture_default_str();
  en->add_option("--key", key, "Render a single subgroup: a,b,c,d,l or a,b,c,t,w,z")
      ->delimiter(',');

  // poly
  auto* poly = app.add_subcommand("poly", "Counting polynomials in p");
  std::string poly_kind;
  std::vector<std::string> poly_args;
  poly->add_option("kind", poly_kind, "s2 s3 n4 n4order aut gauss type-count cyclic-order")
      ->required()
      ->check(CLI::IsMember(
          {"s2", "s3", "n4", "n4order", "aut", "gauss", "type-count", "cyclic-order"}));
  poly->add_option("args", poly_args, "Exponents or comma-separated partitions");

  // table
  auto* table = app.add_subcommand("table", "Regenerate the reference tables");
  std::string table_name;
  std::vector<std::string> table_range;
  table->add_option("name", table_name, "Nn, n4-polys or s3-poly")
      ->required()
      ->check(CLI::IsMember({"Nn", "n4-polys", "s3-poly"}));
  table->add_option("range", table_range, "For Nn: from..to or from to");

  // oracle-verify
  auto* ov = app.add_subcommand("oracle-verify", "Check every formula against brute force");
  std::uint64_t max_order = 0;
  std::vector<unsigned> arities = {2, 3, 4};
  ov->add_option("--max-order", max_order, "Largest group order to check")->required();
  ov->add_option("--arities", arities, "Numbers of moduli, e.g. 2,3,4")
      ->delimiter(',')
      ->capture_default_str();

  // sum
  auto* sum = app.add_subcommand("sum", "Checkpointed partial sums against their main terms");
  std::string series;
  std::vector<unsigned> series_k;
  std::uint64_t sum_x = 0;
  unsigned per_decade = 1;
  unsigned fit_degree = 0;
  sum->add_option("series", series,
                  "c-pairs s-pairs sigma1-pairs c2 s-diag s3-diag ae ck fk")
      ->required()
      ->check(CLI::IsMember(
          {"c-pairs", "s-pairs", "sigma1-pairs", "c2", "s-diag", "s3-diag", "ae", "ck", "fk"}));
  sum->add_option("k", series_k, "Parameter for ck and fk")->expected(0, 1);
  sum->add_option("--x", sum_x, "Upper summation limit")->required()->check(CLI::PositiveNumber);
  sum->add_option("--checkpoints", per_decade, "Checkpoints per decade from 10^3")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sum->add_option("--fit", fit_degree, "Append a log-polynomial fit of this degree");

  // constants
  auto* cons = app.add_subcommand("constants", "Euler-product constants with tail bounds");
  std::string cons_name;
  std::vector<unsigned> cons_k;
  cons->add_option("which", cons_name, "Hk, H3, C or zetaprod")
      ->required()
      ->check(CLI::IsMember({"Hk", "H3", "C", "zetaprod"}));
  cons->add_option("k", cons_k, "Parameter for Hk and zetaprod")->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) != "--json") out.argv.emplace_back(argv[i]);
  }

  try {
    auto simple = [&](ac_status st, ac_text*& t) {
      const std::string text = take(st, t);
      out.result(text, chomp(text));
    };
    ac_text* t = nullptr;
    auto mods = c_strs(moduli);

    if (c_total->parsed()) {
      simple(ac_count_total(mods.data(), mods.size(), &t), t);
    } else if (c_cyclic->parsed()) {
      simple(ac_count_cyclic(mods.data(), mods.size(), &t), t);
    } else if (c_order->parsed()) {
      simple(ac_count_order(delta.c_str(), mods.data(), mods.size(), &t), t);
    } else if (c_iso->parsed()) {
      simple(ac_count_isotype(iso_a.c_str(), iso_b.c_str(), mods[0], mods[1], &t), t);
    } else if (c_sigma->parsed()) {
      simple(ac_count_sigma(sig_t.c_str(), mods[0], mods[1], &t), t);
    } else if (c_aut->parsed()) {
      simple(ac_count_aut(mods[0], mods[1], &t), t);
    } else if (en->parsed()) {
      const ac_enum_format fmt = format == "elements"   ? AC_FORMAT_ELEMENTS
                                 : format == "isotypes" ? AC_FORMAT_ISOTYPES
                                                        : AC_FORMAT_KEYS;
      if (!key.empty()) {
        auto k = c_strs(key);
        const std::string text =
            take(ac_enum_key(mods.data(), mods.size(), k.data(), k.size(), fmt, &t), t);
        out.result(text, split_lines(text));
        return kExitOk;
      }
      const std::string total = chomp(take(ac_enum_count(mods.data(), mods.size(), &t), t));
      if (limit > 0 && (total.size() > 19 || std::stoull(total) > limit)) {
        throw Failure(kExitDomain, "enumeration would list " + total +
                                       " subgroups, more than --limit " + std::to_string(limit));
      }
      ac_enum* raw = nullptr;
      if (ac_status st = ac_enum_open(mods.data(), mods.size(), fmt, &raw); st != AC_OK) fail(st);
      std::unique_ptr<ac_enum, EnumDeleter> e(raw);
      ordered_json items = ordered_json::array();
      for (;;) {
        ac_status st = ac_enum_next(e.get(), &t);
        if (st == AC_OK && t == nullptr) break;
        const std::string item = take(st, t);
        if (out.json) {
          items.push_back(fmt == AC_FORMAT_KEYS ? ordered_json(chomp(item))
                                                : ordered_json(split_lines(item)));
        } else {
          out.plain(item);
        }
      }
      if (out.json) out.result("", items);
    } else if (poly->parsed()) {
      auto a = c_strs(poly_args);
      simple(ac_poly(poly_kind.c_str(), a.data(), a.size(), &t), t);
    } else if (table->parsed()) {
      unsigned from = 1, to = 30;
      if (!table_range.empty()) {
        if (table_name != "Nn") throw Failure(kExitUsage, "only table Nn takes a range");
        std::string a, b;
        if (table_range.size() == 1) {
          const auto dots = table_range[0].find("..");
          if (dots == std::string::npos) throw Failure(kExitUsage, "range must be from..to");
          a = table_range[0].substr(0, dots);
          b = table_range[0].substr(dots + 2);
        } else if (table_range.size() == 2) {
          a = table_range[0];
          b = table_range[1];
        } else {
          throw Failure(kExitUsage, "range must be from..to or from to");
        }
        try {
          std::size_t pa = 0, pb = 0;
          from = static_cast<unsigned>(std::stoul(a, &pa));
          to = static_cast<unsigned>(std::stoul(b, &pb));
          if (pa != a.size() || pb != b.size()) throw std::invalid_argument("range");
        } catch (const std::exception&) {
          throw Failure(kExitUsage, "range bounds must be integers");
        }
      }
      const std::string text = take(ac_table(table_name.c_str(), from, to, &t), t);
      out.result(text, text);
    } else if (ov->parsed()) {
      const ac_status st = ac_oracle_verify(max_order, arities.data(), arities.size(), &t);
      if (st == AC_ERR_MISMATCH) {
        Text keep(t);
        const std::string text(ac_text_data(t), ac_text_size(t));
        out.result(text, ordered_json{{"ok", false}, {"report", chomp(text)}});
        return kExitDomain;
      }
      const std::string text = take(st, t);
      out.result(text, ordered_json{{"ok", true}, {"report", chomp(text)}});
    } else if (sum->parsed()) {
      const bool needs_k = series == "ck" || series == "fk";
      if (needs_k != !series_k.empty()) {
        throw Failure(kExitUsage, needs_k ? "series " + series + " needs a parameter k"
                                          : "series " + series + " takes no parameter");
      }
      const std::string text =
          take(ac_sum(series.c_str(), needs_k ? series_k[0] : 0, sum_x, per_decade, fit_degree,
                      &t),
               t);
      out.result(text, tsv_to_json(text));
    } else if (cons->parsed()) {
      const bool needs_k = cons_name == "Hk" || cons_name == "zetaprod";
      if (needs_k != !cons_k.empty()) {
        throw Failure(kExitUsage, needs_k ? cons_name + " needs a parameter k"
                                          : cons_name + " takes no parameter");
      }
      const std::string text =
          take(ac_constants(cons_name.c_str(), needs_k ? cons_k[0] : 0, &t), t);
      out.result(text, ordered_json::parse(text));
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << "\n";
    return f.code();
  }
  return kExitOk;
}
