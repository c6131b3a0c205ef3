// Copyright 2026 The bgroid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand first builds a JSON report; the
// plain-text output is rendered from that report, so `--json` never carries
// less than the text does.
//
// Exit codes: 0 success (for `check`: Groupoid, for `iso`: isomorphic),
// 1 verdict failure or unreadable input, 2 usage error.

#pragma once

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgroid/bgroid.hpp"

namespace bgroid::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline json type_json(const FiniteAlgebra& a) {
  return {{"n", a.order()}, {"m", a.unit_count()}};
}

inline json algebra_json(const FiniteAlgebra& a) {
  json table = json::array();
  for (Element i = 1; i <= a.order(); ++i) {
    json row = json::array();
    for (Element j = 1; j <= a.order(); ++j) row.push_back(a.product(i, j));
    table.push_back(std::move(row));
  }
  return {{"n", a.order()},
          {"m", a.unit_count()},
          {"u_left", a.u_left_row()},
          {"u_right", a.u_right_row()},
          {"inv", a.inv_row()},
          {"table", std::move(table)}};
}

inline json diagnostic_json(const Diagnostic& d) {
  return {{"code", std::string(to_string(d.code))},
          {"witness", d.witness},
          {"message", describe(d)}};
}

inline json group_json(const GroupTable& g) {
  json table = json::array();
  for (Element x : g.elements()) {
    json row = json::array();
    for (Element y : g.elements()) row.push_back(g.multiply(x, y));
    table.push_back(std::move(row));
  }
  return {{"unit", g.unit()},
          {"order", g.size()},
          {"elements", g.elements()},
          {"table", std::move(table)}};
}

inline std::string type_text(const json& t) {
  return "(" + std::to_string(t["n"].get<int>()) + ";" + std::to_string(t["m"].get<int>()) + ")";
}

inline std::string join(const json& values, const std::string& sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += values[k].dump();
  }
  return out;
}

inline std::string set_text(const json& values) { return "{" + join(values, ", ") + "}"; }

inline void render_structure_tables(std::ostream& out, const json& alg) {
  const auto n = alg["n"].get<int>();
  out << "x   ";
  for (int i = 1; i <= n; ++i) out << ' ' << i;
  out << "\nu_l  " << join(alg["u_left"]) << "\nu_r  " << join(alg["u_right"])
      << "\ninv  " << join(alg["inv"]) << '\n';
}

inline void render_group(std::ostream& out, const json& g) {
  out << "isotropy group at unit " << g["unit"].get<int>() << ": order "
      << g["order"].get<int>() << ", elements " << set_text(g["elements"]) << '\n';
  for (const auto& row : g["table"]) out << "  " << join(row) << '\n';
}

struct Report {
  json data;
  int exit_code = kExitOk;
};

inline FiniteAlgebra load(const std::string& path) { return read_structure_file(path); }

/// Rejects inputs below Groupoid level for the analysis subcommands.
inline std::optional<Report> require_groupoid(const FiniteAlgebra& a, const std::string& command) {
  const CheckVerdict v = classify_structure(a);
  if (v.is_groupoid()) return std::nullopt;
  json data{{"command", command},
            {"type", type_json(a)},
            {"level", std::string(to_string(v.level))},
            {"error", "input is not a groupoid: " + describe(*v.diagnostic)}};
  return Report{std::move(data), kExitFailure};
}

inline Report do_check(const std::string& path) {
  const FiniteAlgebra a = load(path);
  const CheckVerdict v = classify_structure(a);
  json data{{"command", "check"},
            {"type", type_json(a)},
            {"level", std::string(to_string(v.level))},
            {"groupoid", v.is_groupoid()}};
  if (v.is_groupoid()) {
    data["message"] = "G is a groupoid";
    data["diagnostic"] = nullptr;
    data["tables"] = algebra_json(a);
  } else {
    data["message"] = describe(*v.diagnostic);
    data["diagnostic"] = diagnostic_json(*v.diagnostic);
  }
  return {std::move(data), v.is_groupoid() ? kExitOk : kExitFailure};
}

inline Report do_classify(int n, int m, bool unpruned) {
  const ClassificationResult r =
      unpruned ? enumerate_groupoids_unpruned(n, m) : enumerate_groupoids(n, m);
  json classes = json::array();
  for (std::size_t k = 0; k < r.representatives.size(); ++k) {
    classes.push_back({{"index", k + 1},
                       {"name", r.witness_names[k] ? json(*r.witness_names[k]) : json(nullptr)},
                       {"algebra", algebra_json(r.representatives[k])}});
  }
  json data{{"command", "classify-type"},
            {"type", {{"n", n}, {"m", m}}},
            {"method", unpruned ? "unpruned" : "pruned"},
            {"class_count", r.representatives.size()},
            {"labeled_count", r.labeled_count},
            {"candidates_checked", r.candidates_checked},
            {"classes", std::move(classes)}};
  return {std::move(data), kExitOk};
}

inline Report do_iso(const std::string& p1, const std::string& p2) {
  const FiniteAlgebra a = load(p1), b = load(p2);
  if (auto bad = require_groupoid(a, "iso")) return *bad;
  if (auto bad = require_groupoid(b, "iso")) return *bad;
  const auto f = are_isomorphic(a, b);
  json data{{"command", "iso"}, {"isomorphic", f.has_value()}};
  data["bijection"] = f ? json(f->forward()) : json(nullptr);
  return {std::move(data), f ? kExitOk : kExitFailure};
}

inline Report do_transitive(const std::string& path) {
  const FiniteAlgebra a = load(path);
  if (auto bad = require_groupoid(a, "transitive")) return *bad;
  const TransitivityReport t = is_transitive(a);
  json data{{"command", "transitive"}, {"type", type_json(a)}, {"transitive", t.transitive}};
  data["missing_pair"] = t.missing ? json::array({t.missing->first, t.missing->second}) : json(nullptr);
  return {std::move(data), kExitOk};
}

inline Report do_isotropy(const std::string& path, std::optional<int> unit) {
  const FiniteAlgebra a = load(path);
  if (auto bad = require_groupoid(a, "isotropy")) return *bad;
  json groups = json::array();
  if (unit) {
    groups.push_back(group_json(isotropy_group(a, *unit)));
  } else {
    for (Element u = 1; u <= a.unit_count(); ++u) groups.push_back(group_json(isotropy_group(a, u)));
  }
  return {json{{"command", "isotropy"}, {"type", type_json(a)}, {"groups", std::move(groups)}}, kExitOk};
}

inline Report do_bundle(const std::string& path) {
  const FiniteAlgebra a = load(path);
  if (auto bad = require_groupoid(a, "bundle")) return *bad;
  const IsotropyBundle b = isotropy_bundle(a);
  json groups = json::array();
  for (const auto& g : b.groups) groups.push_back(group_json(g));
  json data{{"command", "bundle"},
            {"type", type_json(a)},
            {"isotropy_elements", b.elements},
            {"group_bundle", is_group_bundle(a)},
            {"groups", std::move(groups)}};
  return {std::move(data), kExitOk};
}

/// nul:<k>, zn:<k>, klein, s3, f42, k4-z4, e-z3, z2-z2.
inline FiniteAlgebra named_construction(const std::string& name) {
  const auto suffix = [&](std::string_view prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    int k = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw std::invalid_argument("bad size in '" + name + "'");
    }
    return k;
  };
  if (auto k = suffix("nul:")) return nul_groupoid(*k);
  if (auto k = suffix("zn:")) return from_group(cyclic_group(*k));
  if (name == "klein") return from_group(klein_four());
  if (name == "s3") return from_group(symmetric_s3());
  if (name == "f42") return saltus_f42();
  if (name == "k4-z4") return klein_plus_z4();
  if (name == "e-z3") return trivial_plus_z3();
  if (name == "z2-z2") return z2_plus_z2();
  throw std::invalid_argument("unknown construction '" + name +
                              "' (expected nul:<k>, zn:<k>, klein, s3, f42, k4-z4, e-z3, z2-z2)");
}

inline Report do_union(const std::string& p1, const std::string& p2, const std::string& out_path) {
  const FiniteAlgebra u = disjoint_union(load(p1), load(p2));
  save_structure_file(out_path, u);
  return {json{{"command", "union"}, {"type", type_json(u)}, {"output", out_path}}, kExitOk};
}

inline Report do_gen(const std::string& name, const std::optional<std::string>& out_path) {
  const FiniteAlgebra a = named_construction(name);
  json data{{"command", "gen"}, {"name", name}, {"type", type_json(a)}};
  if (out_path) {
    save_structure_file(*out_path, a);
    data["output"] = *out_path;
  } else {
    data["algebra"] = algebra_json(a);
  }
  return {std::move(data), kExitOk};
}

inline void render_text(std::ostream& out, const json& d) {
  if (d.contains("error")) {
    out << "error: " << d["error"].get<std::string>() << '\n';
    return;
  }
  const std::string cmd = d["command"];
  if (cmd == "check") {
    out << "type: " << type_text(d["type"]) << "\nlevel: " << d["level"].get<std::string>() << '\n';
    if (d["groupoid"].get<bool>()) {
      out << d["message"].get<std::string>() << '\n';
      render_structure_tables(out, d["tables"]);
    } else {
      const auto& diag = d["diagnostic"];
      out << "diagnostic: " << diag["code"].get<std::string>() << " (" << join(diag["witness"], ", ")
          << ")\n"
          << diag["message"].get<std::string>() << '\n';
    }
  } else if (cmd == "classify-type") {
    out << "type: " << type_text(d["type"]) << "\nmethod: " << d["method"].get<std::string>() << '\n'
        << d["class_count"].get<std::size_t>() << " isomorphism classes\n"
        << "labeled groupoids: " << d["labeled_count"].get<std::uint64_t>() << '\n'
        << "candidates checked: " << d["candidates_checked"].get<std::uint64_t>() << '\n';
    for (const auto& c : d["classes"]) {
      out << "\nclass " << c["index"].get<std::size_t>() << ": "
          << (c["name"].is_null() ? std::string("(unnamed)") : c["name"].get<std::string>()) << '\n';
      const auto& alg = c["algebra"];
      render_structure_tables(out, alg);
      out << "table:\n";
      for (const auto& row : alg["table"]) out << "  " << join(row) << '\n';
    }
  } else if (cmd == "iso") {
    if (d["isomorphic"].get<bool>()) {
      out << "isomorphic\n";
      const auto& f = d["bijection"];
      for (std::size_t i = 0; i < f.size(); ++i) {
        out << (i ? " " : "") << (i + 1) << "->" << f[i].get<int>();
      }
      out << '\n';
    } else {
      out << "not isomorphic\n";
    }
  } else if (cmd == "transitive") {
    out << "type: " << type_text(d["type"]) << '\n'
        << "transitive: " << (d["transitive"].get<bool>() ? "yes" : "no") << '\n';
    if (!d["missing_pair"].is_null()) {
      out << "missing anchor pair: (" << join(d["missing_pair"], ", ") << ")\n";
    }
  } else if (cmd == "isotropy") {
    out << "type: " << type_text(d["type"]) << '\n';
    for (const auto& g : d["groups"]) render_group(out, g);
  } else if (cmd == "bundle") {
    out << "type: " << type_text(d["type"]) << "\nIs(G) = " << set_text(d["isotropy_elements"])
        << "\ngroup bundle: " << (d["group_bundle"].get<bool>() ? "yes" : "no") << '\n';
    for (const auto& g : d["groups"]) render_group(out, g);
  } else if (cmd == "union") {
    out << "wrote " << type_text(d["type"]) << " disjoint union to " << d["output"].get<std::string>()
        << '\n';
  } else if (cmd == "gen") {
    if (d.contains("output")) {
      out << "wrote " << d["name"].get<std::string>() << ' ' << type_text(d["type"]) << " to "
          << d["output"].get<std::string>() << '\n';
    } else {
      const auto& alg = d["algebra"];
      FiniteAlgebra a(alg["n"].get<int>(), alg["m"].get<int>(), alg["u_left"], alg["u_right"],
                      alg["inv"], alg["table"].get<std::vector<std::vector<Element>>>());
      write_structure_file(out, a);
    }
  }
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brandt groupoid checker and classifier", "bgroid"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable report");

  std::string file1, file2, out_path, name;
  std::optional<std::string> gen_out;
  int n = 0, m = 0;
  std::optional<int> unit;
  bool unpruned = false;

  auto* check = app.add_subcommand("check", "Run the verification cascade on a structure file");
  check->add_option("file", file1)->required();
  auto* classify = app.add_subcommand("classify-type", "Enumerate groupoids of type (n;m) up to isomorphism");
  classify->add_option("n", n)->required();
  classify->add_option("m", m)->required();
  classify->add_flag("--unpruned", unpruned, "Use the exhaustive filter-everything search");
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two groupoids");
  iso->add_option("file1", file1)->required();
  iso->add_option("file2", file2)->required();
  auto* transitive = app.add_subcommand("transitive", "Report whether the anchor map is surjective");
  transitive->add_option("file", file1)->required();
  auto* isotropy = app.add_subcommand("isotropy", "Print isotropy groups");
  isotropy->add_option("file", file1)->required();
  isotropy->add_option("unit", unit);
  auto* bundle = app.add_subcommand("bundle", "Print the isotropy group bundle");
  bundle->add_option("file", file1)->required();
  auto* uni = app.add_subcommand("union", "Disjoint union of two groupoids");
  uni->add_option("file1", file1)->required();
  uni->add_option("file2", file2)->required();
  uni->add_option("-o,--output", out_path)->required();
  auto* gen = app.add_subcommand("gen", "Emit a named construction in structure-file format");
  gen->add_option("name", name)->required();
  gen->add_option("-o,--output", gen_out);
  for (auto* sub : {check, classify, iso, transitive, isotropy, bundle, uni, gen}) {
    sub->add_flag("--json", as_json, "Machine-readable report");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  Report report;
  try {
    if (check->parsed()) report = do_check(file1);
    else if (classify->parsed()) report = do_classify(n, m, unpruned);
    else if (iso->parsed()) report = do_iso(file1, file2);
    else if (transitive->parsed()) report = do_transitive(file1);
    else if (isotropy->parsed()) report = do_isotropy(file1, unit);
    else if (bundle->parsed()) report = do_bundle(file1);
    else if (uni->parsed()) report = do_union(file1, file2, out_path);
    else if (gen->parsed()) report = do_gen(name, gen_out);
  } catch (const std::exception& e) {
    report = Report{json{{"command", app.get_subcommands().front()->get_name()}, {"error", e.what()}},
                    kExitFailure};
  }

  if (as_json) {
    out << report.data.dump(2) << '\n';
  } else if (report.data.contains("error")) {
    render_text(err, report.data);
  } else {
    render_text(out, report.data);
  }
  return report.exit_code;
}

inline int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace bgroid::cli
