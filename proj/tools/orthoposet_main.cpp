// Command-line front end: checks, relation tables, constructions, DOT
// export, enumeration and the two verification drivers.
//
// Exit codes: 0 success, 1 a requested property or verification failed,
// 2 parse/validation error, 3 feasibility refusal.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthoposet/constructs.hpp"
#include "orthoposet/enumerate.hpp"
#include "orthoposet/logic_ops.hpp"
#include "orthoposet/ortho.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orthoposet;

int parse_count(const std::string& text) {
  std::size_t pos = 0;
  const int k = std::stoi(text, &pos);
  if (pos != text.size() || k < 1)
    throw std::invalid_argument("bad size parameter: " + text);
  return k;
}

// Accepts "-" (stdin), fixture names, boolean:k, mo:k, or a file path.
NamedOrtho resolve(const std::string& spec) {
  if (spec == "-") return parse_document(std::cin);
  const std::vector<std::string> names = fixture_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return {fixture(spec), spec};
  if (spec.rfind("boolean:", 0) == 0)
    return {gen_boolean(parse_count(spec.substr(8))), spec};
  if (spec.rfind("mo:", 0) == 0)
    return {gen_mo(parse_count(spec.substr(3))).op, spec};
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open input: " + spec);
  return parse_document(in);
}

ordered_json report_json(const CheckReport& r, const Poset& p) {
  ordered_json j;
  j["property"] = r.property;
  j["verdict"] = r.verdict;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : r.witnesses) {
    ordered_json wj;
    ordered_json els = ordered_json::array();
    for (int e : w.elements) els.push_back(p.label(e));
    wj["elements"] = els;
    wj["note"] = w.note;
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  j["warnings"] = r.warnings;
  return j;
}

bool require_holds(const Classification& cls, const std::string& raw) {
  std::string name = raw;
  bool neg = false;
  if (name.rfind("non-", 0) == 0) {
    neg = true;
    name = name.substr(4);
  }
  bool v = false;
  if (name == "valid") v = cls.valid.verdict;
  else if (name == "lattice") v = cls.lattice.verdict;
  else if (name == "distributive") v = cls.distributive.verdict;
  else if (name == "boolean") v = cls.boolean_poset.verdict;
  else if (name == "orthogonal") v = cls.orthogonal.verdict;
  else if (name == "om") v = cls.om.verdict;
  else if (name == "gom") v = cls.gom_poset();
  else if (name == "omp") v = cls.orthomodular_poset();
  else if (name == "ortholattice") v = cls.ortholattice();
  else if (name == "oml") v = cls.orthomodular_lattice();
  else throw std::invalid_argument("unknown property: " + raw);
  return neg ? !v : v;
}

int run_check(const std::string& input, const std::vector<std::string>& reqs,
              bool as_json) {
  NamedOrtho no = resolve(input);
  const Poset& p = no.op.poset();
  const Classification cls = classify(no.op);
  const CheckReport* reports[] = {&cls.valid,      &cls.lattice,
                                  &cls.distributive, &cls.boolean_poset,
                                  &cls.orthogonal, &cls.om, &cls.gom};
  bool all = true;
  std::vector<std::pair<std::string, bool>> evaluated;
  for (const std::string& r : reqs) {
    const bool ok = require_holds(cls, r);
    evaluated.emplace_back(r, ok);
    all = all && ok;
  }
  if (as_json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["input"] = no.name;
    j["n"] = p.size();
    ordered_json rs = ordered_json::array();
    for (const CheckReport* r : reports) rs.push_back(report_json(*r, p));
    j["reports"] = rs;
    j["classification"] = {
        {"orthomodular_poset", cls.orthomodular_poset()},
        {"generalized_orthomodular_poset", cls.gom_poset()},
        {"ortholattice", cls.ortholattice()},
        {"orthomodular_lattice", cls.orthomodular_lattice()}};
    ordered_json reqj = ordered_json::array();
    for (const auto& [name, ok] : evaluated)
      reqj.push_back({{"name", name}, {"holds", ok}});
    j["required"] = reqj;
    j["passed"] = all;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "input: " << no.name << " (" << p.size() << " elements)\n";
    for (const CheckReport* r : reports) std::cout << to_text(*r, p);
    std::cout << "orthomodular poset: "
              << (cls.orthomodular_poset() ? "yes" : "no") << '\n';
    std::cout << "generalized orthomodular poset: "
              << (cls.gom_poset() ? "yes" : "no") << '\n';
    std::cout << "ortholattice: " << (cls.ortholattice() ? "yes" : "no")
              << '\n';
    std::cout << "orthomodular lattice: "
              << (cls.orthomodular_lattice() ? "yes" : "no") << '\n';
    for (const auto& [name, ok] : evaluated)
      std::cout << "require " << name << ": " << (ok ? "pass" : "FAIL")
                << '\n';
  }
  return all ? 0 : 1;
}

int run_table(const std::string& input, const std::string& relation,
              const std::string& slice, bool as_json) {
  NamedOrtho no = resolve(input);
  const Poset& p = no.op.poset();
  const int n = p.size();
  int z = p.top();
  if (relation == "discriminator-slice" && !slice.empty()) {
    const auto idx = p.index_of_label(slice);
    if (!idx) throw std::invalid_argument("no element labeled: " + slice);
    z = *idx;
  }
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (relation == "compat")
        cells[x][y] = compatible(no.op, x, y) ? "1" : "0";
      else if (relation == "commutator")
        cells[x][y] = p.label_set(commutator(no.op, x, y).mins);
      else if (relation == "discriminator-slice")
        cells[x][y] = p.label_set(discriminator(no.op, x, y, z));
      else
        throw std::invalid_argument("unknown relation: " + relation);
    }
  if (as_json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "table";
    j["input"] = no.name;
    j["relation"] = relation;
    if (relation == "discriminator-slice") j["slice"] = p.label(z);
    j["labels"] = p.labels();
    j["cells"] = cells;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "table " << relation << ' ' << no.name << '\n';
    if (relation == "discriminator-slice")
      std::cout << "slice " << p.label(z) << '\n';
    std::cout << '*';
    for (int y = 0; y < n; ++y) std::cout << ' ' << p.label(y);
    std::cout << '\n';
    for (int x = 0; x < n; ++x) {
      std::cout << p.label(x) << " |";
      for (int y = 0; y < n; ++y) std::cout << ' ' << cells[x][y];
      std::cout << '\n';
    }
  }
  return 0;
}

void print_enum_json(const char* command, const EnumResult& r,
                     ordered_json extra, bool with_reps) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  for (auto& [k, v] : extra.items()) j[k] = v;
  ordered_json counts;
  for (const auto& [n, c] : r.counts_by_size) counts[std::to_string(n)] = c;
  j["counts"] = counts;
  j["total"] = r.total();
  if (with_reps) {
    ordered_json reps = ordered_json::array();
    for (const auto& rep : r.representatives) reps.push_back(to_hex(rep));
    j["representatives"] = reps;
  }
  j["certificate"] = r.certificate;
  j["ok"] = r.ok;
  std::cout << j.dump(2) << '\n';
}

ExtensionOrder order_of(const std::string& name) {
  if (name == "lex") return ExtensionOrder::lex;
  if (name == "reverse") return ExtensionOrder::reverse;
  throw std::invalid_argument("unknown extension order: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite bounded posets with an antitone involution"};
  app.require_subcommand(1);
  int code = 0;

  std::string in_check;
  std::vector<std::string> reqs;
  bool check_json = false;
  auto* c_check = app.add_subcommand("check", "classify a structure");
  c_check->add_option("input", in_check, "fixture, boolean:k, mo:k, path, -")
      ->required();
  c_check->add_option("--require", reqs,
                      "property that must hold (prefix non- to negate): "
                      "valid, lattice, distributive, boolean, orthogonal, "
                      "om, gom, omp, ortholattice, oml");
  c_check->add_flag("--json", check_json, "JSON report");
  c_check->callback([&] { code = run_check(in_check, reqs, check_json); });

  std::string in_table, relation, slice;
  bool table_json = false;
  auto* c_table = app.add_subcommand("table", "pairwise relation table");
  c_table->add_option("input", in_table, "structure to tabulate")->required();
  c_table
      ->add_option("--relation", relation,
                   "compat | commutator | discriminator-slice")
      ->required();
  c_table->add_option("--slice", slice,
                      "third argument's label for discriminator-slice "
                      "(default: top)");
  c_table->add_flag("--json", table_json, "JSON report");
  c_table->callback(
      [&] { code = run_table(in_table, relation, slice, table_json); });

  std::vector<std::string> hsum_inputs;
  auto* c_hsum = app.add_subcommand("hsum", "horizontal sum of structures");
  c_hsum->add_option("inputs", hsum_inputs, "one or more structures")
      ->required()
      ->expected(-1);
  c_hsum->callback([&] {
    std::vector<OrthoPoset> parts;
    std::string name;
    for (const std::string& spec : hsum_inputs) {
      NamedOrtho no = resolve(spec);
      parts.push_back(no.op);
      name += (name.empty() ? "" : "+") + no.name;
    }
    std::cout << serialize(horizontal_sum(parts).op, name);
  });

  std::string gen_spec;
  auto* c_gen = app.add_subcommand("gen", "emit a named structure");
  c_gen->add_option("name", gen_spec, "fixture name, boolean:k or mo:k")
      ->required();
  c_gen->callback([&] {
    NamedOrtho no = resolve(gen_spec);
    std::cout << serialize(no.op, no.name);
  });

  std::string dot_input;
  auto* c_dot = app.add_subcommand("dot", "emit the Hasse diagram as DOT");
  c_dot->add_option("input", dot_input, "structure to render")->required();
  c_dot->callback([&] {
    NamedOrtho no = resolve(dot_input);
    std::cout << export_dot(no.op, no.name);
  });

  int max_size = 8, enum_jobs = 1;
  std::vector<std::string> filter_names;
  std::string enum_order = "lex", checkpoint;
  bool enum_json = false, enum_naive = false, enum_reps = false;
  auto* c_enum = app.add_subcommand(
      "enum", "enumerate bounded involutive posets up to isomorphism");
  c_enum->add_option("--max-size", max_size, "largest carrier size")
      ->required();
  c_enum->add_option("--filter", filter_names,
                     "omp | gom | boolean | orthogonal | non-lattice");
  c_enum->add_option("--jobs", enum_jobs, "worker threads (0 = all)");
  c_enum->add_option("--order", enum_order, "extension order: lex | reverse");
  c_enum->add_option("--checkpoint", checkpoint, "checkpoint file");
  c_enum->add_flag("--naive", enum_naive, "brute-force reference engine");
  c_enum->add_flag("--representatives", enum_reps,
                   "list canonical forms as hex");
  c_enum->add_flag("--json", enum_json, "JSON report");
  c_enum->callback([&] {
    EnumJob job;
    job.max_n = max_size;
    for (const std::string& f : filter_names)
      job.filters.push_back(filter_from_name(f));
    job.jobs = enum_jobs;
    job.order = order_of(enum_order);
    job.checkpoint = checkpoint;
    job.store_representatives = enum_reps || !checkpoint.empty();
    const EnumResult r = enum_naive ? naive_enumerate(job) : enumerate(job);
    if (enum_json) {
      print_enum_json("enum", r,
                      {{"engine", enum_naive ? "naive" : "canonical"},
                       {"max_size", max_size},
                       {"filters", filter_names},
                       {"order", enum_order}},
                      enum_reps);
    } else {
      for (const std::string& line : r.certificate)
        std::cout << line << '\n';
      if (enum_reps)
        for (const auto& rep : r.representatives)
          std::cout << "rep " << to_hex(rep) << '\n';
    }
  });

  int min_to = 12, min_jobs = 1;
  std::string min_order = "lex";
  bool min_json = false;
  auto* c_min = app.add_subcommand(
      "verify-min", "exhaustively confirm small orthomodular posets are "
                    "lattices");
  c_min->add_option("--exhaustive-to", min_to, "largest carrier size")
      ->required();
  c_min->add_option("--jobs", min_jobs, "worker threads (0 = all)");
  c_min->add_option("--order", min_order, "extension order: lex | reverse");
  c_min->add_flag("--json", min_json, "JSON report");
  c_min->callback([&] {
    const EnumResult r =
        verify_minimality(min_to, min_jobs, order_of(min_order));
    if (min_json) {
      print_enum_json("verify-min", r, {{"exhaustive_to", min_to}}, false);
    } else {
      for (const std::string& line : r.certificate)
        std::cout << line << '\n';
    }
    code = r.ok ? 0 : 1;
  });

  bool u18_json = false;
  auto* c_u18 = app.add_subcommand(
      "verify-unique18",
      "replay the uniqueness argument for the 18-element structure");
  c_u18->add_flag("--json", u18_json, "JSON report");
  c_u18->callback([&] {
    const EnumResult r = verify_uniqueness_18();
    if (u18_json) {
      print_enum_json("verify-unique18", r, ordered_json::object(), true);
    } else {
      for (const std::string& line : r.certificate)
        std::cout << line << '\n';
    }
    code = r.ok ? 0 : 1;
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const FeasibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
