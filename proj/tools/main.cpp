#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "demo.hpp"
#include "hta/error.hpp"
#include "hta/fo/ops.hpp"
#include "hta/ground/se.hpp"
#include "hta/kernel/equivalence.hpp"
#include "hta/kernel/script_json.hpp"
#include "hta/mg/parser.hpp"
#include "hta/mg/regular.hpp"
#include "hta/nu/translate.hpp"

#include <nlohmann/json.hpp>

namespace {

using namespace hta;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open `" + path + "`");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

mg::Program load_program(const std::string& path) { return mg::parse_program(slurp(path)); }

struct DomainOpts {
  std::string ints;
  std::string consts;
  bool inf_sup = false;
};

void add_domain_opts(CLI::App* cmd, DomainOpts* o) {
  cmd->add_option("--ints", o->ints, "integer range LO..HI (e.g. --ints -1..4)");
  cmd->add_option("--consts", o->consts, "comma-separated symbolic constants");
  cmd->add_flag("--inf-sup", o->inf_sup, "include #inf and #sup in the pool");
}

ground::Domain resolve_domain(const DomainOpts& o,
                              const std::vector<const mg::Program*>& programs) {
  ground::Domain d = ground::default_domain(programs);
  if (!o.ints.empty()) {
    size_t dots = o.ints.find("..");
    if (dots == std::string::npos)
      throw Error("--ints expects LO..HI, got `" + o.ints + "`");
    try {
      d.lo = Int(o.ints.substr(0, dots));
      d.hi = Int(o.ints.substr(dots + 2));
    } catch (const std::exception&) {
      throw Error("--ints expects integers, got `" + o.ints + "`");
    }
    if (d.hi < d.lo) throw Error("--ints range is empty");
  }
  if (!o.consts.empty()) {
    d.symbolic_consts.clear();
    std::istringstream in(o.consts);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty()) d.symbolic_consts.push_back(item);
  }
  if (o.inf_sup) d.include_inf_sup = true;
  return d;
}

void print_verdict_text(const kernel::Verdict& v) {
  std::cout << v.summary() << "\n";
  if (!v.accepted)
    for (const auto& line : v.lines)
      if (!line.ok) std::cout << "  line " << line.id << ": " << line.message << "\n";
}

void print_verdict_json(const kernel::Verdict& v) {
  nlohmann::json j;
  j["accepted"] = v.accepted;
  j["uses_trusted_arithmetic"] = v.uses_trusted_arithmetic;
  j["lines"] = nlohmann::json::array();
  for (const auto& line : v.lines)
    j["lines"].push_back({{"id", line.id}, {"ok", line.ok}, {"message", line.message}});
  if (!v.goal_ok) j["goal_mismatch"] = v.failure_reason;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mini-gringo strong-equivalence toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::function<void()> action;

  // parse
  {
    auto* cmd = app.add_subcommand("parse", "parse a program and echo its rules");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "program file")->required();
    cmd->callback([&exit_code, file]() {
      mg::Program p = load_program(*file);
      std::cout << mg::to_string(p);
      for (const auto& r : p.rules())
        for (const auto& v : mg::check_regular_rule(r))
          std::cerr << "note: rule `" << mg::to_string(r) << "`: " << mg::to_string(v) << "\n";
      exit_code = 0;
    });
  }

  // translate
  {
    auto* cmd = app.add_subcommand("translate", "print the sentences for a program");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "program file")->required();
    cmd->callback([&exit_code, file]() {
      for (const auto& f : nu::nu_program(load_program(*file)))
        std::cout << fo::to_string(*f) << "\n";
      exit_code = 0;
    });
  }

  // check-proof
  {
    auto* cmd = app.add_subcommand("check-proof", "check one proof script");
    auto file = std::make_shared<std::string>();
    auto opts = std::make_shared<kernel::CheckOptions>();
    auto json_out = std::make_shared<bool>(false);
    cmd->add_option("script", *file, "proof script (JSON)")->required();
    cmd->add_flag("--int-mode", opts->int_mode, "disable the Hosoi schema and groups B-D");
    cmd->add_flag("--trust-arith", opts->allow_trusted_arith,
                  "accept lines marked groupD-trusted");
    cmd->add_flag("--json", *json_out, "machine-readable report");
    cmd->callback([&exit_code, file, opts, json_out]() {
      kernel::Verdict v = kernel::check_proof(kernel::parse_script_file(*file), *opts);
      if (*json_out)
        print_verdict_json(v);
      else
        print_verdict_text(v);
      exit_code = v.accepted ? 0 : 1;
    });
  }

  // check-se-proofs
  {
    auto* cmd = app.add_subcommand(
        "check-se-proofs", "certify strong equivalence from two programs and two proof scripts");
    auto files = std::make_shared<std::vector<std::string>>(4);
    auto opts = std::make_shared<kernel::CheckOptions>();
    cmd->add_option("program1", (*files)[0])->required();
    cmd->add_option("program2", (*files)[1])->required();
    cmd->add_option("proof-1to2", (*files)[2])->required();
    cmd->add_option("proof-2to1", (*files)[3])->required();
    cmd->add_flag("--int-mode", opts->int_mode, "disable the Hosoi schema and groups B-D");
    cmd->add_flag("--trust-arith", opts->allow_trusted_arith,
                  "accept lines marked groupD-trusted");
    cmd->callback([&exit_code, files, opts]() {
      kernel::EquivalenceVerdict v = kernel::check_equivalence_task(
          load_program((*files)[0]), load_program((*files)[1]),
          kernel::parse_script_file((*files)[2]), kernel::parse_script_file((*files)[3]), *opts);
      std::cout << v.summary() << "\n";
      exit_code = v.accepted ? 0 : 1;
    });
  }

  // ground
  {
    auto* cmd = app.add_subcommand("ground", "print the grounding of a program's sentences");
    auto file = std::make_shared<std::string>();
    auto dopts = std::make_shared<DomainOpts>();
    cmd->add_option("file", *file, "program file")->required();
    add_domain_opts(cmd, dopts.get());
    cmd->callback([&exit_code, file, dopts]() {
      mg::Program p = load_program(*file);
      ground::Domain d = resolve_domain(*dopts, {&p});
      std::cout << "% domain: " << d.str() << "\n";
      std::cout << ground::to_string(*ground::ground_all(nu::nu_program(p), d)) << "\n";
      exit_code = 0;
    });
  }

  // ht-models
  {
    auto* cmd = app.add_subcommand("ht-models", "enumerate HT-models of a grounded program");
    auto file = std::make_shared<std::string>();
    auto dopts = std::make_shared<DomainOpts>();
    auto eopts = std::make_shared<ground::EnumerationOptions>();
    cmd->add_option("file", *file, "program file")->required();
    add_domain_opts(cmd, dopts.get());
    cmd->add_option("--max-atoms", eopts->max_atoms, "enumeration cap (default 16)");
    cmd->callback([&exit_code, file, dopts, eopts]() {
      mg::Program p = load_program(*file);
      ground::Domain d = resolve_domain(*dopts, {&p});
      ground::GFPtr g = ground::ground_all(nu::nu_program(p), d);
      auto universe = ground::atom_universe({g.get()});
      std::cout << "% domain: " << d.str() << "\n";
      for (const auto& m : ground::ht_models(*g, universe, *eopts)) {
        std::cout << "here = {";
        bool first = true;
        for (const auto& a : m.here) {
          std::cout << (first ? "" : ", ") << a.str();
          first = false;
        }
        std::cout << "}, there = {";
        first = true;
        for (const auto& a : m.there) {
          std::cout << (first ? "" : ", ") << a.str();
          first = false;
        }
        std::cout << "}\n";
      }
      exit_code = 0;
    });
  }

  // stable-models
  {
    auto* cmd = app.add_subcommand("stable-models", "enumerate stable models over a domain");
    auto file = std::make_shared<std::string>();
    auto dopts = std::make_shared<DomainOpts>();
    auto eopts = std::make_shared<ground::EnumerationOptions>();
    cmd->add_option("file", *file, "program file")->required();
    add_domain_opts(cmd, dopts.get());
    cmd->add_option("--max-atoms", eopts->max_atoms, "enumeration cap (default 16)");
    cmd->callback([&exit_code, file, dopts, eopts]() {
      mg::Program p = load_program(*file);
      ground::Domain d = resolve_domain(*dopts, {&p});
      ground::GFPtr g = ground::ground_all(nu::nu_program(p), d);
      auto universe = ground::atom_universe({g.get()});
      std::cout << "% domain: " << d.str() << "\n";
      for (const auto& m : ground::stable_models(*g, universe, *eopts)) {
        std::cout << "{";
        bool first = true;
        for (const auto& a : m) {
          std::cout << (first ? "" : ", ") << a.str();
          first = false;
        }
        std::cout << "}\n";
      }
      exit_code = 0;
    });
  }

  // check-se
  {
    auto* cmd = app.add_subcommand(
        "check-se", "compare the HT-models of two programs over a finite domain");
    auto files = std::make_shared<std::vector<std::string>>(2);
    auto dopts = std::make_shared<DomainOpts>();
    auto eopts = std::make_shared<ground::EnumerationOptions>();
    auto json_out = std::make_shared<bool>(false);
    cmd->add_option("program1", (*files)[0])->required();
    cmd->add_option("program2", (*files)[1])->required();
    add_domain_opts(cmd, dopts.get());
    cmd->add_option("--max-atoms", eopts->max_atoms, "enumeration cap (default 16)");
    cmd->add_option("--workers", eopts->workers, "parallel enumeration workers");
    cmd->add_flag("--json", *json_out, "machine-readable report");
    cmd->callback([&exit_code, files, dopts, eopts, json_out]() {
      mg::Program p1 = load_program((*files)[0]);
      mg::Program p2 = load_program((*files)[1]);
      ground::Domain d = resolve_domain(*dopts, {&p1, &p2});
      ground::SEReport r = ground::analyze_se(p1, p2, d, *eopts);
      std::cout << (*json_out ? ground::report_json(r) + "\n" : ground::report_text(r));
      exit_code = r.verdict == ground::SEVerdict::EquivalentOverDomain ? 0 : 1;
    });
  }

  // demo
  {
    auto* cmd = app.add_subcommand("demo", "run the bundled showcase corpus");
    auto corpus = std::make_shared<std::string>("corpus");
    cmd->add_option("--corpus", *corpus, "corpus directory (default ./corpus)");
    cmd->callback([&exit_code, corpus]() { exit_code = hta::tools::run_demo(*corpus); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
