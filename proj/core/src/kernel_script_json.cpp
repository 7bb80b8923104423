#include "hta/kernel/script_json.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "hta/error.hpp"
#include "hta/fo/text.hpp"

namespace hta::kernel {

namespace {

using nlohmann::json;

fo::Sort parse_sort(const std::string& s) {
  if (s == "int" || s == "integer") return fo::Sort::Integer;
  if (s == "generic") return fo::Sort::Generic;
  throw ScriptError("unknown sort `" + s + "` (use \"int\" or \"generic\")");
}

const std::map<std::string, RuleName>& rule_names() {
  static const std::map<std::string, RuleName> names = {
      {"and-i", RuleName::AndI},
      {"and-e-left", RuleName::AndELeft},
      {"and-e-right", RuleName::AndERight},
      {"or-i-left", RuleName::OrILeft},
      {"or-i-right", RuleName::OrIRight},
      {"or-e", RuleName::OrE},
      {"imp-i", RuleName::ImpI},
      {"imp-e", RuleName::ImpE},
      {"contradiction", RuleName::Contradiction},
      {"c", RuleName::Contradiction},
      {"weakening", RuleName::Weakening},
      {"w", RuleName::Weakening},
      {"forall-i", RuleName::ForallI},
      {"forall-e", RuleName::ForallE},
      {"exists-i", RuleName::ExistsI},
      {"exists-e", RuleName::ExistsE},
      {"eq-forward", RuleName::EqForward},
      {"eq-backward", RuleName::EqBackward},
  };
  return names;
}

const std::map<std::string, AxiomKind>& axiom_names() {
  static const std::map<std::string, AxiomKind> names = {
      {"id", AxiomKind::Identity},
      {"eq-refl", AxiomKind::EqReflexivity},
      {"hosoi", AxiomKind::Hosoi},
      {"groupB", AxiomKind::GroupB},
      {"groupC", AxiomKind::GroupC},
      {"groupD", AxiomKind::GroupD},
      {"groupD-trusted", AxiomKind::GroupDTrusted},
  };
  return names;
}

fo::FOFormulaPtr parse_formula_checked(const std::string& text, const fo::Declarations& decls,
                                       const std::string& context) {
  try {
    return fo::parse_formula(text, decls);
  } catch (const ParseError& e) {
    throw ScriptError(context + ": cannot parse formula `" + text + "`: " + e.what());
  }
}

Sequent parse_sequent(const json& j, const fo::Declarations& decls, const std::string& context) {
  if (!j.contains("formula") || !j.at("formula").is_string())
    throw ScriptError(context + ": missing string field \"formula\"");
  std::vector<fo::FOFormulaPtr> assumptions;
  if (j.contains("assumptions")) {
    if (!j.at("assumptions").is_array())
      throw ScriptError(context + ": \"assumptions\" must be an array");
    for (const auto& a : j.at("assumptions")) {
      if (!a.is_string()) throw ScriptError(context + ": assumptions must be strings");
      assumptions.push_back(
          parse_formula_checked(a.get<std::string>(), decls, context));
    }
  }
  Sequent s;
  s.assumptions = AssumptionSet(std::move(assumptions));
  s.conclusion = parse_formula_checked(j.at("formula").get<std::string>(), decls, context);
  return s;
}

}  // namespace

ProofScript parse_script_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ScriptError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScriptError("script must be a JSON object");

  ProofScript script;
  fo::Declarations decls;
  if (j.contains("declarations")) {
    if (!j.at("declarations").is_array()) throw ScriptError("\"declarations\" must be an array");
    for (const auto& d : j.at("declarations")) {
      if (!d.is_object() || !d.contains("name") || !d.contains("sort"))
        throw ScriptError("each declaration needs \"name\" and \"sort\"");
      std::string name = d.at("name").get<std::string>();
      fo::Sort sort = parse_sort(d.at("sort").get<std::string>());
      script.declarations.push_back({name, sort});
      decls[name] = sort;
    }
  }

  if (!j.contains("lines") || !j.at("lines").is_array())
    throw ScriptError("script needs a \"lines\" array");
  for (const auto& l : j.at("lines")) {
    if (!l.is_object()) throw ScriptError("each line must be an object");
    ProofLine line;
    if (!l.contains("id")) throw ScriptError("each line needs an \"id\"");
    line.id = l.at("id").is_string() ? l.at("id").get<std::string>()
                                     : std::to_string(l.at("id").get<long long>());
    std::string context = "line " + line.id;
    line.sequent = parse_sequent(l, decls, context);

    if (!l.contains("rule") || !l.at("rule").is_string())
      throw ScriptError(context + ": missing string field \"rule\"");
    std::string rule = l.at("rule").get<std::string>();
    line.justification.spelled = rule;
    if (auto it = axiom_names().find(rule); it != axiom_names().end()) {
      line.justification.is_axiom = true;
      line.justification.axiom = it->second;
    } else if (auto it2 = rule_names().find(rule); it2 != rule_names().end()) {
      line.justification.rule = it2->second;
    } else {
      line.justification.recognized = false;
    }

    if (l.contains("premises")) {
      if (!l.at("premises").is_array()) throw ScriptError(context + ": \"premises\" must be an array");
      for (const auto& p : l.at("premises"))
        line.justification.premises.push_back(
            p.is_string() ? p.get<std::string>() : std::to_string(p.get<long long>()));
    }

    if (l.contains("hints")) {
      const json& h = l.at("hints");
      if (!h.is_object()) throw ScriptError(context + ": \"hints\" must be an object");
      if (h.contains("term")) {
        try {
          line.justification.hints.term =
              fo::parse_fo_term(h.at("term").get<std::string>(), decls);
        } catch (const ParseError& e) {
          throw ScriptError(context + ": bad hint term: " + e.what());
        }
      }
      if (h.contains("var")) {
        std::string name = h.at("var").get<std::string>();
        fo::Sort sort = fo::Sort::Generic;
        if (auto it = decls.find(name); it != decls.end()) sort = it->second;
        line.justification.hints.var = fo::TypedVar{name, sort};
      }
      if (h.contains("template"))
        line.justification.hints.template_formula = parse_formula_checked(
            h.at("template").get<std::string>(), decls, context + " (hint template)");
    }
    script.lines.push_back(std::move(line));
  }

  if (j.contains("goal")) {
    if (!j.at("goal").is_object()) throw ScriptError("\"goal\" must be an object");
    script.goal = parse_sequent(j.at("goal"), decls, "goal");
  }
  return script;
}

ProofScript parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScriptError("cannot open `" + path + "`");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_script_text(text);
}

}  // namespace hta::kernel
