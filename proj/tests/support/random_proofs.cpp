#include "random_proofs.hpp"

#include <vector>

namespace hta::test {

namespace {

using fo::FOFormulaPtr;
using kernel::AxiomKind;
using kernel::ProofLine;
using kernel::ProofScript;
using kernel::RuleName;
using kernel::Sequent;

FOFormulaPtr random_prop(std::mt19937& rng, int depth) {
  int pick = std::uniform_int_distribution<int>(0, depth == 0 ? 3 : 6)(rng);
  switch (pick) {
    case 0: return fo::pred("p");
    case 1: return fo::pred("q");
    case 2: return fo::pred("r");
    case 3: return fo::bottom();
    case 4: return fo::conj(random_prop(rng, depth - 1), random_prop(rng, depth - 1));
    case 5: return fo::disj(random_prop(rng, depth - 1), random_prop(rng, depth - 1));
    default: return fo::implies(random_prop(rng, depth - 1), random_prop(rng, depth - 1));
  }
}

ProofLine make_line(size_t number, Sequent sequent, kernel::Justification just) {
  ProofLine line;
  line.id = std::to_string(number);
  line.sequent = std::move(sequent);
  line.justification = std::move(just);
  return line;
}

kernel::Justification axiom_id() {
  kernel::Justification j;
  j.is_axiom = true;
  j.axiom = AxiomKind::Identity;
  j.spelled = "id";
  return j;
}

kernel::Justification rule(RuleName name, std::vector<std::string> premises) {
  kernel::Justification j;
  j.rule = name;
  j.premises = std::move(premises);
  j.spelled = "rule";
  return j;
}

}  // namespace

ProofScript random_accepted_script(std::mt19937& rng, int steps) {
  ProofScript script;
  auto pick_line = [&]() -> const ProofLine& {
    return script.lines[std::uniform_int_distribution<size_t>(0, script.lines.size() - 1)(rng)];
  };

  int seeds = std::uniform_int_distribution<int>(2, 4)(rng);
  for (int i = 0; i < seeds; ++i) {
    FOFormulaPtr f = random_prop(rng, 2);
    Sequent s;
    s.assumptions.insert(f);
    s.conclusion = f;
    script.lines.push_back(make_line(script.lines.size() + 1, std::move(s), axiom_id()));
  }

  for (int step = 0; step < steps; ++step) {
    int choice = std::uniform_int_distribution<int>(0, 7)(rng);
    const ProofLine& a = pick_line();
    Sequent s;
    switch (choice) {
      case 0: {  // and-i
        const ProofLine& b = pick_line();
        s.assumptions = a.sequent.assumptions.union_with(b.sequent.assumptions);
        s.conclusion = fo::conj(a.sequent.conclusion, b.sequent.conclusion);
        script.lines.push_back(make_line(script.lines.size() + 1, std::move(s),
                                         rule(RuleName::AndI, {a.id, b.id})));
        break;
      }
      case 1: {  // and-e on a conjunctive conclusion
        const auto* x = a.sequent.conclusion->get_if<fo::FOFormula::And>();
        if (!x) break;
        bool left = rng() % 2;
        s.assumptions = a.sequent.assumptions;
        s.conclusion = left ? x->lhs : x->rhs;
        script.lines.push_back(make_line(
            script.lines.size() + 1, std::move(s),
            rule(left ? RuleName::AndELeft : RuleName::AndERight, {a.id})));
        break;
      }
      case 2: {  // or-i
        bool left = rng() % 2;
        FOFormulaPtr other = random_prop(rng, 2);
        s.assumptions = a.sequent.assumptions;
        s.conclusion = left ? fo::disj(a.sequent.conclusion, other)
                            : fo::disj(other, a.sequent.conclusion);
        script.lines.push_back(
            make_line(script.lines.size() + 1, std::move(s),
                      rule(left ? RuleName::OrILeft : RuleName::OrIRight, {a.id})));
        break;
      }
      case 3: {  // imp-i discharging one assumption
        if (a.sequent.assumptions.empty()) break;
        const auto& items = a.sequent.assumptions.items();
        FOFormulaPtr f = items[std::uniform_int_distribution<size_t>(0, items.size() - 1)(rng)];
        s.assumptions = a.sequent.assumptions.without(*f);
        s.conclusion = fo::implies(f, a.sequent.conclusion);
        script.lines.push_back(
            make_line(script.lines.size() + 1, std::move(s), rule(RuleName::ImpI, {a.id})));
        break;
      }
      case 4: {  // imp-e with a matching major premise
        const ProofLine* major = nullptr;
        const ProofLine* minor = nullptr;
        for (const auto& cand : script.lines) {
          const auto* imp = cand.sequent.conclusion->get_if<fo::FOFormula::Implies>();
          if (!imp) continue;
          for (const auto& m : script.lines)
            if (fo::alpha_equal(*m.sequent.conclusion, *imp->lhs)) {
              major = &cand;
              minor = &m;
              break;
            }
          if (major) break;
        }
        if (!major) break;
        s.assumptions = minor->sequent.assumptions.union_with(major->sequent.assumptions);
        s.conclusion = major->sequent.conclusion->get_if<fo::FOFormula::Implies>()->rhs;
        script.lines.push_back(make_line(script.lines.size() + 1, std::move(s),
                                         rule(RuleName::ImpE, {minor->id, major->id})));
        break;
      }
      case 5: {  // contradiction
        if (!a.sequent.conclusion->get_if<fo::FOFormula::Bottom>()) break;
        s.assumptions = a.sequent.assumptions;
        s.conclusion = random_prop(rng, 2);
        script.lines.push_back(
            make_line(script.lines.size() + 1, std::move(s), rule(RuleName::Contradiction, {a.id})));
        break;
      }
      case 6: {  // weakening
        s.assumptions = a.sequent.assumptions;
        s.assumptions.insert(random_prop(rng, 1));
        s.conclusion = a.sequent.conclusion;
        script.lines.push_back(
            make_line(script.lines.size() + 1, std::move(s), rule(RuleName::Weakening, {a.id})));
        break;
      }
      default: {  // another identity axiom
        FOFormulaPtr f = random_prop(rng, 2);
        Sequent seq;
        seq.assumptions.insert(f);
        seq.conclusion = f;
        script.lines.push_back(make_line(script.lines.size() + 1, std::move(seq), axiom_id()));
        break;
      }
    }
  }
  return script;
}

ProofScript corrupt_script(std::mt19937& rng, const ProofScript& script) {
  ProofScript out = script;
  size_t victim = std::uniform_int_distribution<size_t>(0, out.lines.size() - 1)(rng);
  ProofLine& line = out.lines[victim];
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {  // change the rule or axiom
      if (line.justification.is_axiom && !line.sequent.assumptions.empty()) {
        line.justification = rule(RuleName::Contradiction, {});
        line.justification.premises = {"1"};
      } else {
        RuleName names[] = {RuleName::AndI,  RuleName::AndELeft, RuleName::OrILeft,
                            RuleName::ImpI,  RuleName::ImpE,     RuleName::Weakening,
                            RuleName::OrE};
        line.justification.is_axiom = false;
        line.justification.rule = names[std::uniform_int_distribution<int>(0, 6)(rng)];
      }
      break;
    }
    case 1: {  // retarget a premise
      if (line.justification.premises.empty()) {
        line.justification.premises = {"1"};
      } else {
        size_t k =
            std::uniform_int_distribution<size_t>(0, line.justification.premises.size() - 1)(rng);
        line.justification.premises[k] =
            std::to_string(std::uniform_int_distribution<size_t>(1, out.lines.size())(rng));
      }
      break;
    }
    case 2:  // replace the conclusion
      line.sequent.conclusion = random_prop(rng, 2);
      break;
    default: {  // disturb the assumption set
      if (line.sequent.assumptions.empty()) {
        line.sequent.assumptions.insert(random_prop(rng, 1));
      } else {
        line.sequent.assumptions =
            line.sequent.assumptions.without(*line.sequent.assumptions.items().front());
      }
      break;
    }
  }
  return out;
}

}  // namespace hta::test
