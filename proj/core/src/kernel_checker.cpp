#include "hta/kernel/checker.hpp"

#include <map>

#include "hta/error.hpp"
#include "hta/fo/ops.hpp"
#include "hta/kernel/axioms.hpp"

namespace hta::kernel {

namespace {

using fo::FOFormula;
using fo::FOFormulaPtr;
using fo::FOTermPtr;
using fo::TypedVar;

struct LineFailure {
  std::string message;
};

class Checker {
 public:
  Checker(const ProofScript& script, const CheckOptions& opts) : script_(script), opts_(opts) {}

  Verdict run() {
    Verdict verdict;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < script_.lines.size(); ++i) {
      const ProofLine& line = script_.lines[i];
      LineStatus status;
      status.id = line.id;
      try {
        if (index.count(line.id)) throw LineFailure{"duplicate line id"};
        check_line(line, index);
        status.ok = true;
      } catch (const LineFailure& f) {
        status.message = f.message;
      }
      index[line.id] = i;
      if (!status.ok && !verdict.first_failure) verdict.first_failure = i;
      verdict.lines.push_back(std::move(status));
    }
    verdict.uses_trusted_arithmetic = uses_trusted_;
    verdict.accepted = !verdict.first_failure.has_value() && !script_.lines.empty();
    if (script_.lines.empty()) verdict.failure_reason = "script has no lines";
    if (verdict.accepted && script_.goal) {
      if (!sequent_equal(script_.lines.back().sequent, *script_.goal)) {
        verdict.accepted = false;
        verdict.goal_ok = false;
        verdict.failure_reason = "last line `" + to_string(script_.lines.back().sequent) +
                                 "` does not match the goal `" + to_string(*script_.goal) + "`";
      }
    }
    return verdict;
  }

 private:
  [[noreturn]] static void fail(const std::string& message) { throw LineFailure{message}; }

  const Sequent& premise(const ProofLine& line, const std::map<std::string, size_t>& index,
                         size_t k) {
    const auto& ids = line.justification.premises;
    if (k >= ids.size()) fail("missing premise");
    auto it = index.find(ids[k]);
    if (it == index.end()) fail("premise `" + ids[k] + "` does not name an earlier line");
    return script_.lines[it->second].sequent;
  }

  static void need_premises(const ProofLine& line, size_t n) {
    if (line.justification.premises.size() != n)
      fail("rule takes " + std::to_string(n) + " premise(s), got " +
           std::to_string(line.justification.premises.size()));
  }

  void check_line(const ProofLine& line, const std::map<std::string, size_t>& index) {
    if (!line.justification.recognized)
      fail("unknown rule or axiom `" + line.justification.spelled + "`");
    if (line.justification.is_axiom) {
      if (!line.justification.premises.empty()) fail("an axiom takes no premises");
      check_axiom(line);
      return;
    }
    check_rule(line, index);
  }

  void check_axiom(const ProofLine& line) {
    const Sequent& s = line.sequent;
    switch (line.justification.axiom) {
      case AxiomKind::Identity:
        if (s.assumptions.size() != 1 ||
            !fo::alpha_equal(*s.assumptions.items().front(), *s.conclusion))
          fail("not an instance of F => F");
        return;
      case AxiomKind::EqReflexivity: {
        if (!s.assumptions.empty()) fail("the reflexivity axiom has no assumptions");
        const auto* c = s.conclusion->get_if<FOFormula::Cmp>();
        if (!c || c->rel != Rel::Eq || !fo::equal(*c->left, *c->right))
          fail("not an instance of t = t");
        return;
      }
      case AxiomKind::Hosoi:
        require_extended("the Hosoi schema");
        require_no_assumptions(s);
        if (!is_hosoi_instance(*s.conclusion))
          fail("not an instance of F | (F -> G) | not G (right-associated)");
        return;
      case AxiomKind::GroupB:
        require_extended("group B");
        require_no_assumptions(s);
        if (!is_group_b_axiom(*s.conclusion)) fail("not in the group B catalog");
        return;
      case AxiomKind::GroupC:
        require_extended("group C");
        require_no_assumptions(s);
        if (!is_group_c_axiom(*s.conclusion))
          fail("not a true ground comparison (or negation of a false one)");
        return;
      case AxiomKind::GroupD:
      case AxiomKind::GroupDTrusted: {
        require_extended("group D");
        require_no_assumptions(s);
        bool marked = line.justification.axiom == AxiomKind::GroupDTrusted;
        switch (is_group_d_axiom(*s.conclusion, marked, opts_.allow_trusted_arith)) {
          case GroupDStatus::Yes:
            return;
          case GroupDStatus::YesTrusted:
            uses_trusted_ = true;
            return;
          case GroupDStatus::No:
            if (marked && !opts_.allow_trusted_arith)
              fail("trusted arithmetic is disabled; rerun with trust enabled");
            if (!is_arithmetical(*s.conclusion))
              fail("not an arithmetical formula (atomic subformulas must be integer comparisons)");
            if (!fo::is_closed(*s.conclusion)) fail("group D axioms must be closed");
            fail("not decided by the built-in arithmetic procedure; mark the line groupD-trusted");
        }
        return;
      }
    }
  }

  void require_extended(const std::string& what) {
    if (opts_.int_mode) fail(what + " is not available in Int mode");
  }

  static void require_no_assumptions(const Sequent& s) {
    if (!s.assumptions.empty()) fail("axiom sequents have no assumptions");
  }

  void check_rule(const ProofLine& line, const std::map<std::string, size_t>& index) {
    const Sequent& s = line.sequent;
    const FOFormulaPtr& c = s.conclusion;
    switch (line.justification.rule) {
      case RuleName::AndI: {
        need_premises(line, 2);
        const Sequent& s1 = premise(line, index, 0);
        const Sequent& s2 = premise(line, index, 1);
        const auto* x = c->get_if<FOFormula::And>();
        if (!x) fail("conclusion is not a conjunction");
        if (!fo::alpha_equal(*x->lhs, *s1.conclusion))
          fail("left conjunct does not match the first premise");
        if (!fo::alpha_equal(*x->rhs, *s2.conclusion))
          fail("right conjunct does not match the second premise");
        require_assumptions(s, s1.assumptions.union_with(s2.assumptions));
        return;
      }
      case RuleName::AndELeft:
      case RuleName::AndERight: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        const auto* x = s1.conclusion->get_if<FOFormula::And>();
        if (!x) fail("premise is not a conjunction");
        const FOFormulaPtr& kept =
            line.justification.rule == RuleName::AndELeft ? x->lhs : x->rhs;
        if (!fo::alpha_equal(*c, *kept)) fail("conclusion does not match the kept conjunct");
        require_assumptions(s, s1.assumptions);
        return;
      }
      case RuleName::OrILeft:
      case RuleName::OrIRight: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        const auto* x = c->get_if<FOFormula::Or>();
        if (!x) fail("conclusion is not a disjunction");
        const FOFormulaPtr& from =
            line.justification.rule == RuleName::OrILeft ? x->lhs : x->rhs;
        if (!fo::alpha_equal(*from, *s1.conclusion))
          fail("the introduced disjunction does not contain the premise on the stated side");
        require_assumptions(s, s1.assumptions);
        return;
      }
      case RuleName::OrE: {
        need_premises(line, 3);
        const Sequent& s1 = premise(line, index, 0);
        const Sequent& s2 = premise(line, index, 1);
        const Sequent& s3 = premise(line, index, 2);
        const auto* x = s1.conclusion->get_if<FOFormula::Or>();
        if (!x) fail("first premise is not a disjunction");
        if (!s2.assumptions.contains(*x->lhs))
          fail("second premise does not assume the left disjunct");
        if (!s3.assumptions.contains(*x->rhs))
          fail("third premise does not assume the right disjunct");
        if (!fo::alpha_equal(*s2.conclusion, *c) || !fo::alpha_equal(*s3.conclusion, *c))
          fail("case conclusions do not match");
        require_assumptions(s, s1.assumptions.union_with(s2.assumptions.without(*x->lhs))
                                   .union_with(s3.assumptions.without(*x->rhs)));
        return;
      }
      case RuleName::ImpI: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        const auto* x = c->get_if<FOFormula::Implies>();
        if (!x) fail("conclusion is not an implication");
        if (!fo::alpha_equal(*x->rhs, *s1.conclusion))
          fail("consequent does not match the premise");
        AssumptionSet expected = s.assumptions;
        expected.insert(x->lhs);
        if (!s1.assumptions.equals(expected))
          fail("premise assumptions must be the conclusion's plus the discharged antecedent");
        return;
      }
      case RuleName::ImpE: {
        need_premises(line, 2);
        const Sequent& s1 = premise(line, index, 0);  // minor: Gamma => F
        const Sequent& s2 = premise(line, index, 1);  // major: Delta => F -> G
        const auto* x = s2.conclusion->get_if<FOFormula::Implies>();
        if (!x) fail("second premise is not an implication");
        if (!fo::alpha_equal(*x->lhs, *s1.conclusion))
          fail("antecedent does not match the first premise");
        if (!fo::alpha_equal(*x->rhs, *c)) fail("conclusion does not match the consequent");
        require_assumptions(s, s1.assumptions.union_with(s2.assumptions));
        return;
      }
      case RuleName::Contradiction: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        if (!s1.conclusion->get_if<FOFormula::Bottom>()) fail("premise does not conclude #false");
        require_assumptions(s, s1.assumptions);
        return;
      }
      case RuleName::Weakening: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        if (!fo::alpha_equal(*c, *s1.conclusion)) fail("conclusion changed under weakening");
        if (!s1.assumptions.subset_of(s.assumptions))
          fail("weakening may only add assumptions");
        return;
      }
      case RuleName::ForallI:
        check_forall_i(line, index);
        return;
      case RuleName::ForallE: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        const auto* x = s1.conclusion->get_if<FOFormula::Forall>();
        if (!x) fail("premise is not universally quantified");
        const FOTermPtr& t = require_term_hint(line);
        if (!fo::is_substitutable(*x->body, x->var, *t))
          fail(substitution_problem(*x->body, x->var, *t));
        if (!fo::alpha_equal(*c, *fo::substitute(x->body, x->var, t)))
          fail("conclusion is not the premise instantiated at `" + fo::to_string(*t) + "`");
        require_assumptions(s, s1.assumptions);
        return;
      }
      case RuleName::ExistsI: {
        need_premises(line, 1);
        const Sequent& s1 = premise(line, index, 0);
        const auto* x = c->get_if<FOFormula::Exists>();
        if (!x) fail("conclusion is not existentially quantified");
        const FOTermPtr& t = require_term_hint(line);
        if (!fo::is_substitutable(*x->body, x->var, *t))
          fail(substitution_problem(*x->body, x->var, *t));
        if (!fo::alpha_equal(*s1.conclusion, *fo::substitute(x->body, x->var, t)))
          fail("premise is not the conclusion's body at witness `" + fo::to_string(*t) + "`");
        require_assumptions(s, s1.assumptions);
        return;
      }
      case RuleName::ExistsE:
        check_exists_e(line, index);
        return;
      case RuleName::EqForward:
      case RuleName::EqBackward:
        check_eq(line, index);
        return;
    }
  }

  void check_forall_i(const ProofLine& line, const std::map<std::string, size_t>& index) {
    need_premises(line, 1);
    const Sequent& s = line.sequent;
    const Sequent& s1 = premise(line, index, 0);
    const auto* x = s.conclusion->get_if<FOFormula::Forall>();
    if (!x) fail("conclusion is not universally quantified");
    require_assumptions(s, s1.assumptions);

    // Vacuous generalization: the bound variable does not occur in the
    // body, so a fresh eigenvariable satisfies the side condition.
    if (!fo::free_vars(*x->body).count(x->var) &&
        fo::alpha_equal(*x->body, *s1.conclusion))
      return;

    std::vector<TypedVar> candidates;
    if (line.justification.hints.var) {
      candidates.push_back(*line.justification.hints.var);
    } else {
      for (const TypedVar& v : fo::free_vars(*s1.conclusion))
        if (v.sort == x->var.sort) candidates.push_back(v);
    }
    bool shape_ok = false;
    for (const TypedVar& v : candidates) {
      if (!fo::alpha_equal(*fo::forall(v, s1.conclusion), *s.conclusion)) continue;
      shape_ok = true;
      bool free_in_assumptions = false;
      for (const auto& g : s1.assumptions.items())
        if (fo::free_vars(*g).count(v)) {
          free_in_assumptions = true;
          break;
        }
      if (!free_in_assumptions) return;  // accepted
    }
    if (shape_ok)
      fail("eigenvariable is free in the assumptions");
    fail("conclusion is not a universal generalization of the premise");
  }

  void check_exists_e(const ProofLine& line, const std::map<std::string, size_t>& index) {
    need_premises(line, 2);
    const Sequent& s = line.sequent;
    const Sequent& s1 = premise(line, index, 0);
    const Sequent& s2 = premise(line, index, 1);
    const auto* x = s1.conclusion->get_if<FOFormula::Exists>();
    if (!x) fail("first premise is not existentially quantified");
    if (!fo::alpha_equal(*s2.conclusion, *s.conclusion))
      fail("conclusion does not match the second premise");

    std::string shape_failure = "no assumption of the second premise matches the witness body";
    for (const auto& assumption : s2.assumptions.items()) {
      // Vacuous witness: the bound variable does not occur in the body and
      // the assumption equals it outright.
      std::vector<std::optional<TypedVar>> candidates;
      if (!fo::free_vars(*x->body).count(x->var) &&
          fo::alpha_equal(*assumption, *x->body))
        candidates.push_back(std::nullopt);
      for (const TypedVar& v : fo::free_vars(*assumption))
        if (v.sort == x->var.sort &&
            fo::alpha_equal(*fo::exists(v, assumption), *s1.conclusion))
          candidates.emplace_back(v);
      if (candidates.empty()) continue;

      for (const auto& candidate : candidates) {
        if (candidate) {
          bool free_elsewhere = fo::free_vars(*s2.conclusion).count(*candidate) > 0;
          for (const auto& g : s2.assumptions.without(*assumption).items())
            if (fo::free_vars(*g).count(*candidate)) free_elsewhere = true;
          if (free_elsewhere) {
            shape_failure = "eigenvariable is free in the other assumptions or the conclusion";
            continue;
          }
        }
        if (s.assumptions.equals(
                s1.assumptions.union_with(s2.assumptions.without(*assumption))))
          return;  // accepted
        shape_failure = "assumption set does not match the rule";
      }
    }
    fail(shape_failure);
  }

  void check_eq(const ProofLine& line, const std::map<std::string, size_t>& index) {
    need_premises(line, 2);
    const Sequent& s = line.sequent;
    const Sequent& s1 = premise(line, index, 0);  // Gamma => t1 = t2
    const Sequent& s2 = premise(line, index, 1);  // Delta => F with t1 (forward) / t2 (backward)
    const auto* eq = s1.conclusion->get_if<FOFormula::Cmp>();
    if (!eq || eq->rel != Rel::Eq) fail("first premise is not an equality");
    if (!line.justification.hints.template_formula || !line.justification.hints.var)
      fail("eq needs hints: the template formula and the substituted variable");
    const FOFormulaPtr& tmpl = line.justification.hints.template_formula;
    const TypedVar& v = *line.justification.hints.var;
    if (!fo::is_substitutable(*tmpl, v, *eq->left))
      fail(substitution_problem(*tmpl, v, *eq->left));
    if (!fo::is_substitutable(*tmpl, v, *eq->right))
      fail(substitution_problem(*tmpl, v, *eq->right));
    FOFormulaPtr with_t1 = fo::substitute(tmpl, v, eq->left);
    FOFormulaPtr with_t2 = fo::substitute(tmpl, v, eq->right);
    bool forward = line.justification.rule == RuleName::EqForward;
    const FOFormulaPtr& expect_premise = forward ? with_t1 : with_t2;
    const FOFormulaPtr& expect_conclusion = forward ? with_t2 : with_t1;
    if (!fo::alpha_equal(*s2.conclusion, *expect_premise))
      fail("second premise does not match the template at the replaced side");
    if (!fo::alpha_equal(*s.conclusion, *expect_conclusion))
      fail("conclusion does not match the template at the substituted side");
    require_assumptions(s, s1.assumptions.union_with(s2.assumptions));
  }

  static std::string substitution_problem(const FOFormula& f, const TypedVar& v,
                                          const fo::FOTerm& t) {
    if (v.sort == fo::Sort::Integer && fo::sort_of(t) != fo::Sort::Integer)
      return "term `" + fo::to_string(t) + "` is not of sort int, required for `" + v.name + "`";
    (void)f;
    return "term `" + fo::to_string(t) + "` is not substitutable for `" + v.name +
           "` (variable capture)";
  }

  const FOTermPtr& require_term_hint(const ProofLine& line) {
    if (!line.justification.hints.term) fail("rule needs a term hint");
    return line.justification.hints.term;
  }

  static void require_assumptions(const Sequent& s, const AssumptionSet& expected) {
    if (!s.assumptions.equals(expected)) fail("assumption set does not match the rule");
  }

  const ProofScript& script_;
  const CheckOptions& opts_;
  bool uses_trusted_ = false;
};

}  // namespace

Verdict check_proof(const ProofScript& script, const CheckOptions& opts) {
  return Checker(script, opts).run();
}

}  // namespace hta::kernel
