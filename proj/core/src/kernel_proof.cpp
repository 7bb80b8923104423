#include "hta/kernel/proof.hpp"

namespace hta::kernel {

AssumptionSet::AssumptionSet(std::vector<fo::FOFormulaPtr> formulas) {
  for (auto& f : formulas) insert(std::move(f));
}

void AssumptionSet::insert(fo::FOFormulaPtr f) {
  if (!contains(*f)) items_.push_back(std::move(f));
}

bool AssumptionSet::contains(const fo::FOFormula& f) const {
  for (const auto& g : items_)
    if (fo::alpha_equal(*g, f)) return true;
  return false;
}

AssumptionSet AssumptionSet::union_with(const AssumptionSet& other) const {
  AssumptionSet out = *this;
  for (const auto& g : other.items_) out.insert(g);
  return out;
}

AssumptionSet AssumptionSet::without(const fo::FOFormula& f) const {
  AssumptionSet out;
  for (const auto& g : items_)
    if (!fo::alpha_equal(*g, f)) out.items_.push_back(g);
  return out;
}

bool AssumptionSet::subset_of(const AssumptionSet& other) const {
  for (const auto& g : items_)
    if (!other.contains(*g)) return false;
  return true;
}

bool AssumptionSet::equals(const AssumptionSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return a.assumptions.equals(b.assumptions) && fo::alpha_equal(*a.conclusion, *b.conclusion);
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.assumptions.items().size(); ++i) {
    if (i > 0) out += ", ";
    out += fo::to_string(*s.assumptions.items()[i]);
  }
  out += out.empty() ? "=> " : " => ";
  out += fo::to_string(*s.conclusion);
  return out;
}

std::string Verdict::summary() const {
  if (accepted) {
    std::string s = "accepted (" + std::to_string(lines.size()) + " lines)";
    if (uses_trusted_arithmetic) s += ", uses trusted arithmetic";
    return s;
  }
  if (first_failure)
    return "rejected at line " + lines[*first_failure].id + ": " +
           lines[*first_failure].message;
  return "rejected: " + failure_reason;
}

}  // namespace hta::kernel
