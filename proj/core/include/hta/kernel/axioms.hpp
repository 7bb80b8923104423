#pragma once

#include <vector>

#include "hta/kernel/proof.hpp"

namespace hta::kernel {

// F => F (modulo alpha) or => t = t.
bool is_axiom_identity(const Sequent& s);

// F | (F -> G) | not G, with the disjunction right-associated.
bool is_hosoi_instance(const fo::FOFormula& f);

// Membership in the fixed order-axiom catalog: decidability of the six
// comparisons, the partial-order laws for <=, totality, the
// interdefinability equivalences, and the #inf/#sup bounds.
bool is_group_b_axiom(const fo::FOFormula& f);

const std::vector<fo::FOFormulaPtr>& group_b_catalog();

// A true ground comparison c1 < c2 (etc.) between object constants, or the
// negation of a false one.
bool is_group_c_axiom(const fo::FOFormula& f);

// All atomic subformulas are comparisons between integer terms.
bool is_arithmetical(const fo::FOFormula& f);

enum class GroupDStatus { Yes, YesTrusted, No };

// Decides an arithmetical sentence: variable-free sentences are evaluated
// exactly; quantified ones are matched against the schema catalog
// (commutativity, associativity, distributivity, the +0/*1 identities,
// subtraction inverses, totality of <=, N < N+1, and sign totality).
// A sentence outside that fragment is YesTrusted when the line is marked
// trusted and trust is enabled, otherwise No.
GroupDStatus is_group_d_axiom(const fo::FOFormula& f, bool marked_trusted, bool trust_enabled);

const std::vector<fo::FOFormulaPtr>& group_d_catalog();

}  // namespace hta::kernel
