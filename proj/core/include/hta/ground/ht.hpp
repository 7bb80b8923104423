#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hta/ground/ground.hpp"

namespace hta::ground {

// Ordered pair of interpretations with here ⊆ there.
struct HTInterpretation {
  AtomSet here;
  AtomSet there;
};

// Validates here ⊆ there.
HTInterpretation make_ht(AtomSet here, AtomSet there);

bool sat_classical(const AtomSet& interp, const GroundFormula& f);

// Here-and-there satisfaction: an atom holds if it is in `here`; an
// implication holds if it holds at the pair and classically at `there`.
bool sat_ht(const HTInterpretation& ht, const GroundFormula& f);

// Recursive class of formulas whose classical tautologyhood already implies
// satisfaction by every HT-interpretation: conjunctions and disjunctions of
// negative formulas (vacuously including the truth constants) and
// implications with negative consequents.
bool is_negative(const GroundFormula& f);

struct EnumerationOptions {
  // Refuse enumerations over more atoms than this (3^n HT-pairs).
  size_t max_atoms = 16;
  unsigned workers = 1;
};

// Satisfaction by all 2^n interpretations over the atoms of `f`.
bool is_tautological(const GroundFormula& f, const EnumerationOptions& opts = {});

// Sorted atom universe of a family of formulas.
std::vector<GroundAtom> atom_universe(const std::vector<const GroundFormula*>& fs);

// HT-interpretations are enumerated as 3-valued vectors over the universe
// in lexicographic atom order, the first atom most significant, with digit
// order: not in there < in there only < in here.  All results and witness
// choices below follow this order, so they are deterministic.
HTInterpretation ht_at_index(uint64_t index, const std::vector<GroundAtom>& universe);

std::vector<HTInterpretation> ht_models(const GroundFormula& f,
                                        const std::vector<GroundAtom>& universe,
                                        const EnumerationOptions& opts = {});

// Index of the first HT-interpretation on which the two formulas disagree.
std::optional<uint64_t> first_ht_disagreement(const GroundFormula& a, const GroundFormula& b,
                                              const std::vector<GroundAtom>& universe,
                                              const EnumerationOptions& opts = {});

// All J ⊆ universe with ⟨J,J⟩ a model and no I ⊊ J with ⟨I,J⟩ a model.
std::vector<AtomSet> stable_models(const GroundFormula& f,
                                   const std::vector<GroundAtom>& universe,
                                   const EnumerationOptions& opts = {});

}  // namespace hta::ground
