#pragma once

#include <optional>
#include <string>

#include "hta/ground/ht.hpp"

namespace hta::ground {

// An HT-interpretation separating the two grounded programs; it satisfies
// exactly one of them.
struct Witness {
  HTInterpretation ht;
  int satisfied_side;  // 1 or 2
};

struct SEResult {
  bool equivalent = false;
  std::optional<Witness> witness;
};

// Grounds both translations over the domain and compares their
// HT-model sets.  The returned witness, if any, is the first disagreement
// in enumeration order.
SEResult check_se(const mg::Program& p1, const mg::Program& p2, const Domain& d,
                  const EnumerationOptions& opts = {});

// Stable-model confirmation of a witness: builds the ground context
// determined by the witness (the facts of `here` plus, when here ⊊ there,
// all implications between atoms of there \ here) and checks that the
// stable models of the two grounded programs extended with that context
// differ.
bool validate_witness(const GFPtr& g1, const GFPtr& g2, const Witness& w,
                      const std::vector<GroundAtom>& universe,
                      const EnumerationOptions& opts = {});

enum class SEVerdict {
  EquivalentOverDomain,   // same HT-models over the domain
  NotEquivalent,          // witness found and confirmed by stable models
  DiffersInconclusive,    // witness found but confirmation failed
};

struct SEReport {
  SEVerdict verdict;
  Domain domain;
  std::optional<Witness> witness;
  bool witness_validated = false;
};

// check_se followed by witness validation.
SEReport analyze_se(const mg::Program& p1, const mg::Program& p2, const Domain& d,
                    const EnumerationOptions& opts = {});

std::string report_text(const SEReport& r);
std::string report_json(const SEReport& r);

}  // namespace hta::ground
