#include "hta/ground/se.hpp"

#include <nlohmann/json.hpp>

#include "hta/nu/translate.hpp"

namespace hta::ground {

namespace {

std::pair<GFPtr, GFPtr> ground_pair(const mg::Program& p1, const mg::Program& p2,
                                    const Domain& d) {
  return {ground_all(nu::nu_program(p1), d), ground_all(nu::nu_program(p2), d)};
}

}  // namespace

SEResult check_se(const mg::Program& p1, const mg::Program& p2, const Domain& d,
                  const EnumerationOptions& opts) {
  auto [g1, g2] = ground_pair(p1, p2, d);
  std::vector<GroundAtom> universe = atom_universe({g1.get(), g2.get()});
  std::optional<uint64_t> k = first_ht_disagreement(*g1, *g2, universe, opts);
  if (!k) return {true, std::nullopt};
  HTInterpretation ht = ht_at_index(*k, universe);
  int side = sat_ht(ht, *g1) ? 1 : 2;
  return {false, Witness{std::move(ht), side}};
}

bool validate_witness(const GFPtr& g1, const GFPtr& g2, const Witness& w,
                      const std::vector<GroundAtom>& universe,
                      const EnumerationOptions& opts) {
  std::vector<GFPtr> context;
  if (sat_classical(w.ht.there, *g1) != sat_classical(w.ht.there, *g2)) {
    // `there` already separates the programs classically; adding it as
    // facts makes it a stable model of exactly one side.
    for (const auto& a : w.ht.there) context.push_back(gatom(a));
  } else {
    // Both programs hold at the total level, so the difference lies at
    // `here`: the facts of `here` plus all implications between the
    // remaining atoms confine the reducts to `here` and `there`.
    for (const auto& a : w.ht.here) context.push_back(gatom(a));
    for (const auto& a : w.ht.there)
      for (const auto& b : w.ht.there) {
        if (a == b || w.ht.here.count(a) || w.ht.here.count(b)) continue;
        context.push_back(gimplies(gatom(a), gatom(b)));
      }
  }
  GFPtr omega = gand(std::move(context));
  std::vector<AtomSet> s1 = stable_models(*gand({g1, omega}), universe, opts);
  std::vector<AtomSet> s2 = stable_models(*gand({g2, omega}), universe, opts);
  return s1 != s2;
}

SEReport analyze_se(const mg::Program& p1, const mg::Program& p2, const Domain& d,
                    const EnumerationOptions& opts) {
  SEReport report;
  report.domain = d;
  SEResult result = check_se(p1, p2, d, opts);
  if (result.equivalent) {
    report.verdict = SEVerdict::EquivalentOverDomain;
    return report;
  }
  report.witness = result.witness;
  auto [g1, g2] = ground_pair(p1, p2, d);
  std::vector<GroundAtom> universe = atom_universe({g1.get(), g2.get()});
  report.witness_validated = validate_witness(g1, g2, *report.witness, universe, opts);
  report.verdict =
      report.witness_validated ? SEVerdict::NotEquivalent : SEVerdict::DiffersInconclusive;
  return report;
}

namespace {

std::string set_str(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ", ";
    out += a.str();
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string report_text(const SEReport& r) {
  std::string out = "domain: " + r.domain.str() + "\n";
  switch (r.verdict) {
    case SEVerdict::EquivalentOverDomain:
      out += "verdict: equivalent over this domain\n";
      break;
    case SEVerdict::NotEquivalent:
      out += "verdict: NOT strongly equivalent\n";
      break;
    case SEVerdict::DiffersInconclusive:
      out += "verdict: differs over this domain (inconclusive for the full domain)\n";
      break;
  }
  if (r.witness) {
    out += "witness: here = " + set_str(r.witness->ht.here) +
           ", there = " + set_str(r.witness->ht.there) + "\n";
    out += "witness satisfies program " + std::to_string(r.witness->satisfied_side) + " only\n";
    out += std::string("stable-model confirmation: ") +
           (r.witness_validated ? "passed" : "failed") + "\n";
  }
  return out;
}

std::string report_json(const SEReport& r) {
  nlohmann::json j;
  switch (r.verdict) {
    case SEVerdict::EquivalentOverDomain: j["verdict"] = "equivalent-over-domain"; break;
    case SEVerdict::NotEquivalent: j["verdict"] = "not-strongly-equivalent"; break;
    case SEVerdict::DiffersInconclusive: j["verdict"] = "differs-inconclusive"; break;
  }
  j["domain"]["ints"] = {{"lo", r.domain.lo.str()}, {"hi", r.domain.hi.str()}};
  j["domain"]["consts"] = r.domain.symbolic_consts;
  j["domain"]["inf_sup"] = r.domain.include_inf_sup;
  if (r.witness) {
    auto atoms = [](const AtomSet& s) {
      std::vector<std::string> v;
      for (const auto& a : s) v.push_back(a.str());
      return v;
    };
    j["witness"]["here"] = atoms(r.witness->ht.here);
    j["witness"]["there"] = atoms(r.witness->ht.there);
    j["witness"]["satisfies"] = r.witness->satisfied_side;
    j["witness"]["validated"] = r.witness_validated;
  }
  return j.dump(2);
}

}  // namespace hta::ground
