#include "hta/ground/ht.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "hta/error.hpp"

namespace hta::ground {

HTInterpretation make_ht(AtomSet here, AtomSet there) {
  for (const auto& a : here)
    if (!there.count(a))
      throw Error("not an HT-interpretation: `" + a.str() + "` is in here but not in there");
  return {std::move(here), std::move(there)};
}

bool sat_classical(const AtomSet& interp, const GroundFormula& f) {
  if (const auto* a = f.get_if<GroundFormula::Atom>()) return interp.count(a->atom) > 0;
  if (f.get_if<GroundFormula::True>()) return true;
  if (f.get_if<GroundFormula::False>()) return false;
  if (const auto* x = f.get_if<GroundFormula::And>()) {
    for (const auto& m : x->members)
      if (!sat_classical(interp, *m)) return false;
    return true;
  }
  if (const auto* x = f.get_if<GroundFormula::Or>()) {
    for (const auto& m : x->members)
      if (sat_classical(interp, *m)) return true;
    return false;
  }
  const auto* x = f.get_if<GroundFormula::Implies>();
  return !sat_classical(interp, *x->lhs) || sat_classical(interp, *x->rhs);
}

bool sat_ht(const HTInterpretation& ht, const GroundFormula& f) {
  if (const auto* a = f.get_if<GroundFormula::Atom>()) return ht.here.count(a->atom) > 0;
  if (f.get_if<GroundFormula::True>()) return true;
  if (f.get_if<GroundFormula::False>()) return false;
  if (const auto* x = f.get_if<GroundFormula::And>()) {
    for (const auto& m : x->members)
      if (!sat_ht(ht, *m)) return false;
    return true;
  }
  if (const auto* x = f.get_if<GroundFormula::Or>()) {
    for (const auto& m : x->members)
      if (sat_ht(ht, *m)) return true;
    return false;
  }
  const auto* x = f.get_if<GroundFormula::Implies>();
  if (sat_ht(ht, *x->lhs) && !sat_ht(ht, *x->rhs)) return false;
  return sat_classical(ht.there, f);
}

bool is_negative(const GroundFormula& f) {
  if (f.get_if<GroundFormula::Atom>()) return false;
  if (f.get_if<GroundFormula::True>() || f.get_if<GroundFormula::False>()) return true;
  if (const auto* x = f.get_if<GroundFormula::And>()) {
    for (const auto& m : x->members)
      if (!is_negative(*m)) return false;
    return true;
  }
  if (const auto* x = f.get_if<GroundFormula::Or>()) {
    for (const auto& m : x->members)
      if (!is_negative(*m)) return false;
    return true;
  }
  return is_negative(*f.get_if<GroundFormula::Implies>()->rhs);
}

namespace {

// Flat index-based copy for mask evaluation during enumeration.
class Compiled {
 public:
  Compiled(const GroundFormula& f, const std::vector<GroundAtom>& universe) {
    std::map<GroundAtom, int> index;
    for (size_t i = 0; i < universe.size(); ++i) index[universe[i]] = static_cast<int>(i);
    root_ = build(f, index);
  }

  bool classical(uint64_t j) const { return eval_classical(root_, j); }
  bool ht(uint64_t i, uint64_t j) const { return eval_ht(root_, i, j); }

 private:
  enum class Kind { Atom, True, False, And, Or, Implies };
  struct Node {
    Kind kind;
    int atom = -1;
    std::vector<int> children;
  };

  int build(const GroundFormula& f, const std::map<GroundAtom, int>& index) {
    Node node;
    if (const auto* a = f.get_if<GroundFormula::Atom>()) {
      node.kind = Kind::Atom;
      auto it = index.find(a->atom);
      if (it == index.end()) throw Error("atom `" + a->atom.str() + "` outside the universe");
      node.atom = it->second;
    } else if (f.get_if<GroundFormula::True>()) {
      node.kind = Kind::True;
    } else if (f.get_if<GroundFormula::False>()) {
      node.kind = Kind::False;
    } else if (const auto* x = f.get_if<GroundFormula::And>()) {
      node.kind = Kind::And;
      for (const auto& m : x->members) node.children.push_back(build(*m, index));
    } else if (const auto* x = f.get_if<GroundFormula::Or>()) {
      node.kind = Kind::Or;
      for (const auto& m : x->members) node.children.push_back(build(*m, index));
    } else {
      const auto* imp = f.get_if<GroundFormula::Implies>();
      node.kind = Kind::Implies;
      node.children.push_back(build(*imp->lhs, index));
      node.children.push_back(build(*imp->rhs, index));
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool eval_classical(int n, uint64_t j) const {
    const Node& node = nodes_[n];
    switch (node.kind) {
      case Kind::Atom: return (j >> node.atom) & 1;
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::And:
        for (int c : node.children)
          if (!eval_classical(c, j)) return false;
        return true;
      case Kind::Or:
        for (int c : node.children)
          if (eval_classical(c, j)) return true;
        return false;
      case Kind::Implies:
        return !eval_classical(node.children[0], j) || eval_classical(node.children[1], j);
    }
    return false;
  }

  bool eval_ht(int n, uint64_t i, uint64_t j) const {
    const Node& node = nodes_[n];
    switch (node.kind) {
      case Kind::Atom: return (i >> node.atom) & 1;
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::And:
        for (int c : node.children)
          if (!eval_ht(c, i, j)) return false;
        return true;
      case Kind::Or:
        for (int c : node.children)
          if (eval_ht(c, i, j)) return true;
        return false;
      case Kind::Implies:
        if (eval_ht(node.children[0], i, j) && !eval_ht(node.children[1], i, j)) return false;
        return eval_classical(n, j);
    }
    return false;
  }

  std::vector<Node> nodes_;
  int root_ = -1;
};

uint64_t pow3(size_t n) {
  uint64_t r = 1;
  for (size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

void check_cap(size_t atoms, const EnumerationOptions& opts) {
  if (atoms > opts.max_atoms)
    throw DomainError("enumeration over " + std::to_string(atoms) + " atoms exceeds the cap of " +
                      std::to_string(opts.max_atoms) + "; raise the cap to override");
  if (atoms > 36) throw DomainError("enumeration over more than 36 atoms is not supported");
}

// Decodes enumeration index -> (here mask, there mask).
void decode(uint64_t index, size_t n, uint64_t* i_mask, uint64_t* j_mask) {
  *i_mask = 0;
  *j_mask = 0;
  for (size_t pos = n; pos-- > 0;) {
    int digit = static_cast<int>(index % 3);
    index /= 3;
    // pos runs from the least significant (last atom) upwards.
    if (digit >= 1) *j_mask |= uint64_t{1} << pos;
    if (digit == 2) *i_mask |= uint64_t{1} << pos;
  }
}

AtomSet mask_to_set(uint64_t mask, const std::vector<GroundAtom>& universe) {
  AtomSet out;
  for (size_t i = 0; i < universe.size(); ++i)
    if ((mask >> i) & 1) out.insert(universe[i]);
  return out;
}

}  // namespace

bool is_tautological(const GroundFormula& f, const EnumerationOptions& opts) {
  std::vector<GroundAtom> universe = atom_universe({&f});
  check_cap(universe.size(), opts);
  Compiled c(f, universe);
  uint64_t total = uint64_t{1} << universe.size();
  for (uint64_t j = 0; j < total; ++j)
    if (!c.classical(j)) return false;
  return true;
}

std::vector<GroundAtom> atom_universe(const std::vector<const GroundFormula*>& fs) {
  AtomSet set;
  for (const GroundFormula* f : fs) {
    AtomSet a = atoms_of(*f);
    set.insert(a.begin(), a.end());
  }
  return {set.begin(), set.end()};
}

HTInterpretation ht_at_index(uint64_t index, const std::vector<GroundAtom>& universe) {
  uint64_t i_mask, j_mask;
  decode(index, universe.size(), &i_mask, &j_mask);
  return {mask_to_set(i_mask, universe), mask_to_set(j_mask, universe)};
}

std::vector<HTInterpretation> ht_models(const GroundFormula& f,
                                        const std::vector<GroundAtom>& universe,
                                        const EnumerationOptions& opts) {
  check_cap(universe.size(), opts);
  Compiled c(f, universe);
  std::vector<HTInterpretation> out;
  uint64_t total = pow3(universe.size());
  for (uint64_t k = 0; k < total; ++k) {
    uint64_t i_mask, j_mask;
    decode(k, universe.size(), &i_mask, &j_mask);
    if (c.ht(i_mask, j_mask))
      out.push_back({mask_to_set(i_mask, universe), mask_to_set(j_mask, universe)});
  }
  return out;
}

std::optional<uint64_t> first_ht_disagreement(const GroundFormula& a, const GroundFormula& b,
                                              const std::vector<GroundAtom>& universe,
                                              const EnumerationOptions& opts) {
  check_cap(universe.size(), opts);
  Compiled ca(a, universe);
  Compiled cb(b, universe);
  uint64_t total = pow3(universe.size());

  auto scan = [&](uint64_t from, uint64_t to) -> std::optional<uint64_t> {
    for (uint64_t k = from; k < to; ++k) {
      uint64_t i_mask, j_mask;
      decode(k, universe.size(), &i_mask, &j_mask);
      if (ca.ht(i_mask, j_mask) != cb.ht(i_mask, j_mask)) return k;
    }
    return std::nullopt;
  };

  unsigned workers = std::max(1u, opts.workers);
  if (workers == 1 || total < 4096) return scan(0, total);

  // Partition by index range; the least hit wins, so the result does not
  // depend on the worker count.
  std::vector<std::optional<uint64_t>> hits(workers);
  std::vector<std::thread> threads;
  uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t from = std::min(total, w * chunk);
    uint64_t to = std::min(total, from + chunk);
    threads.emplace_back([&hits, &scan, w, from, to]() { hits[w] = scan(from, to); });
  }
  for (auto& t : threads) t.join();
  for (const auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

std::vector<AtomSet> stable_models(const GroundFormula& f,
                                   const std::vector<GroundAtom>& universe,
                                   const EnumerationOptions& opts) {
  check_cap(universe.size(), opts);
  Compiled c(f, universe);
  std::vector<AtomSet> out;
  uint64_t total = uint64_t{1} << universe.size();
  for (uint64_t j = 0; j < total; ++j) {
    if (!c.classical(j)) continue;
    bool minimal = true;
    if (j != 0) {
      // Proper submasks of j, largest first down to the empty set.
      for (uint64_t i = (j - 1) & j;; i = (i - 1) & j) {
        if (c.ht(i, j)) {
          minimal = false;
          break;
        }
        if (i == 0) break;
      }
    }
    if (minimal) out.push_back(mask_to_set(j, universe));
  }
  return out;
}

}  // namespace hta::ground
