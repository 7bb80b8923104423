#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hta/precomputed.hpp"

namespace hta::mg {

// The six operation names of program terms.
enum class TermOp { Add, Sub, Mul, Div, Mod, Interval };

const char* term_op_str(TermOp op);

class PTerm;
using PTermPtr = std::shared_ptr<const PTerm>;

// A program term: precomputed terms and variables combined with the six
// operations.  Immutable; share freely.
class PTerm {
 public:
  struct Numeral {
    Int value;
  };
  struct Symbol {
    std::string name;  // lowercase-leading identifier
  };
  struct Inf {};
  struct Sup {};
  struct Var {
    std::string name;  // uppercase-leading identifier
  };
  struct BinOp {
    TermOp op;
    PTermPtr lhs;
    PTermPtr rhs;
  };
  using Node = std::variant<Numeral, Symbol, Inf, Sup, Var, BinOp>;

  explicit PTerm(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

PTermPtr num(Int value);
PTermPtr num(long long value);
PTermPtr sym(std::string name);
PTermPtr inf();
PTermPtr sup();
PTermPtr var(std::string name);
PTermPtr binop(TermOp op, PTermPtr lhs, PTermPtr rhs);

bool equal(const PTerm& a, const PTerm& b);

// True iff the term is a numeral, symbolic constant, #inf or #sup.
bool is_precomputed(const PTerm& t);

// Conversion to the ground value universe; throws Error unless precomputed.
Precomputed to_precomputed(const PTerm& t);

// Total order on precomputed terms lifted to PTerm; throws Error if either
// argument is not precomputed.
int precomputed_compare(const PTerm& a, const PTerm& b);

std::string to_string(const PTerm& t);

struct Atom {
  std::string predicate;
  std::vector<PTermPtr> args;
};

struct Literal {
  Atom atom;
  int negations = 0;  // 0, 1 or 2
};

struct Comparison {
  PTermPtr left;
  Rel rel;
  PTermPtr right;
};

using BodyElem = std::variant<Literal, Comparison>;

enum class HeadKind { Basic, Choice, Empty };

struct Head {
  HeadKind kind = HeadKind::Empty;
  std::optional<Atom> atom;  // set iff kind != Empty
};

struct Rule {
  Head head;
  std::vector<BodyElem> body;
};

bool equal(const Atom& a, const Atom& b);
bool equal(const Literal& a, const Literal& b);
bool equal(const Comparison& a, const Comparison& b);
bool equal(const BodyElem& a, const BodyElem& b);
bool equal(const Rule& a, const Rule& b);

std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Comparison& c);
std::string to_string(const Rule& r);

// A finite set of rules.  Construction removes duplicate rules (keeping
// first occurrences), so iteration order is first-occurrence order.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<Rule> rules_;
};

// Set equality: same rules regardless of order.
bool equal(const Program& a, const Program& b);

std::string to_string(const Program& p);

}  // namespace hta::mg
