#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hta/precomputed.hpp"

namespace hta::fo {

// The sort `integer` is a subsort of `generic`: an integer term is accepted
// wherever a generic one is, but not vice versa.
enum class Sort { Generic, Integer };

const char* sort_str(Sort s);

struct TypedVar {
  std::string name;
  Sort sort = Sort::Generic;

  friend bool operator==(const TypedVar&, const TypedVar&) = default;
  friend auto operator<=>(const TypedVar& a, const TypedVar& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.sort <=> b.sort;
  }
};

enum class ArithOp { Add, Sub, Mul };

const char* arith_op_str(ArithOp op);

class FOTerm;
using FOTermPtr = std::shared_ptr<const FOTerm>;

// A term over the two-sorted signature: object constants (all precomputed
// terms), sorted variables, and + - * on integer terms.
class FOTerm {
 public:
  struct Const {
    Precomputed value;
  };
  struct Var {
    TypedVar var;
  };
  struct Arith {
    ArithOp op;
    FOTermPtr lhs;
    FOTermPtr rhs;
  };
  using Node = std::variant<Const, Var, Arith>;

  explicit FOTerm(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

Sort sort_of(const FOTerm& t);

FOTermPtr obj_const(Precomputed value);
FOTermPtr numeral(Int value);
FOTermPtr term_var(TypedVar v);
FOTermPtr int_var(std::string name);
FOTermPtr gen_var(std::string name);
// Throws SortError unless both operands have sort integer.
FOTermPtr arith(ArithOp op, FOTermPtr lhs, FOTermPtr rhs);

bool equal(const FOTerm& a, const FOTerm& b);
std::string to_string(const FOTerm& t);

class FOFormula;
using FOFormulaPtr = std::shared_ptr<const FOFormula>;

// Formulas over the signature.  `not F` is represented as F -> #false and
// F <-> G as the conjunction of the two implications.
class FOFormula {
 public:
  struct Pred {
    std::string name;
    std::vector<FOTermPtr> args;
  };
  struct Cmp {
    FOTermPtr left;
    Rel rel;
    FOTermPtr right;
  };
  struct Bottom {};
  struct And {
    FOFormulaPtr lhs;
    FOFormulaPtr rhs;
  };
  struct Or {
    FOFormulaPtr lhs;
    FOFormulaPtr rhs;
  };
  struct Implies {
    FOFormulaPtr lhs;
    FOFormulaPtr rhs;
  };
  struct Forall {
    TypedVar var;
    FOFormulaPtr body;
  };
  struct Exists {
    TypedVar var;
    FOFormulaPtr body;
  };
  using Node = std::variant<Pred, Cmp, Bottom, And, Or, Implies, Forall, Exists>;

  explicit FOFormula(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

FOFormulaPtr pred(std::string name, std::vector<FOTermPtr> args = {});
FOFormulaPtr cmp(FOTermPtr left, Rel rel, FOTermPtr right);
FOFormulaPtr bottom();
FOFormulaPtr conj(FOFormulaPtr lhs, FOFormulaPtr rhs);
FOFormulaPtr disj(FOFormulaPtr lhs, FOFormulaPtr rhs);
FOFormulaPtr implies(FOFormulaPtr lhs, FOFormulaPtr rhs);
FOFormulaPtr neg(FOFormulaPtr f);          // f -> #false
FOFormulaPtr iff(FOFormulaPtr lhs, FOFormulaPtr rhs);
FOFormulaPtr forall(TypedVar v, FOFormulaPtr body);
FOFormulaPtr exists(TypedVar v, FOFormulaPtr body);

// True iff `f` has the shape G -> #false.
const FOFormulaPtr* negated_operand(const FOFormula& f);

bool equal(const FOFormula& a, const FOFormula& b);

// Equality up to renaming of bound variables.  Free variables must agree
// in both name and sort; bound variables must agree in sort.
bool alpha_equal(const FOFormula& a, const FOFormula& b);

std::string to_string(const FOFormula& f);

}  // namespace hta::fo
