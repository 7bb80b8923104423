#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace hta {

// Numerals are in 1-1 correspondence with the integers; arithmetic on them
// is exact and unbounded.
using Int = boost::multiprecision::cpp_int;

// The six comparison symbols.
enum class Rel { Eq, Ne, Lt, Gt, Le, Ge };

const char* rel_str(Rel rel);

// A precomputed term: #inf, a numeral, a symbolic constant, or #sup.
// The Kind order doubles as the category order of the fixed total order
// (#inf < numerals < symbolic constants < #sup).
class Precomputed {
 public:
  enum class Kind { Inf, Numeral, Symbol, Sup };

  static Precomputed inf() { return Precomputed(Kind::Inf); }
  static Precomputed sup() { return Precomputed(Kind::Sup); }
  static Precomputed numeral(Int value) {
    Precomputed p(Kind::Numeral);
    p.value_ = std::move(value);
    return p;
  }
  static Precomputed symbol(std::string name) {
    Precomputed p(Kind::Symbol);
    p.name_ = std::move(name);
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_numeral() const { return kind_ == Kind::Numeral; }

  // Valid only for the matching kind.
  const Int& value() const { return value_; }
  const std::string& name() const { return name_; }

  std::string str() const;

  friend bool operator==(const Precomputed& a, const Precomputed& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_ && a.name_ == b.name_;
  }

 private:
  explicit Precomputed(Kind kind) : kind_(kind) {}

  Kind kind_;
  Int value_ = 0;
  std::string name_;
};

// Total order on precomputed terms: #inf first, then numerals by integer
// value, then symbolic constants lexicographically, then #sup.
// Returns -1, 0 or 1.
int precomputed_compare(const Precomputed& a, const Precomputed& b);

bool operator<(const Precomputed& a, const Precomputed& b);

// Truth of `a rel b` under the total order above.
bool eval_comparison(const Precomputed& a, Rel rel, const Precomputed& b);

}  // namespace hta
