#include "hta/precomputed.hpp"

namespace hta {

const char* rel_str(Rel rel) {
  switch (rel) {
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Lt: return "<";
    case Rel::Gt: return ">";
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
  }
  return "?";
}

std::string Precomputed::str() const {
  switch (kind_) {
    case Kind::Inf: return "#inf";
    case Kind::Sup: return "#sup";
    case Kind::Numeral: return value_.str();
    case Kind::Symbol: return name_;
  }
  return "?";
}

int precomputed_compare(const Precomputed& a, const Precomputed& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Precomputed::Kind::Inf:
    case Precomputed::Kind::Sup:
      return 0;
    case Precomputed::Kind::Numeral:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case Precomputed::Kind::Symbol: {
      int c = a.name().compare(b.name());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
  }
  return 0;
}

bool operator<(const Precomputed& a, const Precomputed& b) {
  return precomputed_compare(a, b) < 0;
}

bool eval_comparison(const Precomputed& a, Rel rel, const Precomputed& b) {
  int c = precomputed_compare(a, b);
  switch (rel) {
    case Rel::Eq: return c == 0;
    case Rel::Ne: return c != 0;
    case Rel::Lt: return c < 0;
    case Rel::Gt: return c > 0;
    case Rel::Le: return c <= 0;
    case Rel::Ge: return c >= 0;
  }
  return false;
}

}  // namespace hta
