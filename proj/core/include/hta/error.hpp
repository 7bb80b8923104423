#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hta {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or grammatical error, with a 1-based source position and the
// tokens that would have been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column,
             std::vector<std::string> expected = {})
      : Error(render(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string render(const std::string& message, int line, int column,
                            const std::vector<std::string>& expected) {
    std::string s = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      s += " (expected ";
      for (size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) s += expected.size() == 2 ? " or " : ", ";
        s += expected[i];
      }
      s += ")";
    }
    return s;
  }

  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Violation of the two-sorted typing discipline (e.g. a generic term used
// where an integer term is required).
class SortError : public Error {
 public:
  explicit SortError(const std::string& what) : Error(what) {}
};

// The requested substitution would capture a variable or break sorts.
class SubstitutionError : public Error {
 public:
  explicit SubstitutionError(const std::string& what) : Error(what) {}
};

// A rule cannot be translated; carries one message per offending rule.
class TranslationError : public Error {
 public:
  struct RuleFailure {
    size_t rule_index;
    std::string rule_text;
    std::string message;
  };

  explicit TranslationError(std::vector<RuleFailure> failures)
      : Error(render(failures)), failures_(std::move(failures)) {}

  const std::vector<RuleFailure>& failures() const { return failures_; }

 private:
  static std::string render(const std::vector<RuleFailure>& failures) {
    std::string s = "translation failed:";
    for (const auto& f : failures) {
      s += "\n  rule " + std::to_string(f.rule_index + 1) + " `" + f.rule_text +
           "`: " + f.message;
    }
    return s;
  }

  std::vector<RuleFailure> failures_;
};

// Grounding-domain problems: a constant outside the pool, an open formula,
// or an enumeration that would exceed the configured atom cap.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Structurally malformed proof script (bad JSON, unknown fields, duplicate
// line ids, forward premise references).  Distinct from a proof that merely
// fails to check.
class ScriptError : public Error {
 public:
  explicit ScriptError(const std::string& what) : Error(what) {}
};

}  // namespace hta
