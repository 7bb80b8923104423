#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hta/error.hpp"
#include "hta/precomputed.hpp"

namespace hta::detail {

enum class Tok {
  Ident,     // lowercase-leading identifier
  UpName,    // uppercase-leading identifier (a variable)
  Number,    // nonnegative integer literal
  KwNot,
  KwForall,
  KwExists,
  KwInt,
  HashFalse,
  HashInf,
  HashSup,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  DotDot,
  If,        // :-
  Plus,
  Minus,
  Star,
  Slash,
  Backslash,
  Eq,
  Ne,
  Lt,
  Gt,
  Le,
  Ge,
  Amp,
  Bar,
  Arrow,     // ->
  Iff,       // <->
  End
};

struct Token {
  Tok kind;
  std::string text;
  Int number = 0;
  int line = 1;
  int column = 1;
};

inline const char* tok_str(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::UpName: return "variable";
    case Tok::Number: return "number";
    case Tok::KwNot: return "'not'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwInt: return "'int'";
    case Tok::HashFalse: return "'#false'";
    case Tok::HashInf: return "'#inf'";
    case Tok::HashSup: return "'#sup'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::DotDot: return "'..'";
    case Tok::If: return "':-'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Backslash: return "'\\'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

// Tokenizes program and formula text.  `%` starts a comment that runs to
// the end of the line.
std::vector<Token> tokenize(std::string_view text);

}  // namespace hta::detail
