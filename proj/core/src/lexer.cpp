#include "lexer.hpp"

namespace hta::detail {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;

  auto push = [&](Tok kind, std::string tok_text, int tline, int tcol) {
    Token t;
    t.kind = kind;
    t.text = std::move(tok_text);
    t.line = tline;
    t.column = tcol;
    out.push_back(std::move(t));
  };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tline = line, tcol = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      Token t;
      t.kind = Tok::Number;
      t.text = digits;
      t.number = Int(digits);
      t.line = tline;
      t.column = tcol;
      out.push_back(std::move(t));
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      if (word == "not")
        push(Tok::KwNot, word, tline, tcol);
      else if (word == "forall")
        push(Tok::KwForall, word, tline, tcol);
      else if (word == "exists")
        push(Tok::KwExists, word, tline, tcol);
      else if (word == "int")
        push(Tok::KwInt, word, tline, tcol);
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        push(Tok::UpName, word, tline, tcol);
      else
        push(Tok::Ident, word, tline, tcol);
      continue;
    }
    if (c == '#') {
      size_t j = i + 1;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      if (word == "#false")
        push(Tok::HashFalse, word, tline, tcol);
      else if (word == "#inf")
        push(Tok::HashInf, word, tline, tcol);
      else if (word == "#sup")
        push(Tok::HashSup, word, tline, tcol);
      else
        throw ParseError("unknown directive `" + word + "`", tline, tcol);
      continue;
    }

    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    auto three = [&](const char* s) {
      return i + 2 < text.size() && text[i] == s[0] && text[i + 1] == s[1] && text[i + 2] == s[2];
    };

    if (three("<->")) {
      push(Tok::Iff, "<->", tline, tcol);
      advance(3);
    } else if (two(':', '-')) {
      push(Tok::If, ":-", tline, tcol);
      advance(2);
    } else if (two('.', '.')) {
      push(Tok::DotDot, "..", tline, tcol);
      advance(2);
    } else if (two('!', '=')) {
      push(Tok::Ne, "!=", tline, tcol);
      advance(2);
    } else if (two('<', '=')) {
      push(Tok::Le, "<=", tline, tcol);
      advance(2);
    } else if (two('>', '=')) {
      push(Tok::Ge, ">=", tline, tcol);
      advance(2);
    } else if (two('-', '>')) {
      push(Tok::Arrow, "->", tline, tcol);
      advance(2);
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case ',': kind = Tok::Comma; break;
        case '.': kind = Tok::Dot; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '\\': kind = Tok::Backslash; break;
        case '=': kind = Tok::Eq; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Bar; break;
        default:
          throw ParseError(std::string("unexpected character `") + c + "`", tline, tcol);
      }
      push(kind, std::string(1, c), tline, tcol);
      advance(1);
    }
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

}  // namespace hta::detail
