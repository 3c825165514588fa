#include "semdb/term.hpp"

#include <algorithm>

#include "scanner.hpp"
#include "semdb/error.hpp"

namespace semdb {

using detail::Scanner;
using detail::TokKind;
using detail::Token;

Term Term::atom(std::string text) {
  Term t;
  t.kind_ = Kind::Atom;
  t.text_ = std::move(text);
  return t;
}

Term Term::integer(long long value) {
  Term t;
  t.kind_ = Kind::Int;
  t.number_ = value;
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Var;
  t.text_ = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Compound;
  t.text_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

Term Term::list(std::vector<Term> elements) {
  Term t;
  t.kind_ = Kind::List;
  t.args_ = std::move(elements);
  return t;
}

namespace {

bool plain_functor(std::string_view text) {
  if (text.empty()) return false;
  if (text[0] < 'a' || text[0] > 'z') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::string print_atom_text(const std::string& text) {
  if (plain_functor(text) || text == "&") return text;
  std::string out = "'";
  for (char c : text) {
    out += c;
    if (c == '\'') out += c;
  }
  out += '\'';
  return out;
}

Term parse_one(Scanner& sc);

std::vector<Term> parse_arg_list(Scanner& sc, TokKind close,
                                 std::string_view closer) {
  std::vector<Term> args;
  if (sc.peek().kind == close) {
    sc.next();
    return args;
  }
  while (true) {
    args.push_back(parse_one(sc));
    if (sc.accept(TokKind::Comma)) continue;
    sc.expect(close, closer);
    break;
  }
  return args;
}

Term parse_one(Scanner& sc) {
  const Token& tok = sc.peek();
  switch (tok.kind) {
    case TokKind::Atom:
    case TokKind::QuotedAtom: {
      Token t = sc.next();
      if (sc.peek().kind == TokKind::LParen) {
        sc.next();
        auto args = parse_arg_list(sc, TokKind::RParen, "')'");
        if (args.empty())
          sc.fail(t, "compound term '" + t.text + "' needs arguments");
        return Term::compound(t.text, std::move(args));
      }
      return Term::atom(t.text);
    }
    case TokKind::Amp: {
      Token t = sc.next();
      sc.expect(TokKind::LParen, "'(' after '&'");
      auto args = parse_arg_list(sc, TokKind::RParen, "')'");
      if (args.empty()) sc.fail(t, "'&' needs arguments");
      return Term::compound("&", std::move(args));
    }
    case TokKind::Variable: {
      Token t = sc.next();
      return Term::variable(t.text);
    }
    case TokKind::Integer: {
      Token t = sc.next();
      return Term::integer(t.number);
    }
    case TokKind::LBracket: {
      sc.next();
      auto elements = parse_arg_list(sc, TokKind::RBracket, "']'");
      return Term::list(std::move(elements));
    }
    default:
      sc.fail(tok, "expected a term");
  }
}

}  // namespace

Term parse_term(std::string_view text) {
  Scanner sc(text);
  Term term = parse_one(sc);
  if (!sc.at_end()) sc.fail(sc.peek(), "trailing input after term");
  return term;
}

std::vector<Term> parse_terms(std::string_view text) {
  Scanner sc(text);
  std::vector<Term> terms;
  while (!sc.at_end()) terms.push_back(parse_one(sc));
  return terms;
}

std::string Term::print() const {
  switch (kind_) {
    case Kind::Atom:
      return print_atom_text(text_);
    case Kind::Int:
      return std::to_string(number_);
    case Kind::Var:
      return text_;
    case Kind::Compound: {
      std::string out = print_atom_text(text_) + "(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i > 0) out += ',';
        out += args_[i].print();
      }
      out += ')';
      return out;
    }
    case Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i > 0) out += ',';
        out += args_[i].print();
      }
      out += ']';
      return out;
    }
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::Atom:
    case Term::Kind::Var:
      return a.text_ == b.text_;
    case Term::Kind::Int:
      return a.number_ == b.number_;
    case Term::Kind::Compound:
      return a.text_ == b.text_ && a.args_ == b.args_;
    case Term::Kind::List:
      return a.args_ == b.args_;
  }
  return false;
}

}  // namespace semdb
