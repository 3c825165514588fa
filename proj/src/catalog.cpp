#include "semdb/catalog.hpp"

#include "scanner.hpp"
#include "semdb/error.hpp"

namespace semdb {

using detail::Scanner;
using detail::TokKind;
using detail::Token;

std::string_view arg_kind_name(ArgKind kind) {
  switch (kind) {
    case ArgKind::Label: return "label";
    case ArgKind::Instance: return "instance";
    case ArgKind::Hole: return "hole";
    case ArgKind::RestrictorLabel: return "restrictor";
    case ArgKind::Cardinality: return "cardinality";
  }
  return "?";
}

const SemanticClass* Catalog::find_class(std::string_view name) const {
  for (const auto& cls : classes_)
    if (cls.name.text() == name) return &cls;
  return nullptr;
}

const PredPattern* Catalog::find_closed_pattern(std::string_view name) const {
  for (const auto& pattern : patterns_)
    if (pattern.predicate_name.text() == name) return &pattern;
  return nullptr;
}

void Catalog::add_class(SemanticClass cls) {
  if (find_class(cls.name.text()) || find_closed_pattern(cls.name.text()))
    throw Error(ErrorCode::DuplicateClass,
                "duplicate catalog name '" + cls.name.text() + "'");
  classes_.push_back(std::move(cls));
}

void Catalog::add_closed_pattern(PredPattern pattern) {
  if (find_class(pattern.predicate_name.text()) ||
      find_closed_pattern(pattern.predicate_name.text()))
    throw Error(ErrorCode::DuplicateClass,
                "duplicate catalog name '" + pattern.predicate_name.text() + "'");
  patterns_.push_back(std::move(pattern));
}

namespace {

std::vector<ArgKind> parse_kind_string(const std::string& text,
                                       const Token& at) {
  std::vector<ArgKind> kinds;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t end = text.find(',', i);
    std::string tok = text.substr(i, end == std::string::npos ? end : end - i);
    if (tok.empty())
      throw Error(ErrorCode::SyntaxError, "empty kind token in '" + text + "'",
                  at.line, at.column);
    char head = tok[0];
    ArgKind kind;
    if (head == 'L')
      kind = kinds.empty() ? ArgKind::Label : ArgKind::RestrictorLabel;
    else if (head == 'I')
      kind = ArgKind::Instance;
    else if (head == 'H')
      kind = ArgKind::Hole;
    else if (head == 'N')
      kind = ArgKind::Cardinality;
    else
      throw Error(ErrorCode::SyntaxError,
                  "unknown kind token '" + tok + "' in '" + text + "'", at.line,
                  at.column);
    kinds.push_back(kind);
    if (end == std::string::npos) break;
    i = end + 1;
  }
  if (kinds.empty() || kinds.front() != ArgKind::Label)
    throw Error(ErrorCode::SyntaxError,
                "a predicate template must start with a label: '" + text + "'",
                at.line, at.column);
  return kinds;
}

bool is_atom_token(const Token& tok) {
  return tok.kind == TokKind::Atom || tok.kind == TokKind::QuotedAtom;
}

Token expect_atomish(Scanner& sc, std::string_view what) {
  const Token& tok = sc.peek();
  if (!is_atom_token(tok) && tok.kind != TokKind::Variable)
    sc.fail(tok, "expected " + std::string(what));
  return sc.next();
}

}  // namespace

Catalog load_catalog(std::string_view text) {
  Scanner sc(text);
  Catalog catalog;

  while (!sc.at_end()) {
    Token head = sc.peek();
    if (head.kind != TokKind::Atom) sc.fail(head, "expected 'semclass' or 'pattern'");

    if (head.text == "semclass") {
      sc.next();
      Token name = expect_atomish(sc, "a class name");
      SemanticClass cls;
      cls.name = Atom(name.text, name.kind == TokKind::QuotedAtom);

      Token kw = sc.next();
      if (!(kw.kind == TokKind::Atom && kw.text == "head"))
        sc.fail(kw, "expected 'head'");
      Token headName = expect_atomish(sc, "a head name or R");
      Token headKinds = sc.expect(TokKind::QuotedAtom, "a kind string");
      cls.scheme.head_kinds = parse_kind_string(headKinds.text, headKinds);
      if (!(headName.kind == TokKind::Variable && headName.text == "R"))
        cls.scheme.head_name = Atom(headName.text,
                                    headName.kind == TokKind::QuotedAtom);

      while (sc.accept(TokKind::Amp)) {
        Token extraKw = sc.next();
        if (extraKw.kind != TokKind::Atom) sc.fail(extraKw, "expected 'role' or 'pred'");
        ExtraPred extra;
        if (extraKw.text == "role") {
          Token slot = expect_atomish(sc, "a role feature name");
          extra.role_slot = cls.role_slots.size();
          cls.role_slots.push_back(
              Atom(slot.text, slot.kind == TokKind::QuotedAtom));
        } else if (extraKw.text == "pred") {
          Token predName = expect_atomish(sc, "a predicate name");
          extra.fixed_name =
              Atom(predName.text, predName.kind == TokKind::QuotedAtom);
        } else {
          sc.fail(extraKw, "expected 'role' or 'pred'");
        }
        Token kinds = sc.expect(TokKind::QuotedAtom, "a kind string");
        extra.arg_kinds = parse_kind_string(kinds.text, kinds);
        cls.scheme.extras.push_back(std::move(extra));
      }
      sc.expect(TokKind::Dot, "'.'");
      catalog.add_class(std::move(cls));
      continue;
    }

    if (head.text == "pattern") {
      sc.next();
      Token name = expect_atomish(sc, "a predicate name");
      Token kinds = sc.expect(TokKind::QuotedAtom, "a kind string");
      sc.expect(TokKind::Dot, "'.'");
      PredPattern pattern;
      pattern.predicate_name = Atom(name.text, name.kind == TokKind::QuotedAtom);
      pattern.arg_kinds = parse_kind_string(kinds.text, kinds);
      catalog.add_closed_pattern(std::move(pattern));
      continue;
    }

    sc.fail(head, "expected 'semclass' or 'pattern'");
  }

  return catalog;
}

std::string builtin_catalog_source() {
  return R"(% builtin semantic class catalog
semclass transitive_verb head R 'L,I'
    & role role_a1 'L,I,I1'
    & role role_a2 'L,I,I2' .
semclass common_noun head R 'L,I' .
semclass det_quant head R 'L,I,H' .
semclass demonstrative head demonstrative 'L,I,L1' .
semclass wh_question head whq 'L,I,H'
    & pred tloc 'L2,I2,I1'
    & pred time 'L1,I1' .
semclass card_quantifier head R 'L,I,L1,H,N' .

% closed-class predicates introduced by the grammar rather than the lexicon
pattern decl 'L,H' .
pattern pron 'L,I' .
pattern ein_card_qua 'L,I,L1,H,N' .
)";
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = load_catalog(builtin_catalog_source());
  return catalog;
}

std::vector<PredPattern> predscheme_instances(const ExpandedEntry& entry,
                                              const Catalog& catalog) {
  const Value& semclass = entry.value_or_top("semclass");
  if (!semclass.is_lit())
    throw Error(ErrorCode::UnknownSemClass,
                "base '" + entry.base_name.text() +
                    "' has no semantic class");
  const SemanticClass* cls = catalog.find_class(semclass.atom().text());
  if (!cls)
    throw Error(ErrorCode::UnknownSemClass,
                "unknown semantic class '" + semclass.atom().text() + "'");

  std::vector<PredPattern> patterns;

  PredPattern head;
  if (cls->scheme.head_name) {
    head.predicate_name = *cls->scheme.head_name;
  } else {
    const Value& predname = entry.value_or_top("predname");
    if (!predname.is_lit())
      throw Error(ErrorCode::MissingPredName,
                  "base '" + entry.base_name.text() + "' has no predname");
    head.predicate_name = predname.atom();
  }
  head.arg_kinds = cls->scheme.head_kinds;
  head.source_base = entry.base_name;
  patterns.push_back(std::move(head));

  for (const auto& extra : cls->scheme.extras) {
    PredPattern pattern;
    if (extra.fixed_name) {
      pattern.predicate_name = *extra.fixed_name;
    } else {
      const Atom& slot = cls->role_slots[*extra.role_slot];
      const Value& role = entry.value_or_top(slot.text());
      if (!role.is_lit())
        throw Error(ErrorCode::MissingRole,
                    "base '" + entry.base_name.text() +
                        "' leaves role feature '" + slot.text() + "' open");
      pattern.predicate_name = role.atom();
    }
    pattern.arg_kinds = extra.arg_kinds;
    pattern.source_base = entry.base_name;
    patterns.push_back(std::move(pattern));
  }

  return patterns;
}

}  // namespace semdb
