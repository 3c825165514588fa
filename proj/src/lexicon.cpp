#include "semdb/lexicon.hpp"

#include <algorithm>
#include <set>

#include "scanner.hpp"
#include "semdb/error.hpp"

namespace semdb {

using detail::Scanner;
using detail::TokKind;
using detail::Token;

const Value* LexClass::fixed_for(std::string_view feature) const {
  for (const auto& [name, value] : fixed_values)
    if (name.text() == feature) return &value;
  return nullptr;
}

const FeatureDecl* LexClass::declares(std::string_view feature) const {
  for (const auto& decl : features)
    if (decl.name.text() == feature) return &decl;
  return nullptr;
}

const LexClass* Lexicon::find_class(std::string_view name) const {
  for (const auto& c : classes)
    if (c.name.text() == name) return &c;
  return nullptr;
}

const BaseEntry* Lexicon::find_base(std::string_view name) const {
  for (const auto& b : bases)
    if (b.name.text() == name) return &b;
  return nullptr;
}

const Value* ExpandedEntry::find(std::string_view feature) const {
  for (const auto& [name, value] : values)
    if (name.text() == feature) return &value;
  return nullptr;
}

const Value& ExpandedEntry::value_or_top(std::string_view feature) const {
  static const Value top;
  const Value* v = find(feature);
  return v ? *v : top;
}

std::string_view diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::UnknownParent: return "UnknownParent";
    case DiagCode::Cycle: return "Cycle";
    case DiagCode::UnknownClass: return "UnknownClass";
  }
  return "?";
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateClass: return "DuplicateClass";
    case ErrorCode::DuplicateBase: return "DuplicateBase";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::AppropriatenessViolation: return "AppropriatenessViolation";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::UnknownSemClass: return "UnknownSemClass";
    case ErrorCode::MissingRole: return "MissingRole";
    case ErrorCode::MissingPredName: return "MissingPredName";
    case ErrorCode::TemplateArity: return "TemplateArity";
    case ErrorCode::SlotArity: return "SlotArity";
    case ErrorCode::SlotShape: return "SlotShape";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::IncompleteDefault: return "IncompleteDefault";
    case ErrorCode::ConflictingDefault: return "ConflictingDefault";
    case ErrorCode::IoError: return "IoError";
  }
  return "?";
}

namespace {

Atom atom_from(const Token& tok) {
  return Atom(tok.text, tok.kind == TokKind::QuotedAtom);
}

bool is_atom_token(const Token& tok) {
  return tok.kind == TokKind::Atom || tok.kind == TokKind::QuotedAtom;
}

// value   := alt { \/ alt }
// alt     := 'top' | atom | ~ alt | ( value )
Value parse_value(Scanner& sc);

Value parse_alternative(Scanner& sc) {
  const Token& tok = sc.peek();
  if (tok.kind == TokKind::LParen) {
    sc.next();
    Value inner = parse_value(sc);
    sc.expect(TokKind::RParen, "')'");
    return inner;
  }
  if (tok.kind == TokKind::Tilde) {
    sc.next();
    Value operand = parse_alternative(sc);
    if (operand.is_top())
      sc.fail(tok, "top cannot be negated");
    return Value::negation(std::move(operand));
  }
  if (tok.kind == TokKind::Atom && tok.text == "top") {
    sc.next();
    return Value::top();
  }
  if (is_atom_token(tok)) {
    Token t = sc.next();
    return Value::lit(atom_from(t));
  }
  sc.fail(tok, "expected a value");
}

Value parse_value(Scanner& sc) {
  Token first = sc.peek();
  Value head = parse_alternative(sc);
  if (sc.peek().kind != TokKind::OrOp) return head;
  std::vector<Value> alternatives;
  alternatives.push_back(std::move(head));
  while (sc.accept(TokKind::OrOp)) {
    Token at = sc.peek();
    Value alt = parse_alternative(sc);
    if (alt.is_top()) sc.fail(at, "top cannot occur in a disjunction");
    alternatives.push_back(std::move(alt));
  }
  if (alternatives.front().is_top())
    sc.fail(first, "top cannot occur in a disjunction");
  return Value::disjunction(std::move(alternatives));
}

std::vector<std::pair<Atom, Value>> parse_body(Scanner& sc) {
  std::vector<std::pair<Atom, Value>> items;
  if (sc.peek().kind == TokKind::Dot) return items;
  while (true) {
    const Token& nameTok = sc.peek();
    if (!is_atom_token(nameTok)) sc.fail(nameTok, "expected a feature name");
    Token name = sc.next();
    sc.expect(TokKind::Colon, "':'");
    Value value = parse_value(sc);
    for (const auto& [existing, unused] : items)
      if (existing == atom_from(name))
        sc.fail(name, "feature '" + name.text + "' assigned twice");
    items.emplace_back(atom_from(name), std::move(value));
    if (!sc.accept(TokKind::Amp)) break;
  }
  return items;
}

}  // namespace

Lexicon parse_lexicon_source(std::string_view text) {
  Scanner sc(text);
  Lexicon lexicon;

  while (!sc.at_end()) {
    const Token& head = sc.peek();
    if (head.kind != TokKind::Atom)
      sc.fail(head, "expected 'class' or 'base'");

    if (head.text == "class") {
      Token kw = sc.next();
      const Token& nameTok = sc.peek();
      if (!is_atom_token(nameTok)) sc.fail(nameTok, "expected a class name");
      Token name = sc.next();
      if (lexicon.find_class(name.text))
        throw Error(ErrorCode::DuplicateClass,
                    "duplicate class '" + name.text + "'", name.line,
                    name.column);
      sc.expect(TokKind::ClassOpen, "':<'");
      const Token& parentTok = sc.peek();
      if (!is_atom_token(parentTok)) sc.fail(parentTok, "expected a parent name");
      Token parent = sc.next();
      if (is_atom_token(sc.peek()) || sc.peek().kind == TokKind::Comma)
        sc.fail(sc.peek(), "a class has at most one parent");
      sc.expect(TokKind::ClassClose, "'>:'");

      LexClass cls;
      cls.name = atom_from(name);
      if (!(parent.kind == TokKind::Atom && parent.text == "top"))
        cls.parent = atom_from(parent);

      // Every body item is recorded as a declaration; a single literal also
      // fixes that value. Whether an item actually re-assigns an inherited
      // feature is only decidable once parents resolve, so effective_features
      // makes that call.
      for (auto& [featName, value] : parse_body(sc)) {
        cls.features.push_back(FeatureDecl{featName, value});
        if (value.is_lit()) cls.fixed_values.emplace_back(featName, value);
      }
      sc.expect(TokKind::Dot, "'.'");
      lexicon.classes.push_back(std::move(cls));
      (void)kw;
      continue;
    }

    if (head.text == "base") {
      sc.next();
      const Token& nameTok = sc.peek();
      if (!is_atom_token(nameTok)) sc.fail(nameTok, "expected a base name");
      Token name = sc.next();
      if (lexicon.find_base(name.text))
        throw Error(ErrorCode::DuplicateBase,
                    "duplicate base '" + name.text + "'", name.line,
                    name.column);
      sc.expect(TokKind::BaseOpen, "':<<'");
      const Token& classTok = sc.peek();
      if (!is_atom_token(classTok)) sc.fail(classTok, "expected a class name");
      Token className = sc.next();
      sc.expect(TokKind::BaseClose, "'>>:'");

      BaseEntry base;
      base.name = atom_from(name);
      base.class_name = atom_from(className);
      base.assignments = parse_body(sc);
      sc.expect(TokKind::Dot, "'.'");
      lexicon.bases.push_back(std::move(base));
      continue;
    }

    sc.fail(head, "expected 'class' or 'base'");
  }

  return lexicon;
}

std::string print_lexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& cls : lexicon.classes) {
    out += "class " + cls.name.print() + " :< " +
           (cls.parent ? cls.parent->print() : std::string("top")) + " >:";
    bool first = true;
    for (const auto& decl : cls.features) {
      out += first ? "\n    " : " &\n    ";
      out += decl.name.print() + ": " + decl.appropriateness.print();
      first = false;
    }
    out += " .\n\n";
  }
  for (const auto& base : lexicon.bases) {
    out += "base " + base.name.print() + " :<< " + base.class_name.print() +
           " >>:";
    bool first = true;
    for (const auto& [name, value] : base.assignments) {
      out += first ? "\n    " : " &\n    ";
      out += name.print() + ": " + value.print();
      first = false;
    }
    out += " .\n\n";
  }
  return out;
}

namespace {

// Root-to-leaf chain of class pointers; requires a checked hierarchy.
std::vector<const LexClass*> class_chain(const Lexicon& lexicon,
                                         std::string_view class_name) {
  std::vector<const LexClass*> chain;
  const LexClass* cls = lexicon.find_class(class_name);
  if (!cls)
    throw Error(ErrorCode::UnknownClass,
                "unknown class '" + std::string(class_name) + "'");
  std::set<std::string> seen;
  while (cls) {
    if (!seen.insert(cls->name.text()).second)
      throw Error(ErrorCode::UnknownClass,
                  "class hierarchy cycle at '" + cls->name.text() + "'");
    chain.push_back(cls);
    if (!cls->parent) break;
    const LexClass* parent = lexicon.find_class(cls->parent->text());
    if (!parent)
      throw Error(ErrorCode::UnknownClass,
                  "unknown parent '" + cls->parent->text() + "'");
    cls = parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

std::vector<Diagnostic> check_hierarchy(const Lexicon& lexicon) {
  std::vector<Diagnostic> diagnostics;

  for (const auto& cls : lexicon.classes) {
    if (cls.parent && !lexicon.find_class(cls.parent->text()))
      diagnostics.push_back({DiagCode::UnknownParent, *cls.parent});
  }

  // A class is reported exactly when it lies on a cycle, i.e. walking its
  // ancestors returns to the class itself.
  for (const auto& cls : lexicon.classes) {
    std::set<std::string> seen{cls.name.text()};
    const LexClass* cur = &cls;
    while (cur->parent) {
      const LexClass* parent = lexicon.find_class(cur->parent->text());
      if (!parent) break;
      if (parent->name == cls.name) {
        diagnostics.push_back({DiagCode::Cycle, cls.name});
        break;
      }
      if (!seen.insert(parent->name.text()).second) break;  // foreign cycle
      cur = parent;
    }
  }

  for (const auto& base : lexicon.bases) {
    if (!lexicon.find_class(base.class_name.text()))
      diagnostics.push_back({DiagCode::UnknownClass, base.class_name});
  }

  return diagnostics;
}

std::vector<EffectiveFeature> effective_features(const Lexicon& lexicon,
                                                 std::string_view class_name) {
  auto chain = class_chain(lexicon, class_name);

  std::vector<EffectiveFeature> features;
  auto find = [&](std::string_view name) -> EffectiveFeature* {
    for (auto& f : features)
      if (f.decl.name.text() == name) return &f;
    return nullptr;
  };

  for (const LexClass* cls : chain) {
    for (const auto& decl : cls->features) {
      EffectiveFeature* existing = find(decl.name.text());
      if (!existing) {
        EffectiveFeature ef;
        ef.decl = decl;
        if (const Value* fixed = cls->fixed_for(decl.name.text()))
          ef.fixed = *fixed;
        features.push_back(std::move(ef));
        continue;
      }
      // Redeclaration in a subclass assigns a fixed value for the inherited
      // feature; the value must fit the inherited appropriateness.
      const Value& assigned = decl.appropriateness;
      if (assigned.is_top())
        throw Error(ErrorCode::AppropriatenessViolation,
                    "class '" + cls->name.text() + "' reassigns feature '" +
                        decl.name.text() + "' to top");
      if (!check_value(existing->decl.appropriateness, assigned))
        throw Error(ErrorCode::AppropriatenessViolation,
                    "class '" + cls->name.text() + "' fixes '" +
                        decl.name.text() + "' to " + assigned.print() +
                        " outside its declared range " +
                        existing->decl.appropriateness.print());
      existing->fixed = assigned;
    }
  }

  return features;
}

ExpandedEntry expand_base(const Lexicon& lexicon, std::string_view base_name) {
  const BaseEntry* base = lexicon.find_base(base_name);
  if (!base)
    throw Error(ErrorCode::UnknownClass,
                "unknown base '" + std::string(base_name) + "'");

  auto features = effective_features(lexicon, base->class_name.text());

  ExpandedEntry entry;
  entry.base_name = base->name;
  for (const LexClass* cls : class_chain(lexicon, base->class_name.text()))
    entry.class_chain.push_back(cls->name);

  for (const auto& ef : features)
    entry.values.emplace_back(ef.decl.name,
                              ef.fixed ? *ef.fixed : Value::top());

  for (const auto& [name, value] : base->assignments) {
    auto slot = std::find_if(
        entry.values.begin(), entry.values.end(),
        [&](const auto& pair) { return pair.first == name; });
    if (slot == entry.values.end())
      throw Error(ErrorCode::UnknownFeature,
                  "base '" + base->name.text() + "' assigns unknown feature '" +
                      name.text() + "'");
    const Value& appropriateness =
        std::find_if(features.begin(), features.end(),
                     [&](const auto& ef) { return ef.decl.name == name; })
            ->decl.appropriateness;
    if (!check_value(appropriateness, value))
      throw Error(ErrorCode::AppropriatenessViolation,
                  "base '" + base->name.text() + "': value " + value.print() +
                      " not appropriate for feature '" + name.text() + "' (" +
                      appropriateness.print() + ")");
    slot->second = value;
  }

  return entry;
}

std::string print_expanded(const ExpandedEntry& entry) {
  std::string out = entry.base_name.print() + " :<<";
  for (const auto& cls : entry.class_chain) out += " " + cls.print();
  out += " >>:";
  bool first = true;
  for (const auto& [name, value] : entry.values) {
    out += first ? "\n    " : " &\n    ";
    out += name.print() + ": " + value.print();
    first = false;
  }
  out += " .\n";
  return out;
}

bool operator==(const FeatureDecl& a, const FeatureDecl& b) {
  return a.name == b.name && a.appropriateness == b.appropriateness;
}

bool operator==(const LexClass& a, const LexClass& b) {
  return a.name == b.name && a.parent == b.parent && a.features == b.features &&
         a.fixed_values == b.fixed_values;
}

bool operator==(const BaseEntry& a, const BaseEntry& b) {
  return a.name == b.name && a.class_name == b.class_name &&
         a.assignments == b.assignments;
}

bool operator==(const Lexicon& a, const Lexicon& b) {
  return a.classes == b.classes && a.bases == b.bases;
}

}  // namespace semdb
