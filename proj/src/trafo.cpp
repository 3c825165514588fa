#include "semdb/trafo.hpp"

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scanner.hpp"
#include "semdb/error.hpp"

namespace semdb {

using detail::Scanner;
using detail::TokKind;
using detail::Token;

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

std::size_t Template::substitute_count() const {
  std::size_t n = 0;
  for (const auto& seg : segments)
    if (seg.kind == Segment::Kind::Substitute) ++n;
  return n;
}

Template parse_template(std::string_view text) {
  Template tmpl;
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) {
      tmpl.segments.push_back(
          {Template::Segment::Kind::Literal, std::move(literal)});
      literal.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '~') {
      if (i + 1 >= text.size())
        throw Error(ErrorCode::SyntaxError, "dangling '~' in template");
      char d = text[i + 1];
      ++i;
      if (d == 'w') {
        flush();
        tmpl.segments.push_back({Template::Segment::Kind::Substitute, {}});
      } else if (d == 'n') {
        flush();
        tmpl.segments.push_back({Template::Segment::Kind::Newline, {}});
      } else if (d == '~') {
        literal += '~';
      } else {
        throw Error(ErrorCode::SyntaxError,
                    std::string("unknown template directive '~") + d + "'");
      }
      continue;
    }
    literal += text[i];
  }
  flush();
  return tmpl;
}

namespace {

bool is_atom_token(const Token& tok) {
  return tok.kind == TokKind::Atom || tok.kind == TokKind::QuotedAtom;
}

std::vector<Atom> parse_name_list(Scanner& sc) {
  std::vector<Atom> names;
  while (true) {
    const Token& tok = sc.peek();
    if (!is_atom_token(tok)) sc.fail(tok, "expected a feature name");
    Token name = sc.next();
    names.emplace_back(name.text, name.kind == TokKind::QuotedAtom);
    if (!sc.accept(TokKind::Comma)) break;
  }
  return names;
}

// The rendered form of a value: atoms verbatim (unquoted), disjunctions
// semicolon-joined, top as `-`.
std::string render_value(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::Top:
      return "-";
    case Value::Kind::Lit:
      return value.atom().text();
    case Value::Kind::Or: {
      std::string out;
      for (std::size_t i = 0; i < value.alternatives().size(); ++i) {
        if (i > 0) out += ';';
        out += render_value(value.alternatives()[i]);
      }
      return out;
    }
    case Value::Kind::Not:
      return "~" + render_value(value.operand());
  }
  return {};
}

}  // namespace

RuleSet parse_rules(std::string_view text) {
  Scanner sc(text);
  RuleSet set;

  while (!sc.at_end()) {
    Token kw = sc.peek();
    if (!(kw.kind == TokKind::Atom && kw.text == "rule"))
      sc.fail(kw, "expected 'rule'");
    sc.next();

    const Token& nameTok = sc.peek();
    if (!is_atom_token(nameTok)) sc.fail(nameTok, "expected a rule name");
    Token name = sc.next();

    TrafoRule rule;
    rule.name = Atom(name.text, name.kind == TokKind::QuotedAtom);
    for (const auto& existing : set.rules)
      if (existing.name == rule.name)
        throw Error(ErrorCode::DuplicateRule,
                    "duplicate rule '" + name.text + "'", name.line,
                    name.column);

    Token req = sc.next();
    if (!(req.kind == TokKind::Atom && req.text == "requires"))
      sc.fail(req, "expected 'requires'");
    rule.required_features = parse_name_list(sc);

    Token emits = sc.next();
    if (!(emits.kind == TokKind::Atom && emits.text == "emits"))
      sc.fail(emits, "expected 'emits'");
    Token body = sc.expect(TokKind::String, "a template string");
    try {
      rule.body = parse_template(body.text);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), body.line, body.column);
    }

    if (sc.peek().kind == TokKind::Atom && sc.peek().text == "with") {
      sc.next();
      rule.bindings = parse_name_list(sc);
    } else {
      rule.bindings = rule.required_features;
    }

    if (rule.body.substitute_count() != rule.bindings.size())
      throw Error(ErrorCode::TemplateArity,
                  "rule '" + name.text + "': template has " +
                      std::to_string(rule.body.substitute_count()) +
                      " substitutions but " +
                      std::to_string(rule.bindings.size()) + " bindings",
                  name.line, name.column);

    sc.expect(TokKind::Dot, "'.'");
    set.rules.push_back(std::move(rule));
  }

  return set;
}

std::string render_template(const Template& tmpl,
                            const std::vector<Value>& bindings) {
  if (tmpl.substitute_count() != bindings.size())
    throw Error(ErrorCode::TemplateArity,
                "template expects " + std::to_string(tmpl.substitute_count()) +
                    " bindings, got " + std::to_string(bindings.size()));
  std::string out;
  std::size_t next = 0;
  for (const auto& seg : tmpl.segments) {
    switch (seg.kind) {
      case Template::Segment::Kind::Literal:
        out += seg.text;
        break;
      case Template::Segment::Kind::Substitute:
        out += render_value(bindings[next++]);
        break;
      case Template::Segment::Kind::Newline:
        out += '\n';
        break;
    }
  }
  return out;
}

namespace {

Value binding_value(const ExpandedEntry& entry, const Atom& feature) {
  if (feature.text() == "base") return Value::lit(entry.base_name);
  if (feature.text() == "class") return Value::lit(entry.class_chain.back());
  return entry.value_or_top(feature.text());
}

}  // namespace

std::optional<std::string> apply_rules(const RuleSet& rules,
                                       const ExpandedEntry& entry) {
  for (const auto& rule : rules.rules) {
    bool matches = true;
    for (const auto& feature : rule.required_features) {
      if (feature.text() == "base" || feature.text() == "class") continue;
      const Value* v = entry.find(feature.text());
      if (!v || v->is_top()) {
        matches = false;
        break;
      }
    }
    if (!matches) continue;

    std::vector<Value> bindings;
    bindings.reserve(rule.bindings.size());
    for (const auto& feature : rule.bindings)
      bindings.push_back(binding_value(entry, feature));
    return render_template(rule.body, bindings);
  }
  return std::nullopt;
}

namespace {

struct EntryOutcome {
  std::string text;
  bool matched = false;
  std::exception_ptr error;
};

EntryOutcome process_entry(const Lexicon& lexicon, const RuleSet& rules,
                           const BaseEntry& base) {
  EntryOutcome outcome;
  try {
    ExpandedEntry entry = expand_base(lexicon, base.name.text());
    if (auto text = apply_rules(rules, entry)) {
      outcome.text = std::move(*text);
      outcome.matched = true;
    }
  } catch (...) {
    outcome.error = std::current_exception();
  }
  return outcome;
}

}  // namespace

EmitResult emit_outputs(const Lexicon& lexicon, const RuleSet& rules,
                        ExecMode mode) {
  const std::size_t n = lexicon.bases.size();
  std::vector<EntryOutcome> outcomes(n);

#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      outcomes[static_cast<std::size_t>(i)] =
          process_entry(lexicon, rules, lexicon.bases[static_cast<std::size_t>(i)]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      outcomes[i] = process_entry(lexicon, rules, lexicon.bases[i]);
  }
#else
  (void)mode;
  for (std::size_t i = 0; i < n; ++i)
    outcomes[i] = process_entry(lexicon, rules, lexicon.bases[i]);
#endif

  // First failure in lexicon order wins, whatever order the workers ran in.
  for (const auto& outcome : outcomes)
    if (outcome.error) std::rethrow_exception(outcome.error);

  EmitResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (outcomes[i].matched)
      result.text += outcomes[i].text;
    else
      result.unmatched_bases.push_back(lexicon.bases[i].name);
  }
  return result;
}

}  // namespace semdb
