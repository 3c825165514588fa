#ifndef SEMDB_TRAFO_HPP
#define SEMDB_TRAFO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdb/exec.hpp"
#include "semdb/lexicon.hpp"
#include "semdb/value.hpp"

namespace semdb {

/// A format template: literal runs, value substitutions (~w) and newlines
/// (~n).
struct Template {
  struct Segment {
    enum class Kind { Literal, Substitute, Newline };
    Kind kind;
    std::string text;  // Literal only
  };
  std::vector<Segment> segments;

  std::size_t substitute_count() const;
};

/// Compiles a template string. `\"` and `\\` escapes are already undone by
/// the rule-file reader; this only splits directives from literals.
Template parse_template(std::string_view text);

/// A first-match transformation rule: it fires when every required feature
/// has a non-top value, and renders its template with the binding features
/// (the `with` list, defaulting to the requires list). The pseudo-features
/// `base` and `class` name the entry and its leaf class.
struct TrafoRule {
  Atom name;
  std::vector<Atom> required_features;
  Template body;
  std::vector<Atom> bindings;
};

struct RuleSet {
  std::vector<TrafoRule> rules;  // match order
};

/// Rule file format:
///
///   rule NAME requires f1, f2, ... emits "TEMPLATE" with g1, g2, ... .
///
/// The `with` clause is optional. `%` comments run to end of line.
RuleSet parse_rules(std::string_view text);

/// Renders a template over a binding list. An atom or literal prints
/// verbatim in its unquoted form; a disjunction prints semicolon-joined in
/// source order (any wrapping parentheses come from the template); top
/// prints as `-`. Throws Error(TemplateArity) on a directive/binding
/// mismatch.
std::string render_template(const Template& tmpl,
                            const std::vector<Value>& bindings);

/// First matching rule wins; nullopt when no rule matches.
std::optional<std::string> apply_rules(const RuleSet& rules,
                                       const ExpandedEntry& entry);

struct EmitResult {
  std::string text;
  std::vector<Atom> unmatched_bases;  // lexicon order
};

/// Expands every base in lexicon order, applies the rule set and
/// concatenates the rendered records. Bases no rule matches are reported,
/// not emitted. Output is byte-identical across execution modes.
EmitResult emit_outputs(const Lexicon& lexicon, const RuleSet& rules,
                        ExecMode mode = ExecMode::Parallel);

}  // namespace semdb

#endif  // SEMDB_TRAFO_HPP
