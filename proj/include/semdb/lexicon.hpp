#ifndef SEMDB_LEXICON_HPP
#define SEMDB_LEXICON_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdb/value.hpp"

namespace semdb {

/// A feature together with its appropriateness condition.
struct FeatureDecl {
  Atom name;
  Value appropriateness;
};

/// A class declaration: its parent (absent for a root class), the features it
/// introduces, and the values it fixes for features it inherits or declares
/// with a literal.
///
/// A body item `f: v` declares a new feature when `f` is not inherited; when
/// `v` is a single literal the class additionally fixes that value. For an
/// inherited `f` the item is a fixed-value assignment checked against the
/// inherited appropriateness.
struct LexClass {
  Atom name;
  std::optional<Atom> parent;
  std::vector<FeatureDecl> features;
  std::vector<std::pair<Atom, Value>> fixed_values;  // declaration order

  const Value* fixed_for(std::string_view feature) const;
  const FeatureDecl* declares(std::string_view feature) const;
};

/// A database entry: one lemma, its class, and its idiosyncratic assignments
/// in source order.
struct BaseEntry {
  Atom name;
  Atom class_name;
  std::vector<std::pair<Atom, Value>> assignments;
};

struct Lexicon {
  std::vector<LexClass> classes;  // source order
  std::vector<BaseEntry> bases;   // source order

  const LexClass* find_class(std::string_view name) const;
  const BaseEntry* find_base(std::string_view name) const;
};

/// A base with inheritance resolved: the class chain from root to leaf and
/// one value per effective feature (top when nothing assigned it).
struct ExpandedEntry {
  Atom base_name;
  std::vector<Atom> class_chain;
  std::vector<std::pair<Atom, Value>> values;  // root-first feature order

  const Value* find(std::string_view feature) const;
  /// The entry's value for `feature`; top when the feature is absent.
  const Value& value_or_top(std::string_view feature) const;
};

enum class DiagCode { UnknownParent, Cycle, UnknownClass };

struct Diagnostic {
  DiagCode code;
  Atom name;
};

std::string_view diag_code_name(DiagCode code);

/// Parses the lexicon source format:
///
///   class NAME :< PARENT >: f1: v1 & f2: v2 .
///   base NAME :<< CLASS >>: f: v .
///
/// `:< top >:` marks a root class. Values are `top`, atoms, `~`-negations and
/// `\/`-disjunctions. `%` comments run to end of line.
///
/// Throws Error on syntax errors and duplicate class/base names.
Lexicon parse_lexicon_source(std::string_view text);

/// Canonical printer; its output re-parses to an equal lexicon.
std::string print_lexicon(const Lexicon& lexicon);

/// Structural checks on the class graph: parents resolve, no cycles, every
/// base names a defined class. Problems come back as diagnostics.
std::vector<Diagnostic> check_hierarchy(const Lexicon& lexicon);

struct EffectiveFeature {
  FeatureDecl decl;
  std::optional<Value> fixed;
};

/// The full feature set of a class, root-first and in declaration order
/// within each class. A subclass's fixed value overrides its parent's.
/// Requires a valid hierarchy; throws Error(UnknownClass) otherwise.
std::vector<EffectiveFeature> effective_features(const Lexicon& lexicon,
                                                 std::string_view class_name);

/// Overlays a base's assignments on its class's fixed values. Every non-top
/// result must pass check_value against the declared appropriateness.
/// Throws Error(AppropriatenessViolation) or Error(UnknownFeature).
ExpandedEntry expand_base(const Lexicon& lexicon, std::string_view base_name);

/// Stable rendering of an expanded entry, used for byte-level comparisons.
std::string print_expanded(const ExpandedEntry& entry);

bool operator==(const FeatureDecl& a, const FeatureDecl& b);
bool operator==(const LexClass& a, const LexClass& b);
bool operator==(const BaseEntry& a, const BaseEntry& b);
bool operator==(const Lexicon& a, const Lexicon& b);

}  // namespace semdb

#endif  // SEMDB_LEXICON_HPP
