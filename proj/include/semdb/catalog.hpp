#ifndef SEMDB_CATALOG_HPP
#define SEMDB_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdb/lexicon.hpp"
#include "semdb/value.hpp"

namespace semdb {

/// Classification of one argument position of a predicate template.
enum class ArgKind { Label, Instance, Hole, RestrictorLabel, Cardinality };

std::string_view arg_kind_name(ArgKind kind);

/// One predicate contributed by a scheme besides the head: either a fixed
/// predicate name or a role placeholder filled from a role feature.
struct ExtraPred {
  std::optional<Atom> fixed_name;       // set for fixed predicates
  std::optional<std::size_t> role_slot; // index into SemanticClass::role_slots
  std::vector<ArgKind> arg_kinds;
};

/// The predicate template of a semantic class: the head relation (named by
/// the entry's predname unless the class fixes a name) plus extra predicates.
/// The first argument of every template is a label.
struct PredScheme {
  std::optional<Atom> head_name;  // fixed head, absent = use predname
  std::vector<ArgKind> head_kinds;
  std::vector<ExtraPred> extras;
};

struct SemanticClass {
  Atom name;
  PredScheme scheme;
  std::vector<Atom> role_slots;  // feature names, e.g. role_a1
};

/// A concrete predicate expectation: name, argument kinds, originating base
/// (empty for closed-class patterns).
struct PredPattern {
  Atom predicate_name;
  std::vector<ArgKind> arg_kinds;
  Atom source_base;
};

class Catalog {
 public:
  const SemanticClass* find_class(std::string_view name) const;
  const PredPattern* find_closed_pattern(std::string_view name) const;

  const std::vector<SemanticClass>& classes() const { return classes_; }
  const std::vector<PredPattern>& closed_class_patterns() const {
    return patterns_;
  }

  void add_class(SemanticClass cls);
  void add_closed_pattern(PredPattern pattern);

 private:
  std::vector<SemanticClass> classes_;
  std::vector<PredPattern> patterns_;
};

/// The shipped catalog: transitive_verb, common_noun, det_quant,
/// demonstrative, wh_question and card_quantifier classes plus the decl,
/// pron and ein_card_qua closed-class patterns.
const Catalog& builtin_catalog();

/// Loads a catalog from its declarative text form:
///
///   semclass transitive_verb head R 'L,I' & role role_a1 'L,I,I1'
///                                         & role role_a2 'L,I,I2' .
///   semclass wh_question head whq 'L,I,H' & pred tloc 'L2,I2,I1' .
///   pattern decl 'L,H' .
///
/// Kind strings are comma-separated tokens: the first must be an L-token
/// (the template's label); later L-tokens are owned labels, I-tokens
/// instances, H-tokens holes, N a cardinality. `head R` names the head from
/// the entry's predname; `head <atom>` fixes it.
Catalog load_catalog(std::string_view text);

std::string builtin_catalog_source();

/// Instantiates the predicate patterns an expanded entry contributes: the
/// head takes the entry's predname, role placeholders take the role feature
/// values. Throws Error(UnknownSemClass), Error(MissingRole) or
/// Error(MissingPredName).
std::vector<PredPattern> predscheme_instances(const ExpandedEntry& entry,
                                              const Catalog& catalog);

}  // namespace semdb

#endif  // SEMDB_CATALOG_HPP
