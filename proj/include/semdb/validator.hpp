#ifndef SEMDB_VALIDATOR_HPP
#define SEMDB_VALIDATOR_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semdb/catalog.hpp"
#include "semdb/exec.hpp"
#include "semdb/lexicon.hpp"
#include "semdb/vit.hpp"

namespace semdb {

/// Everything the validator knows about predicates: patterns from the
/// lexicon's bases and the catalog's closed-class inventory, plus each base
/// predicate's declared roles and sort condition.
struct PatternIndex {
  std::map<std::string, PredPattern> by_name;
  std::map<std::string, std::set<std::string>> declared_roles;
  std::map<std::string, Value> declared_sorts;
};

/// Built deterministically: base patterns in lexicon order (first occurrence
/// of a name wins), then closed-class patterns for names still free.
PatternIndex build_pattern_index(const Lexicon& lexicon,
                                 const Catalog& catalog);

/// Maps a sort atom to the set of sort atoms it subsumes. Lookup is
/// reflexive whether or not the identity pair is stored.
class SortAliasTable {
 public:
  void add(std::string name, std::set<std::string> covers);
  bool subsumes(std::string_view sort, std::string_view candidate) const;
  const std::set<std::string>* covered(std::string_view sort) const;

 private:
  std::map<std::string, std::set<std::string>> aliases_;
};

/// Alias file format: `name: a, b, c .` per entry, `%` comments.
SortAliasTable parse_sort_aliases(std::string_view text);

enum class ViolationCode {
  V1_ArityShape,
  V2_UndefinedLabel,
  V3_RoleAttachment,
  V4_RoleDeclaration,
  V5_SortMismatch,
  V6_ScopeReference,
  V7_MainLabel,
  V8_GroupShape,
  V9_SyntaxVocabulary,
};

std::string_view violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string location;  // predicate or slot
  std::string detail;    // cites the offending term
};

struct ValidateOptions {
  /// Flag semantics predicates absent from the index as V1. Off by default:
  /// the database covers the open-class vocabulary, not every grammar
  /// predicate.
  bool strict_unknown = false;
};

/// Runs the nine checks; an empty result means the term is consistent with
/// the database. Violations come back in slot order, then source order.
std::vector<Violation> validate(const Vit& vit, const PatternIndex& index,
                                const SortAliasTable& aliases,
                                const ValidateOptions& options = {});

/// Validates many terms against one shared index.
std::vector<std::vector<Violation>> validate_batch(
    const std::vector<Vit>& vits, const PatternIndex& index,
    const SortAliasTable& aliases, const ValidateOptions& options = {},
    ExecMode mode = ExecMode::Parallel);

/// One line per violation: CODE<TAB>location<TAB>detail.
std::string render_report(const std::vector<Violation>& violations);

/// The same records as a JSON array (machine-readable form of the report).
std::string render_report_json(const std::vector<Violation>& violations);

}  // namespace semdb

#endif  // SEMDB_VALIDATOR_HPP
