#ifndef SEMDB_SCOPE_HPP
#define SEMDB_SCOPE_HPP

#include <map>
#include <string>
#include <vector>

#include "semdb/catalog.hpp"
#include "semdb/vit.hpp"

namespace semdb {

/// The underspecified-scope problem carried by an interface term: the holes
/// operators open, the label fragments free to plug them, what each label
/// statically contains, and the leq subordination constraints.
struct ScopeGraph {
  std::vector<std::string> holes;            // sorted
  std::vector<std::string> floating_labels;  // sorted
  std::string root_label;
  std::map<std::string, std::vector<std::string>> containment;
  std::vector<std::pair<std::string, std::string>> leq;  // (lower, upper)
};

/// One reading: a bijection from holes to floating labels.
struct Plugging {
  std::map<std::string, std::string> assignment;  // hole -> label

  friend bool operator==(const Plugging& a, const Plugging& b) {
    return a.assignment == b.assignment;
  }
};

/// Renders `h1->l3 h2->l2` in hole order; `(empty)` for no holes.
std::string print_plugging(const Plugging& plugging);

/// Derives the scope graph. Argument kinds come from the catalog's
/// closed-class patterns, falling back to the identifier convention
/// (l/i/h prefixes, integers). Containment covers predicate-owned holes and
/// labels plus group members. A label floats when it is maximal (a group
/// label, or a predicate label in no group), is not the root, is not owned
/// by a predicate, and takes part in scoping (it occurs in the scope slot or
/// dominates a hole). Throws Error(UnknownKind) when an argument defies
/// classification.
ScopeGraph build_scope_graph(const Vit& vit, const Catalog& catalog);

/// All admissible readings: bijections under which the dominance relation
/// (containment plus plugs) forms a tree rooted at the root label and every
/// leq(lower, upper) places lower at or below upper's plug. Ordered
/// lexicographically by hole, then label. Throws
/// Error(CardinalityMismatch) when holes and floating labels differ in
/// number.
std::vector<Plugging> enumerate_pluggings(const ScopeGraph& graph);

struct DefaultPlugging {
  Plugging plugging;
  bool admissible;
};

/// Reads the syntax-derived default from the ccom_plug facts and reports
/// whether it is among the admissible readings. Throws
/// Error(IncompleteDefault) when a hole lacks its entry,
/// Error(ConflictingDefault) on contradictory entries.
DefaultPlugging default_plugging(const Vit& vit, const ScopeGraph& graph);

/// A reading materialized as a tree: every semantics predicate appears at
/// its label's node exactly once; fragments outside the scope problem hang
/// off the root.
struct ScopedTree {
  std::string label;
  std::string via_hole;  // hole this node plugs, empty for containment edges
  std::vector<std::string> predicates;  // rendered terms at this label
  std::vector<ScopedTree> children;
};

ScopedTree build_scoped_tree(const Vit& vit, const ScopeGraph& graph,
                             const Plugging& plugging);

/// Indented outline: label, predicate list, children.
std::string render_scoped_tree(const ScopedTree& tree);

/// Number of predicates in the tree.
std::size_t tree_predicate_count(const ScopedTree& tree);

}  // namespace semdb

#endif  // SEMDB_SCOPE_HPP
