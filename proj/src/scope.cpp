#include "semdb/scope.hpp"

#include <algorithm>
#include <set>

#include "semdb/error.hpp"

namespace semdb {

namespace {

bool atom_prefix(const Term& term, char prefix) {
  return term.is_atom() && !term.text().empty() && term.text()[0] == prefix;
}

void push_unique(std::vector<std::string>& list, const std::string& item) {
  if (std::find(list.begin(), list.end(), item) == list.end())
    list.push_back(item);
}

}  // namespace

std::string print_plugging(const Plugging& plugging) {
  if (plugging.assignment.empty()) return "(empty)";
  std::string out;
  for (const auto& [hole, label] : plugging.assignment) {
    if (!out.empty()) out += ' ';
    out += hole + "->" + label;
  }
  return out;
}

ScopeGraph build_scope_graph(const Vit& vit, const Catalog& catalog) {
  ScopeGraph graph;
  graph.root_label = vit.main_label;

  std::set<std::string> holes;
  std::set<std::string> pred_labels;
  std::set<std::string> in_group;
  std::set<std::string> owned_by_pred;
  std::vector<std::string> group_labels;

  for (const Term& pred : vit.semantics) {
    const PredPattern* pattern = catalog.find_closed_pattern(pred.text());
    if (pattern && pattern->arg_kinds.size() != pred.arity()) pattern = nullptr;

    if (pred.arity() == 0 || !atom_prefix(pred.args()[0], 'l'))
      throw Error(ErrorCode::UnknownKind,
                  "cannot determine the label of " + pred.print());
    const std::string& own = pred.args()[0].text();
    pred_labels.insert(own);

    for (std::size_t i = 1; i < pred.arity(); ++i) {
      const Term& arg = pred.args()[i];
      ArgKind kind;
      if (pattern) {
        kind = pattern->arg_kinds[i];
      } else if (atom_prefix(arg, 'l')) {
        kind = ArgKind::RestrictorLabel;
      } else if (atom_prefix(arg, 'i')) {
        kind = ArgKind::Instance;
      } else if (atom_prefix(arg, 'h')) {
        kind = ArgKind::Hole;
      } else if (arg.kind() == Term::Kind::Int) {
        kind = ArgKind::Cardinality;
      } else {
        throw Error(ErrorCode::UnknownKind,
                    "cannot classify argument " + arg.print() + " of " +
                        pred.print());
      }
      if (!arg.is_atom() && kind != ArgKind::Cardinality)
        throw Error(ErrorCode::UnknownKind,
                    "cannot classify argument " + arg.print() + " of " +
                        pred.print());
      switch (kind) {
        case ArgKind::Hole:
          holes.insert(arg.text());
          push_unique(graph.containment[own], arg.text());
          break;
        case ArgKind::RestrictorLabel:
          owned_by_pred.insert(arg.text());
          push_unique(graph.containment[own], arg.text());
          break;
        case ArgKind::Label:
        case ArgKind::Instance:
        case ArgKind::Cardinality:
          break;
      }
    }
  }

  for (const Term& group : vit.groups) {
    if (group.text() != "sem_group" || group.arity() != 2 ||
        !group.args()[0].is_atom() ||
        group.args()[1].kind() != Term::Kind::List)
      continue;
    const std::string& label = group.args()[0].text();
    push_unique(group_labels, label);
    for (const Term& member : group.args()[1].args()) {
      if (!member.is_atom()) continue;
      in_group.insert(member.text());
      push_unique(graph.containment[label], member.text());
    }
  }

  for (const Term& entry : vit.scope) {
    if (entry.text() == "leq" && entry.arity() == 2 &&
        entry.args()[0].is_atom() && entry.args()[1].is_atom()) {
      auto edge = std::make_pair(entry.args()[0].text(), entry.args()[1].text());
      if (std::find(graph.leq.begin(), graph.leq.end(), edge) == graph.leq.end())
        graph.leq.push_back(std::move(edge));
    }
  }

  graph.holes.assign(holes.begin(), holes.end());

  // Labels free to plug a hole: maximal (a group label, or a predicate label
  // in no group), not the root, not owned by a predicate, and actually part
  // of the scope problem.
  std::set<std::string> scope_mentions;
  for (const Term& entry : vit.scope) {
    if (entry.text() != "leq" && entry.text() != "ccom_plug") continue;
    for (const Term& arg : entry.args())
      if (arg.is_atom()) scope_mentions.insert(arg.text());
  }

  auto dominates_hole = [&](const std::string& label) {
    std::vector<std::string> work{label};
    std::set<std::string> seen;
    while (!work.empty()) {
      std::string cur = work.back();
      work.pop_back();
      if (!seen.insert(cur).second) continue;
      if (holes.count(cur)) return true;
      auto it = graph.containment.find(cur);
      if (it == graph.containment.end()) continue;
      for (const auto& child : it->second) work.push_back(child);
    }
    return false;
  };

  std::set<std::string> candidates;
  for (const auto& label : group_labels) candidates.insert(label);
  for (const auto& label : pred_labels)
    if (in_group.count(label) == 0) candidates.insert(label);
  for (const auto& label : candidates) {
    if (label == graph.root_label) continue;
    if (owned_by_pred.count(label)) continue;
    if (scope_mentions.count(label) || dominates_hole(label))
      graph.floating_labels.push_back(label);
  }
  std::sort(graph.floating_labels.begin(), graph.floating_labels.end());

  return graph;
}

namespace {

using EdgeMap = std::map<std::string, std::vector<std::string>>;

EdgeMap dominance_edges(const ScopeGraph& graph, const Plugging& plugging) {
  EdgeMap edges = graph.containment;
  for (const auto& [hole, label] : plugging.assignment)
    push_unique(edges[hole], label);
  return edges;
}

bool reaches(const EdgeMap& edges, const std::string& from,
             const std::string& target) {
  std::vector<std::string> work{from};
  std::set<std::string> seen;
  while (!work.empty()) {
    std::string cur = work.back();
    work.pop_back();
    if (cur == target) return true;
    if (!seen.insert(cur).second) continue;
    auto it = edges.find(cur);
    if (it == edges.end()) continue;
    for (const auto& next : it->second) work.push_back(next);
  }
  return false;
}

// Full admissibility of a complete plugging: the dominance relation is a
// tree rooted at the root label covering every hole and floating label, and
// each leq constraint's lower end sits at or below its upper end.
bool admissible(const ScopeGraph& graph, const Plugging& plugging) {
  EdgeMap edges = dominance_edges(graph, plugging);

  std::map<std::string, int> indegree;
  for (const auto& [parent, children] : edges) {
    (void)parent;
    for (const auto& child : children) ++indegree[child];
  }
  if (indegree.count(graph.root_label)) return false;
  for (const auto& [node, degree] : indegree)
    if (degree > 1) return false;

  std::set<std::string> reachable;
  std::vector<std::string> work{graph.root_label};
  while (!work.empty()) {
    std::string cur = work.back();
    work.pop_back();
    if (!reachable.insert(cur).second) continue;
    auto it = edges.find(cur);
    if (it == edges.end()) continue;
    for (const auto& next : it->second) work.push_back(next);
  }
  for (const auto& hole : graph.holes)
    if (!reachable.count(hole)) return false;
  for (const auto& label : graph.floating_labels)
    if (!reachable.count(label)) return false;

  for (const auto& [lower, upper] : graph.leq)
    if (!reaches(edges, upper, lower)) return false;

  return true;
}

void search(const ScopeGraph& graph, std::size_t hole_index,
            Plugging& partial, std::set<std::string>& used,
            std::vector<Plugging>& out) {
  if (hole_index == graph.holes.size()) {
    if (admissible(graph, partial)) out.push_back(partial);
    return;
  }
  const std::string& hole = graph.holes[hole_index];
  for (const auto& label : graph.floating_labels) {
    if (used.count(label)) continue;
    // Plugging `label` into `hole` closes a cycle when the hole is already
    // dominated by that label.
    EdgeMap edges = dominance_edges(graph, partial);
    if (reaches(edges, label, hole)) continue;
    partial.assignment[hole] = label;
    used.insert(label);
    search(graph, hole_index + 1, partial, used, out);
    used.erase(label);
    partial.assignment.erase(hole);
  }
}

}  // namespace

std::vector<Plugging> enumerate_pluggings(const ScopeGraph& graph) {
  if (graph.holes.size() != graph.floating_labels.size())
    throw Error(ErrorCode::CardinalityMismatch,
                std::to_string(graph.holes.size()) + " holes vs " +
                    std::to_string(graph.floating_labels.size()) +
                    " floating labels");
  std::vector<Plugging> out;
  Plugging partial;
  std::set<std::string> used;
  search(graph, 0, partial, used, out);
  return out;
}

DefaultPlugging default_plugging(const Vit& vit, const ScopeGraph& graph) {
  std::map<std::string, std::string> plugs;
  for (const Term& entry : vit.scope) {
    if (entry.text() != "ccom_plug" || entry.arity() != 2 ||
        !entry.args()[0].is_atom() || !entry.args()[1].is_atom())
      continue;
    const std::string& hole = entry.args()[0].text();
    const std::string& label = entry.args()[1].text();
    auto [it, inserted] = plugs.emplace(hole, label);
    if (!inserted && it->second != label)
      throw Error(ErrorCode::ConflictingDefault,
                  "hole " + hole + " has conflicting ccom_plug entries");
  }

  DefaultPlugging result;
  for (const auto& hole : graph.holes) {
    auto it = plugs.find(hole);
    if (it == plugs.end())
      throw Error(ErrorCode::IncompleteDefault,
                  "hole " + hole + " has no ccom_plug entry");
    result.plugging.assignment[hole] = it->second;
  }

  std::set<std::string> targets;
  bool bijective = true;
  for (const auto& [hole, label] : result.plugging.assignment) {
    (void)hole;
    if (!targets.insert(label).second ||
        !std::binary_search(graph.floating_labels.begin(),
                            graph.floating_labels.end(), label))
      bijective = false;
  }
  result.admissible = bijective && admissible(graph, result.plugging);
  return result;
}

namespace {

struct TreeBuilder {
  const ScopeGraph& graph;
  const Plugging& plugging;
  std::map<std::string, std::vector<std::string>> preds_by_label;
  std::set<std::string> visited;

  ScopedTree build(const std::string& label, const std::string& via) {
    ScopedTree node;
    node.label = label;
    node.via_hole = via;
    visited.insert(label);
    if (auto it = preds_by_label.find(label); it != preds_by_label.end())
      node.predicates = it->second;
    auto contained = graph.containment.find(label);
    if (contained == graph.containment.end()) return node;
    for (const auto& child : contained->second) {
      auto plug = plugging.assignment.find(child);
      if (plug != plugging.assignment.end()) {
        if (!visited.count(plug->second))
          node.children.push_back(build(plug->second, child));
      } else if (!visited.count(child)) {
        node.children.push_back(build(child, ""));
      }
    }
    return node;
  }
};

}  // namespace

ScopedTree build_scoped_tree(const Vit& vit, const ScopeGraph& graph,
                             const Plugging& plugging) {
  TreeBuilder builder{graph, plugging, {}, {}};
  for (const Term& pred : vit.semantics)
    if (pred.arity() > 0 && pred.args()[0].is_atom())
      builder.preds_by_label[pred.args()[0].text()].push_back(pred.print());

  ScopedTree root = builder.build(graph.root_label, "");

  // Fragments with no scope constraints attach at the root: find each
  // uncovered predicate's outermost uncovered container and add it there.
  std::map<std::string, std::string> container;
  for (const auto& [parent, children] : graph.containment)
    for (const auto& child : children) container.emplace(child, parent);

  for (const Term& pred : vit.semantics) {
    if (pred.arity() == 0 || !pred.args()[0].is_atom()) continue;
    std::string label = pred.args()[0].text();
    if (builder.visited.count(label)) continue;
    std::set<std::string> walk_guard;
    while (true) {
      auto up = container.find(label);
      if (up == container.end() || builder.visited.count(up->second) ||
          !walk_guard.insert(label).second)
        break;
      label = up->second;
    }
    if (!builder.visited.count(label))
      root.children.push_back(builder.build(label, ""));
  }

  return root;
}

namespace {

void render_node(const ScopedTree& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (!node.via_hole.empty()) out += node.via_hole + "->";
  out += node.label;
  if (!node.predicates.empty()) {
    out += "  ";
    for (std::size_t i = 0; i < node.predicates.size(); ++i) {
      if (i > 0) out += ", ";
      out += node.predicates[i];
    }
  }
  out += '\n';
  for (const auto& child : node.children) render_node(child, depth + 1, out);
}

}  // namespace

std::string render_scoped_tree(const ScopedTree& tree) {
  std::string out;
  render_node(tree, 0, out);
  return out;
}

std::size_t tree_predicate_count(const ScopedTree& tree) {
  std::size_t n = tree.predicates.size();
  for (const auto& child : tree.children) n += tree_predicate_count(child);
  return n;
}

}  // namespace semdb
