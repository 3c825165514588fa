#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "semdb/catalog.hpp"
#include "semdb/demo.hpp"
#include "semdb/error.hpp"
#include "semdb/scope.hpp"
#include "support.hpp"

using namespace semdb;

namespace {

Vit example_vit() { return parse_vit(demo::example_vit_source()); }

ScopeGraph example_graph() {
  return build_scope_graph(example_vit(), builtin_catalog());
}

Plugging make_plugging(
    std::initializer_list<std::pair<std::string, std::string>> pairs) {
  Plugging p;
  for (const auto& [hole, label] : pairs) p.assignment[hole] = label;
  return p;
}

/// Random scope problem: a root, n holes each contained by the root or a
/// floating label, n floating labels, occasional inner labels and random
/// leq constraints.
ScopeGraph random_graph(testing::Rng& rng) {
  ScopeGraph graph;
  graph.root_label = "l0";
  int n = rng.below(6);
  for (int i = 0; i < n; ++i) graph.holes.push_back("h" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    graph.floating_labels.push_back("m" + std::to_string(i));
  std::sort(graph.holes.begin(), graph.holes.end());
  std::sort(graph.floating_labels.begin(), graph.floating_labels.end());

  for (int i = 0; i < n; ++i) {
    std::string container =
        rng.chance(0.4) ? graph.root_label
                        : graph.floating_labels[static_cast<std::size_t>(
                              rng.below(n))];
    graph.containment[container].push_back(graph.holes[static_cast<std::size_t>(i)]);
  }
  // inner material under some floating labels
  for (int i = 0; i < n; ++i)
    if (rng.chance(0.3))
      graph.containment[graph.floating_labels[static_cast<std::size_t>(i)]]
          .push_back("c" + std::to_string(i));

  int constraints = rng.below(2 * n + 1);
  for (int i = 0; i < constraints; ++i) {
    std::string lower =
        graph.floating_labels[static_cast<std::size_t>(rng.below(n))];
    std::string upper = graph.holes[static_cast<std::size_t>(rng.below(n))];
    auto edge = std::make_pair(lower, upper);
    if (std::find(graph.leq.begin(), graph.leq.end(), edge) == graph.leq.end())
      graph.leq.push_back(edge);
  }
  return graph;
}

}  // namespace

TEST_CASE("the example term yields the documented scope graph") {
  ScopeGraph graph = example_graph();
  CHECK(graph.holes == std::vector<std::string>{"h1", "h2"});
  CHECK(graph.floating_labels == std::vector<std::string>{"l2", "l3"});
  CHECK(graph.root_label == "l5");

  REQUIRE(graph.containment.count("l5"));
  CHECK(graph.containment.at("l5") == std::vector<std::string>{"h1"});
  CHECK(graph.containment.at("l3") == std::vector<std::string>{"l1", "h2"});
  CHECK(graph.containment.at("l2") == std::vector<std::string>{"l4"});
  CHECK(graph.containment.at("l1") == std::vector<std::string>{"l6"});

  REQUIRE(graph.leq.size() == 3);
  CHECK(graph.leq[0] == std::pair<std::string, std::string>{"l2", "h2"});
  CHECK(graph.leq[1] == std::pair<std::string, std::string>{"l2", "h1"});
  CHECK(graph.leq[2] == std::pair<std::string, std::string>{"l3", "h1"});
}

TEST_CASE("a term without holes has nothing to scope") {
  Vit vit = parse_vit(
      "vit(segment_description(x,yes,'a'),[p(l1,i1),q(l2,i2)],l1,"
      "[],[],[],[],[],[],[])");
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  CHECK(graph.holes.empty());
  CHECK(graph.floating_labels.empty());
  auto pluggings = enumerate_pluggings(graph);
  REQUIRE(pluggings.size() == 1);
  CHECK(pluggings[0].assignment.empty());
  CHECK(print_plugging(pluggings[0]) == "(empty)");
}

TEST_CASE("the synthetic two-quantifier term builds the expected graph") {
  Vit vit = parse_vit(demo::two_quantifier_vit_source());
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  CHECK(graph.holes == std::vector<std::string>{"h0", "h1", "h2"});
  CHECK(graph.floating_labels == std::vector<std::string>{"l1", "l2", "l3"});
  CHECK(graph.root_label == "l0");
}

TEST_CASE("unclassifiable arguments are an error") {
  Vit vit = parse_vit(
      "vit(segment_description(x,yes,'a'),[p(l1,xyz)],l1,[],[],[],[],[],[],[])");
  try {
    build_scope_graph(vit, builtin_catalog());
    FAIL("expected UnknownKind");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownKind);
  }
}

TEST_CASE("the example term has exactly one reading") {
  ScopeGraph graph = example_graph();
  auto pluggings = enumerate_pluggings(graph);
  REQUIRE(pluggings.size() == 1);
  CHECK(pluggings[0] == make_plugging({{"h1", "l3"}, {"h2", "l2"}}));
  CHECK(print_plugging(pluggings[0]) == "h1->l3 h2->l2");

  // the competing bijection closes a cycle and breaks a constraint
  CHECK(testing::oracle_enumerate(graph) == pluggings);
}

TEST_CASE("the two-quantifier term has exactly two readings") {
  Vit vit = parse_vit(demo::two_quantifier_vit_source());
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  auto pluggings = enumerate_pluggings(graph);
  REQUIRE(pluggings.size() == 2);
  CHECK(pluggings[0] ==
        make_plugging({{"h0", "l1"}, {"h1", "l2"}, {"h2", "l3"}}));
  CHECK(pluggings[1] ==
        make_plugging({{"h0", "l2"}, {"h1", "l3"}, {"h2", "l1"}}));
  CHECK(testing::oracle_enumerate(graph) == pluggings);
}

TEST_CASE("hole and label counts must agree") {
  ScopeGraph graph;
  graph.root_label = "l0";
  graph.holes = {"h1", "h2"};
  graph.floating_labels = {"m1"};
  graph.containment["l0"] = {"h1", "h2"};
  try {
    enumerate_pluggings(graph);
    FAIL("expected CardinalityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CardinalityMismatch);
  }
}

TEST_CASE("label-to-label constraints are interpreted as reachability") {
  ScopeGraph graph;
  graph.root_label = "l0";
  graph.holes = {"h1", "h2"};
  graph.floating_labels = {"m1", "m2"};
  graph.containment["l0"] = {"h1"};
  graph.containment["m1"] = {"h2"};
  graph.containment["m2"] = {"c1"};
  // m2 must end up below m1
  graph.leq.emplace_back("c1", "m1");
  auto pluggings = enumerate_pluggings(graph);
  REQUIRE(pluggings.size() == 1);
  CHECK(pluggings[0] == make_plugging({{"h1", "m1"}, {"h2", "m2"}}));
  CHECK(testing::oracle_enumerate(graph) == pluggings);
}

TEST_CASE("enumeration matches brute force on random graphs") {
  testing::Rng rng(20260806);
  int nonempty = 0;
  for (int i = 0; i < 600; ++i) {
    ScopeGraph graph = random_graph(rng);
    auto fast = enumerate_pluggings(graph);
    auto slow = testing::oracle_enumerate(graph);
    if (fast != slow) {
      MESSAGE("holes: " << graph.holes.size()
                        << " leq: " << graph.leq.size());
      for (const auto& p : fast) MESSAGE("fast: " << print_plugging(p));
      for (const auto& p : slow) MESSAGE("slow: " << print_plugging(p));
    }
    REQUIRE(fast.size() == slow.size());
    CHECK(fast == slow);
    if (!fast.empty()) ++nonempty;
  }
  CHECK(nonempty > 100);  // the generator produces solvable cases too
}

TEST_CASE("adding a constraint never adds readings") {
  testing::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    ScopeGraph graph = random_graph(rng);
    if (graph.holes.empty()) continue;
    auto before = enumerate_pluggings(graph);

    ScopeGraph tightened = graph;
    std::string lower = graph.floating_labels[static_cast<std::size_t>(
        rng.below(static_cast<int>(graph.floating_labels.size())))];
    std::string upper = graph.holes[static_cast<std::size_t>(
        rng.below(static_cast<int>(graph.holes.size())))];
    tightened.leq.emplace_back(lower, upper);
    auto after = enumerate_pluggings(tightened);

    CHECK(after.size() <= before.size());
    // and every surviving reading was admissible before
    for (const auto& plugging : after)
      CHECK(std::find(before.begin(), before.end(), plugging) != before.end());
  }
}

TEST_CASE("the default plugging of the example is the unique reading") {
  Vit vit = example_vit();
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  DefaultPlugging fallback = default_plugging(vit, graph);
  CHECK(fallback.plugging == make_plugging({{"h1", "l3"}, {"h2", "l2"}}));
  CHECK(fallback.admissible);

  auto pluggings = enumerate_pluggings(graph);
  CHECK(std::find(pluggings.begin(), pluggings.end(), fallback.plugging) !=
        pluggings.end());
}

TEST_CASE("a term without holes has an admissible empty default") {
  Vit vit = parse_vit(
      "vit(segment_description(x,yes,'a'),[p(l1,i1)],l1,[],[],[],[],[],[],[])");
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  DefaultPlugging fallback = default_plugging(vit, graph);
  CHECK(fallback.plugging.assignment.empty());
  CHECK(fallback.admissible);
}

TEST_CASE("a missing default entry is reported by hole") {
  Vit vit = example_vit();
  vit.scope.erase(vit.scope.begin());  // ccom_plug(h2,l2)
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  try {
    default_plugging(vit, graph);
    FAIL("expected IncompleteDefault");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteDefault);
    CHECK(std::string(e.what()).find("h2") != std::string::npos);
  }
}

TEST_CASE("contradictory default entries are rejected") {
  Vit vit = example_vit();
  vit.scope.push_back(parse_term("ccom_plug(h2,l9)"));
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  CHECK_THROWS_AS(default_plugging(vit, graph), const Error&);
}

TEST_CASE("an inadmissible default is flagged, not rejected") {
  Vit vit = example_vit();
  // swap the two plugs: this closes a cycle
  vit.scope[0] = parse_term("ccom_plug(h2,l3)");
  vit.scope[1] = parse_term("ccom_plug(h1,l2)");
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  DefaultPlugging fallback = default_plugging(vit, graph);
  CHECK(!fallback.admissible);
}

TEST_CASE("every reading induces a tree covering each predicate once") {
  for (const auto& source :
       {demo::example_vit_source(), demo::two_quantifier_vit_source()}) {
    Vit vit = parse_vit(source);
    ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
    for (const auto& plugging : enumerate_pluggings(graph)) {
      ScopedTree tree = build_scoped_tree(vit, graph, plugging);
      CHECK(tree_predicate_count(tree) == vit.semantics.size());

      // each rendered predicate appears exactly once
      std::map<std::string, int> seen;
      std::vector<const ScopedTree*> stack{&tree};
      while (!stack.empty()) {
        const ScopedTree* node = stack.back();
        stack.pop_back();
        for (const auto& pred : node->predicates) ++seen[pred];
        for (const auto& child : node->children) stack.push_back(&child);
      }
      for (const Term& pred : vit.semantics) CHECK(seen[pred.print()] == 1);
    }
  }
}

TEST_CASE("the example's reading renders as the documented outline") {
  Vit vit = example_vit();
  ScopeGraph graph = build_scope_graph(vit, builtin_catalog());
  auto pluggings = enumerate_pluggings(graph);
  REQUIRE(pluggings.size() == 1);
  ScopedTree tree = build_scoped_tree(vit, graph, pluggings[0]);
  CHECK(render_scoped_tree(tree) ==
        "l5  decl(l5,h1)\n"
        "  h1->l3  ein_card_qua(l3,i2,l1,h2,1)\n"
        "    l1\n"
        "      l6  termin(l6,i2)\n"
        "    h2->l2\n"
        "      l4  ausmachen(l4,i1), arg1(l4,i1,i3), arg3(l4,i1,i2)\n"
        "  l9  pron(l9,i3)\n");
}
