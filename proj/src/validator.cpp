#include "semdb/validator.hpp"

#include <algorithm>

#include <json.hpp>

#include "semdb/error.hpp"
#include "scanner.hpp"

namespace semdb {

using detail::Scanner;
using detail::TokKind;
using detail::Token;

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::V1_ArityShape: return "V1_ArityShape";
    case ViolationCode::V2_UndefinedLabel: return "V2_UndefinedLabel";
    case ViolationCode::V3_RoleAttachment: return "V3_RoleAttachment";
    case ViolationCode::V4_RoleDeclaration: return "V4_RoleDeclaration";
    case ViolationCode::V5_SortMismatch: return "V5_SortMismatch";
    case ViolationCode::V6_ScopeReference: return "V6_ScopeReference";
    case ViolationCode::V7_MainLabel: return "V7_MainLabel";
    case ViolationCode::V8_GroupShape: return "V8_GroupShape";
    case ViolationCode::V9_SyntaxVocabulary: return "V9_SyntaxVocabulary";
  }
  return "?";
}

PatternIndex build_pattern_index(const Lexicon& lexicon,
                                 const Catalog& catalog) {
  PatternIndex index;

  for (const auto& base : lexicon.bases) {
    ExpandedEntry entry = expand_base(lexicon, base.name.text());
    auto patterns = predscheme_instances(entry, catalog);

    const std::string head_name = patterns.front().predicate_name.text();
    std::set<std::string> roles;
    const Value& semclass = entry.value_or_top("semclass");
    const SemanticClass* cls =
        semclass.is_lit() ? catalog.find_class(semclass.atom().text()) : nullptr;
    if (cls) {
      for (std::size_t i = 0; i < cls->scheme.extras.size(); ++i)
        if (cls->scheme.extras[i].role_slot)
          roles.insert(patterns[i + 1].predicate_name.text());
    }

    for (auto& pattern : patterns) {
      const std::string name = pattern.predicate_name.text();
      index.by_name.emplace(name, std::move(pattern));  // first wins
    }
    index.declared_roles.emplace(head_name, std::move(roles));
    index.declared_sorts.emplace(head_name, entry.value_or_top("sort_of_inst"));
  }

  for (const auto& pattern : catalog.closed_class_patterns())
    index.by_name.emplace(pattern.predicate_name.text(), pattern);

  return index;
}

void SortAliasTable::add(std::string name, std::set<std::string> covers) {
  aliases_[std::move(name)] = std::move(covers);
}

const std::set<std::string>* SortAliasTable::covered(
    std::string_view sort) const {
  auto it = aliases_.find(std::string(sort));
  return it == aliases_.end() ? nullptr : &it->second;
}

bool SortAliasTable::subsumes(std::string_view sort,
                              std::string_view candidate) const {
  if (sort == candidate) return true;
  const auto* set = covered(sort);
  return set && set->count(std::string(candidate)) > 0;
}

SortAliasTable parse_sort_aliases(std::string_view text) {
  Scanner sc(text);
  SortAliasTable table;
  while (!sc.at_end()) {
    const Token& nameTok = sc.peek();
    if (nameTok.kind != TokKind::Atom && nameTok.kind != TokKind::QuotedAtom)
      sc.fail(nameTok, "expected a sort name");
    Token name = sc.next();
    sc.expect(TokKind::Colon, "':'");
    std::set<std::string> covers;
    while (true) {
      const Token& tok = sc.peek();
      if (tok.kind != TokKind::Atom && tok.kind != TokKind::QuotedAtom)
        sc.fail(tok, "expected a sort atom");
      covers.insert(sc.next().text);
      if (!sc.accept(TokKind::Comma)) break;
    }
    sc.expect(TokKind::Dot, "'.'");
    table.add(name.text, std::move(covers));
  }
  return table;
}

namespace {

bool has_prefix(const Term& term, char prefix) {
  return term.is_atom() && !term.text().empty() && term.text()[0] == prefix;
}

bool kind_matches(ArgKind kind, const Term& arg) {
  switch (kind) {
    case ArgKind::Label:
    case ArgKind::RestrictorLabel:
      return has_prefix(arg, 'l');
    case ArgKind::Instance:
      return has_prefix(arg, 'i');
    case ArgKind::Hole:
      return has_prefix(arg, 'h');
    case ArgKind::Cardinality:
      return arg.kind() == Term::Kind::Int;
  }
  return false;
}

bool is_role_name(const std::string& name) {
  return name == "arg1" || name == "arg2" || name == "arg3";
}

std::string pred_location(const Term& pred) {
  std::string loc = pred.text();
  if (pred.arity() > 0 && pred.args()[0].is_atom())
    loc += "/" + pred.args()[0].text();
  return loc;
}

struct SlotFacts {
  std::set<std::string> pred_labels;
  std::set<std::string> group_labels;
  std::set<std::string> all_args;      // every atom argument of a semantics predicate
  std::set<std::string> holes;
  // head predicate instance -> base prednames taking it as their instance
  std::map<std::string, std::vector<std::string>> heads_by_instance;
};

SlotFacts gather_facts(const Vit& vit, const PatternIndex& index) {
  SlotFacts facts;
  for (const Term& pred : vit.semantics) {
    if (pred.arity() > 0 && pred.args()[0].is_atom())
      facts.pred_labels.insert(pred.args()[0].text());
    for (std::size_t i = 0; i < pred.arity(); ++i) {
      const Term& arg = pred.args()[i];
      if (arg.is_atom()) {
        facts.all_args.insert(arg.text());
        if (i > 0 && has_prefix(arg, 'h')) facts.holes.insert(arg.text());
      }
    }
    auto it = index.by_name.find(pred.text());
    if (it != index.by_name.end() &&
        it->second.arg_kinds.size() == pred.arity()) {
      const PredPattern& pattern = it->second;
      for (std::size_t i = 0; i < pred.arity(); ++i)
        if (pattern.arg_kinds[i] == ArgKind::Hole && pred.args()[i].is_atom())
          facts.holes.insert(pred.args()[i].text());
      if (!pattern.source_base.text().empty() &&
          index.declared_sorts.count(pred.text())) {
        for (std::size_t i = 0; i < pattern.arg_kinds.size(); ++i) {
          if (pattern.arg_kinds[i] == ArgKind::Instance) {
            if (pred.args()[i].is_atom())
              facts.heads_by_instance[pred.args()[i].text()].push_back(
                  pred.text());
            break;
          }
        }
      }
    }
  }
  for (const Term& group : vit.groups) {
    if (group.text() == "sem_group" && group.arity() == 2 &&
        group.args()[0].is_atom())
      facts.group_labels.insert(group.args()[0].text());
  }
  return facts;
}

class Checker {
 public:
  Checker(const Vit& vit, const PatternIndex& index,
          const SortAliasTable& aliases, const ValidateOptions& options)
      : vit_(vit),
        index_(index),
        aliases_(aliases),
        options_(options),
        facts_(gather_facts(vit, index)) {}

  std::vector<Violation> run() {
    check_semantics();
    check_main_label();
    check_sorts();
    check_instance_slot(vit_.discourse, "discourse", {});
    check_instance_slot(vit_.syntax, "syntax", syntax_vocab());
    check_instance_slot(vit_.tense, "tense", tense_vocab());
    check_scope();
    check_prosody();
    check_groups();
    return std::move(violations_);
  }

 private:
  using Vocab = std::map<std::string, std::set<std::string>>;

  static Vocab syntax_vocab() {
    return {{"num", {"sg", "pl"}},
            {"pers", {"1", "2", "3"}},
            {"gend", {"masc", "fem", "neut"}},
            {"cas", {"nom", "acc", "dat", "gen"}}};
  }

  static Vocab tense_vocab() {
    return {{"ta_mood", {"ind", "conj", "imp"}},
            {"ta_tense", {"pres", "past", "fut"}}};
  }

  void report(ViolationCode code, std::string location, std::string detail) {
    violations_.push_back({code, std::move(location), std::move(detail)});
  }

  bool label_defined(const std::string& name) const {
    return facts_.pred_labels.count(name) > 0 ||
           facts_.group_labels.count(name) > 0;
  }

  void check_semantics() {
    for (const Term& pred : vit_.semantics) {
      check_pred_shape(pred);
      check_contained_labels(pred);
      if (is_role_name(pred.text())) check_role_attachment(pred);
    }
    check_role_declarations();
  }

  void check_pred_shape(const Term& pred) {
    auto it = index_.by_name.find(pred.text());
    if (it == index_.by_name.end()) {
      if (options_.strict_unknown)
        report(ViolationCode::V1_ArityShape, pred_location(pred),
               "unknown predicate " + pred.print());
      return;
    }
    const PredPattern& pattern = it->second;
    if (pattern.arg_kinds.size() != pred.arity()) {
      report(ViolationCode::V1_ArityShape, pred_location(pred),
             pred.print() + " has arity " + std::to_string(pred.arity()) +
                 ", expected " + std::to_string(pattern.arg_kinds.size()));
      return;
    }
    for (std::size_t i = 0; i < pred.arity(); ++i) {
      if (!kind_matches(pattern.arg_kinds[i], pred.args()[i])) {
        report(ViolationCode::V1_ArityShape, pred_location(pred),
               "argument " + std::to_string(i + 1) + " of " + pred.print() +
                   " is not a " +
                   std::string(arg_kind_name(pattern.arg_kinds[i])));
        return;
      }
    }
  }

  // Labels a predicate owns beyond its own (e.g. a quantifier's restrictor)
  // must be defined by a predicate or a group.
  void check_contained_labels(const Term& pred) {
    auto it = index_.by_name.find(pred.text());
    const PredPattern* pattern =
        it != index_.by_name.end() && it->second.arg_kinds.size() == pred.arity()
            ? &it->second
            : nullptr;
    for (std::size_t i = 1; i < pred.arity(); ++i) {
      const Term& arg = pred.args()[i];
      bool is_label_ref = pattern
                              ? pattern->arg_kinds[i] == ArgKind::RestrictorLabel
                              : has_prefix(arg, 'l');
      if (!is_label_ref || !arg.is_atom()) continue;
      if (!label_defined(arg.text()))
        report(ViolationCode::V2_UndefinedLabel, pred_location(pred),
               "label " + arg.text() + " in " + pred.print() +
                   " is not defined");
    }
  }

  void check_role_attachment(const Term& role) {
    if (role.arity() < 2 || !role.args()[0].is_atom() ||
        !role.args()[1].is_atom())
      return;  // shape problems are V1's business
    const std::string& label = role.args()[0].text();
    const std::string& instance = role.args()[1].text();
    for (const Term& pred : vit_.semantics) {
      if (is_role_name(pred.text())) continue;
      if (pred.arity() < 2 || !pred.args()[0].is_atom()) continue;
      if (pred.args()[0].text() != label) continue;
      std::size_t inst_pos = head_instance_position(pred);
      if (inst_pos < pred.arity() && pred.args()[inst_pos].is_atom() &&
          pred.args()[inst_pos].text() == instance)
        return;
    }
    report(ViolationCode::V3_RoleAttachment, pred_location(role),
           role.print() + " shares no label and instance with a head predicate");
  }

  std::size_t head_instance_position(const Term& pred) const {
    auto it = index_.by_name.find(pred.text());
    if (it != index_.by_name.end() &&
        it->second.arg_kinds.size() == pred.arity()) {
      for (std::size_t i = 0; i < it->second.arg_kinds.size(); ++i)
        if (it->second.arg_kinds[i] == ArgKind::Instance) return i;
    }
    return 1;
  }

  void check_role_declarations() {
    for (const Term& pred : vit_.semantics) {
      auto declared = index_.declared_roles.find(pred.text());
      if (declared == index_.declared_roles.end()) continue;
      if (pred.arity() < 1 || !pred.args()[0].is_atom()) continue;
      const std::string& label = pred.args()[0].text();
      std::set<std::string> attached;
      for (const Term& role : vit_.semantics)
        if (is_role_name(role.text()) && role.arity() >= 1 &&
            role.args()[0].is_atom() && role.args()[0].text() == label)
          attached.insert(role.text());
      if (attached != declared->second) {
        std::string expectation;
        for (const auto& r : declared->second)
          expectation += (expectation.empty() ? "" : ",") + r;
        std::string got;
        for (const auto& r : attached) got += (got.empty() ? "" : ",") + r;
        report(ViolationCode::V4_RoleDeclaration, pred_location(pred),
               pred.text() + " declares roles {" + expectation +
                   "} but {" + got + "} are attached");
      }
    }
  }

  void check_main_label() {
    if (facts_.pred_labels.count(vit_.main_label) == 0)
      report(ViolationCode::V7_MainLabel, "main",
             "main label " + vit_.main_label +
                 " is not the label of a semantics predicate");
  }

  bool sort_admitted(const Value& declared, const std::string& sort) const {
    if (check_value(declared, Value::lit(sort))) return true;
    if (const auto* covers = aliases_.covered(sort))
      for (const auto& sub : *covers)
        if (check_value(declared, Value::lit(sub))) return true;
    return false;
  }

  void check_sorts() {
    for (const Term& entry : vit_.sorts) {
      if (entry.text() != "s_sort") continue;
      if (entry.arity() != 2 || !entry.args()[0].is_atom()) {
        report(ViolationCode::V5_SortMismatch, "sorts",
               "malformed sort entry " + entry.print());
        continue;
      }
      const std::string& instance = entry.args()[0].text();
      const Term& sort_term = entry.args()[1];
      if (facts_.all_args.count(instance) == 0) {
        report(ViolationCode::V5_SortMismatch, pred_location(entry),
               "instance " + instance + " does not occur in the semantics");
        continue;
      }

      std::vector<std::string> sort_atoms;
      if (sort_term.is_atom()) {
        sort_atoms.push_back(sort_term.text());
      } else if (sort_term.is_compound() && sort_term.text() == "&") {
        for (const Term& conjunct : sort_term.args())
          if (conjunct.is_atom()) sort_atoms.push_back(conjunct.text());
      }
      if (sort_atoms.empty()) {
        report(ViolationCode::V5_SortMismatch, pred_location(entry),
               "unrecognized sort term " + sort_term.print());
        continue;
      }

      auto heads = facts_.heads_by_instance.find(instance);
      if (heads == facts_.heads_by_instance.end()) continue;
      for (const std::string& head : heads->second) {
        const Value& declared = index_.declared_sorts.at(head);
        if (declared.is_top()) continue;
        // A conjunctive sort is satisfied when one conjunct is admitted.
        bool ok = std::any_of(
            sort_atoms.begin(), sort_atoms.end(),
            [&](const std::string& s) { return sort_admitted(declared, s); });
        if (!ok)
          report(ViolationCode::V5_SortMismatch, pred_location(entry),
                 sort_term.print() + " is not admitted by the sort " +
                     declared.print() + " declared for " + head);
      }
    }
  }

  void check_instance_slot(const std::vector<Term>& slot,
                           const std::string& slot_name, const Vocab& vocab) {
    for (const Term& pred : slot) {
      bool known = vocab.count(pred.text()) > 0;
      if (!known && pred.text() != "prontype") continue;
      if (pred.arity() < 2 || !pred.args()[0].is_atom()) {
        report(ViolationCode::V9_SyntaxVocabulary, slot_name,
               "malformed entry " + pred.print());
        continue;
      }
      const std::string& anchor = pred.args()[0].text();
      if (facts_.all_args.count(anchor) == 0) {
        report(ViolationCode::V9_SyntaxVocabulary, pred_location(pred),
               "instance " + anchor + " does not occur in the semantics");
        continue;
      }
      if (!known) continue;  // prontype: value set unspecified
      const Term& value = pred.args()[1];
      std::string value_text = value.is_atom() ? value.text()
                               : value.kind() == Term::Kind::Int
                                   ? std::to_string(value.number())
                                   : value.print();
      if (vocab.at(pred.text()).count(value_text) == 0)
        report(ViolationCode::V9_SyntaxVocabulary, pred_location(pred),
               "value " + value_text + " of " + pred.print() +
                   " is outside the " + pred.text() + " vocabulary");
    }
  }

  void check_scope() {
    for (const Term& entry : vit_.scope) {
      if (entry.text() != "ccom_plug" && entry.text() != "leq") continue;
      for (const Term& arg : entry.args()) {
        if (!arg.is_atom() ||
            (!label_defined(arg.text()) && facts_.holes.count(arg.text()) == 0))
          report(ViolationCode::V6_ScopeReference, "scope",
                 entry.print() + " references unknown " + arg.print());
      }
    }
    for (const std::string& hole : facts_.holes) {
      int plugs = 0;
      for (const Term& entry : vit_.scope)
        if (entry.text() == "ccom_plug" && entry.arity() == 2 &&
            entry.args()[0].is_atom() && entry.args()[0].text() == hole)
          ++plugs;
      if (plugs != 1)
        report(ViolationCode::V6_ScopeReference, "scope",
               "hole " + hole + " has " + std::to_string(plugs) +
                   " ccom_plug entries, expected exactly 1");
    }
  }

  void check_prosody() {
    static const std::set<std::string> moods{"decl", "quest", "imp"};
    for (const Term& pred : vit_.prosody) {
      if (pred.text() != "pros_mood") continue;
      if (pred.arity() != 2 || !pred.args()[0].is_atom()) {
        report(ViolationCode::V9_SyntaxVocabulary, "prosody",
               "malformed entry " + pred.print());
        continue;
      }
      const std::string& anchor = pred.args()[0].text();
      if (!label_defined(anchor) && facts_.all_args.count(anchor) == 0)
        report(ViolationCode::V9_SyntaxVocabulary, pred_location(pred),
               "anchor " + anchor + " does not occur in the semantics");
      const Term& value = pred.args()[1];
      if (!value.is_atom() || moods.count(value.text()) == 0)
        report(ViolationCode::V9_SyntaxVocabulary, pred_location(pred),
               "value " + value.print() +
                   " is outside the pros_mood vocabulary");
    }
  }

  void check_groups() {
    std::set<std::string> seen_members;
    for (const Term& group : vit_.groups) {
      if (group.text() != "sem_group") continue;
      if (group.arity() != 2 || !group.args()[0].is_atom() ||
          group.args()[1].kind() != Term::Kind::List) {
        report(ViolationCode::V8_GroupShape, "groups",
               "malformed group " + group.print());
        continue;
      }
      for (const Term& member : group.args()[1].args()) {
        if (!member.is_atom() || !label_defined(member.text())) {
          report(ViolationCode::V8_GroupShape, pred_location(group),
                 "member " + member.print() + " of " + group.print() +
                     " does not exist");
          continue;
        }
        if (!seen_members.insert(member.text()).second)
          report(ViolationCode::V8_GroupShape, pred_location(group),
                 "member " + member.text() + " belongs to more than one group");
      }
    }
  }

  const Vit& vit_;
  const PatternIndex& index_;
  const SortAliasTable& aliases_;
  const ValidateOptions& options_;
  SlotFacts facts_;
  std::vector<Violation> violations_;
};

}  // namespace

std::vector<Violation> validate(const Vit& vit, const PatternIndex& index,
                                const SortAliasTable& aliases,
                                const ValidateOptions& options) {
  return Checker(vit, index, aliases, options).run();
}

std::vector<std::vector<Violation>> validate_batch(
    const std::vector<Vit>& vits, const PatternIndex& index,
    const SortAliasTable& aliases, const ValidateOptions& options,
    ExecMode mode) {
  std::vector<std::vector<Violation>> results(vits.size());
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(vits.size()); ++i)
      results[static_cast<std::size_t>(i)] =
          validate(vits[static_cast<std::size_t>(i)], index, aliases, options);
    return results;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < vits.size(); ++i)
    results[i] = validate(vits[i], index, aliases, options);
  return results;
}

std::string render_report(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    out += std::string(violation_code_name(v.code));
    out += '\t';
    out += v.location;
    out += '\t';
    out += v.detail;
    out += '\n';
  }
  return out;
}

std::string render_report_json(const std::vector<Violation>& violations) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& v : violations) {
    records.push_back({{"code", std::string(violation_code_name(v.code))},
                       {"location", v.location},
                       {"detail", v.detail}});
  }
  return records.dump(2) + "\n";
}

}  // namespace semdb
