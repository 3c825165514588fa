#include <doctest.h>

#include <algorithm>

#include "semdb/demo.hpp"
#include "semdb/error.hpp"
#include "semdb/generator.hpp"
#include "semdb/trafo.hpp"
#include "support.hpp"

using namespace semdb;

namespace {

// Expected compile output for the demo lexicon. The second record wraps
// after the sort, with a trailing blank and a 20-column continuation.
const std::string kSemlexGolden =
    "sem_lex(Cat, termin) short_for\n"
    "     common_noun_sem(Cat, termin, (time_sit_poly)) .\n"
    "sem_lex(Cat, ausmachen) short_for\n"
    "     trans_verb_sem(Cat, ausmachen, (communicat_sit;mental_sit), \n"
    "                    [arg1,arg3]) .\n";

const std::string kTableGolden =
    "Termin Termin NN termin common_noun termin(L,I) I/time_sit_poly - -\n"
    "ausmachen ausmachen VVFIN;VVINF ausmachen,arg1,arg3 transitive_verb "
    "ausmachen(L,I),arg1(L,I,I1),arg3(L,I,I2) "
    "I1/communicat_sit;mental_sit - -\n";

Lexicon demo_lexicon() { return parse_lexicon_source(demo::lexicon_source()); }

ExpandedEntry demo_entry(std::string_view name) {
  Lexicon lex = demo_lexicon();
  return expand_base(lex, name);
}

}  // namespace

TEST_CASE("template parsing splits directives from literals") {
  Template tmpl = parse_template("a ~w b~nc ~~w");
  REQUIRE(tmpl.segments.size() == 5);
  CHECK(tmpl.segments[0].kind == Template::Segment::Kind::Literal);
  CHECK(tmpl.segments[0].text == "a ");
  CHECK(tmpl.segments[1].kind == Template::Segment::Kind::Substitute);
  CHECK(tmpl.segments[2].text == " b");
  CHECK(tmpl.segments[3].kind == Template::Segment::Kind::Newline);
  CHECK(tmpl.segments[4].text == "c ~w");
  CHECK(tmpl.substitute_count() == 1);
  CHECK_THROWS_AS(parse_template("bad ~x"), const Error&);
  CHECK_THROWS_AS(parse_template("bad ~"), const Error&);
}

TEST_CASE("rendering the default record") {
  Template tmpl = parse_template(
      "sem_lex(Cat, ~w) short_for~n     ~w(Cat, ~w, (~w)) .~n");
  std::string out = render_template(
      tmpl, {Value::lit("termin"), Value::lit("common_noun_sem"),
             Value::lit("termin"), Value::lit("time_sit_poly")});
  CHECK(out ==
        "sem_lex(Cat, termin) short_for\n"
        "     common_noun_sem(Cat, termin, (time_sit_poly)) .\n");
}

TEST_CASE("literal-only templates render unchanged") {
  Template tmpl = parse_template("nothing to fill in");
  CHECK(render_template(tmpl, {}) == "nothing to fill in");
}

TEST_CASE("disjunctions render semicolon-joined without parentheses") {
  Template tmpl = parse_template("~w");
  Value sort = Value::disjunction(
      {Value::lit("communicat_sit"), Value::lit("mental_sit")});
  CHECK(render_template(tmpl, {sort}) == "communicat_sit;mental_sit");
}

TEST_CASE("quoted atoms render verbatim and top renders as a dash") {
  Template tmpl = parse_template("~w ~w ~w");
  CHECK(render_template(tmpl, {Value::lit("VVFIN;VVINF", true),
                               Value::lit("L,I", true), Value::top()}) ==
        "VVFIN;VVINF L,I -");
}

TEST_CASE("binding arity mismatches are an error") {
  Template tmpl = parse_template("~w ~w");
  CHECK_THROWS_AS(render_template(tmpl, {Value::lit("x")}), const Error&);
  try {
    render_template(tmpl, {Value::lit("x")});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TemplateArity);
  }
}

TEST_CASE("rule files parse with defaults and with-clauses") {
  RuleSet rules = parse_rules(
      "rule a requires f, g emits \"~w/~w\" .\n"
      "rule b requires f emits \"~w+~w\" with f, f .\n");
  REQUIRE(rules.rules.size() == 2);
  CHECK(rules.rules[0].bindings.size() == 2);
  CHECK(rules.rules[0].bindings[0].text() == "f");
  CHECK(rules.rules[1].bindings.size() == 2);
  CHECK(rules.rules[1].bindings[1].text() == "f");
}

TEST_CASE("rule files reject arity mismatches and duplicates") {
  CHECK_THROWS_AS(parse_rules("rule a requires f emits \"~w ~w\" ."),
                  const Error&);
  CHECK_THROWS_AS(
      parse_rules("rule a requires f emits \"~w\" .\n"
                  "rule a requires f emits \"~w\" ."),
      const Error&);
  CHECK_THROWS_AS(parse_rules("rule a requires f emits ~w ."), const Error&);
}

TEST_CASE("escaped quotes reach the template verbatim") {
  RuleSet rules = parse_rules("rule q requires f emits \"say \\\"~w\\\"\" .");
  ExpandedEntry entry;
  entry.base_name = Atom("x");
  entry.class_chain = {Atom("c")};
  entry.values = {{Atom("f"), Value::lit("hello")}};
  CHECK(apply_rules(rules, entry) == std::string("say \"hello\""));
}

TEST_CASE("first match wins and missing features skip a rule") {
  RuleSet rules = parse_rules(demo::semlex_rules_source());
  REQUIRE(rules.rules.size() == 2);
  CHECK(rules.rules[0].name.text() == "trans_sem");

  // the noun lacks role features, so the transitive rule is skipped
  auto noun = apply_rules(rules, demo_entry("Termin"));
  REQUIRE(noun.has_value());
  CHECK(*noun ==
        "sem_lex(Cat, termin) short_for\n"
        "     common_noun_sem(Cat, termin, (time_sit_poly)) .\n");

  auto verb = apply_rules(rules, demo_entry("ausmachen"));
  REQUIRE(verb.has_value());
  CHECK(*verb ==
        "sem_lex(Cat, ausmachen) short_for\n"
        "     trans_verb_sem(Cat, ausmachen, (communicat_sit;mental_sit), \n"
        "                    [arg1,arg3]) .\n");
}

TEST_CASE("an empty rule set never matches") {
  RuleSet empty;
  CHECK(!apply_rules(empty, demo_entry("Termin")).has_value());
}

TEST_CASE("reordering rules after the first match changes nothing") {
  RuleSet rules = parse_rules(demo::semlex_rules_source());
  RuleSet extended = rules;
  // append permissive decoys; first-match semantics must ignore them
  RuleSet decoys = parse_rules(
      "rule decoy_a requires predname emits \"DECOY ~w~n\" .\n"
      "rule decoy_b requires lemma emits \"DECOY ~w~n\" .\n");
  for (const auto& rule : decoys.rules) extended.rules.push_back(rule);

  for (const char* base : {"Termin", "ausmachen"}) {
    auto lhs = apply_rules(rules, demo_entry(base));
    auto rhs = apply_rules(extended, demo_entry(base));
    REQUIRE(lhs.has_value());
    CHECK(*lhs == *rhs);
  }
}

TEST_CASE("compile output matches the documented records byte for byte") {
  EmitResult result =
      emit_outputs(demo_lexicon(), parse_rules(demo::semlex_rules_source()));
  CHECK(result.unmatched_bases.empty());
  CHECK(result.text == kSemlexGolden);
}

TEST_CASE("table output matches the documented lines byte for byte") {
  EmitResult result =
      emit_outputs(demo_lexicon(), parse_rules(demo::table_rules_source()));
  CHECK(result.unmatched_bases.empty());
  CHECK(result.text == kTableGolden);
  // each record is one logical line
  CHECK(std::count(result.text.begin(), result.text.end(), '\n') == 2);
}

TEST_CASE("an empty lexicon emits nothing") {
  EmitResult result =
      emit_outputs(Lexicon{}, parse_rules(demo::semlex_rules_source()));
  CHECK(result.text.empty());
  CHECK(result.unmatched_bases.empty());
}

TEST_CASE("unmatched bases are reported, not emitted") {
  Lexicon lex = parse_lexicon_source(testing::core_classes_source() +
                                     "base 'stumm' :<< verb_c >>: .");
  EmitResult result =
      emit_outputs(lex, parse_rules(demo::semlex_rules_source()));
  CHECK(result.text.empty());
  REQUIRE(result.unmatched_bases.size() == 1);
  CHECK(result.unmatched_bases[0].text() == "stumm");
}

TEST_CASE("serial and parallel emission produce identical bytes") {
  Lexicon lex = parse_lexicon_source(make_synthetic_lexicon_source(500, 3));
  for (const auto& rules_source :
       {demo::semlex_rules_source(), demo::table_rules_source()}) {
    RuleSet rules = parse_rules(rules_source);
    EmitResult serial = emit_outputs(lex, rules, ExecMode::Serial);
    EmitResult parallel = emit_outputs(lex, rules, ExecMode::Parallel);
    CHECK(serial.text == parallel.text);
    CHECK(serial.unmatched_bases.size() == parallel.unmatched_bases.size());
    CHECK(!serial.text.empty());
  }
}

TEST_CASE("expansion failures surface identically in both modes") {
  Lexicon lex = parse_lexicon_source(
      testing::core_classes_source() +
      "base 'ok' :<< common_noun_c >>: predname: 'ok' .\n"
      "base 'bad' :<< transitive_c >>: role_a1: 'agent' .");
  RuleSet rules = parse_rules(demo::semlex_rules_source());
  for (ExecMode mode : {ExecMode::Serial, ExecMode::Parallel}) {
    try {
      emit_outputs(lex, rules, mode);
      FAIL("expected an appropriateness violation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AppropriatenessViolation);
    }
  }
}
